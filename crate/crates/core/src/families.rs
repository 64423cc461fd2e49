//! Standard families: symmetric inverse monoids, Brandt semigroups, finite
//! groups and two-layer Clifford semigroups.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteInverseSemigroup};
use crate::set::ElementSet;

/// Largest degree accepted by [`symmetric_inverse_monoid`].
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// A partial injection of `{1..n}`, stored zero-based.
///
/// Composition is left to right: `x(στ) = (xσ)τ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialBijection {
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn new(map: Vec<Option<usize>>) -> Result<Self> {
        let n = map.len();
        let mut hit = vec![false; n];
        for &y in map.iter().flatten() {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(Error::usage(format!(
                    "{map:?} is not a partial injection of {n} points"
                )));
            }
        }
        Ok(PartialBijection { map })
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            map: (0..degree).map(Some).collect(),
        }
    }

    pub fn empty(degree: usize) -> Self {
        PartialBijection {
            map: vec![None; degree],
        }
    }

    /// From one-based `(point, image)` pairs.
    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; degree];
        for &(x, y) in pairs {
            if x == 0 || x > degree || y == 0 || y > degree || map[x - 1].is_some() {
                return Err(Error::usage(format!(
                    "bad pair ({x},{y}) for degree {degree}"
                )));
            }
            map[x - 1] = Some(y - 1);
        }
        Self::new(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Zero-based image of a zero-based point.
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().flatten()
    }

    pub fn domain_len(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &PartialBijection) -> PartialBijection {
        PartialBijection {
            map: self
                .map
                .iter()
                .map(|x| x.and_then(|y| other.apply(y)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut map = vec![None; self.degree()];
        for (x, y) in self.map.iter().enumerate() {
            if let Some(y) = y {
                map[*y] = Some(x);
            }
        }
        PartialBijection { map }
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }
}

/// One-line notation: the image of each point, `-` where undefined.
impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.degree() > 9;
        for (i, y) in self.map.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(" ")?;
            }
            match y {
                Some(y) => write!(f, "{}", y + 1)?,
                None => f.write_str("-")?,
            }
        }
        Ok(())
    }
}

/// All partial injections of a `degree`-point set, domain size then lexicographic.
pub fn partial_bijections(degree: usize) -> Vec<PartialBijection> {
    fn extend(
        prefix: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        out: &mut Vec<PartialBijection>,
    ) {
        let n = used.len();
        if prefix.len() == n {
            out.push(PartialBijection {
                map: prefix.clone(),
            });
            return;
        }
        prefix.push(None);
        extend(prefix, used, out);
        prefix.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                prefix.push(Some(y));
                extend(prefix, used, out);
                prefix.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; degree], &mut out);
    out.sort_by(|a, b| a.domain_len().cmp(&b.domain_len()).then_with(|| a.cmp(b)));
    out
}

/// The symmetric inverse monoid `I_n`. Element names are one-line notation.
pub fn symmetric_inverse_monoid(
    n: usize,
) -> Result<(FiniteInverseSemigroup, Vec<PartialBijection>)> {
    if n == 0 {
        return Err(Error::usage("degree must be at least 1"));
    }
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::Resource(format!(
            "I_{n} is too large; degree is capped at {MAX_SYMMETRIC_DEGREE}"
        )));
    }
    let maps = partial_bijections(n);
    let index: std::collections::HashMap<&PartialBijection, usize> =
        maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let id = |m: &PartialBijection| ElementId::from_index(index[m]);
    let mut table = Vec::with_capacity(maps.len() * maps.len());
    for a in &maps {
        for b in &maps {
            table.push(id(&a.then(b)));
        }
    }
    let inv = maps.iter().map(|m| id(&m.inverse())).collect();
    let names = maps.iter().map(|m| m.to_string()).collect();
    Ok((
        FiniteInverseSemigroup::from_trusted(names, table, inv)?,
        maps,
    ))
}

/// `stab(p) = {σ : pσ = p}` in `I_n`, with `p` 1-based.
pub fn stabilizer(
    s: &FiniteInverseSemigroup,
    maps: &[PartialBijection],
    point: usize,
) -> ElementSet {
    ElementSet::from_ids(
        s.order(),
        s.elements()
            .filter(|e| maps[e.index()].apply(point - 1) == Some(point - 1)),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BrandtElement {
    Pair(usize, usize),
    Zero,
}

impl BrandtElement {
    pub fn compose(self, other: BrandtElement) -> BrandtElement {
        match (self, other) {
            (BrandtElement::Pair(u, v), BrandtElement::Pair(x, y)) if v == x => {
                BrandtElement::Pair(u, y)
            }
            _ => BrandtElement::Zero,
        }
    }

    pub fn inverse(self) -> BrandtElement {
        match self {
            BrandtElement::Pair(x, y) => BrandtElement::Pair(y, x),
            BrandtElement::Zero => BrandtElement::Zero,
        }
    }
}

impl fmt::Display for BrandtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtElement::Pair(x, y) => write!(f, "({x},{y})"),
            BrandtElement::Zero => f.write_str("0"),
        }
    }
}

/// The Brandt semigroup `B_n` on `{1..n}`: pairs `(x,y)` in row-major order,
/// then the zero.
pub fn brandt(n: usize) -> Result<(FiniteInverseSemigroup, Vec<BrandtElement>)> {
    if n == 0 {
        return Err(Error::usage("Brandt semigroup needs at least one point"));
    }
    let mut elems: Vec<BrandtElement> = Vec::with_capacity(n * n + 1);
    for x in 1..=n {
        for y in 1..=n {
            elems.push(BrandtElement::Pair(x, y));
        }
    }
    elems.push(BrandtElement::Zero);
    let id = |e: BrandtElement| match e {
        BrandtElement::Pair(x, y) => ElementId::from_index((x - 1) * n + (y - 1)),
        BrandtElement::Zero => ElementId::from_index(n * n),
    };
    let mut table = Vec::with_capacity(elems.len() * elems.len());
    for &a in &elems {
        for &b in &elems {
            table.push(id(a.compose(b)));
        }
    }
    let inv = elems.iter().map(|e| id(e.inverse())).collect();
    let names = elems.iter().map(|e| e.to_string()).collect();
    Ok((
        FiniteInverseSemigroup::from_trusted(names, table, inv)?,
        elems,
    ))
}

/// A finite group given by its table; element 0 need not be the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let s = FiniteInverseSemigroup::from_table(names, table)?;
        Self::from_semigroup(&s)
    }

    pub fn from_semigroup(s: &FiniteInverseSemigroup) -> Result<Self> {
        if !s.is_group() {
            return Err(Error::Construction(
                "table has more than one idempotent".into(),
            ));
        }
        let identity = s.identity().expect("a group has an identity").index();
        let table = s
            .elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .map(|(a, b)| s.mul(a, b).index())
            .collect();
        let inv = s.elements().map(|a| s.inverse(a).index()).collect();
        Ok(FiniteGroup {
            names: s.names().to_vec(),
            table,
            identity,
            inv,
        })
    }

    /// Cyclic group `C_n` with elements `e, a, a2, …`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::usage("cyclic group of order 0"));
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                k => format!("a{k}"),
            })
            .collect();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup {
            names,
            table,
            identity: 0,
            inv,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            names: vec!["e".into()],
            table: vec![0],
            identity: 0,
            inv: vec![0],
        }
    }

    /// Direct product; element `(g,h)` has index `g * |other| + h`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let mut names = Vec::with_capacity(n * m);
        let mut table = Vec::with_capacity(n * n * m * m);
        for g in 0..n {
            for h in 0..m {
                names.push(format!("({},{})", self.names[g], other.names[h]));
            }
        }
        for a in 0..n * m {
            for b in 0..n * m {
                let g = self.mul(a / m, b / m);
                let h = other.mul(a % m, b % m);
                table.push(g * m + h);
            }
        }
        let inv = (0..n * m)
            .map(|a| self.inv[a / m] * m + other.inv[a % m])
            .collect();
        FiniteGroup {
            names,
            table,
            identity: self.identity * m + other.identity,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&x| x < target.order())
            && (0..self.order()).all(|a| {
                (0..self.order()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    pub fn to_semigroup(&self) -> Result<FiniteInverseSemigroup> {
        let table = self
            .table
            .iter()
            .map(|&x| ElementId::from_index(x))
            .collect();
        let inv = self.inv.iter().map(|&x| ElementId::from_index(x)).collect();
        FiniteInverseSemigroup::from_trusted(self.names.clone(), table, inv)
    }
}

/// The semilattice of groups `G₁ ⊔ G₀` over `1 > 0` with linking map `α: G₁ → G₀`.
///
/// Ids `0..|G₁|` are the top layer, then `|G₁|..|G₁|+|G₀|` the bottom layer.
#[derive(Clone, Debug)]
pub struct CliffordSemigroup {
    top: FiniteGroup,
    bottom: FiniteGroup,
    alpha: Vec<usize>,
    semigroup: FiniteInverseSemigroup,
}

impl CliffordSemigroup {
    pub fn new(top: FiniteGroup, bottom: FiniteGroup, alpha: Vec<usize>) -> Result<Self> {
        if !top.is_homomorphism(&bottom, &alpha) {
            return Err(Error::Construction(
                "linking map is not a group homomorphism".into(),
            ));
        }
        let (n1, n0) = (top.order(), bottom.order());
        let n = n1 + n0;
        let mut table = Vec::with_capacity(n * n);
        // lower an element into G₀
        let down = |a: usize| if a < n1 { alpha[a] } else { a - n1 };
        for a in 0..n {
            for b in 0..n {
                let p = if a < n1 && b < n1 {
                    top.mul(a, b)
                } else {
                    n1 + bottom.mul(down(a), down(b))
                };
                table.push(ElementId::from_index(p));
            }
        }
        let inv = (0..n)
            .map(|a| {
                ElementId::from_index(if a < n1 {
                    top.inverse(a)
                } else {
                    n1 + bottom.inverse(a - n1)
                })
            })
            .collect();
        let names = (0..n1)
            .map(|g| format!("1:{}", top.name(g)))
            .chain((0..n0).map(|h| format!("0:{}", bottom.name(h))))
            .collect();
        let semigroup = FiniteInverseSemigroup::from_trusted(names, table, inv)?;
        Ok(CliffordSemigroup {
            top,
            bottom,
            alpha,
            semigroup,
        })
    }

    pub fn semigroup(&self) -> &FiniteInverseSemigroup {
        &self.semigroup
    }

    pub fn into_semigroup(self) -> FiniteInverseSemigroup {
        self.semigroup
    }

    pub fn top(&self) -> &FiniteGroup {
        &self.top
    }

    pub fn bottom(&self) -> &FiniteGroup {
        &self.bottom
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn top_element(&self, g: usize) -> ElementId {
        ElementId::from_index(g)
    }

    pub fn bottom_element(&self, h: usize) -> ElementId {
        ElementId::from_index(self.top.order() + h)
    }
}

/// Same-group Clifford semigroup `C_n ⊔ C_n` linked by the identity map.
pub fn clifford_cyclic(n: usize) -> Result<CliffordSemigroup> {
    let g = FiniteGroup::cyclic(n)?;
    CliffordSemigroup::new(g.clone(), g, (0..n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn fact(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn symmetric_inverse_monoid_orders() {
        for n in 1..=4 {
            let expected: usize = (0..=n).map(|k| binom(n, k).pow(2) * fact(k)).sum();
            assert_eq!(symmetric_inverse_monoid(n).unwrap().0.order(), expected);
        }
        assert_eq!(symmetric_inverse_monoid(2).unwrap().0.order(), 7);
        assert_eq!(symmetric_inverse_monoid(3).unwrap().0.order(), 34);
        assert_eq!(symmetric_inverse_monoid(1).unwrap().0.order(), 2);
        assert!(matches!(
            symmetric_inverse_monoid(9),
            Err(Error::Resource(_))
        ));
        assert!(symmetric_inverse_monoid(0).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let (s, _) = symmetric_inverse_monoid(3).unwrap();
        // {1↦2} then {2↦3} is {1↦3}
        let a = s.find("2--").unwrap();
        let b = s.find("-3-").unwrap();
        assert_eq!(s.name(s.mul(a, b)), "3--");
        assert_eq!(s.name(s.inverse(a)), "-1-");
        assert_eq!(s.name(s.identity().unwrap()), "123");
    }

    #[test]
    fn brandt_products() {
        let (s, _) = brandt(2).unwrap();
        assert_eq!(s.order(), 5);
        assert_eq!(brandt(3).unwrap().0.order(), 10);
        let p12 = s.find("(1,2)").unwrap();
        let p21 = s.find("(2,1)").unwrap();
        assert_eq!(s.name(s.mul(p12, p21)), "(1,1)");
        assert_eq!(s.name(s.mul(p12, p12)), "0");
        assert_eq!(s.inverse(p12), p21);
        let zero = s.find("0").unwrap();
        assert_eq!(s.inverse(zero), zero);
        let idem: Vec<&str> = s.idempotents().iter().map(|e| s.name(e)).collect();
        assert_eq!(idem, ["(1,1)", "(2,2)", "0"]);
        assert!(s.identity().is_none());
    }

    #[test]
    fn clifford_orders_and_order_relation() {
        let c2 = clifford_cyclic(2).unwrap();
        assert_eq!(c2.semigroup().order(), 4);
        assert_eq!(c2.semigroup().idempotents().len(), 2);
        assert_eq!(clifford_cyclic(4).unwrap().semigroup().order(), 8);
        let small = CliffordSemigroup::new(
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::trivial(),
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(small.semigroup().order(), 3);
        let s = c2.semigroup();
        for g in 0..2 {
            assert!(s.leq(c2.bottom_element(c2.alpha()[g]), c2.top_element(g)));
        }
    }

    #[test]
    fn clifford_rejects_non_homomorphism() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        // sends the identity to the generator
        assert!(matches!(
            CliffordSemigroup::new(c2.clone(), c2, vec![1, 0]),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn partial_bijection_rejects_non_injective() {
        assert!(PartialBijection::new(vec![Some(0), Some(0)]).is_err());
        assert!(PartialBijection::from_pairs(2, &[(1, 3)]).is_err());
    }
}
