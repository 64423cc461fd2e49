//! Finite inverse semigroups given by a multiplication table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::word::{parse_word, Letter};

/// Index of an element in its semigroup's element list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub u32);

impl ElementId {
    pub fn from_index(i: usize) -> Self {
        ElementId(i as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A failed inverse-semigroup axiom, naming the offending elements by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    NoInverse {
        a: usize,
    },
    MultipleInverses {
        a: usize,
        candidates: Vec<usize>,
    },
    IdempotentsDoNotCommute {
        e: usize,
        f: usize,
    },
    BadIdentity {
        claimed: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSquare { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            Violation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            Violation::NotAssociative { a, b, c } => {
                write!(f, "not associative at ({a},{b},{c})")
            }
            Violation::NoInverse { a } => write!(f, "element {a} has no inverse"),
            Violation::MultipleInverses { a, candidates } => {
                write!(f, "element {a} has several inverses {candidates:?}")
            }
            Violation::IdempotentsDoNotCommute { e, f: g } => {
                write!(f, "idempotents do not commute: {e} and {g}")
            }
            Violation::BadIdentity { claimed } => {
                write!(f, "element {claimed} is not a two-sided identity")
            }
        }
    }
}

/// Violation lists are truncated; a broken table would otherwise report
/// every triple.
const MAX_VIOLATIONS: usize = 64;

/// Orders above this skip the cubic associativity check in trusted family
/// constructors.
pub(crate) const EXHAUSTIVE_LIMIT: usize = 256;

/// Checks the inverse-semigroup axioms on a square table.
///
/// Inverses are recomputed from the table. Returns every violation found,
/// up to a cap.
pub fn validate(table: &[Vec<usize>]) -> std::result::Result<(), Vec<Violation>> {
    let n = table.len();
    let mut violations = Vec::new();
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            violations.push(Violation::NotSquare {
                row,
                len: entries.len(),
                order: n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                violations.push(Violation::OutOfRange { row, col, value });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let m = |a: usize, b: usize| table[a][b];
    'assoc: for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    violations.push(Violation::NotAssociative { a, b, c });
                    if violations.len() >= MAX_VIOLATIONS {
                        break 'assoc;
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    for a in 0..n {
        let candidates: Vec<usize> = (0..n)
            .filter(|&b| m(m(a, b), a) == a && m(m(b, a), b) == b)
            .collect();
        match candidates.len() {
            0 => violations.push(Violation::NoInverse { a }),
            1 => {}
            _ => violations.push(Violation::MultipleInverses { a, candidates }),
        }
    }
    let idempotents: Vec<usize> = (0..n).filter(|&e| m(e, e) == e).collect();
    for (i, &e) in idempotents.iter().enumerate() {
        for &f in &idempotents[i + 1..] {
            if m(e, f) != m(f, e) {
                violations.push(Violation::IdempotentsDoNotCommute { e, f });
            }
        }
    }
    violations.truncate(MAX_VIOLATIONS);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// A validated finite inverse semigroup.
///
/// The natural partial order is cached as one bitset per element holding
/// everything above it.
#[derive(Clone, Debug)]
pub struct FiniteInverseSemigroup {
    names: Vec<String>,
    table: Vec<ElementId>,
    inv: Vec<ElementId>,
    idempotents: ElementSet,
    above: Vec<ElementSet>,
    identity: Option<ElementId>,
}

impl FiniteInverseSemigroup {
    /// Builds and validates a semigroup from display names and a table.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        if names.len() != table.len() {
            return Err(Error::usage(format!(
                "{} names for a table of order {}",
                names.len(),
                table.len()
            )));
        }
        validate(&table).map_err(Error::Invalid)?;
        let n = table.len();
        let flat: Vec<ElementId> = table
            .iter()
            .flat_map(|r| r.iter().map(|&v| ElementId::from_index(v)))
            .collect();
        let inv = (0..n)
            .map(|a| {
                let found = (0..n).find(|&b| {
                    flat[flat[a * n + b].index() * n + a].index() == a
                        && flat[flat[b * n + a].index() * n + b].index() == b
                });
                ElementId::from_index(found.expect("validated table has inverses"))
            })
            .collect();
        Ok(Self::assemble(names, flat, inv))
    }

    /// Builds from a table known to come from a correct construction. The
    /// exhaustive axiom check still runs when the order is small enough.
    pub(crate) fn from_trusted(
        names: Vec<String>,
        table: Vec<ElementId>,
        inv: Vec<ElementId>,
    ) -> Result<Self> {
        let n = names.len();
        if n <= EXHAUSTIVE_LIMIT {
            let rows: Vec<Vec<usize>> = table
                .chunks(n)
                .map(|r| r.iter().map(|e| e.index()).collect())
                .collect();
            validate(&rows).map_err(Error::Invalid)?;
        }
        let s = Self::assemble(names, table, inv);
        for a in s.elements() {
            let b = s.inverse(a);
            if s.mul(s.mul(a, b), a) != a || s.mul(s.mul(b, a), b) != b {
                return Err(Error::Construction(format!(
                    "bad inverse for {}",
                    s.name(a)
                )));
            }
        }
        Ok(s)
    }

    fn assemble(names: Vec<String>, table: Vec<ElementId>, inv: Vec<ElementId>) -> Self {
        let n = names.len();
        let mul = |a: usize, b: usize| table[a * n + b].index();
        let mut idempotents = ElementSet::empty(n);
        for e in 0..n {
            if mul(e, e) == e {
                idempotents.insert(ElementId::from_index(e));
            }
        }
        // a ≤ b iff a = (a a⁻¹) b
        let mut above = vec![ElementSet::empty(n); n];
        for (a, up) in above.iter_mut().enumerate() {
            let e = mul(a, inv[a].index());
            for b in 0..n {
                if mul(e, b) == a {
                    up.insert(ElementId::from_index(b));
                }
            }
        }
        let identity = (0..n)
            .find(|&i| (0..n).all(|a| mul(i, a) == a && mul(a, i) == a))
            .map(ElementId::from_index);
        FiniteInverseSemigroup {
            names,
            table,
            inv,
            idempotents,
            above,
            identity,
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order()).map(ElementId::from_index)
    }

    pub fn name(&self, a: ElementId) -> &str {
        &self.names[a.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find(&self, name: &str) -> Option<ElementId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(ElementId::from_index)
    }

    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    pub fn idempotents(&self) -> &ElementSet {
        &self.idempotents
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.idempotents.contains(a)
    }

    pub fn check(&self, a: ElementId) -> Result<ElementId> {
        if a.index() < self.order() {
            Ok(a)
        } else {
            Err(Error::usage(format!(
                "element {a} out of range for order {}",
                self.order()
            )))
        }
    }

    /// Table lookup without range checks; ids from this semigroup are valid.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a.index() * self.order() + b.index()]
    }

    pub fn multiply(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    #[inline]
    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inv[a.index()]
    }

    /// `a a⁻¹`
    #[inline]
    pub fn range_idempotent(&self, a: ElementId) -> ElementId {
        self.mul(a, self.inverse(a))
    }

    /// `a⁻¹ a`
    #[inline]
    pub fn domain_idempotent(&self, a: ElementId) -> ElementId {
        self.mul(self.inverse(a), a)
    }

    /// Natural partial order: `a ≤ b` iff `a = (a a⁻¹) b`.
    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.above[a.index()].contains(b)
    }

    /// Everything at or above `a`.
    pub fn above(&self, a: ElementId) -> &ElementSet {
        &self.above[a.index()]
    }

    /// Heap operation `⟨a,b,c⟩ = a b⁻¹ c`.
    pub fn heap(&self, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        self.mul(self.mul(a, self.inverse(b)), c)
    }

    pub fn product_of<I: IntoIterator<Item = ElementId>>(&self, factors: I) -> Option<ElementId> {
        factors.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    /// True when the semigroup has exactly one idempotent, which makes it a group.
    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// The subsemigroup on `members` as a semigroup in its own right, with
    /// the map from new ids back to parent ids.
    pub fn restrict(
        &self,
        members: &ElementSet,
    ) -> Result<(FiniteInverseSemigroup, Vec<ElementId>)> {
        let ids = members.to_vec();
        let mut local = vec![None; self.order()];
        for (i, &a) in ids.iter().enumerate() {
            local[a.index()] = Some(i);
        }
        let to_local = |a: ElementId| {
            local[a.index()].ok_or_else(|| {
                Error::usage(format!("subset is not closed: {} escapes", self.name(a)))
            })
        };
        let mut table = Vec::with_capacity(ids.len() * ids.len());
        for &a in &ids {
            for &b in &ids {
                table.push(ElementId::from_index(to_local(self.mul(a, b))?));
            }
        }
        let inv = ids
            .iter()
            .map(|&a| to_local(self.inverse(a)).map(ElementId::from_index))
            .collect::<Result<Vec<_>>>()?;
        let names = ids.iter().map(|&a| self.names[a.index()].clone()).collect();
        Ok((Self::from_trusted(names, table, inv)?, ids))
    }

    pub fn to_json(&self) -> SemigroupJson {
        let n = self.order();
        SemigroupJson {
            elements: self.names.clone(),
            table: self
                .table
                .chunks(n)
                .map(|r| r.iter().map(|e| e.index()).collect())
                .collect(),
            identity: self.identity.map(|e| e.index()),
        }
    }

    pub fn from_json(json: SemigroupJson) -> Result<Self> {
        let s = Self::from_table(json.elements, json.table)?;
        if let Some(claimed) = json.identity {
            if s.identity.map(|e| e.index()) != Some(claimed) {
                return Err(Error::Invalid(vec![Violation::BadIdentity { claimed }]));
            }
        }
        Ok(s)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let json: SemigroupJson = serde_json::from_str(text)
            .map_err(|e| Error::usage(format!("bad semigroup JSON: {e}")))?;
        Self::from_json(json)
    }
}

/// `{"elements":[names], "table":[[row]], "identity": index|null}`
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: Option<usize>,
}

/// Assignment of generators to elements; `x⁻¹` maps to the inverse of `x`'s image.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    images: Vec<(Letter, ElementId)>,
}

impl GeneratorMap {
    pub fn new<I: IntoIterator<Item = (char, ElementId)>>(
        s: &FiniteInverseSemigroup,
        assignment: I,
    ) -> Result<Self> {
        let mut images = Vec::new();
        for (ch, e) in assignment {
            let letter = Letter::new(ch)?;
            if letter.is_inverse() {
                return Err(Error::usage(format!("generator {ch} must be lowercase")));
            }
            if images.iter().any(|(l, _)| *l == letter) {
                return Err(Error::usage(format!("generator {ch} assigned twice")));
            }
            images.push((letter, s.check(e)?));
        }
        images.sort_by_key(|(l, _)| *l);
        Ok(GeneratorMap { images })
    }

    pub fn alphabet(&self) -> crate::word::Alphabet {
        crate::word::Alphabet::new(self.images.iter().map(|(l, _)| *l))
    }

    /// Image of a letter of `X ∪ X⁻¹`.
    pub fn image(&self, s: &FiniteInverseSemigroup, letter: Letter) -> Result<ElementId> {
        let (_, e) = self
            .images
            .iter()
            .find(|(l, _)| *l == letter.generator())
            .ok_or_else(|| Error::usage(format!("letter {letter} is not a generator")))?;
        Ok(if letter.is_inverse() {
            s.inverse(*e)
        } else {
            *e
        })
    }

    pub fn generators(&self) -> impl Iterator<Item = (Letter, ElementId)> + '_ {
        self.images.iter().copied()
    }

    /// `θ(word)`; the empty word evaluates to the identity.
    pub fn evaluate(&self, s: &FiniteInverseSemigroup, word: &[Letter]) -> Result<ElementId> {
        let mut acc: Option<ElementId> = None;
        for &l in word {
            let x = self.image(s, l)?;
            acc = Some(match acc {
                Some(a) => s.mul(a, x),
                None => x,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => s
                .identity()
                .ok_or_else(|| Error::usage("empty word in a semigroup without identity")),
        }
    }

    pub fn evaluate_str(&self, s: &FiniteInverseSemigroup, word: &str) -> Result<ElementId> {
        self.evaluate(s, &parse_word(word)?)
    }

    /// Whether the images generate `s` as an inverse monoid (identity included
    /// when `s` has one).
    pub fn generates(&self, s: &FiniteInverseSemigroup) -> bool {
        let mut seen = ElementSet::empty(s.order());
        let mut queue: Vec<ElementId> = Vec::new();
        let gens: Vec<ElementId> = self
            .images
            .iter()
            .flat_map(|&(_, e)| [e, s.inverse(e)])
            .collect();
        for &g in gens.iter().chain(s.identity().iter()) {
            if seen.insert(g) {
                queue.push(g);
            }
        }
        while let Some(a) = queue.pop() {
            for &g in &gens {
                let p = s.mul(a, g);
                if seen.insert(p) {
                    queue.push(p);
                }
            }
        }
        seen.len() == s.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn left_zero_semigroup_is_rejected() {
        // ab = a, ba = b
        let table = vec![vec![0, 0], vec![1, 1]];
        let errs = validate(&table).unwrap_err();
        assert!(errs
            .iter()
            .any(|v| matches!(v, Violation::IdempotentsDoNotCommute { .. })));
        assert!(errs
            .iter()
            .any(|v| v.to_string().contains("idempotents do not commute")));
    }

    #[test]
    fn corrupted_entry_names_a_triple() {
        // Z3 with one entry broken
        let mut table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + b) % 3).collect())
            .collect();
        table[1][1] = 0;
        let errs = validate(&table).unwrap_err();
        assert!(matches!(errs[0], Violation::NotAssociative { .. }));
    }

    #[test]
    fn ragged_and_out_of_range_tables() {
        assert!(matches!(
            validate(&[vec![0, 1], vec![0]]).unwrap_err()[0],
            Violation::NotSquare { .. }
        ));
        assert!(matches!(
            validate(&[vec![3]]).unwrap_err()[0],
            Violation::OutOfRange { .. }
        ));
    }

    #[test]
    fn json_round_trip_and_identity_check() {
        let table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + b) % 3).collect())
            .collect();
        let s = FiniteInverseSemigroup::from_table(names(3), table).unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back = FiniteInverseSemigroup::parse_json(&text).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        let mut bad = s.to_json();
        bad.identity = Some(1);
        assert!(FiniteInverseSemigroup::from_json(bad).is_err());
    }

    #[test]
    fn multiply_out_of_range() {
        let s = FiniteInverseSemigroup::from_table(names(1), vec![vec![0]]).unwrap();
        assert!(s.multiply(ElementId(0), ElementId(5)).is_err());
    }
}
