//! Right cosets `↑(Ls)` of closed inverse subsemigroups: construction,
//! enumeration, transversals, Schreier-type generators and the index formula.

mod fim;
mod index;
mod sigma;

pub use fim::{
    fim_coset_of, fim_delta, fim_relative_index, fim_same_coset, fim_schreier_generators,
    fim_transversal, FimSchreierReport,
};
pub use index::{check_index_formula, check_index_formula_fim, IndexReport};
pub use sigma::{is_e_unitary, max_group_image, sigma_classes, GroupImage};

use rayon::prelude::*;

use crate::closure::{
    generate_closed, is_closed_inverse_sub, is_coset, is_inverse_closed, is_product_closed,
    up_closure, FiniteClosedSub,
};
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteInverseSemigroup, GeneratorMap};
use crate::set::ElementSet;

/// A right coset of a finite closed inverse subsemigroup. Cosets compare by
/// their member set; the representative is only a convenience.
#[derive(Clone, Debug)]
pub struct Coset {
    key: ElementSet,
    representative: ElementId,
}

impl Coset {
    pub fn members(&self) -> &ElementSet {
        &self.key
    }

    pub fn representative(&self) -> ElementId {
        self.representative
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.key.contains(a)
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for Coset {}

/// `↑(Ls)`, or `None` when `ss⁻¹ ∉ L`.
pub fn coset_key(l: &FiniteClosedSub<'_>, s: ElementId) -> Option<ElementSet> {
    let parent = l.parent();
    if !l.contains(parent.range_idempotent(s)) {
        return None;
    }
    let translated =
        ElementSet::from_ids(parent.order(), l.members().iter().map(|x| parent.mul(x, s)));
    Some(up_closure(parent, &translated))
}

pub fn coset_of(l: &FiniteClosedSub<'_>, s: ElementId) -> Option<Coset> {
    coset_key(l, s).map(|key| Coset {
        key,
        representative: s,
    })
}

/// Prop. 2.3(c) test: `a b⁻¹ ∈ L`. Both cosets must exist.
pub fn same_coset(l: &FiniteClosedSub<'_>, a: ElementId, b: ElementId) -> Result<bool> {
    let s = l.parent();
    for x in [a, b] {
        s.check(x)?;
        if !l.contains(s.range_idempotent(x)) {
            return Err(Error::usage(format!(
                "the coset of {} is undefined",
                s.name(x)
            )));
        }
    }
    Ok(l.contains(s.mul(a, s.inverse(b))))
}

/// Distinct cosets of `L` whose representatives lie in `ambient`. `L` comes
/// first; the rest follow in order of representative. The representative is
/// the least id among the maximal members (in the natural order), which
/// picks the identity for `L` in a monoid.
pub fn enumerate_cosets_within(l: &FiniteClosedSub<'_>, ambient: &ElementSet) -> Vec<Coset> {
    let s = l.parent();
    let candidates: Vec<ElementId> = ambient.iter().collect();
    let keys: Vec<Option<ElementSet>> = candidates.par_iter().map(|&x| coset_key(l, x)).collect();
    let mut cosets: Vec<Coset> = Vec::new();
    for (x, key) in candidates.into_iter().zip(keys) {
        let Some(key) = key else { continue };
        if !cosets.iter().any(|c| c.key == key) {
            cosets.push(Coset {
                key,
                representative: x,
            });
        }
    }
    for c in &mut cosets {
        let inside: Vec<ElementId> = c.key.iter().filter(|x| ambient.contains(*x)).collect();
        c.representative = *inside
            .iter()
            .find(|&&x| inside.iter().all(|&y| y == x || !s.leq(x, y)))
            .expect("coset has a maximal member");
    }
    cosets.sort_by_key(|c| (c.key != *l.members(), c.representative));
    if let Some(first) = cosets.first_mut() {
        if let Some(one) = s.identity().filter(|&one| first.key.contains(one)) {
            first.representative = one;
        }
    }
    cosets
}

pub fn enumerate_cosets(l: &FiniteClosedSub<'_>) -> Vec<Coset> {
    enumerate_cosets_within(l, &ElementSet::full(l.parent().order()))
}

/// `[S : L]`
pub fn index(l: &FiniteClosedSub<'_>) -> usize {
    enumerate_cosets(l).len()
}

/// `↑(C C⁻¹)`, the closed inverse subsemigroup a coset belongs to.
pub fn coset_to_subsemigroup<'s>(
    s: &'s FiniteInverseSemigroup,
    c: &ElementSet,
) -> Result<FiniteClosedSub<'s>> {
    if !is_coset(s, c)? {
        return Err(Error::usage("subset is not a coset"));
    }
    let products = ElementSet::from_ids(
        s.order(),
        c.iter()
            .flat_map(|a| c.iter().map(move |b| s.mul(a, s.inverse(b)))),
    );
    FiniteClosedSub::new(s, up_closure(s, &products))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UnionWitness {
    /// `s s⁻¹ ∈ L` but `s⁻¹ s ∉ L`.
    DomainOutsideL { s: ElementId },
    /// `e ∈ E(L)`, `s ∈ U` but `s e s⁻¹ ∉ U`.
    ConjugateOutsideU { s: ElementId, e: ElementId },
}

/// Union of all cosets of `L`, with both tests of whether it is a closed
/// inverse subsemigroup.
#[derive(Clone, Debug)]
pub struct CosetUnionReport {
    pub union: ElementSet,
    pub is_whole: bool,
    pub l_full: bool,
    /// Direct check that `U` is a closed inverse subsemigroup.
    pub direct: bool,
    /// The conjugation / domain criterion.
    pub criterion: bool,
    pub witness: Option<UnionWitness>,
}

pub fn coset_union(l: &FiniteClosedSub<'_>) -> CosetUnionReport {
    let s = l.parent();
    let union = ElementSet::from_ids(
        s.order(),
        s.elements().filter(|&x| l.contains(s.range_idempotent(x))),
    );
    let direct = is_closed_inverse_sub(s, &union)
        && is_product_closed(s, &union)
        && is_inverse_closed(s, &union);
    let mut witness = union
        .iter()
        .find(|&x| !l.contains(s.domain_idempotent(x)))
        .map(|x| UnionWitness::DomainOutsideL { s: x });
    if witness.is_none() {
        'outer: for x in union.iter() {
            for e in l.members().iter().filter(|&e| s.is_idempotent(e)) {
                if !union.contains(s.mul(s.mul(x, e), s.inverse(x))) {
                    witness = Some(UnionWitness::ConjugateOutsideU { s: x, e });
                    break 'outer;
                }
            }
        }
    }
    CosetUnionReport {
        is_whole: union.len() == s.order(),
        l_full: l.is_full(),
        direct,
        criterion: witness.is_none(),
        witness,
        union,
    }
}

/// One representative per coset; the identity represents `L` when present.
#[derive(Clone, Debug)]
pub struct Transversal {
    cosets: Vec<Coset>,
}

impl Transversal {
    pub fn new(l: &FiniteClosedSub<'_>) -> Self {
        Transversal {
            cosets: enumerate_cosets(l),
        }
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn representatives(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.cosets.iter().map(|c| c.representative)
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Position of the coset containing `s`, if `s` lies in a coset.
    pub fn position_of(&self, s: ElementId) -> Option<usize> {
        self.cosets.iter().position(|c| c.key.contains(s))
    }

    /// `s̄`: the representative of the coset containing `s`.
    pub fn representative_of(&self, s: ElementId) -> Option<ElementId> {
        self.position_of(s).map(|i| self.cosets[i].representative)
    }
}

pub fn transversal(l: &FiniteClosedSub<'_>) -> Transversal {
    Transversal::new(l)
}

/// `δ(r,s) = rs (r̄s̄)⁻¹`; `None` when the coset of `rs` is undefined.
pub fn delta(
    l: &FiniteClosedSub<'_>,
    t: &Transversal,
    r: ElementId,
    s: ElementId,
) -> Result<Option<ElementId>> {
    let m = l.parent();
    if !t.representatives().any(|x| x == r) {
        return Err(Error::usage(format!(
            "{} is not in the transversal",
            m.name(r)
        )));
    }
    let rs = m.mul(r, m.check(s)?);
    if !l.contains(m.range_idempotent(rs)) {
        return Ok(None);
    }
    let bar = t
        .representative_of(rs)
        .expect("defined cosets are enumerated");
    let d = m.mul(rs, m.inverse(bar));
    debug_assert!(l.contains(d));
    Ok(Some(d))
}

/// Schreier-type generators `δ(r,a)` for `r` in the transversal and `a`
/// a generator or inverse generator, with the regenerated subsemigroup.
#[derive(Clone, Debug)]
pub struct SchreierReport<'s> {
    pub transversal: Transversal,
    pub generators: Vec<ElementId>,
    pub regenerated: FiniteClosedSub<'s>,
    pub verified: bool,
}

pub fn schreier_generators<'s>(
    m: &'s FiniteInverseSemigroup,
    gm: &GeneratorMap,
    l: &FiniteClosedSub<'s>,
) -> Result<SchreierReport<'s>> {
    if !std::ptr::eq(m, l.parent()) {
        return Err(Error::usage("subsemigroup belongs to another semigroup"));
    }
    if !gm.generates(m) {
        return Err(Error::usage("generator map does not generate the monoid"));
    }
    let t = transversal(l);
    let mut gens = Vec::new();
    for r in t.representatives() {
        for letter in gm.alphabet().letters() {
            if let Some(d) = delta(l, &t, r, gm.image(m, letter)?)? {
                gens.push(d);
            }
        }
    }
    gens.sort();
    gens.dedup();
    let regenerated = generate_closed(m, &ElementSet::from_ids(m.order(), gens.iter().copied()))?;
    let verified = regenerated.members() == l.members();
    Ok(SchreierReport {
        transversal: t,
        generators: gens,
        regenerated,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::generate_closed_ids;
    use crate::families::{brandt, symmetric_inverse_monoid};

    fn stab1(i3: &FiniteInverseSemigroup) -> FiniteClosedSub<'_> {
        let ids: Vec<ElementId> = i3
            .elements()
            .filter(|&e| i3.name(e).starts_with('1'))
            .collect();
        FiniteClosedSub::new(i3, ElementSet::from_ids(i3.order(), ids)).unwrap()
    }

    fn id(s: &FiniteInverseSemigroup, name: &str) -> ElementId {
        s.find(name).unwrap()
    }

    #[test]
    fn coset_of_examples() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let l = stab1(&i3);
        let c2 = coset_of(&l, id(&i3, "213")).unwrap();
        let expected: Vec<ElementId> = i3
            .elements()
            .filter(|&e| i3.name(e).starts_with('2'))
            .collect();
        assert_eq!(c2.members().to_vec(), expected);
        assert_eq!(coset_of(&l, id(&i3, "1--")).unwrap().members(), l.members());
        let (b2, _) = brandt(2).unwrap();
        let e1 = generate_closed_ids(&b2, &[id(&b2, "(1,1)")]).unwrap();
        assert!(coset_of(&e1, id(&b2, "(2,1)")).is_none());
    }

    #[test]
    fn same_coset_examples() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let l = stab1(&i3);
        assert!(same_coset(&l, id(&i3, "213"), id(&i3, "2--")).unwrap());
        assert!(same_coset(&l, id(&i3, "213"), id(&i3, "213")).unwrap());
        assert!(!same_coset(&l, id(&i3, "213"), id(&i3, "312")).unwrap());
        assert!(same_coset(&l, id(&i3, "-1-"), id(&i3, "123")).is_err());
    }

    #[test]
    fn indices() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let l = stab1(&i3);
        assert_eq!(index(&l), 3);
        let k = generate_closed_ids(&i3, &[id(&i3, "132")]).unwrap();
        assert_eq!(index(&k), 3);
        assert_eq!(enumerate_cosets_within(&k, l.members()).len(), 1);
        let (b2, _) = brandt(2).unwrap();
        let e1 = generate_closed_ids(&b2, &[id(&b2, "(1,1)")]).unwrap();
        assert_eq!(index(&e1), 2);
    }

    #[test]
    fn coset_to_subsemigroup_examples() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let l = stab1(&i3);
        let c2 = coset_of(&l, id(&i3, "213")).unwrap();
        assert_eq!(coset_to_subsemigroup(&i3, c2.members()).unwrap(), l);
        assert_eq!(coset_to_subsemigroup(&i3, l.members()).unwrap(), l);
        let (b2, _) = brandt(2).unwrap();
        let single = ElementSet::from_ids(5, [id(&b2, "(1,2)")]);
        let e1 = generate_closed_ids(&b2, &[id(&b2, "(1,1)")]).unwrap();
        assert_eq!(coset_to_subsemigroup(&b2, &single).unwrap(), e1);
        assert!(coset_to_subsemigroup(&b2, b2.idempotents()).is_err());
    }

    #[test]
    fn brandt_coset_union() {
        let (b2, _) = brandt(2).unwrap();
        let e1 = generate_closed_ids(&b2, &[id(&b2, "(1,1)")]).unwrap();
        let report = coset_union(&e1);
        assert_eq!(
            report.union,
            ElementSet::from_ids(5, [id(&b2, "(1,1)"), id(&b2, "(1,2)")])
        );
        assert!(!report.direct && !report.criterion);
        assert_eq!(
            report.witness,
            Some(UnionWitness::DomainOutsideL {
                s: id(&b2, "(1,2)")
            })
        );
        let whole = FiniteClosedSub::whole(&b2);
        let r = coset_union(&whole);
        assert!(r.is_whole && r.l_full && r.direct && r.criterion);
    }

    #[test]
    fn transversal_and_delta() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let l = stab1(&i3);
        let t = transversal(&l);
        assert_eq!(t.len(), 3);
        assert_eq!(t.cosets()[0].representative(), i3.identity().unwrap());
        let one = i3.identity().unwrap();
        let swap = id(&i3, "213");
        assert_eq!(t.representative_of(swap), Some(swap));
        assert_eq!(delta(&l, &t, one, swap).unwrap(), Some(one));
        assert!(delta(&l, &t, id(&i3, "2--"), swap).is_err());
        let whole = FiniteClosedSub::whole(&i3);
        assert_eq!(
            transversal(&whole).representatives().collect::<Vec<_>>(),
            vec![one]
        );
    }

    #[test]
    fn schreier_for_stab1() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let gm = GeneratorMap::new(
            &i3,
            [
                ('x', id(&i3, "213")),
                ('y', id(&i3, "231")),
                ('z', id(&i3, "-23")),
            ],
        )
        .unwrap();
        let l = stab1(&i3);
        let report = schreier_generators(&i3, &gm, &l).unwrap();
        assert!(report.verified);
        let whole = FiniteClosedSub::whole(&i3);
        assert!(schreier_generators(&i3, &gm, &whole).unwrap().verified);
        let weak = GeneratorMap::new(&i3, [('x', id(&i3, "213"))]).unwrap();
        assert!(schreier_generators(&i3, &weak, &l).is_err());
    }
}
