//! The action of a semigroup on the cosets of a closed inverse
//! subsemigroup, the induced homomorphism into a symmetric inverse monoid,
//! and the coset automaton.

use std::collections::BTreeSet;

use super::InverseAutomaton;
use crate::closure::FiniteClosedSub;
use crate::cosets::{coset_of, enumerate_cosets, Coset};
use crate::error::{Error, Result};
use crate::families::PartialBijection;
use crate::semigroup::{ElementId, FiniteInverseSemigroup, GeneratorMap};
use crate::set::ElementSet;
use crate::word::Letter;

/// `C ⊲ u = ↑(Cu)`, defined iff `s u u⁻¹ s⁻¹ ∈ L` for a representative `s` of `C`.
pub fn coset_action(l: &FiniteClosedSub<'_>, c: &Coset, u: ElementId) -> Option<Coset> {
    let s = l.parent();
    let r = c.representative();
    let su = s.mul(r, u);
    if !l.contains(s.range_idempotent(su)) {
        return None;
    }
    coset_of(l, su)
}

/// Action of each generator on the cosets `1..d`, coset 1 being `L`.
#[derive(Clone, Debug)]
pub struct CosetActionTable<'s> {
    l: FiniteClosedSub<'s>,
    cosets: Vec<Coset>,
    generators: Vec<(Letter, PartialBijection)>,
}

/// Outcome of checking `φ_L` over the whole semigroup.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PhiVerification {
    /// `φ(uv) = φ(u)φ(v)` for all `u, v`.
    pub homomorphism: bool,
    /// `{u : 1 ⊲ u = 1} = L`.
    pub stab_pullback: bool,
    /// The generator table composed along a word for `u` gives `φ(u)`.
    pub generators_consistent: bool,
}

impl PhiVerification {
    pub fn all(&self) -> bool {
        self.homomorphism && self.stab_pullback && self.generators_consistent
    }
}

impl<'s> CosetActionTable<'s> {
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn generators(&self) -> &[(Letter, PartialBijection)] {
        &self.generators
    }

    fn position(&self, c: &Coset) -> usize {
        self.cosets
            .iter()
            .position(|d| d == c)
            .expect("action stays among the cosets")
    }

    /// `φ_L(u)` computed directly from the action.
    pub fn image(&self, u: ElementId) -> PartialBijection {
        let map = self
            .cosets
            .iter()
            .map(|c| coset_action(&self.l, c, u).map(|d| self.position(&d)))
            .collect();
        PartialBijection::new(map).expect("cosets are acted on by partial bijections")
    }

    /// Composite of generator actions along a word.
    pub fn image_of_word(&self, word: &[Letter]) -> PartialBijection {
        word.iter()
            .fold(PartialBijection::identity(self.degree()), |acc, l| {
                let (_, g) = self
                    .generators
                    .iter()
                    .find(|(x, _)| *x == l.generator())
                    .expect("letter of the generator map");
                acc.then(&if l.is_inverse() {
                    g.inverse()
                } else {
                    g.clone()
                })
            })
    }

    pub fn verify(&self, gm: &GeneratorMap) -> PhiVerification {
        let s = self.l.parent();
        let images: Vec<PartialBijection> = s.elements().map(|u| self.image(u)).collect();
        let homomorphism = s.elements().all(|u| {
            s.elements()
                .all(|v| images[s.mul(u, v).index()] == images[u.index()].then(&images[v.index()]))
        });
        let stab = ElementSet::from_ids(
            s.order(),
            s.elements()
                .filter(|u| images[u.index()].apply(0) == Some(0)),
        );
        let stab_pullback = stab == *self.l.members();
        let generators_consistent = shortest_words(s, gm).iter().enumerate().all(|(u, w)| {
            w.as_ref()
                .is_some_and(|w| self.image_of_word(w) == images[u])
        });
        PhiVerification {
            homomorphism,
            stab_pullback,
            generators_consistent,
        }
    }
}

/// A shortest word over the generators for each element (`None` if unreachable).
fn shortest_words(s: &FiniteInverseSemigroup, gm: &GeneratorMap) -> Vec<Option<Vec<Letter>>> {
    let letters: Vec<(Letter, ElementId)> = gm
        .alphabet()
        .letters()
        .map(|l| (l, gm.image(s, l).expect("alphabet letter")))
        .collect();
    let mut words: Vec<Option<Vec<Letter>>> = vec![None; s.order()];
    let mut frontier = Vec::new();
    if let Some(one) = s.identity() {
        words[one.index()] = Some(Vec::new());
        frontier.push(one);
    }
    for &(l, g) in &letters {
        if words[g.index()].is_none() {
            words[g.index()] = Some(vec![l]);
            frontier.push(g);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in frontier {
            for &(l, g) in &letters {
                let p = s.mul(a, g);
                if words[p.index()].is_none() {
                    let mut w = words[a.index()].clone().unwrap();
                    w.push(l);
                    words[p.index()] = Some(w);
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    words
}

/// `φ_L : S → I(D)` given by the generators' action on the cosets of `L`.
pub fn phi_hom<'s>(
    s: &'s FiniteInverseSemigroup,
    gm: &GeneratorMap,
    l: &FiniteClosedSub<'s>,
) -> Result<CosetActionTable<'s>> {
    if !std::ptr::eq(s, l.parent()) {
        return Err(Error::usage("subsemigroup belongs to another semigroup"));
    }
    if !gm.generates(s) {
        return Err(Error::usage(
            "generator map does not generate the semigroup",
        ));
    }
    let mut table = CosetActionTable {
        l: l.clone(),
        cosets: enumerate_cosets(l),
        generators: Vec::new(),
    };
    table.generators = gm.generators().map(|(x, e)| (x, table.image(e))).collect();
    Ok(table)
}

/// States are the cosets of `L` (state 0 is `L`, initial and only final);
/// `↑(Lt) --a--> ↑(Lt·θ(a))` whenever defined.
pub fn coset_automaton(
    m: &FiniteInverseSemigroup,
    gm: &GeneratorMap,
    l: &FiniteClosedSub<'_>,
) -> Result<InverseAutomaton> {
    if !std::ptr::eq(m, l.parent()) {
        return Err(Error::usage("subsemigroup belongs to another semigroup"));
    }
    let cosets = enumerate_cosets(l);
    let alphabet = gm.alphabet();
    let mut delta = Vec::with_capacity(cosets.len() * alphabet.width());
    for c in &cosets {
        for letter in alphabet.letters() {
            let target = coset_action(l, c, gm.image(m, letter)?).map(|d| {
                cosets
                    .iter()
                    .position(|x| *x == d)
                    .expect("closed under the action")
            });
            delta.push(target);
        }
    }
    let a =
        InverseAutomaton::from_transitions(alphabet, cosets.len(), 0, BTreeSet::from([0]), delta)?;
    if !a.is_inverse() {
        return Err(Error::Construction("coset automaton is not inverse".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::generate_closed_ids;
    use crate::families::{brandt, symmetric_inverse_monoid, FiniteGroup};
    use crate::word::parse_word;

    fn i3_setup() -> (FiniteInverseSemigroup, GeneratorMap) {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let f = |n| i3.find(n).unwrap();
        let gm =
            GeneratorMap::new(&i3, [('x', f("213")), ('y', f("231")), ('z', f("-23"))]).unwrap();
        (i3, gm)
    }

    fn stab1(i3: &FiniteInverseSemigroup) -> FiniteClosedSub<'_> {
        FiniteClosedSub::new(
            i3,
            ElementSet::from_ids(34, i3.elements().filter(|&e| i3.name(e).starts_with('1'))),
        )
        .unwrap()
    }

    #[test]
    fn action_examples() {
        let (i3, _) = i3_setup();
        let l = stab1(&i3);
        let cosets = enumerate_cosets(&l);
        let c1 = &cosets[0];
        let moved = coset_action(&l, c1, i3.find("213").unwrap()).unwrap();
        assert!(moved.contains(i3.find("2--").unwrap()));
        assert!(coset_action(&l, c1, i3.find("-23").unwrap()).is_none());
        for c in &cosets {
            for u in i3.elements() {
                if let Some(d) = coset_action(&l, c, u) {
                    assert_eq!(coset_action(&l, &d, i3.inverse(u)), Some(c.clone()));
                }
            }
        }
    }

    #[test]
    fn phi_for_stab1_matches_point_images() {
        let (i3, gm) = i3_setup();
        let l = stab1(&i3);
        let phi = phi_hom(&i3, &gm, &l).unwrap();
        assert_eq!(phi.degree(), 3);
        assert!(phi.verify(&gm).all());
        // coset j is {σ : 1σ = point j}; φ(u) sends j to the image of that point
        let point: Vec<usize> = phi
            .cosets()
            .iter()
            .map(|c| i3.name(c.representative()).as_bytes()[0] as usize - b'1' as usize)
            .collect();
        for u in i3.elements() {
            let img = phi.image(u);
            for j in 0..3 {
                let direct = i3.name(u).as_bytes()[point[j]];
                let expected = (direct != b'-').then(|| {
                    point
                        .iter()
                        .position(|&p| p == (direct - b'1') as usize)
                        .unwrap()
                });
                assert_eq!(img.apply(j), expected);
            }
        }
        let images: BTreeSet<_> = i3.elements().map(|u| phi.image(u)).collect();
        assert_eq!(images.len(), 34, "faithful");
    }

    #[test]
    fn whole_semigroup_acts_trivially() {
        let (i3, gm) = i3_setup();
        let whole = FiniteClosedSub::whole(&i3);
        let phi = phi_hom(&i3, &gm, &whole).unwrap();
        assert_eq!(phi.degree(), 1);
        assert!(i3
            .elements()
            .all(|u| phi.image(u) == PartialBijection::identity(1)));
    }

    #[test]
    fn coset_automata() {
        let (i3, gm) = i3_setup();
        let a = coset_automaton(&i3, &gm, &stab1(&i3)).unwrap();
        assert_eq!(a.state_count(), 3);
        assert!(a.accepts(&parse_word("xx").unwrap()));
        assert_eq!(a.minimize().state_count(), 3);

        let (s3, _) = i3
            .restrict(&ElementSet::from_ids(
                34,
                i3.elements().filter(|&e| !i3.name(e).contains('-')),
            ))
            .unwrap();
        let g = FiniteGroup::from_semigroup(&s3)
            .unwrap()
            .to_semigroup()
            .unwrap();
        let f = |n| g.find(n).unwrap();
        let ggm = GeneratorMap::new(&g, [('x', f("213")), ('y', f("231"))]).unwrap();
        let sub = generate_closed_ids(&g, &[f("213")]).unwrap();
        let ga = coset_automaton(&g, &ggm, &sub).unwrap();
        assert_eq!(ga.state_count(), 3);
        assert!(ga.is_complete());
    }

    #[test]
    fn brandt_action() {
        let (b2, _) = brandt(2).unwrap();
        let e1 = generate_closed_ids(&b2, &[b2.find("(1,1)").unwrap()]).unwrap();
        let gm = GeneratorMap::new(
            &b2,
            [
                ('x', b2.find("(1,2)").unwrap()),
                ('y', b2.find("(1,1)").unwrap()),
            ],
        )
        .unwrap();
        let a = coset_automaton(&b2, &gm, &e1).unwrap();
        assert_eq!(a.state_count(), 2);
        assert!(a.is_inverse());
    }
}
