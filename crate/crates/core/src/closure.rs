//! Upward closure, generation of closed inverse subsemigroups, and the
//! closed / atlas / coset / full predicates.

use crate::automata::{fold_capped, Bouquet, InverseAutomaton, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::munn::MunnTree;
use crate::semigroup::{ElementId, FiniteInverseSemigroup};
use crate::set::ElementSet;
use crate::word::{parse_word, Alphabet, Letter};

/// `↑A = { s : a ≤ s for some a ∈ A }`
pub fn up_closure(s: &FiniteInverseSemigroup, a: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    for x in a.iter() {
        out.union_with(s.above(x));
    }
    out
}

/// Smallest inverse subsemigroup containing `y`.
pub fn inverse_subsemigroup_closure(s: &FiniteInverseSemigroup, y: &ElementSet) -> ElementSet {
    let mut members = ElementSet::empty(s.order());
    let mut queue = Vec::new();
    for g in y.iter().flat_map(|g| [g, s.inverse(g)]) {
        if members.insert(g) {
            queue.push(g);
        }
    }
    let mut done: Vec<ElementId> = Vec::new();
    while let Some(a) = queue.pop() {
        done.push(a);
        for &b in &done {
            for p in [s.mul(a, b), s.mul(b, a)] {
                if members.insert(p) {
                    queue.push(p);
                }
            }
        }
    }
    members
}

pub fn is_product_closed(s: &FiniteInverseSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| a.iter().all(|y| a.contains(s.mul(x, y))))
}

pub fn is_inverse_closed(s: &FiniteInverseSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| a.contains(s.inverse(x)))
}

pub fn is_upward_closed(s: &FiniteInverseSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| s.above(x).is_subset(a))
}

/// Nonempty, closed under products and inverses, and upward closed.
pub fn is_closed_inverse_sub(s: &FiniteInverseSemigroup, a: &ElementSet) -> bool {
    !a.is_empty() && is_upward_closed(s, a) && is_inverse_closed(s, a) && is_product_closed(s, a)
}

/// `A A⁻¹ A ⊆ A`
pub fn is_atlas(s: &FiniteInverseSemigroup, a: &ElementSet) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::usage("atlas test on the empty set"));
    }
    Ok(a.iter().all(|x| {
        a.iter()
            .all(|y| a.iter().all(|z| a.contains(s.heap(x, y, z))))
    }))
}

/// A coset is a closed atlas.
pub fn is_coset(s: &FiniteInverseSemigroup, c: &ElementSet) -> Result<bool> {
    Ok(is_atlas(s, c)? && is_upward_closed(s, c))
}

/// A closed inverse subsemigroup of a finite inverse semigroup.
#[derive(Clone, Debug)]
pub struct FiniteClosedSub<'s> {
    parent: &'s FiniteInverseSemigroup,
    members: ElementSet,
}

impl<'s> FiniteClosedSub<'s> {
    /// Wraps a subset after checking that it is a closed inverse subsemigroup.
    pub fn new(parent: &'s FiniteInverseSemigroup, members: ElementSet) -> Result<Self> {
        if members.order() != parent.order() {
            return Err(Error::usage(
                "subset belongs to a semigroup of another order",
            ));
        }
        if !is_closed_inverse_sub(parent, &members) {
            return Err(Error::usage("subset is not a closed inverse subsemigroup"));
        }
        Ok(FiniteClosedSub { parent, members })
    }

    pub fn whole(parent: &'s FiniteInverseSemigroup) -> Self {
        FiniteClosedSub {
            parent,
            members: ElementSet::full(parent.order()),
        }
    }

    pub fn parent(&self) -> &'s FiniteInverseSemigroup {
        self.parent
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `E(S) ⊆ L`
    pub fn is_full(&self) -> bool {
        self.parent.idempotents().is_subset(&self.members)
    }

    pub fn is_subset_of(&self, other: &FiniteClosedSub<'_>) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl PartialEq for FiniteClosedSub<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for FiniteClosedSub<'_> {}

/// Smallest closed inverse subsemigroup containing `y`: close under products
/// and inverses, then take the upward closure once. The result is re-checked.
pub fn generate_closed<'s>(
    s: &'s FiniteInverseSemigroup,
    y: &ElementSet,
) -> Result<FiniteClosedSub<'s>> {
    let seed = if y.is_empty() {
        let one = s
            .identity()
            .ok_or_else(|| Error::usage("empty generating set in a semigroup without identity"))?;
        ElementSet::from_ids(s.order(), [one])
    } else {
        y.clone()
    };
    let members = up_closure(s, &inverse_subsemigroup_closure(s, &seed));
    assert!(
        is_closed_inverse_sub(s, &members),
        "upward closure of an inverse subsemigroup must be closed"
    );
    Ok(FiniteClosedSub { parent: s, members })
}

pub fn generate_closed_ids<'s>(
    s: &'s FiniteInverseSemigroup,
    y: &[ElementId],
) -> Result<FiniteClosedSub<'s>> {
    for &a in y {
        s.check(a)?;
    }
    generate_closed(s, &ElementSet::from_ids(s.order(), y.iter().copied()))
}

/// `↑⟨Y⟩` in `FIM(X)`, held as the folded automaton of the bouquet of `Y`.
#[derive(Clone, Debug)]
pub struct FimClosedSub {
    alphabet: Alphabet,
    generators: Vec<Vec<Letter>>,
    automaton: InverseAutomaton,
}

impl FimClosedSub {
    pub fn generate(alphabet: Alphabet, generators: Vec<Vec<Letter>>) -> Result<Self> {
        Self::generate_capped(alphabet, generators, DEFAULT_STATE_CAP)
    }

    pub fn generate_capped(
        alphabet: Alphabet,
        generators: Vec<Vec<Letter>>,
        cap: usize,
    ) -> Result<Self> {
        let bouquet = Bouquet::from_words(alphabet.clone(), &generators)?;
        let automaton = fold_capped(&bouquet, cap)?;
        Ok(FimClosedSub {
            alphabet,
            generators,
            automaton,
        })
    }

    pub fn parse(alphabet: &str, generators: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::parse(alphabet)?;
        let gens = generators
            .iter()
            .map(|g| parse_word(g))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(alphabet, gens)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generators(&self) -> &[Vec<Letter>] {
        &self.generators
    }

    pub fn automaton(&self) -> &InverseAutomaton {
        &self.automaton
    }

    fn check_tree(&self, t: &MunnTree) -> Result<()> {
        for v in t.vertices() {
            self.alphabet.check_word(v.letters())?;
        }
        Ok(())
    }

    /// State reached by each vertex of `t`, or `None` if some vertex is unreadable.
    fn read_vertices(&self, t: &MunnTree) -> Option<()> {
        let a = &self.automaton;
        t.vertices()
            .iter()
            .try_for_each(|v| a.run(v.letters()).map(|_| ()))
    }

    /// Whether `t t⁻¹ ∈ K`: every vertex of `t` is readable from the base.
    pub fn contains_range_of(&self, t: &MunnTree) -> Result<bool> {
        self.check_tree(t)?;
        Ok(self.read_vertices(t).is_some())
    }

    /// Membership: every vertex readable and the mark leads back to the base.
    pub fn contains(&self, t: &MunnTree) -> Result<bool> {
        self.check_tree(t)?;
        let a = &self.automaton;
        Ok(self.read_vertices(t).is_some() && a.run(t.mark().letters()) == Some(a.initial()))
    }

    pub fn contains_word(&self, word: &str) -> Result<bool> {
        self.contains(&MunnTree::parse(word)?)
    }

    /// Full means every idempotent is a member, which for a folded automaton
    /// means every letter is defined everywhere.
    pub fn is_full(&self) -> bool {
        self.automaton.is_complete()
    }

    /// `K ⊆ H`, decided by checking each generator of `K` in `H`.
    pub fn is_subset_of(&self, other: &FimClosedSub) -> Result<bool> {
        if self.alphabet != other.alphabet {
            return Err(Error::usage("closed submonoids over different alphabets"));
        }
        for g in &self.generators {
            if !other.contains(&MunnTree::from_word(g))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A closed inverse subsemigroup, either of a finite table semigroup or of a
/// free inverse monoid.
#[derive(Clone, Debug)]
pub enum ClosedInverseSub<'s> {
    Finite(FiniteClosedSub<'s>),
    Fim(FimClosedSub),
}

impl ClosedInverseSub<'_> {
    pub fn is_full(&self) -> bool {
        match self {
            ClosedInverseSub::Finite(l) => l.is_full(),
            ClosedInverseSub::Fim(k) => k.is_full(),
        }
    }

    pub fn index(&self) -> usize {
        match self {
            ClosedInverseSub::Finite(l) => crate::cosets::enumerate_cosets(l).len(),
            ClosedInverseSub::Fim(k) => k.automaton().state_count(),
        }
    }
}
