//! Cosets of finitely generated closed inverse submonoids of `FIM(X)`.
//!
//! Cosets correspond to states of the folded automaton: `↑(K(P,w))` exists
//! when every vertex of `P` is readable from the base, and is identified
//! with the state reached by `w`.

use crate::automata::StateId;
use crate::closure::FimClosedSub;
use crate::error::{Error, Result};
use crate::munn::MunnTree;

/// State naming the coset of `t`, or `None` when `t t⁻¹ ∉ K`.
pub fn fim_coset_of(k: &FimClosedSub, t: &MunnTree) -> Result<Option<StateId>> {
    if !k.contains_range_of(t)? {
        return Ok(None);
    }
    Ok(k.automaton().run(t.mark().letters()))
}

/// `a b⁻¹ ∈ K`; both cosets must exist.
pub fn fim_same_coset(k: &FimClosedSub, a: &MunnTree, b: &MunnTree) -> Result<bool> {
    for t in [a, b] {
        if !k.contains_range_of(t)? {
            return Err(Error::usage(format!("the coset of {t} is undefined")));
        }
    }
    k.contains(&a.multiply(&b.inverse()))
}

/// Munn trees of the shortlex-least words reaching each state, in state order.
/// The first entry is the identity, representing `K` itself.
pub fn fim_transversal(k: &FimClosedSub) -> Vec<MunnTree> {
    k.automaton()
        .reaching_words()
        .into_iter()
        .map(|w| MunnTree::from_word(&w.expect("folded automata are connected")))
        .collect()
}

/// `δ(r,s) = rs (r̄s̄)⁻¹`, `None` when the coset of `rs` is undefined.
pub fn fim_delta(
    k: &FimClosedSub,
    transversal: &[MunnTree],
    r: &MunnTree,
    s: &MunnTree,
) -> Result<Option<MunnTree>> {
    if !transversal.contains(r) {
        return Err(Error::usage(format!("{r} is not in the transversal")));
    }
    let rs = r.multiply(s);
    let Some(state) = fim_coset_of(k, &rs)? else {
        return Ok(None);
    };
    Ok(Some(rs.multiply(&transversal[state].inverse())))
}

#[derive(Clone, Debug)]
pub struct FimSchreierReport {
    pub transversal: Vec<MunnTree>,
    pub generators: Vec<MunnTree>,
    pub regenerated: FimClosedSub,
    /// Folded automata of `K` and of the regenerated submonoid are isomorphic.
    pub verified: bool,
}

pub fn fim_schreier_generators(k: &FimClosedSub) -> Result<FimSchreierReport> {
    let transversal = fim_transversal(k);
    let mut generators = Vec::new();
    for r in &transversal {
        for letter in k.alphabet().letters() {
            if let Some(d) = fim_delta(k, &transversal, r, &MunnTree::from_word(&[letter]))? {
                if !generators.contains(&d) {
                    generators.push(d);
                }
            }
        }
    }
    let words = generators.iter().map(MunnTree::to_word).collect();
    let regenerated = FimClosedSub::generate(k.alphabet().clone(), words)?;
    let verified = regenerated.automaton().is_isomorphic(k.automaton());
    Ok(FimSchreierReport {
        transversal,
        generators,
        regenerated,
        verified,
    })
}

/// `[H : K]` for `K ⊆ H`: the cosets of `K` with a representative in `H`
/// are the `K`-states paired with the base of `H` in the product automaton.
pub fn fim_relative_index(h: &FimClosedSub, k: &FimClosedSub) -> Result<usize> {
    if !k.is_subset_of(h)? {
        return Err(Error::usage("K is not contained in H"));
    }
    let (_, pairs) = h.automaton().intersect(k.automaton())?;
    let base = h.automaton().initial();
    Ok(pairs.iter().filter(|(p, _)| *p == base).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(w: &str) -> MunnTree {
        MunnTree::parse(w).unwrap()
    }

    #[test]
    fn cosets_of_x_squared() {
        let k = FimClosedSub::parse("xy", &["xx"]).unwrap();
        assert_eq!(fim_coset_of(&k, &t("xx")).unwrap(), Some(0));
        assert_eq!(fim_coset_of(&k, &t("x")).unwrap(), Some(1));
        assert_eq!(fim_coset_of(&k, &t("y")).unwrap(), None);
        assert!(fim_same_coset(&k, &t("x"), &t("xxx")).unwrap());
        assert!(!fim_same_coset(&k, &t("x"), &t("")).unwrap());
        assert!(fim_same_coset(&k, &t("x"), &t("y")).is_err());
    }

    #[test]
    fn transversal_words() {
        let k = FimClosedSub::parse("xy", &["xx"]).unwrap();
        assert_eq!(fim_transversal(&k), vec![t(""), t("x")]);
    }

    #[test]
    fn delta_examples() {
        let k = FimClosedSub::parse("xy", &["xx"]).unwrap();
        let tr = fim_transversal(&k);
        assert_eq!(fim_delta(&k, &tr, &t("x"), &t("x")).unwrap(), Some(t("xx")));
        assert_eq!(fim_delta(&k, &tr, &t("x"), &t("y")).unwrap(), None);
        assert!(fim_delta(&k, &tr, &t("y"), &t("x")).is_err());
    }

    #[test]
    fn relative_index() {
        let k = FimClosedSub::parse("xy", &["xx"]).unwrap();
        let h = FimClosedSub::parse("xy", &["xx", "yy"]).unwrap();
        assert_eq!(fim_relative_index(&h, &k).unwrap(), 1);
        assert_eq!(fim_relative_index(&h, &h).unwrap(), 1);
        assert!(fim_relative_index(&k, &h).is_err());
    }

    #[test]
    fn schreier_regenerates() {
        for gens in [&["xx"][..], &["xx", "yy"], &["xy"], &["xyX"]] {
            let k = FimClosedSub::parse("xy", gens).unwrap();
            assert!(fim_schreier_generators(&k).unwrap().verified, "{gens:?}");
        }
    }
}
