mod common;

use common::*;
use invco_core::automata::{fold, Bouquet, InverseAutomaton};
use invco_core::closure::FimClosedSub;
use invco_core::cosets::{fim_coset_of, fim_same_coset};
use invco_core::families::clifford_cyclic;
use invco_core::munn::MunnTree;
use invco_core::semigroup::{ElementId, FiniteInverseSemigroup};
use invco_core::word::{parse_word, word_to_string, Alphabet, Letter};
use proptest::prelude::*;

fn semigroups() -> Vec<FiniteInverseSemigroup> {
    vec![
        i2(),
        b2(),
        clifford_cyclic(2).unwrap().into_semigroup(),
        i3(),
    ]
}

fn word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(prop::sample::select(parse_word("xXyY").unwrap()), 0..=max)
}

proptest! {
    #[test]
    fn table_laws(which in 0usize..4, a in 0usize..34, b in 0usize..34, c in 0usize..34) {
        let s = &semigroups()[which];
        let [a, b, c] = [a, b, c].map(|i| ElementId::from_index(i % s.order()));
        prop_assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
        let ai = s.inverse(a);
        prop_assert_eq!(s.mul(s.mul(a, ai), a), a);
        prop_assert_eq!(s.mul(s.mul(ai, a), ai), ai);
        prop_assert_eq!(s.heap(a, a, b), s.mul(s.range_idempotent(a), b));
    }

    #[test]
    fn munn_associative(u in word(6), v in word(6), w in word(6)) {
        let [a, b, c] = [&u, &v, &w].map(|x| MunnTree::from_word(x));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn munn_inverse_laws(u in word(8), v in word(8)) {
        let a = MunnTree::from_word(&u);
        let b = MunnTree::from_word(&v);
        prop_assert_eq!(a.multiply(&a.inverse()).multiply(&a), a.clone());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(MunnTree::from_word(&a.to_word()), a.clone());
        prop_assert_eq!(a.leq(&b), a == a.multiply(&a.inverse()).multiply(&b));
        let e = a.range_idempotent();
        let f = b.range_idempotent();
        prop_assert_eq!(e.multiply(&f), f.multiply(&e));
    }

    #[test]
    fn folded_bouquets_accept_their_generators(gens in proptest::collection::vec(word(5), 1..=3)) {
        let alphabet = Alphabet::parse("xy").unwrap();
        let a = fold(&Bouquet::from_words(alphabet, &gens).unwrap());
        prop_assert!(a.is_inverse());
        prop_assert_eq!(a.minimize().state_count(), a.state_count());
        for g in &gens {
            prop_assert!(a.accepts(g));
        }
        let json = a.to_json();
        prop_assert_eq!(InverseAutomaton::from_json(&json).unwrap(), a);
    }
}

#[test]
fn natural_order_by_idempotents() {
    for s in semigroups().into_iter().take(3) {
        for a in s.elements() {
            for b in s.elements() {
                let witnessed = s.idempotents().iter().any(|e| s.mul(e, b) == a);
                assert_eq!(s.leq(a, b), witnessed, "{} ≤ {}", s.name(a), s.name(b));
            }
        }
    }
}

#[test]
fn concatenation_is_multiplication() {
    for w in Alphabet::parse("xy").unwrap().words_up_to(6) {
        let whole = MunnTree::from_word(&w);
        for cut in 0..=w.len() {
            let (u, v) = w.split_at(cut);
            assert_eq!(
                MunnTree::from_word(u).multiply(&MunnTree::from_word(v)),
                whole,
                "{}",
                word_to_string(&w)
            );
        }
    }
}

#[test]
fn states_biject_with_cosets() {
    let words = Alphabet::parse("xy").unwrap().words_up_to(4);
    for gens in [
        vec!["xx"],
        vec!["xx", "yy"],
        vec!["xy"],
        vec!["xx", "yy", "xyXY"],
    ] {
        let k = FimClosedSub::parse("xy", &gens).unwrap();
        let mut classes: Vec<MunnTree> = Vec::new();
        for w in &words {
            let t = MunnTree::from_word(w);
            if fim_coset_of(&k, &t).unwrap().is_none() {
                continue;
            }
            if !classes.iter().any(|c| fim_same_coset(&k, c, &t).unwrap()) {
                classes.push(t);
            }
        }
        let states = k.automaton().state_count();
        assert!(states <= 8);
        assert_eq!(classes.len(), states, "{gens:?}");
    }
}

#[test]
fn semigroup_json_round_trip() {
    for s in semigroups() {
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back = FiniteInverseSemigroup::parse_json(&text).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }
}
