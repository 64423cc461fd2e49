#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use invco_core::automata::InverseAutomaton;
use invco_core::closure::generate_closed;
use invco_core::families::{brandt, stabilizer, symmetric_inverse_monoid};
use invco_core::munn::MunnTree;
use invco_core::semigroup::{ElementId, FiniteInverseSemigroup, GeneratorMap};
use invco_core::set::ElementSet;
use invco_core::word::{parse_word, Letter};

pub fn i2() -> FiniteInverseSemigroup {
    symmetric_inverse_monoid(2).unwrap().0
}

pub fn i3() -> FiniteInverseSemigroup {
    symmetric_inverse_monoid(3).unwrap().0
}

pub fn b2() -> FiniteInverseSemigroup {
    brandt(2).unwrap().0
}

pub fn stab1(i3: &FiniteInverseSemigroup) -> ElementSet {
    let (_, maps) = symmetric_inverse_monoid(3).unwrap();
    stabilizer(i3, &maps, 1)
}

pub fn gm(s: &FiniteInverseSemigroup, pairs: &[(char, &str)]) -> GeneratorMap {
    let g = GeneratorMap::new(s, pairs.iter().map(|&(c, n)| (c, s.find(n).unwrap()))).unwrap();
    assert!(g.generates(s));
    g
}

pub fn i2_gm(s: &FiniteInverseSemigroup) -> GeneratorMap {
    gm(s, &[('x', "21"), ('z', "1-")])
}

pub fn i3_gm(s: &FiniteInverseSemigroup) -> GeneratorMap {
    gm(s, &[('x', "213"), ('y', "231"), ('z', "-23")])
}

pub fn b2_gm(s: &FiniteInverseSemigroup) -> GeneratorMap {
    gm(s, &[('x', "(1,2)"), ('y', "(1,1)")])
}

/// Distinct closed inverse subsemigroups generated by at most `bound` elements.
pub fn family(s: &FiniteInverseSemigroup, bound: usize) -> Vec<ElementSet> {
    let n = s.order();
    let mut out = BTreeSet::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    let mut all = vec![Vec::new()];
    for _ in 0..bound.min(n) {
        layer = layer
            .iter()
            .flat_map(|c| {
                let start = c.last().map_or(0, |&e| e + 1);
                (start..n).map(move |i| {
                    let mut d = c.clone();
                    d.push(i);
                    d
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    for c in all {
        if c.is_empty() && s.identity().is_none() {
            continue;
        }
        let y = ElementSet::from_ids(n, c.into_iter().map(ElementId::from_index));
        out.insert(generate_closed(s, &y).unwrap().members().clone());
    }
    out.into_iter().collect()
}

pub type Visit<'a> = dyn FnMut(&[Letter], Option<ElementId>, Option<usize>) + 'a;

/// Calls `f(word, element, state)` on every word of length ≤ `max_len`,
/// threading the evaluation and the run together.
pub fn walk_words(
    s: &FiniteInverseSemigroup,
    gm: &GeneratorMap,
    a: &InverseAutomaton,
    max_len: usize,
    f: &mut Visit<'_>,
) {
    #[allow(clippy::too_many_arguments)]
    fn go(
        s: &FiniteInverseSemigroup,
        letters: &[(Letter, ElementId)],
        a: &InverseAutomaton,
        word: &mut Vec<Letter>,
        elem: Option<ElementId>,
        state: Option<usize>,
        left: usize,
        f: &mut Visit<'_>,
    ) {
        f(word, elem, state);
        if left == 0 {
            return;
        }
        for &(l, g) in letters {
            word.push(l);
            let e = Some(elem.map_or(g, |e| s.mul(e, g)));
            let st = state.and_then(|q| a.step(q, l));
            go(s, letters, a, word, e, st, left - 1, f);
            word.pop();
        }
    }
    let letters: Vec<(Letter, ElementId)> = gm
        .alphabet()
        .letters()
        .map(|l| (l, gm.image(s, l).unwrap()))
        .collect();
    go(
        s,
        &letters,
        a,
        &mut Vec::new(),
        s.identity(),
        Some(a.initial()),
        max_len,
        f,
    );
}

/// Munn trees of all products of at most `factors` words from `Y ∪ Y⁻¹`,
/// grouped by mark, the empty product included.
pub fn products_by_mark(gens: &[&str], factors: usize) -> HashMap<String, Vec<MunnTree>> {
    let mut steps: Vec<MunnTree> = Vec::new();
    for g in gens {
        let t = MunnTree::from_word(&parse_word(g).unwrap());
        steps.push(t.inverse());
        steps.push(t);
    }
    let mut seen: HashSet<MunnTree> = HashSet::from([MunnTree::identity()]);
    let mut layer = vec![MunnTree::identity()];
    for _ in 0..factors {
        let mut next = Vec::new();
        for p in &layer {
            for g in &steps {
                let q = p.multiply(g);
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    let mut out: HashMap<String, Vec<MunnTree>> = HashMap::new();
    for t in seen {
        out.entry(t.mark().to_string()).or_default().push(t);
    }
    out
}

/// `w ∈ ↑⟨Y⟩` by searching for a product below `w`.
pub fn has_product_below(products: &HashMap<String, Vec<MunnTree>>, w: &MunnTree) -> bool {
    products
        .get(&w.mark().to_string())
        .is_some_and(|ps| ps.iter().any(|p| p.leq(w)))
}
