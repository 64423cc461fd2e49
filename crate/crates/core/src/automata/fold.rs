//! Folding a bouquet of loops into an inverse automaton.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{is_inverse_automaton, InverseAutomaton, StateId};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter};

/// Default bound on the number of vertices a fold may start from.
pub const DEFAULT_STATE_CAP: usize = 10_000;

/// One loop per generator word at a shared base vertex 0. Edges are stored
/// once; the dual of every edge is implicit.
#[derive(Clone, Debug)]
pub struct Bouquet {
    alphabet: Alphabet,
    vertices: usize,
    edges: Vec<(StateId, Letter, StateId)>,
}

impl Bouquet {
    pub fn from_words(alphabet: Alphabet, words: &[Vec<Letter>]) -> Result<Self> {
        let mut vertices = 1;
        let mut edges = Vec::new();
        for word in words {
            alphabet.check_word(word)?;
            let mut here = 0;
            for (i, &l) in word.iter().enumerate() {
                let next = if i + 1 == word.len() {
                    0
                } else {
                    vertices += 1;
                    vertices - 1
                };
                edges.push((here, l, next));
                here = next;
            }
        }
        Ok(Bouquet {
            alphabet,
            vertices,
            edges,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Every edge together with its dual.
    pub fn edges_with_duals(&self) -> Vec<(StateId, Letter, StateId)> {
        self.edges
            .iter()
            .flat_map(|&(s, l, t)| [(s, l, t), (t, l.inverse(), s)])
            .collect()
    }

    pub fn is_inverse_automaton(&self) -> bool {
        is_inverse_automaton(&self.edges_with_duals())
    }
}

pub fn fold(bouquet: &Bouquet) -> InverseAutomaton {
    fold_in_order(bouquet, bouquet.edges.clone())
}

pub fn fold_capped(bouquet: &Bouquet, cap: usize) -> Result<InverseAutomaton> {
    if bouquet.vertices > cap {
        return Err(Error::Resource(format!(
            "bouquet has {} vertices, above the state cap {cap}",
            bouquet.vertices
        )));
    }
    Ok(fold(bouquet))
}

/// Folds with edges scanned in a random order, and each edge's direction
/// randomized, on every pass.
pub fn fold_with_order<R: Rng>(bouquet: &Bouquet, rng: &mut R) -> InverseAutomaton {
    let mut edges: Vec<_> = bouquet
        .edges
        .iter()
        .map(|&(s, l, t)| {
            if rng.gen() {
                (t, l.inverse(), s)
            } else {
                (s, l, t)
            }
        })
        .collect();
    edges.shuffle(rng);
    fold_in_order(bouquet, edges)
}

fn fold_in_order(bouquet: &Bouquet, edges: Vec<(StateId, Letter, StateId)>) -> InverseAutomaton {
    let alphabet = &bouquet.alphabet;
    let mut uf = UnionFind::<usize>::new(bouquet.vertices);
    loop {
        let mut merged = false;
        let mut out: HashMap<(usize, usize), usize> = HashMap::new();
        for &(s, l, t) in &edges {
            let col = alphabet.column(l).expect("bouquet letters are checked");
            for (src, c, dst) in [(s, col, t), (t, col ^ 1, s)] {
                let (src, dst) = (uf.find_mut(src), uf.find_mut(dst));
                match out.entry((src, c)) {
                    Entry::Occupied(e) => {
                        let other = uf.find_mut(*e.get());
                        if other != dst {
                            uf.union(other, dst);
                            merged = true;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(dst);
                    }
                }
            }
        }
        if !merged {
            break;
        }
    }
    let roots = uf.into_labeling();
    let mut index = HashMap::new();
    for &r in &roots {
        let n = index.len();
        index.entry(r).or_insert(n);
    }
    let folded: Vec<_> = edges
        .iter()
        .map(|&(s, l, t)| (index[&roots[s]], l, index[&roots[t]]))
        .collect();
    let base = index[&roots[0]];
    InverseAutomaton::from_edges(
        alphabet.clone(),
        index.len(),
        base,
        BTreeSet::from([base]),
        &folded,
    )
    .expect("folding leaves no conflicting edges")
    .canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn bouquet(gens: &[&str]) -> Bouquet {
        let words: Vec<_> = gens.iter().map(|g| parse_word(g).unwrap()).collect();
        Bouquet::from_words(Alphabet::parse("xy").unwrap(), &words).unwrap()
    }

    #[test]
    fn loop_x_squared() {
        let a = fold(&bouquet(&["xx"]));
        assert_eq!(a.state_count(), 2);
        assert!(a.is_inverse());
    }

    #[test]
    fn two_squares_share_the_base() {
        let a = fold(&bouquet(&["xx", "yy"]));
        assert_eq!(a.state_count(), 3);
        assert!(a.is_inverse());
    }

    #[test]
    fn doubled_edge_folds() {
        let b = bouquet(&["xX"]);
        let x = Letter::new('x').unwrap();
        // the path reads the same x-edge out and back: two parallel copies before folding
        assert_eq!(
            b.edges_with_duals()
                .iter()
                .filter(|&&e| e == (0, x, 1))
                .count(),
            2
        );
        let a = fold(&b);
        assert_eq!(a.state_count(), 2);
        assert_eq!(
            a.edges().iter().filter(|(_, l, _)| !l.is_inverse()).count(),
            1
        );
    }

    #[test]
    fn unfolded_bouquet_is_nondeterministic() {
        assert!(!bouquet(&["xy", "xx"]).is_inverse_automaton());
        assert!(bouquet(&["xx"]).is_inverse_automaton());
    }

    #[test]
    fn state_cap() {
        assert!(matches!(
            fold_capped(&bouquet(&["xxxxx"]), 3),
            Err(Error::Resource(_))
        ));
        assert!(fold_capped(&bouquet(&["xxxxx"]), 5).is_ok());
    }

    #[test]
    fn letters_outside_alphabet() {
        let r = Bouquet::from_words(Alphabet::parse("x").unwrap(), &[parse_word("xy").unwrap()]);
        assert!(r.is_err());
    }
}
