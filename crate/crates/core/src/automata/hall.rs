//! Closed inverse subsemigroups of a given finite index.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::closure::{generate_closed, is_closed_inverse_sub, FiniteClosedSub};
use crate::cosets::index;
use crate::semigroup::{ElementId, FiniteInverseSemigroup};
use crate::set::ElementSet;

/// Largest order enumerated subset by subset.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 20;
/// Default size bound on generator subsets.
pub const DEFAULT_GENERATOR_BOUND: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum HallStrategy {
    /// Exhaustive when the order allows it, otherwise generators up to the default bound.
    #[default]
    Auto,
    Exhaustive,
    /// Closures of generator subsets of at most this size.
    Generators(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HallEnumeration {
    /// Member sets, sorted.
    pub subs: Vec<ElementSet>,
    /// False when generator subsets were sampled: the list is possibly incomplete.
    pub complete: bool,
}

pub fn enumerate_closed_of_index(
    s: &FiniteInverseSemigroup,
    d: usize,
    strategy: HallStrategy,
) -> HallEnumeration {
    let strategy = match strategy {
        HallStrategy::Auto if s.order() <= EXHAUSTIVE_ORDER_LIMIT => HallStrategy::Exhaustive,
        HallStrategy::Auto => HallStrategy::Generators(DEFAULT_GENERATOR_BOUND),
        other => other,
    };
    match strategy {
        HallStrategy::Exhaustive => exhaustive(s, d),
        HallStrategy::Generators(bound) => by_generators(s, d, bound),
        HallStrategy::Auto => unreachable!(),
    }
}

fn has_index(s: &FiniteInverseSemigroup, members: &ElementSet, d: usize) -> bool {
    let l = FiniteClosedSub::new(s, members.clone()).expect("closed inverse subsemigroup");
    index(&l) == d
}

fn exhaustive(s: &FiniteInverseSemigroup, d: usize) -> HallEnumeration {
    let n = s.order();
    assert!(n < 32, "exhaustive enumeration over {n} elements");
    let mut subs: Vec<ElementSet> = (1u32..(1u32 << n))
        .into_par_iter()
        .map(|mask| ElementSet::from_mask(n, mask))
        .filter(|a| is_closed_inverse_sub(s, a) && has_index(s, a, d))
        .collect();
    subs.sort();
    HallEnumeration {
        subs,
        complete: true,
    }
}

fn subsets_up_to(n: usize, bound: usize) -> Vec<Vec<ElementId>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<ElementId>> = vec![Vec::new()];
    for _ in 0..bound.min(n) {
        layer = layer
            .iter()
            .flat_map(|c| {
                let start = c.last().map_or(0, |e| e.index() + 1);
                (start..n).map(move |i| {
                    let mut next = c.clone();
                    next.push(ElementId::from_index(i));
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn by_generators(s: &FiniteInverseSemigroup, d: usize, bound: usize) -> HallEnumeration {
    let n = s.order();
    let candidates: Vec<Vec<ElementId>> = subsets_up_to(n, bound)
        .into_iter()
        .filter(|c| !c.is_empty() || s.identity().is_some())
        .collect();
    let closures: BTreeSet<ElementSet> = candidates
        .par_iter()
        .map(|c| {
            generate_closed(s, &ElementSet::from_ids(n, c.iter().copied()))
                .expect("valid generators")
                .members()
                .clone()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let subs = closures
        .into_iter()
        .filter(|a| has_index(s, a, d))
        .collect();
    HallEnumeration {
        subs,
        complete: bound >= n,
    }
}
