//! Subsets of a finite semigroup, stored as bitsets keyed by element id.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::semigroup::ElementId;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    /// The empty subset of a semigroup of the given order.
    pub fn empty(order: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(order))
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSet(bits)
    }

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(order: usize, ids: I) -> Self {
        let mut set = Self::empty(order);
        for id in ids {
            set.insert(id);
        }
        set
    }

    /// Subset of a semigroup of order ≤ 32 given by a bit mask.
    pub fn from_mask(order: usize, mask: u32) -> Self {
        let mut set = Self::empty(order);
        for i in 0..order {
            if mask & (1 << i) != 0 {
                set.0.insert(i);
            }
        }
        set
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        !self.0.put(id.index())
    }

    pub fn remove(&mut self, id: ElementId) {
        self.0.remove(id.index());
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.0.contains(id.index())
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn min(&self) -> Option<ElementId> {
        self.0.minimum().map(ElementId::from_index)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.ones().map(ElementId::from_index)
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.ones()).finish()
    }
}
