//! E-unitary test, the minimum group congruence and the maximum group image.

use crate::closure::up_closure;
use crate::semigroup::{ElementId, FiniteInverseSemigroup};
use crate::set::ElementSet;

/// `S` is E-unitary iff `E(S)` is upward closed.
pub fn is_e_unitary(s: &FiniteInverseSemigroup) -> bool {
    up_closure(s, s.idempotents()) == *s.idempotents()
}

/// Classes of `s σ t ⟺ e s = e t` for some idempotent `e`, ordered by least member.
pub fn sigma_classes(s: &FiniteInverseSemigroup) -> Vec<ElementSet> {
    let idem: Vec<ElementId> = s.idempotents().iter().collect();
    let related = |a: ElementId, b: ElementId| idem.iter().any(|&e| s.mul(e, a) == s.mul(e, b));
    let mut assigned = ElementSet::empty(s.order());
    let mut classes = Vec::new();
    for a in s.elements() {
        if assigned.contains(a) {
            continue;
        }
        let class = ElementSet::from_ids(s.order(), s.elements().filter(|&b| related(a, b)));
        assigned.union_with(&class);
        classes.push(class);
    }
    classes
}

/// `S/σ` with the class of each element.
#[derive(Clone, Debug)]
pub struct GroupImage {
    pub group: FiniteInverseSemigroup,
    pub class_of: Vec<usize>,
}

impl GroupImage {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// The maximum group image. Panics if the quotient is not a group, which
/// would mean the σ computation is wrong.
pub fn max_group_image(s: &FiniteInverseSemigroup) -> GroupImage {
    let classes = sigma_classes(s);
    let mut class_of = vec![0; s.order()];
    for (i, c) in classes.iter().enumerate() {
        for a in c.iter() {
            class_of[a.index()] = i;
        }
    }
    let reps: Vec<ElementId> = classes.iter().map(|c| c.min().unwrap()).collect();
    let mut table = Vec::with_capacity(reps.len() * reps.len());
    for &a in &reps {
        for &b in &reps {
            table.push(ElementId::from_index(class_of[s.mul(a, b).index()]));
        }
    }
    let inv = reps
        .iter()
        .map(|&a| ElementId::from_index(class_of[s.inverse(a).index()]))
        .collect();
    let names = reps.iter().map(|&a| format!("[{}]", s.name(a))).collect();
    let group = FiniteInverseSemigroup::from_trusted(names, table, inv).expect("σ is a congruence");
    assert!(group.is_group(), "quotient by σ must be a group");
    GroupImage { group, class_of }
}
