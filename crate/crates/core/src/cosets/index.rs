use serde::Serialize;

use super::{enumerate_cosets, enumerate_cosets_within, fim_relative_index};
use crate::closure::{FimClosedSub, FiniteClosedSub};
use crate::error::{Error, Result};

/// Both sides of `[S:K] = [S:H][H:K]` for `K ⊆ H`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IndexReport {
    /// `[S:K]`
    pub lhs: usize,
    /// `[S:H]`
    pub outer: usize,
    /// `[H:K]`
    pub inner: usize,
    pub k_full: bool,
    pub h_full: bool,
    pub holds: bool,
    /// Hypothesis notes, e.g. `"K not full"`.
    pub flags: Vec<String>,
}

impl IndexReport {
    fn new(lhs: usize, outer: usize, inner: usize, k_full: bool, h_full: bool) -> Self {
        let mut flags = Vec::new();
        if !k_full {
            flags.push("K not full".to_string());
        }
        IndexReport {
            lhs,
            outer,
            inner,
            k_full,
            h_full,
            holds: lhs == outer * inner,
            flags,
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.holds {
            "holds"
        } else {
            "fails"
        }
    }
}

pub fn check_index_formula(
    h: &FiniteClosedSub<'_>,
    k: &FiniteClosedSub<'_>,
) -> Result<IndexReport> {
    if !std::ptr::eq(h.parent(), k.parent()) {
        return Err(Error::usage("H and K live in different semigroups"));
    }
    if !k.is_subset_of(h) {
        return Err(Error::usage("K is not contained in H"));
    }
    let lhs = enumerate_cosets(k).len();
    let outer = enumerate_cosets(h).len();
    let inner = enumerate_cosets_within(k, h.members()).len();
    let report = IndexReport::new(lhs, outer, inner, k.is_full(), h.is_full());
    if report.k_full {
        assert!(report.holds, "index formula must hold for full K");
    }
    Ok(report)
}

pub fn check_index_formula_fim(h: &FimClosedSub, k: &FimClosedSub) -> Result<IndexReport> {
    let inner = fim_relative_index(h, k)?;
    Ok(IndexReport::new(
        k.automaton().state_count(),
        h.automaton().state_count(),
        inner,
        k.is_full(),
        h.is_full(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{generate_closed, generate_closed_ids};
    use crate::families::{clifford_cyclic, symmetric_inverse_monoid};
    use crate::set::ElementSet;

    #[test]
    fn clifford_c4() {
        let c = clifford_cyclic(4).unwrap();
        let s = c.semigroup();
        let e = generate_closed(s, s.idempotents()).unwrap();
        let h = generate_closed_ids(s, &[s.find("1:a2").unwrap(), s.find("0:e").unwrap()]).unwrap();
        assert_eq!(h.len(), 4);
        let r = check_index_formula(&h, &e).unwrap();
        assert_eq!((r.lhs, r.outer, r.inner), (4, 2, 2));
        assert!(r.holds && r.k_full);
    }

    #[test]
    fn i3_holds_without_fullness() {
        let (i3, _) = symmetric_inverse_monoid(3).unwrap();
        let stab1 =
            ElementSet::from_ids(34, i3.elements().filter(|&e| i3.name(e).starts_with('1')));
        let h = FiniteClosedSub::new(&i3, stab1).unwrap();
        let k = generate_closed_ids(&i3, &[i3.find("132").unwrap()]).unwrap();
        let r = check_index_formula(&h, &k).unwrap();
        assert_eq!((r.lhs, r.outer, r.inner), (3, 3, 1));
        assert!(r.holds && !r.k_full);
        assert!(check_index_formula(&k, &h).is_err());
    }

    #[test]
    fn fim_formula_fails() {
        let h = FimClosedSub::parse("xy", &["xx", "yy"]).unwrap();
        let k = FimClosedSub::parse("xy", &["xx"]).unwrap();
        let r = check_index_formula_fim(&h, &k).unwrap();
        assert_eq!((r.lhs, r.outer, r.inner), (2, 3, 1));
        assert!(!r.holds);
        assert_eq!(r.flags, ["K not full"]);
        assert_eq!(r.verdict(), "fails");
    }
}
