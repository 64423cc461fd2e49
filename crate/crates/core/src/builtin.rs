//! Builtin semigroups by name and comma-separated generator lists.

use crate::closure::{generate_closed, FiniteClosedSub};
use crate::error::{Error, Result};
use crate::families::{brandt, clifford_cyclic, stabilizer, symmetric_inverse_monoid};
use crate::semigroup::{ElementId, FiniteInverseSemigroup};
use crate::set::ElementSet;

pub const BUILTINS: &[&str] = &[
    "I1",
    "I2",
    "I3",
    "I4",
    "I5",
    "B1",
    "B2",
    "B3",
    "B4",
    "cliffordC2",
    "cliffordC4",
];

/// A named semigroup; `I_n` keeps its degree for the `stab<p>` macro.
pub struct Named {
    pub name: String,
    pub semigroup: FiniteInverseSemigroup,
    degree: Option<usize>,
}

/// `I<n>`, `B<n>` or `cliffordC<n>`; `None` for any other name.
pub fn builtin(name: &str) -> Option<Result<Named>> {
    let numbered = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
    };
    let named = |semigroup: Result<FiniteInverseSemigroup>, degree| {
        semigroup.map(|semigroup| Named {
            name: name.to_string(),
            semigroup,
            degree,
        })
    };
    if let Some(n) = numbered("I") {
        return Some(named(symmetric_inverse_monoid(n).map(|p| p.0), Some(n)));
    }
    if let Some(n) = numbered("B") {
        return Some(named(brandt(n).map(|p| p.0), None));
    }
    numbered("cliffordC").map(|n| named(clifford_cyclic(n).map(|c| c.into_semigroup()), None))
}

impl Named {
    pub fn new(name: impl Into<String>, semigroup: FiniteInverseSemigroup) -> Self {
        Named {
            name: name.into(),
            semigroup,
            degree: None,
        }
    }

    /// Resolves element names and the `stab<p>` macro.
    pub fn generators(&self, text: &str) -> Result<ElementSet> {
        let s = &self.semigroup;
        let mut set = ElementSet::empty(s.order());
        for name in split_names(text) {
            if let Some(p) = name
                .strip_prefix("stab")
                .and_then(|p| p.parse::<usize>().ok())
            {
                let n = self.degree.ok_or_else(|| {
                    Error::Usage(format!("{name} needs a symmetric inverse monoid"))
                })?;
                if p == 0 || p > n {
                    return Err(Error::Usage(format!("{name}: point outside 1..{n}")));
                }
                let (_, maps) = symmetric_inverse_monoid(n)?;
                set.union_with(&stabilizer(s, &maps, p));
                continue;
            }
            let id = s
                .find(&name)
                .ok_or_else(|| Error::Usage(format!("no element named {name:?}")))?;
            set.insert(id);
        }
        Ok(set)
    }

    pub fn closed(&self, gens: &str) -> Result<FiniteClosedSub<'_>> {
        generate_closed(&self.semigroup, &self.generators(gens)?)
    }

    pub fn names(&self, ids: impl IntoIterator<Item = ElementId>) -> Vec<String> {
        ids.into_iter()
            .map(|e| self.semigroup.name(e).to_string())
            .collect()
    }
}

/// Splits on commas outside parentheses: `"(1,1),(2,2)"` gives two names.
pub fn split_names(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    out.push(current);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting() {
        assert_eq!(split_names("(1,1),(2,2)"), ["(1,1)", "(2,2)"]);
        assert_eq!(split_names(" 132 , 213"), ["132", "213"]);
        assert!(split_names("").is_empty());
    }

    #[test]
    fn macros_and_names() {
        let i3 = builtin("I3").unwrap().unwrap();
        assert_eq!(i3.generators("stab1").unwrap().len(), 7);
        assert!(i3.generators("stab4").is_err());
        assert!(builtin("B2").unwrap().unwrap().generators("stab1").is_err());
        assert!(builtin("Q7").is_none());
        assert!(builtin("I9").unwrap().is_err());
        assert_eq!(builtin("cliffordC4").unwrap().unwrap().semigroup.order(), 8);
    }
}
