//! The Clifford monoid `F₂ ⊔ F₂^ab` over `{x, y}`: the top layer is the free
//! group, the bottom its abelianization, linked by exponent sums. The closed
//! submonoid `K = F₂′ ⊔ {0}` is generated by one idempotent yet has
//! infinitely many cosets.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::munn::{reduce, ReducedWord};
use crate::word::{parse_word, Alphabet, Letter};

/// Pairwise product checks are run up to this many representatives.
pub const PAIRWISE_LIMIT: usize = 200;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AbelianizedElement {
    /// Layer 1: a reduced word in the free group.
    Top(ReducedWord),
    /// Layer 0: an exponent vector.
    Bottom(i64, i64),
}

use AbelianizedElement::{Bottom, Top};

/// Exponent sums of a word in `x` and `y`.
pub fn exponent_sums(word: &[Letter]) -> (i64, i64) {
    word.iter().fold((0, 0), |(m, n), l| {
        let d = if l.is_inverse() { -1 } else { 1 };
        match l.generator().as_char() {
            'x' => (m + d, n),
            _ => (m, n + d),
        }
    })
}

impl AbelianizedElement {
    pub fn parse(word: &str) -> Result<Self> {
        let w = parse_word(word)?;
        Alphabet::parse("xy")?.check_word(&w)?;
        Ok(Top(reduce(&w)))
    }

    pub fn one() -> Self {
        Top(ReducedWord::empty())
    }

    pub fn zero() -> Self {
        Bottom(0, 0)
    }

    pub fn x_power(k: i64) -> Self {
        let x = Letter::new(if k < 0 { 'X' } else { 'x' }).unwrap();
        Top(reduce(&vec![x; k.unsigned_abs() as usize]))
    }

    /// `α`, extended by the identity on layer 0.
    pub fn abelianize(&self) -> (i64, i64) {
        match self {
            Top(w) => exponent_sums(w.letters()),
            Bottom(m, n) => (*m, *n),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Top(u), Top(v)) => Top(u.concat(v.letters())),
            _ => {
                let (a, b) = (self.abelianize(), other.abelianize());
                Bottom(a.0 + b.0, a.1 + b.1)
            }
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Top(w) => Top(w.inverse()),
            Bottom(m, n) => Bottom(-m, -n),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        *self == self.mul(self)
    }

    /// Natural order: `a ≤ b` iff `a = (aa⁻¹)b`.
    pub fn leq(&self, other: &Self) -> bool {
        *self == self.mul(&self.inverse()).mul(other)
    }

    /// Membership in `K` by exponent sums.
    pub fn in_k(&self) -> bool {
        self.abelianize() == (0, 0)
    }
}

impl fmt::Display for AbelianizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Top(w) if w.is_empty() => write!(f, "(1, ε)"),
            Top(w) => write!(f, "(1, {w})"),
            Bottom(m, n) => write!(f, "(0, ({m},{n}))"),
        }
    }
}

/// Membership in `↑⟨0⟩` by searching for a witness `k ≤ w` among the
/// elements of the inverse submonoid generated by the zero-layer identity.
pub fn in_k_by_witness(w: &AbelianizedElement) -> bool {
    [AbelianizedElement::one(), AbelianizedElement::zero()]
        .iter()
        .any(|k| k.leq(w))
}

#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub n: usize,
    /// Representatives `(1, x^k)`, `k = 0..n`.
    pub representatives: Vec<String>,
    /// Sampled representatives have range idempotent in `K` and the expected exponent vector.
    pub all_defined: bool,
    /// Exponent keys are pairwise distinct.
    pub distinct: bool,
    /// Pairs checked by the `ab⁻¹ ∉ K` product test.
    pub pairs_checked: usize,
    pub pairwise_ok: bool,
    /// Words checked against the witness search.
    pub membership_checked: usize,
    pub membership_agree: bool,
    pub commutator_in_k: bool,
    pub x_in_k: bool,
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        self.all_defined
            && self.distinct
            && self.pairwise_ok
            && self.membership_agree
            && self.commutator_in_k
            && !self.x_in_k
    }
}

pub fn demo(n: usize) -> Result<DemoReport> {
    if n == 0 {
        return Err(Error::usage("n must be at least 1"));
    }
    // the word x^k has exponent vector (k, 0); top-layer a, b share a coset iff α(a) = α(b)
    let keys: HashSet<(i64, i64)> = (0..n as i64).map(|k| (k, 0)).collect();
    let distinct = keys.len() == n;
    let small: Vec<AbelianizedElement> = (0..n.min(PAIRWISE_LIMIT) as i64)
        .map(AbelianizedElement::x_power)
        .collect();
    let all_defined = small.iter().all(|r| r.mul(&r.inverse()).in_k())
        && small
            .iter()
            .enumerate()
            .all(|(k, r)| r.abelianize() == (k as i64, 0));
    let mut pairs_checked = 0;
    let mut pairwise_ok = true;
    for (i, a) in small.iter().enumerate() {
        for b in &small[i + 1..] {
            pairs_checked += 1;
            pairwise_ok &= !a.mul(&b.inverse()).in_k();
        }
    }
    let words = Alphabet::parse("xy")?.words_up_to(4);
    let membership_agree = words.iter().all(|w| {
        let e = Top(reduce(w));
        e.in_k() == in_k_by_witness(&e)
    });
    Ok(DemoReport {
        n,
        representatives: (0..n).map(|k| format!("(1, x^{k})")).collect(),
        all_defined,
        distinct,
        pairs_checked,
        pairwise_ok,
        membership_checked: words.len(),
        membership_agree,
        commutator_in_k: AbelianizedElement::parse("xyXY")?.in_k(),
        x_in_k: AbelianizedElement::parse("x")?.in_k(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_follow_the_layers() {
        let x = AbelianizedElement::parse("x").unwrap();
        let y = AbelianizedElement::parse("y").unwrap();
        assert_eq!(x.mul(&x.inverse()), AbelianizedElement::one());
        assert_eq!(x.mul(&AbelianizedElement::zero()), Bottom(1, 0));
        assert_eq!(Bottom(2, 3).mul(&y), Bottom(2, 4));
        assert!(AbelianizedElement::zero().is_idempotent());
        assert!(Bottom(1, 0).leq(&x));
        assert!(!Bottom(0, 1).leq(&x));
        assert!(!x.leq(&y));
    }

    #[test]
    fn membership() {
        assert!(AbelianizedElement::parse("xyXY").unwrap().in_k());
        assert!(!AbelianizedElement::parse("x").unwrap().in_k());
        assert!(in_k_by_witness(&AbelianizedElement::parse("xyXY").unwrap()));
        assert!(!in_k_by_witness(&AbelianizedElement::parse("xy").unwrap()));
    }

    #[test]
    fn small_demo() {
        let r = demo(3).unwrap();
        assert_eq!(r.representatives, ["(1, x^0)", "(1, x^1)", "(1, x^2)"]);
        assert_eq!(r.pairs_checked, 3);
        assert_eq!(r.membership_checked, 341);
        assert!(r.passed());
        assert!(demo(0).is_err());
    }

    #[test]
    fn large_demo() {
        let r = demo(10_000).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, PAIRWISE_LIMIT * (PAIRWISE_LIMIT - 1) / 2);
    }
}
