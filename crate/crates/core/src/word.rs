//! Letters over an involutive alphabet and words built from them.
//!
//! Generators are ASCII `a`–`z`; the matching capital is the formal inverse.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(ch: char) -> Result<Self> {
        if ch.is_ascii_alphabetic() {
            Ok(Letter(ch as u8))
        } else {
            Err(Error::usage(format!(
                "invalid letter {ch:?}: expected a-z or A-Z"
            )))
        }
    }

    pub fn generator(self) -> Letter {
        Letter(self.0.to_ascii_lowercase())
    }

    pub fn is_inverse(self) -> bool {
        self.0.is_ascii_uppercase()
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 0x20)
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Letters sort generator-first: `x < X < y < Y`.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator().0, self.is_inverse()).cmp(&(other.generator().0, other.is_inverse()))
    }
}

pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    text.chars().map(Letter::new).collect()
}

pub fn word_to_string(word: &[Letter]) -> String {
    word.iter().map(|l| l.as_char()).collect()
}

/// Formal inverse of a word: reversed, each letter inverted.
pub fn invert_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Shortlex order: shorter first, then letter by letter.
pub fn shortlex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A finite set of generators `X`; the automaton alphabet is `X ∪ X⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    generators: Vec<Letter>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut generators: Vec<Letter> = letters.into_iter().map(Letter::generator).collect();
        generators.sort();
        generators.dedup();
        Alphabet { generators }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let letters = parse_word(text)?;
        if letters.iter().any(|l| l.is_inverse()) {
            return Err(Error::usage(format!(
                "alphabet {text:?} must list lowercase generators"
            )));
        }
        Ok(Self::new(letters))
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of columns in a transition table: one per letter of `X ∪ X⁻¹`.
    pub fn width(&self) -> usize {
        2 * self.generators.len()
    }

    /// Column of a letter: `2i` for the i-th generator, `2i + 1` for its inverse.
    pub fn column(&self, letter: Letter) -> Option<usize> {
        self.generators
            .binary_search(&letter.generator())
            .ok()
            .map(|i| 2 * i + letter.is_inverse() as usize)
    }

    pub fn letter(&self, column: usize) -> Letter {
        let g = self.generators[column / 2];
        if column % 2 == 1 {
            g.inverse()
        } else {
            g
        }
    }

    /// All letters of `X ∪ X⁻¹` in column order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.width()).map(|c| self.letter(c))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.column(letter).is_some()
    }

    pub fn check_word(&self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::usage(format!(
                "letter {l} is not in alphabet {self}"
            ))),
            None => Ok(()),
        }
    }

    /// Every word over `X ∪ X⁻¹` of length at most `max_len`, shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Vec<Letter>> {
        let letters: Vec<Letter> = self.letters().collect();
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * letters.len());
            for w in &layer {
                for &l in &letters {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.generators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_is_generator_major() {
        let w = parse_word("YyXx").unwrap();
        let mut sorted = w.clone();
        sorted.sort();
        assert_eq!(word_to_string(&sorted), "xXyY");
    }

    #[test]
    fn columns_round_trip() {
        let a = Alphabet::parse("yx").unwrap();
        assert_eq!(a.to_string(), "xy");
        for c in 0..a.width() {
            assert_eq!(a.column(a.letter(c)), Some(c));
        }
        assert_eq!(a.column(Letter::new('z').unwrap()), None);
    }

    #[test]
    fn rejects_non_letters() {
        assert!(parse_word("x1").is_err());
        assert!(Alphabet::parse("xY").is_err());
    }

    #[test]
    fn word_counts() {
        let a = Alphabet::parse("xy").unwrap();
        assert_eq!(a.words_up_to(2).len(), 1 + 4 + 16);
    }
}
