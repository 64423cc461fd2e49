//! The free inverse monoid `FIM(X)` as Munn trees.
//!
//! An element is a finite prefix-closed set of reduced words (a subtree of
//! the Cayley graph of the free group containing the root) together with a
//! marked vertex. Two words are equal in `FIM(X)` exactly when they have the
//! same tree.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{parse_word, word_to_string, Letter};

/// A freely reduced word: no adjacent `xX` or `Xx`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(reduce(&parse_word(text)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reduced form of `self ++ word`.
    pub fn concat(&self, word: &[Letter]) -> ReducedWord {
        let mut out = self.0.clone();
        push_reduced(&mut out, word);
        ReducedWord(out)
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord(crate::word::invert_word(&self.0))
    }

    /// The word with its last letter removed, if any.
    pub fn parent(&self) -> Option<ReducedWord> {
        (!self.0.is_empty()).then(|| ReducedWord(self.0[..self.0.len() - 1].to_vec()))
    }
}

fn push_reduced(stack: &mut Vec<Letter>, word: &[Letter]) {
    for &l in word {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
}

/// Free reduction.
pub fn reduce(word: &[Letter]) -> ReducedWord {
    let mut out = Vec::with_capacity(word.len());
    push_reduced(&mut out, word);
    ReducedWord(out)
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.0))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", word_to_string(&self.0))
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ReducedWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let letters = parse_word(&text).map_err(serde::de::Error::custom)?;
        let r = reduce(&letters);
        if r.len() != letters.len() {
            return Err(serde::de::Error::custom(format!("{text:?} is not reduced")));
        }
        Ok(r)
    }
}

/// An element `(P, w)` of the free inverse monoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MunnTree {
    vertices: BTreeSet<ReducedWord>,
    mark: ReducedWord,
}

impl MunnTree {
    /// Checks that the vertex set is prefix-closed and holds the root and the mark.
    pub fn new(vertices: BTreeSet<ReducedWord>, mark: ReducedWord) -> Result<Self> {
        if !vertices.contains(&ReducedWord::empty()) {
            return Err(Error::usage("Munn tree must contain the empty word"));
        }
        if !vertices.contains(&mark) {
            return Err(Error::usage(format!("mark {mark} is not a vertex")));
        }
        if let Some(v) = vertices
            .iter()
            .find(|v| v.parent().is_some_and(|p| !vertices.contains(&p)))
        {
            return Err(Error::usage(format!(
                "vertex set is not prefix-closed at {v}"
            )));
        }
        Ok(MunnTree { vertices, mark })
    }

    pub fn identity() -> Self {
        MunnTree {
            vertices: BTreeSet::from([ReducedWord::empty()]),
            mark: ReducedWord::empty(),
        }
    }

    /// Traces the word through the Cayley graph of the free group.
    pub fn from_word(word: &[Letter]) -> Self {
        let mut vertices = BTreeSet::from([ReducedWord::empty()]);
        let mut here = Vec::with_capacity(word.len());
        for &l in word {
            push_reduced(&mut here, &[l]);
            vertices.insert(ReducedWord(here.clone()));
        }
        MunnTree {
            vertices,
            mark: ReducedWord(here),
        }
    }

    pub fn parse(word: &str) -> Result<Self> {
        Ok(Self::from_word(&parse_word(word)?))
    }

    pub fn vertices(&self) -> &BTreeSet<ReducedWord> {
        &self.vertices
    }

    pub fn mark(&self) -> &ReducedWord {
        &self.mark
    }

    /// `(P ∪ wQ, wv)` for `(P,w)(Q,v)`.
    pub fn multiply(&self, other: &MunnTree) -> MunnTree {
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|q| self.mark.concat(q.letters())));
        let t = MunnTree {
            vertices,
            mark: self.mark.concat(other.mark.letters()),
        };
        debug_assert!(Self::new(t.vertices.clone(), t.mark.clone()).is_ok());
        t
    }

    /// `(w⁻¹P, w⁻¹)`
    pub fn inverse(&self) -> MunnTree {
        let back = self.mark.inverse();
        let vertices = self
            .vertices
            .iter()
            .map(|p| back.concat(p.letters()))
            .collect();
        MunnTree {
            vertices,
            mark: back,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mark.is_empty()
    }

    /// `(P,1)`, the range idempotent `t t⁻¹`.
    pub fn range_idempotent(&self) -> MunnTree {
        MunnTree {
            vertices: self.vertices.clone(),
            mark: ReducedWord::empty(),
        }
    }

    /// Natural order: same mark and the larger element has the smaller tree.
    pub fn leq(&self, other: &MunnTree) -> bool {
        self.mark == other.mark && other.vertices.is_subset(&self.vertices)
    }

    /// Vertices with no child in the tree.
    pub fn leaves(&self) -> impl Iterator<Item = &ReducedWord> {
        let parents: BTreeSet<ReducedWord> =
            self.vertices.iter().filter_map(|v| v.parent()).collect();
        self.vertices.iter().filter(move |v| !parents.contains(v))
    }

    /// A word representing this element: visit each leaf and return, then
    /// walk to the mark.
    pub fn to_word(&self) -> Vec<Letter> {
        let mut word = Vec::new();
        for leaf in self.leaves() {
            if !leaf.is_empty() {
                word.extend_from_slice(leaf.letters());
                word.extend(crate::word::invert_word(leaf.letters()));
            }
        }
        word.extend_from_slice(self.mark.letters());
        word
    }

    /// Tree edges `(parent, letter, child)` with the letter read from parent to child.
    pub fn edges(&self) -> Vec<(ReducedWord, Letter, ReducedWord)> {
        self.vertices
            .iter()
            .filter_map(|v| {
                let p = v.parent()?;
                Some((p, *v.letters().last().unwrap(), v.clone()))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: BTreeSet<ReducedWord>,
            mark: ReducedWord,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::usage(format!("bad tree JSON: {e}")))?;
        Self::new(raw.vertices, raw.mark)
    }
}

impl fmt::Display for MunnTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("({")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if v.is_empty() {
                f.write_str("ε")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        if self.mark.is_empty() {
            f.write_str("}, ε)")
        } else {
            write!(f, "}}, {})", self.mark)
        }
    }
}

/// Word problem in `FIM(X)`.
pub fn words_equal(a: &[Letter], b: &[Letter]) -> bool {
    MunnTree::from_word(a) == MunnTree::from_word(b)
}

pub fn words_equal_str(a: &str, b: &str) -> Result<bool> {
    Ok(words_equal(&parse_word(a)?, &parse_word(b)?))
}
