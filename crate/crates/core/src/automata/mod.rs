//! Partial deterministic automata over an involutive alphabet.
//!
//! Automata stay partial throughout: there is no sink state, since a sink
//! would break per-letter injectivity.

mod action;
mod fold;
mod hall;

pub use action::{coset_action, coset_automaton, phi_hom, CosetActionTable, PhiVerification};
pub use fold::{fold, fold_capped, fold_with_order, Bouquet, DEFAULT_STATE_CAP};
pub use hall::{
    enumerate_closed_of_index, HallEnumeration, HallStrategy, DEFAULT_GENERATOR_BOUND,
    EXHAUSTIVE_ORDER_LIMIT,
};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{parse_word, Alphabet, Letter};

pub type StateId = usize;

/// Deterministic automaton with a partial transition table, one column per
/// letter of `X ∪ X⁻¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseAutomaton {
    alphabet: Alphabet,
    states: usize,
    delta: Vec<Option<StateId>>,
    initial: StateId,
    finals: BTreeSet<StateId>,
}

/// Checks duality, determinism and per-letter injectivity of an arbitrary
/// edge list.
pub fn is_inverse_automaton(edges: &[(StateId, Letter, StateId)]) -> bool {
    let set: BTreeSet<(StateId, Letter, StateId)> = edges.iter().copied().collect();
    let dual = set
        .iter()
        .all(|&(s, a, t)| set.contains(&(t, a.inverse(), s)));
    let mut out = HashMap::new();
    let mut inn = HashMap::new();
    for &(s, a, t) in &set {
        if out.insert((s, a), t).is_some() || inn.insert((t, a), s).is_some() {
            return false;
        }
    }
    dual
}

impl InverseAutomaton {
    /// Builds from positive or negative edges; each edge also installs its
    /// dual. Conflicting edges are an error.
    pub fn from_edges(
        alphabet: Alphabet,
        states: usize,
        initial: StateId,
        finals: BTreeSet<StateId>,
        edges: &[(StateId, Letter, StateId)],
    ) -> Result<Self> {
        if initial >= states || finals.iter().any(|&f| f >= states) {
            return Err(Error::usage("initial or final state out of range"));
        }
        let w = alphabet.width();
        let mut delta = vec![None; states * w];
        for &(s, a, t) in edges {
            if s >= states || t >= states {
                return Err(Error::usage(format!("edge ({s},{a},{t}) out of range")));
            }
            let c = alphabet
                .column(a)
                .ok_or_else(|| Error::usage(format!("letter {a} not in alphabet {alphabet}")))?;
            for (from, col, to) in [(s, c, t), (t, c ^ 1, s)] {
                match delta[from * w + col] {
                    Some(old) if old != to => {
                        return Err(Error::Construction(format!(
                            "state {from} has two {}-edges",
                            alphabet.letter(col)
                        )))
                    }
                    _ => delta[from * w + col] = Some(to),
                }
            }
        }
        Ok(InverseAutomaton {
            alphabet,
            states,
            delta,
            initial,
            finals,
        })
    }

    /// Takes a raw transition table as is, without installing duals.
    pub fn from_transitions(
        alphabet: Alphabet,
        states: usize,
        initial: StateId,
        finals: BTreeSet<StateId>,
        delta: Vec<Option<StateId>>,
    ) -> Result<Self> {
        if delta.len() != states * alphabet.width() || delta.iter().flatten().any(|&t| t >= states)
        {
            return Err(Error::usage("transition table has the wrong shape"));
        }
        if initial >= states || finals.iter().any(|&f| f >= states) {
            return Err(Error::usage("initial or final state out of range"));
        }
        Ok(InverseAutomaton {
            alphabet,
            states,
            delta,
            initial,
            finals,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn step(&self, state: StateId, letter: Letter) -> Option<StateId> {
        let c = self.alphabet.column(letter)?;
        self.delta[state * self.alphabet.width() + c]
    }

    fn step_col(&self, state: StateId, col: usize) -> Option<StateId> {
        self.delta[state * self.alphabet.width() + col]
    }

    /// Every defined transition.
    pub fn edges(&self) -> Vec<(StateId, Letter, StateId)> {
        let w = self.alphabet.width();
        (0..self.states)
            .flat_map(|s| (0..w).filter_map(move |c| Some((s, c, self.step_col(s, c)?))))
            .map(|(s, c, t)| (s, self.alphabet.letter(c), t))
            .collect()
    }

    pub fn is_inverse(&self) -> bool {
        is_inverse_automaton(&self.edges())
    }

    /// True when every letter is defined at every state.
    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    pub fn run_from(&self, state: StateId, word: &[Letter]) -> Option<StateId> {
        word.iter().try_fold(state, |s, &l| self.step(s, l))
    }

    /// `s₀ ⊲ w`, if defined.
    pub fn run(&self, word: &[Letter]) -> Option<StateId> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        self.run(word).is_some_and(|s| self.finals.contains(&s))
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        let w = parse_word(word)?;
        self.alphabet.check_word(&w)?;
        Ok(self.accepts(&w))
    }

    /// Whether `u` and `v` lead to the same state (both undefined counts as equal).
    pub fn state_equivalent(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.run(u) == self.run(v)
    }

    /// Shortlex-least word reaching each state, `None` for unreachable ones.
    pub fn reaching_words(&self) -> Vec<Option<Vec<Letter>>> {
        let mut words: Vec<Option<Vec<Letter>>> = vec![None; self.states];
        words[self.initial] = Some(Vec::new());
        let mut queue = VecDeque::from([self.initial]);
        while let Some(s) = queue.pop_front() {
            for c in 0..self.alphabet.width() {
                if let Some(t) = self.step_col(s, c) {
                    if words[t].is_none() {
                        let mut w = words[s].clone().unwrap();
                        w.push(self.alphabet.letter(c));
                        words[t] = Some(w);
                        queue.push_back(t);
                    }
                }
            }
        }
        words
    }

    /// Relabels states in order of their shortlex-least reaching word and
    /// drops unreachable states. Two initially-connected automata are
    /// isomorphic iff their canonical forms are equal.
    pub fn canonical(&self) -> InverseAutomaton {
        let mut order = Vec::with_capacity(self.states);
        let mut label = vec![None; self.states];
        label[self.initial] = Some(0);
        order.push(self.initial);
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            for c in 0..self.alphabet.width() {
                if let Some(t) = self.step_col(s, c) {
                    if label[t].is_none() {
                        label[t] = Some(order.len());
                        order.push(t);
                    }
                }
            }
            i += 1;
        }
        let w = self.alphabet.width();
        let mut delta = Vec::with_capacity(order.len() * w);
        for &s in &order {
            for c in 0..w {
                delta.push(self.step_col(s, c).map(|t| label[t].unwrap()));
            }
        }
        let finals = self.finals.iter().filter_map(|&f| label[f]).collect();
        InverseAutomaton {
            alphabet: self.alphabet.clone(),
            states: order.len(),
            delta,
            initial: 0,
            finals,
        }
    }

    pub fn is_isomorphic(&self, other: &InverseAutomaton) -> bool {
        self.canonical() == other.canonical()
    }

    /// Moore partition refinement on the trimmed automaton. Undefined
    /// transitions distinguish states; nothing is completed.
    pub fn minimize(&self) -> InverseAutomaton {
        let a = self.canonical();
        let w = a.alphabet.width();
        let mut class: Vec<usize> = (0..a.states)
            .map(|s| a.finals.contains(&s) as usize)
            .collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
            let next: Vec<usize> = (0..a.states)
                .map(|s| {
                    let sig = (0..w).map(|c| a.step_col(s, c).map(|t| class[t])).collect();
                    let n = ids.len();
                    *ids.entry((class[s], sig)).or_insert(n)
                })
                .collect();
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut delta = vec![None; count * w];
        for s in 0..a.states {
            for c in 0..w {
                if let Some(t) = a.step_col(s, c) {
                    delta[class[s] * w + c] = Some(class[t]);
                }
            }
        }
        let finals = a.finals.iter().map(|&f| class[f]).collect();
        InverseAutomaton {
            alphabet: a.alphabet.clone(),
            states: count,
            delta,
            initial: class[a.initial],
            finals,
        }
        .canonical()
    }

    /// Product automaton on pairs of states, defined where both are.
    /// Finals are pairs of finals. States are the reachable pairs.
    pub fn intersect(
        &self,
        other: &InverseAutomaton,
    ) -> Result<(InverseAutomaton, Vec<(StateId, StateId)>)> {
        if self.alphabet != other.alphabet {
            return Err(Error::usage("automata over different alphabets"));
        }
        let w = self.alphabet.width();
        let mut pairs = vec![(self.initial, other.initial)];
        let mut index = HashMap::from([((self.initial, other.initial), 0usize)]);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for c in 0..w {
                let t = match (self.step_col(p, c), other.step_col(q, c)) {
                    (Some(p2), Some(q2)) => Some(*index.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        pairs.len() - 1
                    })),
                    _ => None,
                };
                delta.push(t);
            }
            i += 1;
        }
        let finals = pairs
            .iter()
            .enumerate()
            .filter(|(_, (p, q))| self.finals.contains(p) && other.finals.contains(q))
            .map(|(i, _)| i)
            .collect();
        let a = InverseAutomaton {
            alphabet: self.alphabet.clone(),
            states: pairs.len(),
            delta,
            initial: 0,
            finals,
        };
        Ok((a, pairs))
    }

    /// Graphviz rendering with positive letters only; states numbered in
    /// shortlex order of their reaching words.
    pub fn to_dot(&self) -> String {
        let a = self.canonical();
        let mut out = String::from(
            "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n",
        );
        for s in 0..a.states {
            let shape = if a.finals.contains(&s) {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(out, "  q{s} [shape={shape}];");
        }
        let _ = writeln!(out, "  start -> q{};", a.initial);
        for (s, l, t) in a.edges() {
            if !l.is_inverse() {
                let _ = writeln!(out, "  q{s} -> q{t} [label=\"{l}\"];");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> AutomatonJson {
        AutomatonJson {
            alphabet: self.alphabet.to_string(),
            states: self.states,
            initial: self.initial,
            finals: self.finals.iter().copied().collect(),
            edges: self
                .edges()
                .into_iter()
                .filter(|(_, l, _)| !l.is_inverse())
                .map(|(s, l, t)| (s, l.to_string(), t))
                .collect(),
        }
    }

    pub fn from_json(json: &AutomatonJson) -> Result<Self> {
        let alphabet = Alphabet::parse(&json.alphabet)?;
        let mut edges = Vec::with_capacity(json.edges.len());
        for (s, l, t) in &json.edges {
            let letters = parse_word(l)?;
            match letters.as_slice() {
                [x] if !x.is_inverse() => edges.push((*s, *x, *t)),
                _ => {
                    return Err(Error::usage(format!(
                        "edge label {l:?} must be one lowercase letter"
                    )))
                }
            }
        }
        Self::from_edges(
            alphabet,
            json.states,
            json.initial,
            json.finals.iter().copied().collect(),
            &edges,
        )
    }
}

/// `{"alphabet":"xy","states":n,"initial":0,"finals":[...],"edges":[[src,"x",dst]]}`,
/// positive letters only; duals are reconstructed on load.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AutomatonJson {
    #[serde(default)]
    pub alphabet: String,
    pub states: usize,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub edges: Vec<(usize, String, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        parse_word(s).unwrap()
    }

    fn two_cycle() -> InverseAutomaton {
        let x = Letter::new('x').unwrap();
        InverseAutomaton::from_edges(
            Alphabet::parse("xy").unwrap(),
            2,
            0,
            BTreeSet::from([0]),
            &[(0, x, 1), (1, x, 0)],
        )
        .unwrap()
    }

    #[test]
    fn runs_and_acceptance() {
        let a = two_cycle();
        assert!(a.accepts(&w("xx")));
        assert!(!a.accepts(&w("xy")));
        assert!(a.accepts(&w("")));
        assert_eq!(a.run(&w("xy")), None);
        assert!(a.state_equivalent(&w("xx"), &w("")));
        assert!(a.state_equivalent(&w("x"), &w("xxx")));
        assert!(!a.state_equivalent(&w("x"), &w("")));
    }

    #[test]
    fn missing_dual_edge_is_not_inverse() {
        let alphabet = Alphabet::parse("x").unwrap();
        // 0 -x-> 1 with no X-edge back
        let a = InverseAutomaton::from_transitions(
            alphabet,
            2,
            0,
            BTreeSet::from([0]),
            vec![Some(1), None, None, None],
        )
        .unwrap();
        assert!(!a.is_inverse());
        assert!(two_cycle().is_inverse());
    }

    #[test]
    fn conflicting_edges_are_rejected() {
        let x = Letter::new('x').unwrap();
        let r = InverseAutomaton::from_edges(
            Alphabet::parse("x").unwrap(),
            3,
            0,
            BTreeSet::from([0]),
            &[(0, x, 1), (0, x, 2)],
        );
        assert!(matches!(r, Err(Error::Construction(_))));
    }

    #[test]
    fn minimize_merges_duplicate_state() {
        // 0 -x-> 1, 0 -y-> 2, both 1 and 2 final dead ends: not inverse, but
        // a partial DFA with one redundant state.
        let alphabet = Alphabet::parse("xy").unwrap();
        let mut delta = vec![None; 3 * 4];
        delta[0] = Some(1);
        delta[2] = Some(2);
        let a = InverseAutomaton::from_transitions(alphabet, 3, 0, BTreeSet::from([1, 2]), delta)
            .unwrap();
        let m = a.minimize();
        assert_eq!(m.state_count(), 2);
        for word in a.alphabet().words_up_to(3) {
            assert_eq!(a.accepts(&word), m.accepts(&word));
        }
        assert_eq!(two_cycle().minimize().state_count(), 2);
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let a = two_cycle();
        let text = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"alphabet":"xy","states":2,"initial":0,"finals":[0],"edges":[[0,"x",1],[1,"x",0]]}"#
        );
        let back = InverseAutomaton::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, a);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }

    #[test]
    fn dot_lists_positive_edges() {
        let dot = two_cycle().to_dot();
        assert!(dot.contains("q0 -> q1 [label=\"x\"]"));
        assert!(!dot.contains("label=\"X\""));
        assert!(dot.contains("q0 [shape=doublecircle]"));
    }
}
