//! Three operations for the browser page, each taking strings and returning
//! a JSON string (`{"error": ...}` on bad input). The plain functions are
//! usable natively; the `#[wasm_bindgen]` wrappers only forward.

use invco_core::builtin::builtin;
use invco_core::closure::FimClosedSub;
use invco_core::cosets::enumerate_cosets;
use invco_core::munn::MunnTree;
use invco_core::word::{parse_word, word_to_string, Alphabet};
use invco_core::Result;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(result: Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Munn tree of a word: vertices, edges, mark, and the normal-form word.
pub fn munn_tree(word: &str) -> String {
    respond((|| {
        let t = MunnTree::parse(word.trim())?;
        let edges: Vec<Value> = t
            .edges()
            .into_iter()
            .map(|(a, l, b)| json!([a.to_string(), l.as_char().to_string(), b.to_string()]))
            .collect();
        Ok(json!({
            "vertices": t.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": edges,
            "mark": t.mark().to_string(),
            "idempotent": t.is_idempotent(),
            "normal_form": word_to_string(&t.to_word()),
        }))
    })())
}

/// Folded automaton of `↑⟨Y⟩` in `FIM(X)`; words separated by commas or spaces.
pub fn fim_fold(alphabet: &str, generators: &str) -> String {
    respond((|| {
        let alphabet = Alphabet::parse(alphabet.trim())?;
        let words = generators
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(parse_word)
            .collect::<Result<Vec<_>>>()?;
        let k = FimClosedSub::generate(alphabet, words)?;
        let a = k.automaton();
        let labels: Vec<String> = a
            .reaching_words()
            .into_iter()
            .map(|w| w.map_or_else(String::new, |w| word_to_string(&w)))
            .collect();
        Ok(json!({
            "index": a.state_count(),
            "full": k.is_full(),
            "labels": labels,
            "automaton": a.to_json(),
            "dot": a.to_dot(),
        }))
    })())
}

/// Cosets of the closed inverse subsemigroup generated by `gens` in a builtin semigroup.
pub fn finite_index(semigroup: &str, gens: &str) -> String {
    respond((|| {
        let named = builtin(semigroup.trim())
            .ok_or_else(|| invco_core::Error::Usage(format!("unknown builtin {semigroup:?}")))??;
        let l = named.closed(gens)?;
        let cosets: Vec<Value> = enumerate_cosets(&l)
            .iter()
            .map(|c| {
                json!({
                    "representative": named.semigroup.name(c.representative()),
                    "members": named.names(c.members().iter()),
                })
            })
            .collect();
        Ok(json!({
            "order": named.semigroup.order(),
            "members": named.names(l.members().iter()),
            "index": cosets.len(),
            "cosets": cosets,
        }))
    })())
}

#[wasm_bindgen(js_name = munnTree)]
pub fn munn_tree_js(word: &str) -> String {
    munn_tree(word)
}

#[wasm_bindgen(js_name = fimFold)]
pub fn fim_fold_js(alphabet: &str, generators: &str) -> String {
    fim_fold(alphabet, generators)
}

#[wasm_bindgen(js_name = finiteIndex)]
pub fn finite_index_js(semigroup: &str, gens: &str) -> String {
    finite_index(semigroup, gens)
}
