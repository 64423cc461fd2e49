use invco_web::{fim_fold, finite_index, munn_tree};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn munn_tree_of_a_word() {
    let v = parse(munn_tree("xxX"));
    assert_eq!(v["vertices"], serde_json::json!(["", "x", "xx"]));
    assert_eq!(v["mark"], "x");
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    assert_eq!(v["idempotent"], false);
    assert!(parse(munn_tree("x1"))["error"].is_string());
}

#[test]
fn folding() {
    let v = parse(fim_fold("xy", "xx, yy"));
    assert_eq!(v["index"], 3);
    assert_eq!(v["labels"], serde_json::json!(["", "x", "y"]));
    assert_eq!(parse(fim_fold("xy", "xx"))["index"], 2);
    assert!(parse(fim_fold("xy", "xz"))["error"].is_string());
}

#[test]
fn finite_indices() {
    let v = parse(finite_index("I3", "stab1"));
    assert_eq!(v["index"], 3);
    assert_eq!(v["cosets"][1]["representative"], "213");
    assert_eq!(parse(finite_index("B2", "(1,1)"))["index"], 2);
    assert!(parse(finite_index("nope", ""))["error"].is_string());
}
