//! The worked examples, recomputed and compared against their known values.

use serde::Serialize;
use serde_json::{json, Value};

use crate::automata::coset_action;
use crate::closure::{
    generate_closed, generate_closed_ids, is_closed_inverse_sub, is_coset, FimClosedSub,
    FiniteClosedSub,
};
use crate::cosets::{
    check_index_formula, check_index_formula_fim, coset_of, coset_union, enumerate_cosets_within,
    index, max_group_image, same_coset,
};
use crate::error::Result;
use crate::families::{brandt, clifford_cyclic, stabilizer, symmetric_inverse_monoid};
use crate::semigroup::FiniteInverseSemigroup;
use crate::set::ElementSet;

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub name: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub claims: Vec<Claim>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    /// 0 when every claim holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Replaces a claim's expected value with one it cannot match. Returns
    /// false if no claim has that id.
    pub fn corrupt(&mut self, id: &str) -> bool {
        let Some(c) = self.claims.iter_mut().find(|c| c.id == id) else {
            return false;
        };
        c.expected = json!({ "corrupted": c.expected.clone() });
        c.pass = c.computed == c.expected;
        true
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{mark} {:<22} {}: computed {}, expected {}\n",
                c.id, c.name, c.computed, c.expected
            ));
        }
        let passed = self.claims.iter().filter(|c| c.pass).count();
        out.push_str(&format!("{passed}/{} claims hold\n", self.claims.len()));
        out
    }
}

struct Builder(Vec<Claim>);

impl Builder {
    fn claim(&mut self, id: &str, name: &str, computed: Value, expected: Value) {
        let pass = computed == expected;
        self.0.push(Claim {
            id: id.into(),
            name: name.into(),
            computed,
            expected,
            pass,
        });
    }
}

fn names(s: &FiniteInverseSemigroup, a: &ElementSet) -> Value {
    json!(a.iter().map(|e| s.name(e)).collect::<Vec<_>>())
}

pub fn run_examples() -> Result<ExampleReport> {
    let mut b = Builder(Vec::new());
    brandt_claims(&mut b)?;
    i3_claims(&mut b)?;
    fim_claims(&mut b)?;
    clifford_claims(&mut b)?;
    Ok(ExampleReport { claims: b.0 })
}

fn brandt_claims(b: &mut Builder) -> Result<()> {
    let (b2, _) = brandt(2)?;
    let f = |n: &str| b2.find(n).expect("Brandt element");
    b.claim(
        "b2-product",
        "B2: (1,2)·(2,1)",
        json!(b2.name(b2.mul(f("(1,2)"), f("(2,1)")))),
        json!("(1,1)"),
    );
    b.claim(
        "b2-product-zero",
        "B2: (1,2)·(1,2)",
        json!(b2.name(b2.mul(f("(1,2)"), f("(1,2)")))),
        json!("0"),
    );
    b.claim(
        "b2-order",
        "B2: (1,2) ≤ (2,2)",
        json!(b2.leq(f("(1,2)"), f("(2,2)"))),
        json!(false),
    );
    b.claim(
        "b2-idempotents",
        "B2: idempotents",
        names(&b2, b2.idempotents()),
        json!(["(1,1)", "(2,2)", "0"]),
    );
    let single = ElementSet::from_ids(b2.order(), [f("(1,2)")]);
    b.claim(
        "b2-singleton-coset",
        "B2: {(1,2)} is a coset",
        json!(is_coset(&b2, &single)?),
        json!(true),
    );
    let e1 = generate_closed_ids(&b2, &[f("(1,1)")])?;
    b.claim("b2-index", "[B2 : E1]", json!(index(&e1)), json!(2));
    b.claim(
        "b2-union",
        "B2: union of the cosets of E1",
        names(&b2, &coset_union(&e1).union),
        json!(["(1,1)", "(1,2)"]),
    );
    Ok(())
}

fn i3_claims(b: &mut Builder) -> Result<()> {
    let (i3, maps) = symmetric_inverse_monoid(3)?;
    let f = |n: &str| i3.find(n).expect("element of I3");
    let stab = stabilizer(&i3, &maps, 1);
    b.claim(
        "i3-stab-closed",
        "I3: stab(1) is a closed inverse subsemigroup",
        json!(is_closed_inverse_sub(&i3, &stab)),
        json!(true),
    );
    b.claim(
        "i3-stab-order",
        "I3: |stab(1)|",
        json!(stab.len()),
        json!(7),
    );
    let l = FiniteClosedSub::new(&i3, stab)?;
    let k = generate_closed(&i3, &ElementSet::from_ids(i3.order(), [f("132")]))?;
    b.claim(
        "i3-k",
        "I3: closure of {(23)}",
        names(&i3, k.members()),
        json!(["123", "132"]),
    );
    let c2 = ElementSet::from_ids(
        i3.order(),
        i3.elements()
            .filter(|e| maps[e.index()].apply(0) == Some(1)),
    );
    b.claim(
        "i3-c2-coset",
        "I3: {σ : 1σ = 2} is a coset",
        json!(is_coset(&i3, &c2)?),
        json!(true),
    );
    let coset = coset_of(&l, f("213")).map(|c| c.members() == &c2);
    b.claim(
        "i3-coset-of",
        "I3: coset of stab(1) through (12) is {σ : 1σ = 2}",
        json!(coset),
        json!(true),
    );
    b.claim(
        "i3-same-coset",
        "I3: (12) and (123) share a coset of stab(1)",
        json!(same_coset(&l, f("213"), f("231"))?),
        json!(true),
    );
    b.claim("i3-index-l", "[I3 : stab(1)]", json!(index(&l)), json!(3));
    b.claim("i3-index-k", "[I3 : {id,(23)}]", json!(index(&k)), json!(3));
    b.claim(
        "i3-index-lk",
        "[stab(1) : {id,(23)}]",
        json!(enumerate_cosets_within(&k, l.members()).len()),
        json!(1),
    );
    let r = check_index_formula(&l, &k)?;
    b.claim(
        "i3-formula",
        "I3: [I3:K] = [I3:L][L:K]",
        json!([r.lhs, r.outer, r.inner, r.verdict()]),
        json!([3, 3, 1, "holds"]),
    );
    let c1 = coset_of(&l, f("123")).expect("identity coset");
    let moved = coset_action(&l, &c1, f("213")).map(|c| c.members() == &c2);
    b.claim(
        "i3-action",
        "I3: stab(1) ⊲ (12) = {σ : 1σ = 2}",
        json!(moved),
        json!(true),
    );
    Ok(())
}

fn fim_claims(b: &mut Builder) -> Result<()> {
    let k = FimClosedSub::parse("xy", &["xx"])?;
    let h = FimClosedSub::parse("xy", &["xx", "yy"])?;
    b.claim(
        "fim-index-k",
        "[FIM(x,y) : ↑⟨x²⟩]",
        json!(k.automaton().state_count()),
        json!(2),
    );
    b.claim(
        "fim-index-h",
        "[FIM(x,y) : ↑⟨x²,y²⟩]",
        json!(h.automaton().state_count()),
        json!(3),
    );
    let r = check_index_formula_fim(&h, &k)?;
    b.claim(
        "fim-index-hk",
        "[↑⟨x²,y²⟩ : ↑⟨x²⟩]",
        json!(r.inner),
        json!(1),
    );
    b.claim(
        "fim-formula",
        "FIM: index formula",
        json!([r.lhs, r.outer, r.inner, r.verdict(), r.flags]),
        json!([2, 3, 1, "fails", ["K not full"]]),
    );
    b.claim(
        "fim-member",
        "FIM: xx⁻¹ ∈ ↑⟨x²⟩",
        json!(k.contains_word("xX")?),
        json!(true),
    );
    Ok(())
}

fn clifford_claims(b: &mut Builder) -> Result<()> {
    let c = clifford_cyclic(4)?;
    let s = c.semigroup();
    let e = generate_closed(s, s.idempotents())?;
    let h = generate_closed_ids(s, &[c.top_element(2), c.bottom_element(0)])?;
    b.claim(
        "c4-index-e",
        "C4-Clifford: [S:E]",
        json!(index(&e)),
        json!(4),
    );
    b.claim(
        "c4-group-image",
        "C4-Clifford: |maximum group image|",
        json!(max_group_image(s).order()),
        json!(4),
    );
    let r = check_index_formula(&h, &e)?;
    b.claim(
        "c4-formula",
        "C4-Clifford: [S:H][H:E] = [S:E]",
        json!([r.outer, r.inner, r.lhs, r.verdict()]),
        json!([2, 2, 4, "holds"]),
    );
    Ok(())
}
