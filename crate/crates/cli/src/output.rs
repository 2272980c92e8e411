//! JSON encodings. Coefficients are always `"p/q"` strings.

use comprelie::law::{LawReport, Value as LawValue, Witness};
use comprelie::lincomb::{Basis, LinComb, Tensor};
use comprelie::polyx::{ClassifyResult, FamilySpec};
use comprelie::scalar::render;
use serde_json::{json, Map, Value as Json};

use crate::eval::Value;

pub fn elem_json<B: Basis>(e: &LinComb<B>) -> Json {
    let terms: Vec<Json> = e
        .iter()
        .map(|(b, c)| json!({ "word": b.letters(), "coeff": render(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn tensor_json<B: Basis>(t: &Tensor<B>) -> Json {
    let pairs: Vec<Json> = t
        .iter()
        .map(|(p, c)| json!({ "left": p.0.letters(), "right": p.1.letters(), "coeff": render(c) }))
        .collect();
    json!({ "pairs": pairs })
}

pub fn value_json<B: Basis>(v: &Value<B>) -> Json {
    match v {
        Value::Elem(e) => elem_json(e),
        Value::Tensor(t) => tensor_json(t),
    }
}

fn law_value_json<B: Basis>(v: &LawValue<B>) -> Json {
    match v {
        LawValue::Elem(e) => elem_json(e),
        LawValue::Tensor(t) => tensor_json(t),
    }
}

pub fn witness_json<B: Basis>(w: &Witness<B>) -> Json {
    let inputs: Vec<Json> = w.inputs.iter().map(|b| json!(b.letters())).collect();
    let display: Vec<String> = w.inputs.iter().map(ToString::to_string).collect();
    json!({
        "law": w.law.name(),
        "inputs": inputs,
        "display": display,
        "lhs": law_value_json(&w.lhs),
        "rhs": law_value_json(&w.rhs),
    })
}

pub fn report_json<B: Basis>(r: &LawReport<B>) -> Json {
    json!({
        "law": r.name,
        "structure": r.structure,
        "cap": r.cap,
        "checked": r.checked,
        "passed": r.passed(),
        "failures": r.failures.len(),
        "witness": r.witness().map_or(Json::Null, witness_json),
    })
}

fn family_json(spec: &FamilySpec) -> Json {
    let params: Map<String, Json> = spec
        .parameters()
        .into_iter()
        .map(|(k, v)| (k.to_string(), Json::String(render(&v))))
        .collect();
    json!({ "outcome": "family", "family": spec.tag(), "parameters": params })
}

pub fn classify_json(r: &ClassifyResult) -> Json {
    match r {
        ClassifyResult::Family(spec) => family_json(spec),
        ClassifyResult::Inconsistent { j, k } => json!({ "outcome": "inconsistent", "witness": [j, k] }),
        ClassifyResult::InsufficientData { need } => json!({ "outcome": "insufficient_data", "need": need }),
    }
}

pub fn classify_text(r: &ClassifyResult) -> String {
    match r {
        ClassifyResult::Family(spec) => spec.to_string(),
        ClassifyResult::Inconsistent { j, k } => {
            format!("inconsistent: the preLie condition fails at (j, k) = ({j}, {k})")
        }
        ClassifyResult::InsufficientData { need } => {
            format!("insufficient data: need λ_0 … λ_{need}")
        }
    }
}
