//! Certificate JSON.
//!
//! ```json
//! {
//!   "horn": {"n": 3, "k": 1, "faces": {"0": [0], "2": [1], "3": [3]}},
//!   "result": "no_filler",
//!   "witness": [],
//!   "certificate": [
//!     {"step": "assign", "variable": "a", "equation": "a=0", "value": 0},
//!     {"step": "contradiction", "variable": "b", "equation": "b+3=1", "value": null}
//!   ]
//! }
//! ```
//!
//! Integer elements are JSON numbers when they fit in an `i64` and decimal
//! strings otherwise; table elements are their names. `witness` holds the
//! filler's coordinates and is empty when there is none. An exhausted search
//! shows up as a final contradiction step with a null variable.

use emspace_core::horn::{FillerCount, StepKind, SweepOutcome, SweepReport};
use emspace_core::{Certificate, Elem, EmSimplex, EmSpace, FillerResult, HornProblem, Monoid};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub fn element(monoid: &Monoid, e: &Elem) -> Value {
    if monoid.is_table() {
        return Value::String(monoid.format_element(e));
    }
    match e.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(e.to_string()),
    }
}

fn values(monoid: &Monoid, x: &EmSimplex) -> Vec<Value> {
    x.coords.iter().map(|c| element(monoid, c)).collect()
}

/// Faces keyed by index, in index order.
#[derive(Debug)]
pub struct Faces(Vec<(usize, Vec<Value>)>);

impl Serialize for Faces {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, v) in &self.0 {
            map.serialize_entry(&i.to_string(), v)?;
        }
        map.end()
    }
}

#[derive(Debug, Serialize)]
pub struct HornDoc {
    pub n: usize,
    pub k: usize,
    pub faces: Faces,
}

#[derive(Debug, Serialize)]
pub struct StepDoc {
    pub step: &'static str,
    pub variable: Option<String>,
    pub equation: String,
    pub value: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct CertificateDoc {
    pub horn: HornDoc,
    pub result: &'static str,
    pub witness: Vec<Value>,
    pub certificate: Vec<StepDoc>,
}

pub fn horn(space: &EmSpace, p: &HornProblem<EmSimplex>) -> HornDoc {
    let faces = p.faces.iter().map(|(&i, x)| (i, values(space.monoid(), x))).collect();
    HornDoc { n: p.n, k: p.k, faces: Faces(faces) }
}

pub fn steps(monoid: &Monoid, c: &Certificate) -> Vec<StepDoc> {
    let mut out: Vec<StepDoc> = c
        .steps
        .iter()
        .map(|s| StepDoc {
            step: match s.kind {
                StepKind::Assign => "assign",
                StepKind::Contradiction => "contradiction",
            },
            variable: s.variable.clone(),
            equation: s.equation.clone(),
            value: s.value.as_ref().map(|v| element(monoid, v)),
        })
        .collect();
    if let Some(b) = &c.exhausted {
        out.push(StepDoc { step: "contradiction", variable: None, equation: format!("exhausted search over {b}"), value: None });
    }
    out
}

pub fn certificate(space: &EmSpace, p: &HornProblem<EmSimplex>, result: &FillerResult<EmSimplex>) -> CertificateDoc {
    let m = space.monoid();
    match result {
        FillerResult::Filler(y) => CertificateDoc { horn: horn(space, p), result: "filler", witness: values(m, y), certificate: Vec::new() },
        FillerResult::NoFiller(c) => CertificateDoc { horn: horn(space, p), result: "no_filler", witness: Vec::new(), certificate: steps(m, c) },
    }
}

#[derive(Debug, Serialize)]
pub struct SweepDoc {
    pub monoid: String,
    pub degree: usize,
    pub kind: &'static str,
    pub max_dim: usize,
    pub bound: Option<u64>,
    pub horns_checked: usize,
    pub result: &'static str,
    pub bounded_evidence: bool,
    pub counterexample: Option<CertificateDoc>,
    pub filler_count: Option<String>,
}

pub fn sweep(space: &EmSpace, report: &SweepReport<EmSimplex>) -> SweepDoc {
    let kind = match report.kind {
        emspace_core::horn::HornKind::Inner => "quasi",
        emspace_core::horn::HornKind::All => "kan",
    };
    let mut doc = SweepDoc {
        monoid: space.monoid().name(),
        degree: space.degree(),
        kind,
        max_dim: report.max_dim,
        bound: report.bound,
        horns_checked: report.horns_checked,
        result: "passed",
        bounded_evidence: false,
        counterexample: None,
        filler_count: None,
    };
    match &report.outcome {
        SweepOutcome::Passed { bounded_evidence } => doc.bounded_evidence = *bounded_evidence,
        SweepOutcome::MissingFiller { problem, certificate: c } => {
            doc.result = "missing_filler";
            doc.counterexample = Some(certificate(space, problem, &FillerResult::NoFiller(c.clone())));
        }
        SweepOutcome::NonUniqueFiller { problem, count } => {
            doc.result = "non_unique_filler";
            doc.counterexample = Some(CertificateDoc { horn: horn(space, problem), result: "filler", witness: Vec::new(), certificate: Vec::new() });
            doc.filler_count = Some(count_text(*count));
        }
    }
    doc
}

pub fn count_text(c: FillerCount) -> String {
    match c {
        FillerCount::Exactly(n) => n.to_string(),
        FillerCount::AtLeast(n) => format!("at least {n}"),
        FillerCount::Infinite => "infinitely many".to_string(),
    }
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Checks a parsed document against the certificate format above. Returns the
/// first problem found.
pub fn check_certificate_schema(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("top level is not an object")?;
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    if keys != ["certificate", "horn", "result", "witness"] {
        return Err(format!("unexpected top-level keys {keys:?}"));
    }
    let horn = obj["horn"].as_object().ok_or("horn is not an object")?;
    let n = horn.get("n").and_then(Value::as_u64).ok_or("horn.n is not a natural number")?;
    let k = horn.get("k").and_then(Value::as_u64).ok_or("horn.k is not a natural number")?;
    if k > n || n == 0 {
        return Err(format!("no horn Λ^{k}[{n}]"));
    }
    let faces = horn.get("faces").and_then(Value::as_object).ok_or("horn.faces is not an object")?;
    if horn.len() != 3 {
        return Err("horn has extra keys".into());
    }
    let mut indices: Vec<u64> = Vec::new();
    for (key, val) in faces {
        let i: u64 = key.parse().map_err(|_| format!("face key {key:?} is not an index"))?;
        if i > n || i == k {
            return Err(format!("face key {i} does not belong to Λ^{k}[{n}]"));
        }
        if !val.is_array() {
            return Err(format!("face {i} is not an array"));
        }
        indices.push(i);
    }
    if indices.len() as u64 != n {
        return Err(format!("expected {n} faces, found {}", indices.len()));
    }
    let result = obj["result"].as_str().ok_or("result is not a string")?;
    if !obj["witness"].is_array() {
        return Err("witness is not an array".into());
    }
    let steps = obj["certificate"].as_array().ok_or("certificate is not an array")?;
    for (t, s) in steps.iter().enumerate() {
        let s = s.as_object().ok_or(format!("step {t} is not an object"))?;
        let mut keys: Vec<&str> = s.keys().map(String::as_str).collect();
        keys.sort_unstable();
        if keys != ["equation", "step", "value", "variable"] {
            return Err(format!("step {t} has keys {keys:?}"));
        }
        if !s["equation"].is_string() {
            return Err(format!("step {t}: equation is not a string"));
        }
        if !(s["variable"].is_string() || s["variable"].is_null()) {
            return Err(format!("step {t}: variable is neither a string nor null"));
        }
        match s["step"].as_str() {
            Some("assign") => {
                if s["variable"].is_null() || s["value"].is_null() {
                    return Err(format!("step {t}: an assignment needs a variable and a value"));
                }
            }
            Some("contradiction") => {
                if t + 1 != steps.len() {
                    return Err(format!("step {t}: contradiction before the last step"));
                }
            }
            _ => return Err(format!("step {t}: unknown step kind")),
        }
    }
    match result {
        "filler" => {
            if !steps.is_empty() && steps.last().unwrap()["step"] == "contradiction" {
                return Err("a filler cannot end in a contradiction".into());
            }
        }
        "no_filler" => {
            if steps.last().map(|s| &s["step"]) != Some(&Value::from("contradiction")) {
                return Err("no_filler needs a final contradiction".into());
            }
            if !obj["witness"].as_array().unwrap().is_empty() {
                return Err("no_filler with a witness".into());
            }
        }
        other => return Err(format!("unknown result {other:?}")),
    }
    Ok(())
}
