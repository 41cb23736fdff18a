//! Shared helpers for the integration tests: fixture loading and parsing.

use serde_json::Value;
use std::sync::OnceLock;

static FROZEN: OnceLock<Value> = OnceLock::new();

/// Reference values computed independently at high precision and frozen.
pub fn frozen() -> &'static Value {
    FROZEN.get_or_init(|| {
        let raw = include_str!("../fixtures/frozen.json");
        serde_json::from_str(raw).expect("fixture file parses")
    })
}

/// Fixture numbers are stored as decimal strings to keep full precision.
pub fn num(v: &Value) -> f64 {
    match v {
        Value::String(s) => s.parse().expect("numeric fixture string"),
        Value::Number(n) => n.as_f64().expect("finite fixture number"),
        other => panic!("expected number, got {other:?}"),
    }
}

pub fn nums(v: &Value) -> Vec<f64> {
    v.as_array().expect("array fixture").iter().map(num).collect()
}

/// Relative gap |got - want| / max(1, |want|).
pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

#[allow(dead_code)]
pub fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let r = rel(got, want);
    assert!(
        r <= tol,
        "{what}: got {got:.17e}, want {want:.17e}, rel {r:.3e} > {tol:.1e}"
    );
}
