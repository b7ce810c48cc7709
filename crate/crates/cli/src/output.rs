//! Text and JSON rendering helpers.
//!
//! JSON schema for a bivariate polynomial: an array of
//! `{"z": k, "t": [[exp, "num/den"], ...]}` with entries sorted by `z` and
//! then by `t`-exponent — canonical and diff-friendly.

use excursion_core::ring::text;
use excursion_core::{LaurentPoly, Rational, Ring, RingPoly};
use serde_json::{json, Value};

pub fn bivariate_text(p: &RingPoly<LaurentPoly>) -> String {
    text::poly_laurent_to_string(p, "t", "z")
}

pub fn bivariate_json(p: &RingPoly<LaurentPoly>) -> Value {
    let entries: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let t_terms: Vec<Value> = c.iter().map(|(e, q)| json!([e, q.to_string()])).collect();
            json!({ "z": k, "t": t_terms })
        })
        .collect();
    Value::Array(entries)
}

pub fn rational_poly_text(p: &RingPoly<Rational>, var: &str) -> String {
    text::poly_rational_to_string(p, var)
}

pub fn rational_poly_json(p: &RingPoly<Rational>) -> Value {
    let entries: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!([k, c.to_string()]))
        .collect();
    Value::Array(entries)
}

pub fn laurent_text(p: &LaurentPoly) -> String {
    text::laurent_to_string(p, "t")
}

/// Truncated t-series rendering: known coefficients plus an order marker.
pub fn t_series_text(coeffs: &[Rational]) -> String {
    let mut poly = LaurentPoly::zero();
    for (n, c) in coeffs.iter().enumerate() {
        poly = poly.add(&LaurentPoly::monomial(c.clone(), n as i64));
    }
    format!("{} + O(t^{})", laurent_text(&poly), coeffs.len())
}

pub fn t_series_json(coeffs: &[Rational]) -> Value {
    let entries: Vec<Value> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| json!([n, c.to_string()]))
        .collect();
    json!({ "order": coeffs.len() - 1, "coefficients": entries })
}
