//! Browser bindings. Each export takes text and returns a JSON string; the
//! plain functions underneath are ordinary Rust and tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use partmat::algebra::s_poly_fishburn;
use partmat::maps::{phi_inv, theta, weighted_path};
use partmat::objects::{MotzkinWord, PartitionMatrix};

/// Largest weight the page will tabulate; `S_9` already takes seconds.
pub const MAX_S_WEIGHT: usize = 9;

fn matrix_json(p: &PartitionMatrix) -> Value {
    json!({
        "text": p.to_string(),
        "dim": p.dim(),
        "n": p.n(),
        "inv": p.inv(),
        "cells": p.cells(),
    })
}

pub fn s_coefficients(n: usize) -> Result<String, String> {
    if !(1..=MAX_S_WEIGHT).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_S_WEIGHT}"));
    }
    let poly = s_poly_fishburn(n);
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    Ok(json!({ "n": n, "text": poly.to_string(), "coeffs": coeffs }).to_string())
}

pub fn phi_inverse(word: &str) -> Result<String, String> {
    let word = MotzkinWord::parse(word.trim()).map_err(|e| e.to_string())?;
    let b = phi_inv(&word);
    let path = weighted_path(&b).map_err(|e| e.to_string())?;
    let stats = word.stats();
    Ok(json!({
        "word": word.to_string(),
        "matrix": matrix_json(&b),
        "nodes": path.path().nodes(),
        "steps": path.path().to_string(),
        "weights": path.weights(),
        "stats": { "len": stats.len, "comp": stats.comp, "level": stats.level },
        "blk": b.block_count(),
        "odd": b.odd_count(),
    })
    .to_string())
}

pub fn theta_step(matrix: &str) -> Result<String, String> {
    let p: PartitionMatrix = matrix.trim().parse().map_err(|e| format!("{e}"))?;
    let event = p
        .first_proper_event()
        .map(|e| json!({ "i": e.i, "kind": format!("{:?}", e.kind).to_lowercase() }));
    Ok(json!({
        "input": matrix_json(&p),
        "output": matrix_json(&theta(&p)),
        "event": event,
        "improper": p.is_improper(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = sCoefficients)]
pub fn s_coefficients_js(n: usize) -> Result<String, JsValue> {
    s_coefficients(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = phiInverse)]
pub fn phi_inverse_js(word: &str) -> Result<String, JsValue> {
    phi_inverse(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = thetaStep)]
pub fn theta_step_js(matrix: &str) -> Result<String, JsValue> {
    theta_step(matrix).map_err(|e| JsValue::from_str(&e))
}
