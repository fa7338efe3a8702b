//! Browser bindings: compute an invariant, transform a graph, or run the
//! identity checks on graphs given in the text format.
//!
//! Each export has a plain Rust twin returning `Result<String, String>` so
//! the logic is testable off the browser.

use wasm_bindgen::prelude::*;

use ribbonpoly::format::{parse, serialize};
use ribbonpoly::identities::verify_all;
use ribbonpoly::invariants::{
    bollobas_riordan, homfly_formula, homfly_full, jones_cp, jones_from_homfly, kauffman_bracket,
    tutte,
};
use ribbonpoly::ribbon::RibbonGraph;

fn graphs(text: &str) -> Result<Vec<RibbonGraph>, String> {
    let gs = parse(text).map_err(|e| e.to_string())?;
    if gs.is_empty() {
        return Err("no graphs in input".into());
    }
    Ok(gs)
}

fn one(g: &RibbonGraph, kind: &str, writhe: Option<i32>) -> Result<String, String> {
    let err = |e: &dyn std::fmt::Display| format!("{}: {e}", g.name());
    Ok(match kind {
        "br" => bollobas_riordan(g).to_string(),
        "tutte" => tutte(g).to_string(),
        "homfly" => homfly_formula(g).to_string(),
        "homfly-full" => homfly_full(&g.with_default_weights())
            .map_err(|e| err(&e))?
            .to_string(),
        "jones-cp" => {
            let w = match (writhe, g.tensor_of()) {
                (Some(w), _) => i64::from(w),
                (None, Some(3)) => -(g.num_edges() as i64),
                (None, _) => {
                    return Err(err(
                        &"jones-cp needs a writhe unless the graph is marked `tensor 3`",
                    ))
                }
            };
            jones_cp(g, w).map_err(|e| err(&e))?.to_string()
        }
        "jones-homfly" => jones_from_homfly(g).to_string(),
        "bracket" => kauffman_bracket(g).to_string(),
        other => return Err(format!("unknown invariant `{other}`")),
    })
}

/// One `name: polynomial` line per graph.
pub fn compute_text(text: &str, kind: &str, writhe: Option<i32>) -> Result<String, String> {
    let mut out = String::new();
    for g in graphs(text)? {
        out.push_str(&format!("{}: {}\n", g.name(), one(&g, kind, writhe)?));
    }
    Ok(out)
}

/// `op` is `dual` or `tensor` (subdivide with cycle length `q`).
pub fn transform_text(text: &str, op: &str, q: u32) -> Result<String, String> {
    let mut out = Vec::new();
    for g in graphs(text)? {
        let t = match op {
            "dual" => g.dual(),
            "tensor" => g.tensor_cycle(q),
            other => return Err(format!("unknown transform `{other}`")),
        };
        out.push(t.map_err(|e| format!("{}: {e}", g.name()))?);
    }
    Ok(serialize(&out))
}

/// Report lines for every applicable identity on every graph.
pub fn verify_text(text: &str, seed: u32) -> Result<String, String> {
    let mut out = format!("# seed={seed}\n");
    for g in graphs(text)? {
        for r in verify_all(&g, u64::from(seed)) {
            out.push_str(&format!("{r}\n"));
        }
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn compute(text: &str, kind: &str, writhe: Option<i32>) -> Result<String, JsError> {
    compute_text(text, kind, writhe).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn transform(text: &str, op: &str, q: u32) -> Result<String, JsError> {
    transform_text(text, op, q).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(text: &str, seed: u32) -> Result<String, JsError> {
    verify_text(text, seed).map_err(|e| JsError::new(&e))
}
