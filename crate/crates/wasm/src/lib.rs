//! Browser bindings for the interactive demo page.
//!
//! Three operations, all JSON-in/JSON-out strings so the page needs no glue
//! beyond `JSON.parse`:
//!
//! * [`analyze_family`]: build a named family and return the full picture
//!   (per-edge curvature, connectivity witnesses, regularity parameters),
//! * [`verify_family`]: run every theorem check and return the reports,
//! * [`kappa_profile`]: sample `p ↦ κ_p(x, y)` for one vertex pair, showing
//!   the piecewise-linear structure behind the curvature limit.

use num_traits::ToPrimitive;
use serde_json::json;
use wasm_bindgen::prelude::*;

use curvcon::families::{amply_regular_params, generate_named, NamedGraph};
use curvcon::io::{emit_report, ReportFormat};
use curvcon::rational::{rat, ratio, Rational};
use curvcon::report::CheckId;
use curvcon::theorems::run_suite;
use curvcon::{
    curvature_at_scale, edge_connectivity, kappa_p, lly_curvature, vertex_connectivity, Separator,
};

fn build(family: &str, params: &str, seed: u64) -> Result<NamedGraph, String> {
    let params: Vec<&str> = params.split_whitespace().collect();
    generate_named(family, &params, seed).map_err(|e| e.to_string())
}

fn rational_json(value: &Rational) -> serde_json::Value {
    json!({
        "num": value.numer().to_string(),
        "den": value.denom().to_string(),
        "text": value.to_string(),
        "value": value.to_f64(),
    })
}

/// Builds a family and returns everything the page renders: edges with exact
/// curvature, connectivity witnesses, degrees, and regularity parameters.
#[wasm_bindgen]
pub fn analyze_family(family: &str, params: &str, seed: u64) -> Result<String, String> {
    let named = build(family, params, seed)?;
    let g = &named.graph;

    let curvatures: Vec<serde_json::Value> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let kappa = lly_curvature(g, u, v)
                .map_err(|e| e.to_string())?
                .value;
            Ok(json!({ "u": u, "v": v, "kappa": rational_json(&kappa) }))
        })
        .collect::<Result<_, String>>()?;

    let vertex_witness = vertex_connectivity(g);
    let Separator::Vertices(separator) = &vertex_witness.separator else {
        unreachable!()
    };
    let edge_witness = edge_connectivity(g);
    let Separator::Edges(cut) = &edge_witness.separator else {
        unreachable!()
    };

    let amply = if g.is_connected() {
        amply_regular_params(g)
            .ok()
            .flatten()
            .map(|p| json!({ "degree": p.degree, "alpha": p.alpha, "beta": p.beta }))
    } else {
        None
    };

    let bundle = json!({
        "name": named.name,
        "n": g.n(),
        "edges": g.edges(),
        "degrees": (0..g.n()).map(|v| g.degree(v)).collect::<Vec<_>>(),
        "min_degree": g.min_degree(),
        "diameter": g.diameter(),
        "curvatures": curvatures,
        "kappa_graph": curvature_at_scale(g, 1).map(|k| rational_json(&k)),
        "kappa_scale_2": curvature_at_scale(g, 2).map(|k| rational_json(&k)),
        "vertex_connectivity": { "value": vertex_witness.value, "separator": separator },
        "edge_connectivity": { "value": edge_witness.value, "cut": cut },
        "amply_regular": amply,
        "marked": named.marked.map(|(x, y)| vec![x, y]),
    });
    Ok(bundle.to_string())
}

/// Runs the full per-graph check suite (plus the marked-edge check when the
/// family carries one) and returns the reports as JSON.
#[wasm_bindgen]
pub fn verify_family(family: &str, params: &str, seed: u64) -> Result<String, String> {
    let named = build(family, params, seed)?;
    let mut checks = CheckId::per_graph().to_vec();
    if named.marked.is_some() {
        checks.push(CheckId::Thm1_6);
    }
    let reports = run_suite(&[(named.name, named.graph)], &checks);
    Ok(emit_report(&reports, ReportFormat::Json))
}

/// Samples `κ_p(x, y)` and `κ_p / (1 - p)` on a grid of exact probabilities,
/// together with the limit value. The quotient is constant on the final
/// linear piece, which is exactly what the limit evaluates.
#[wasm_bindgen]
pub fn kappa_profile(
    family: &str,
    params: &str,
    seed: u64,
    x: usize,
    y: usize,
) -> Result<String, String> {
    let named = build(family, params, seed)?;
    let g = &named.graph;
    if x >= g.n() || y >= g.n() {
        return Err("vertex out of range".to_string());
    }
    let limit = lly_curvature(g, x, y)
        .map_err(|e| e.to_string())?
        .value;

    let mut points = Vec::new();
    for i in 0..=24i64 {
        let p = ratio(i, 24);
        let kappa = kappa_p(g, x, y, &p).map_err(|e| e.to_string())?;
        let quotient = if i == 24 {
            limit.clone()
        } else {
            &kappa / (rat(1) - &p)
        };
        points.push(json!({
            "p": p.to_f64(),
            "p_text": p.to_string(),
            "kappa": rational_json(&kappa),
            "quotient": rational_json(&quotient),
        }));
    }
    Ok(json!({
        "pair": [x, y],
        "distance": g.distance(x, y),
        "kappa_lly": rational_json(&limit),
        "points": points,
    })
    .to_string())
}
