//! Browser bindings. Each export takes plain numbers or DIMACS text and
//! returns a JSON string; the page in `www/` draws the result.
//!
//! The `*_json` functions hold the logic and run natively too.

use chibound::graph::{parse_dimacs, random_graph, random_regular};
use chibound::pipeline::{bound_chi, PipelineConfig};
use chibound::sparse::{naive_color_trial, SparseConfig};
use chibound::transversal::{extend_to_maximal, hitting_stable_set, HittingOutcome};
use chibound::Graph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will generate; drawing gets unreadable past this.
pub const MAX_VERTICES: usize = 120;

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

fn check_size(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_VERTICES {
        return Err(format!("n must be in 1..={MAX_VERTICES}"));
    }
    Ok(())
}

/// Colors `G(n, p)` with the pipeline. Vertex ids in the output are 0-based
/// indices into `edges`.
pub fn color_gnp_json(n: usize, p: f64, seed: u64) -> Result<String, String> {
    check_size(n)?;
    let g = random_graph(n, p, seed).map_err(|e| e.to_string())?;
    let cfg = PipelineConfig {
        seed,
        ..PipelineConfig::default()
    };
    let report = bound_chi(&g, &cfg).map_err(|e| e.to_string())?;
    let colors: Vec<Option<u32>> = (0..n).map(|v| report.coloring.get(v)).collect();
    let report: Value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "edges": edges(&g),
        "colors": colors,
        "report": report,
    })
    .to_string())
}

/// One run of the naive procedure on a random `d`-regular graph with palette
/// `C = max(1, ⌊d/2⌋)`.
pub fn naive_trial_json(n: usize, d: usize, seed: u64, trial: u64) -> Result<String, String> {
    check_size(n)?;
    let g = random_regular(n, d, seed).map_err(|e| e.to_string())?;
    let mut cfg = SparseConfig::for_degree(d, 0, seed);
    cfg.c = cfg.c.max(1);
    let rec = naive_color_trial(&g, &cfg, trial).map_err(|e| e.to_string())?;
    let kept = rec.retained.iter().filter(|c| c.is_some()).count();
    Ok(json!({
        "n": n,
        "edges": edges(&g),
        "palette": cfg.c,
        "assignment": rec.assignment,
        "colors": rec.retained,
        "retained": kept,
        "at": rec.at,
        "del": rec.del,
        "x": rec.x,
        "x_prime": rec.x_prime,
    })
    .to_string())
}

/// The stable set meeting every maximum clique, for a DIMACS graph.
pub fn hitting_set_json(dimacs: &str) -> Result<String, String> {
    let g = parse_dimacs(dimacs).map_err(|e| e.to_string())?;
    check_size(g.n())?;
    let base = json!({"n": g.n(), "edges": edges(&g)});
    let mut out = match hitting_stable_set(&g).map_err(|e| e.to_string())? {
        HittingOutcome::Inapplicable { omega, delta } => json!({
            "status": "inapplicable",
            "omega": omega,
            "delta": delta,
            "set": [],
            "maximal": [],
        }),
        HittingOutcome::Found(h) => {
            let maximal = extend_to_maximal(&g, &h.set).map_err(|e| e.to_string())?;
            json!({
                "status": "found",
                "omega": h.omega,
                "delta": h.delta,
                "maximum_cliques": h.maximum_cliques,
                "set": h.set,
                "maximal": maximal,
            })
        }
    };
    out["n"] = base["n"].clone();
    out["edges"] = base["edges"].clone();
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn color_gnp(n: usize, p: f64, seed: u32) -> Result<String, JsError> {
    color_gnp_json(n, p, seed as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn naive_trial(n: usize, d: usize, seed: u32, trial: u32) -> Result<String, JsError> {
    naive_trial_json(n, d, seed as u64, trial as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hitting_set(dimacs: &str) -> Result<String, JsError> {
    hitting_set_json(dimacs).map_err(|e| JsError::new(&e))
}
