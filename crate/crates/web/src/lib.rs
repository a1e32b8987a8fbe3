//! Browser bindings for the demo page. Every export returns a JSON string.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use ectarget_core::bounds::universal_lower_bound;
use ectarget_core::coloring::greedy_star_coloring;
use ectarget_core::density::{densest_subgraph, min_orientation};
use ectarget_core::generate::{random_edge_coloring, random_planar_drawing};
use ectarget_core::out_coloring::{build_out_coloring, verify_out_coloring};
use ectarget_core::universal::{
    build_homomorphism, target_size_bound, target_vertex_count, verify_homomorphism, UniversalTarget,
};
use rand_chacha::rand_core::SeedableRng;

fn error(message: impl ToString) -> Value {
    json!({ "error": message.to_string() })
}

/// Random planar graph and coloring pushed through the whole pipeline.
pub fn pipeline(n: usize, k: u32, seed: u32) -> Value {
    let n = n.clamp(3, 60);
    let k = k.clamp(2, 6);
    let drawing = random_planar_drawing(n, seed as u64);
    let g = &drawing.graph;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed as u64);
    let colored = random_edge_coloring(g, k, &mut rng);
    let (d, oriented) = min_orientation(g);
    let star = greedy_star_coloring(g, seed as u64);
    let cert = match build_out_coloring(&oriented, &star) {
        Ok(c) => c,
        Err(e) => return error(e),
    };
    let target = match UniversalTarget::build(cert.coloring.palette(), d, k) {
        Ok(t) => t,
        Err(e) => return error(e),
    };
    let hom = match build_homomorphism(&colored, &oriented, &cert.coloring, &target) {
        Ok(h) => h,
        Err(e) => return error(e),
    };
    let verified = verify_out_coloring(&oriented, &cert.coloring) && verify_homomorphism(&colored, &target, &hom);
    json!({
        "n": n,
        "k": k,
        "positions": drawing.positions,
        "edges": g.edges(),
        "edge_colors": colored.colors(),
        "arcs": oriented.arcs().map(|(t, h)| [t, h]).collect::<Vec<_>>(),
        "in_degree": d,
        "star": star.colors(),
        "star_palette": star.palette(),
        "out": cert.coloring.colors(),
        "out_palette": cert.coloring.palette(),
        "out_budget": cert.budget.to_string(),
        "target": target.header(),
        "target_vertices": target.len().to_string(),
        "images": hom.map.iter().map(|&id| target.tuple(id)).collect::<Vec<_>>(),
        "verified": verified,
    })
}

/// Exact target size next to the coarse bound.
pub fn target_size_report(q: usize, d: usize, k: u32) -> Value {
    if !(1..=64).contains(&q) || !(2..=64).contains(&k) {
        return error("need 1 <= q <= 64 and 2 <= k <= 64");
    }
    let d = d.min(q);
    json!({
        "q": q,
        "d": d,
        "k": k,
        "vertices": target_vertex_count(q, d, k).to_string(),
        "bound": target_size_bound(q, d, k).to_string(),
    })
}

/// Densest subgraph of a random planar graph, plus the matching lower bound.
pub fn density_report(n: usize, k: u32, seed: u32) -> Value {
    let n = n.clamp(3, 60);
    let drawing = random_planar_drawing(n, seed as u64);
    // drop a seeded share of edges so the density varies
    let edges: Vec<(usize, usize)> = drawing
        .graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !(i.wrapping_mul(2654435761) ^ seed as usize).is_multiple_of(3))
        .map(|(_, &e)| e)
        .collect();
    let g = match ectarget_core::Graph::new(n, edges) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let density = densest_subgraph(&g);
    let lower = universal_lower_bound(&g, k.max(2) as u64);
    json!({
        "n": n,
        "positions": drawing.positions,
        "edges": g.edges(),
        "density": density.value.to_string(),
        "witness": density.witness,
        "lower_bound_exponent": lower.exponent.to_string(),
        "lower_bound": lower.approx,
    })
}

#[wasm_bindgen]
pub fn pipeline_demo(n: usize, k: u32, seed: u32) -> String {
    pipeline(n, k, seed).to_string()
}

#[wasm_bindgen]
pub fn target_size(q: usize, d: usize, k: u32) -> String {
    target_size_report(q, d, k).to_string()
}

#[wasm_bindgen]
pub fn density_demo(n: usize, k: u32, seed: u32) -> String {
    density_report(n, k, seed).to_string()
}
