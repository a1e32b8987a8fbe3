//! Graph families and random instances used by tests, the CLI and the demo.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{EdgeColoredGraph, Graph};

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `rows x cols` grid; vertex `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges)
}

/// `K_t` with every edge subdivided once. The first `t` ids are the branch
/// vertices.
pub fn subdivided_complete(t: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = t;
    for u in 0..t {
        for v in u + 1..t {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// A maximal planar graph with a straight-line drawing.
#[derive(Clone, Debug)]
pub struct PlanarDrawing {
    pub graph: Graph,
    pub positions: Vec<(f64, f64)>,
}

/// Random stacked triangulation: start from a triangle and repeatedly put a
/// new vertex inside a uniformly chosen face, joined to its three corners.
/// Positions are random interior points of the face, so the drawing stays
/// planar. Fewer than three vertices give a path.
pub fn random_planar_drawing(n: usize, seed: u64) -> PlanarDrawing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corners = [(0.5, 0.02), (0.02, 0.98), (0.98, 0.98)];
    let mut positions: Vec<(f64, f64)> = corners.iter().copied().take(n).collect();
    if n < 3 {
        return PlanarDrawing {
            graph: path(n.max(1)).expect("n >= 1"),
            positions: if n == 0 { vec![corners[0]] } else { positions },
        };
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0usize, 1, 2]];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        let (mut wa, mut wb, mut wc): (f64, f64, f64) = (
            rng.gen_range(0.2..1.0),
            rng.gen_range(0.2..1.0),
            rng.gen_range(0.2..1.0),
        );
        let total = wa + wb + wc;
        wa /= total;
        wb /= total;
        wc /= total;
        let (pa, pb, pc) = (positions[a], positions[b], positions[c]);
        positions.push((
            wa * pa.0 + wb * pb.0 + wc * pc.0,
            wa * pa.1 + wb * pb.1 + wc * pc.1,
        ));
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    PlanarDrawing {
        graph: Graph::new(n, edges).expect("stacked triangulation is simple"),
        positions,
    }
}

pub fn random_planar(n: usize, seed: u64) -> Graph {
    random_planar_drawing(n, seed).graph
}

/// Uniform random `k`-edge-coloring of `graph`.
pub fn random_edge_coloring<R: Rng>(graph: &Graph, k: u32, rng: &mut R) -> EdgeColoredGraph {
    let colors = (0..graph.m()).map(|_| rng.gen_range(1..=k)).collect();
    EdgeColoredGraph::new(graph.clone(), k, colors).expect("colors drawn from 1..=k")
}

/// The `index`-th `k`-edge-coloring of `graph` in lexicographic order, edge 0
/// most significant.
pub fn nth_edge_coloring(graph: &Graph, k: u32, mut index: u128) -> EdgeColoredGraph {
    let m = graph.m();
    let mut colors = vec![1; m];
    for slot in colors.iter_mut().rev() {
        *slot = (index % k as u128) as u32 + 1;
        index /= k as u128;
    }
    EdgeColoredGraph::new(graph.clone(), k, colors).expect("colors drawn from 1..=k")
}
