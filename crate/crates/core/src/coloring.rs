//! Acyclic and star colorings: verification, exact search, greedy heuristic.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::limits::Limits;

pub fn is_proper(graph: &Graph, coloring: &VertexColoring) -> bool {
    coloring.len() == graph.n()
        && graph
            .edges()
            .iter()
            .all(|&(u, v)| coloring.color(u) != coloring.color(v))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    fn reset(&mut self, x: usize) {
        self.parent[x] = x;
    }
}

/// Proper, and every two color classes induce a forest.
pub fn verify_acyclic(graph: &Graph, coloring: &VertexColoring) -> bool {
    if !is_proper(graph, coloring) {
        return false;
    }
    let mut by_pair: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for &(u, v) in graph.edges() {
        let (a, b) = (coloring.color(u), coloring.color(v));
        by_pair.entry((a.min(b), a.max(b))).or_default().push((u, v));
    }
    let mut uf = UnionFind::new(graph.n());
    for edges in by_pair.values() {
        let acyclic = edges.iter().all(|&(u, v)| uf.union(u, v));
        for &(u, v) in edges {
            uf.reset(u);
            uf.reset(v);
        }
        if !acyclic {
            return false;
        }
    }
    true
}

/// Proper, and no path on four vertices uses only two colors.
///
/// Enumerates every 4-vertex path `a - b - c - d` by its middle edge.
pub fn verify_star(graph: &Graph, coloring: &VertexColoring) -> bool {
    if !is_proper(graph, coloring) {
        return false;
    }
    let col = coloring.colors();
    for &(x, y) in graph.edges() {
        for (b, c) in [(x, y), (y, x)] {
            for &a in graph.neighbors(b) {
                if a == c || col[a] != col[c] {
                    continue;
                }
                for &d in graph.neighbors(c) {
                    if d != b && d != a && col[d] == col[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Second characterization of star colorings: proper, and within every
/// two-colored induced subgraph each component has at most one vertex of
/// degree above one.
pub fn verify_star_by_components(graph: &Graph, coloring: &VertexColoring) -> bool {
    if !is_proper(graph, coloring) {
        return false;
    }
    let mut by_pair: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for &(u, v) in graph.edges() {
        let (a, b) = (coloring.color(u), coloring.color(v));
        by_pair.entry((a.min(b), a.max(b))).or_default().push((u, v));
    }
    for edges in by_pair.values() {
        let mut degree: HashMap<usize, usize> = HashMap::new();
        let mut uf = UnionFind::new(graph.n());
        for &(u, v) in edges {
            *degree.entry(u).or_default() += 1;
            *degree.entry(v).or_default() += 1;
            uf.union(u, v);
        }
        let mut hubs: HashMap<usize, usize> = HashMap::new();
        for (&v, &deg) in &degree {
            if deg > 1 {
                let count = hubs.entry(uf.find(v)).or_default();
                *count += 1;
                if *count > 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// With `col[v]` just set (0 = uncolored), is there a two-colored 4-vertex
/// path through `v` among colored vertices? Assumes the coloring is proper.
fn p4_through(graph: &Graph, col: &[usize], v: usize) -> bool {
    let cv = col[v];
    // v at an end: v - a - b - c with col[b] = col[v], col[c] = col[a]
    for &a in graph.neighbors(v) {
        if col[a] == 0 {
            continue;
        }
        for &b in graph.neighbors(a) {
            if b == v || col[b] != cv {
                continue;
            }
            for &c in graph.neighbors(b) {
                if c != a && c != v && col[c] == col[a] {
                    return true;
                }
            }
        }
    }
    // v inside: a - v - b - c with col[a] = col[b], col[c] = col[v]
    for &b in graph.neighbors(v) {
        if col[b] == 0 {
            continue;
        }
        for &c in graph.neighbors(b) {
            if c == v || col[c] != cv {
                continue;
            }
            for &a in graph.neighbors(v) {
                if a != b && a != c && col[a] == col[b] {
                    return true;
                }
            }
        }
    }
    false
}

/// With `col[v]` just set, does `v` close a two-colored cycle among colored
/// vertices? Assumes the coloring is proper.
fn closes_bicolored_cycle(graph: &Graph, col: &[usize], v: usize) -> bool {
    let cv = col[v];
    let mut by_color: HashMap<usize, Vec<usize>> = HashMap::new();
    for &w in graph.neighbors(v) {
        if col[w] != 0 {
            by_color.entry(col[w]).or_default().push(w);
        }
    }
    for (&other, starts) in &by_color {
        if starts.len() < 2 {
            continue;
        }
        // flood the {cv, other} subgraph without passing through v
        let mut seen = vec![false; graph.n()];
        seen[v] = true;
        for &s in starts {
            if seen[s] {
                return true;
            }
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in graph.neighbors(x) {
                    if !seen[y] && (col[y] == cv || col[y] == other) {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }
    false
}

/// Visit order for backtracking: each next vertex has the most already
/// ordered neighbours (ties: higher degree, then lower id).
fn search_order(graph: &Graph) -> Vec<usize> {
    let n = graph.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (weight[a], graph.degree(a))
                    .cmp(&(weight[b], graph.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("some vertex left");
        placed[v] = true;
        order.push(v);
        for &w in graph.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

fn backtrack<F>(graph: &Graph, c_max: usize, violates: F) -> Option<VertexColoring>
where
    F: Fn(&Graph, &[usize], usize) -> bool,
{
    fn go<F>(
        graph: &Graph,
        order: &[usize],
        depth: usize,
        used: usize,
        c_max: usize,
        col: &mut Vec<usize>,
        violates: &F,
    ) -> bool
    where
        F: Fn(&Graph, &[usize], usize) -> bool,
    {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        // new colors are interchangeable, so only try the first unused one
        for c in 1..=c_max.min(used + 1) {
            if graph.neighbors(v).iter().any(|&w| col[w] == c) {
                continue;
            }
            col[v] = c;
            if !violates(graph, col, v)
                && go(graph, order, depth + 1, used.max(c), c_max, col, violates)
            {
                return true;
            }
            col[v] = 0;
        }
        false
    }

    if c_max == 0 {
        return None;
    }
    let order = search_order(graph);
    let mut col = vec![0; graph.n()];
    if go(graph, &order, 0, 0, c_max, &mut col, &violates) {
        Some(VertexColoring::from_colors(col).expect("colors are in range"))
    } else {
        None
    }
}

fn coloring_guard(graph: &Graph, limits: &Limits) -> Result<()> {
    if graph.n() > limits.coloring_vertices {
        return Err(Error::GuardExceeded {
            what: "exact coloring vertex count",
            limit: limits.coloring_vertices as u128,
            actual: graph.n() as u128,
        });
    }
    Ok(())
}

/// A star coloring with at most `c_max` colors, or `None` if there is none.
pub fn exact_star_coloring(graph: &Graph, c_max: usize) -> Result<Option<VertexColoring>> {
    exact_star_coloring_with(graph, c_max, &Limits::default())
}

pub fn exact_star_coloring_with(
    graph: &Graph,
    c_max: usize,
    limits: &Limits,
) -> Result<Option<VertexColoring>> {
    coloring_guard(graph, limits)?;
    Ok(backtrack(graph, c_max, p4_through))
}

/// An acyclic coloring with at most `c_max` colors, or `None` if there is none.
pub fn exact_acyclic_coloring(graph: &Graph, c_max: usize) -> Result<Option<VertexColoring>> {
    exact_acyclic_coloring_with(graph, c_max, &Limits::default())
}

pub fn exact_acyclic_coloring_with(
    graph: &Graph,
    c_max: usize,
    limits: &Limits,
) -> Result<Option<VertexColoring>> {
    coloring_guard(graph, limits)?;
    Ok(backtrack(graph, c_max, closes_bicolored_cycle))
}

/// Greedy star coloring. Vertices are taken by descending degree, with ties
/// broken by a seeded shuffle; each gets the smallest color that keeps the
/// partial coloring proper and free of two-colored 4-vertex paths.
pub fn greedy_star_coloring(graph: &Graph, seed: u64) -> VertexColoring {
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
    let mut col = vec![0; graph.n()];
    for v in order {
        let mut c = 1;
        loop {
            if !graph.neighbors(v).iter().any(|&w| col[w] == c) {
                col[v] = c;
                if !p4_through(graph, &col, v) {
                    break;
                }
                col[v] = 0;
            }
            c += 1;
        }
    }
    VertexColoring::from_colors(col).expect("colors are in range")
}
