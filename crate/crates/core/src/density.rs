//! Maximum subgraph density and bounded in-degree orientations.
//!
//! Both problems reduce to the same bipartite flow network: a node per edge
//! fed by the source, joined to the nodes of its two endpoints, which drain
//! into the sink. With sink capacity `d` per vertex the flow saturates every
//! edge exactly when a `d`-orientation exists, and each unit of flow picks the
//! head of its edge. With fractional sink capacity `t/G` (scaled to integers)
//! the flow falls short exactly when some subgraph has density above `t/G`,
//! and the source side of the minimum cut is such a subgraph.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_rational::Ratio;
use num_traits::Zero;

use crate::coloring::verify_acyclic;
use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::graph::{Graph, OrientedGraph, VertexColoring};

/// Maximum of `|E(H)| / |V(H)|` over nonempty subgraphs `H`, with a vertex
/// set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    pub value: Ratio<u64>,
    pub witness: Vec<usize>,
}

impl Density {
    /// Smallest integer `d` with `value <= d`.
    pub fn ceil(&self) -> u64 {
        self.value.ceil().to_integer()
    }
}

/// Outcome of asking for a `d`-orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    Feasible(OrientedGraph),
    /// A vertex set whose induced subgraph has more than `d * |witness|` edges.
    Infeasible { witness: Vec<usize>, edges: usize },
}

impl Orientation {
    pub fn feasible(self) -> Option<OrientedGraph> {
        match self {
            Orientation::Feasible(o) => Some(o),
            Orientation::Infeasible { .. } => None,
        }
    }
}

struct EdgeVertexNetwork {
    net: FlowNetwork,
    source: usize,
    sink: usize,
    endpoint_arcs: Vec<[crate::flow::ArcId; 2]>,
}

/// source -> edge (cap `edge_cap`), edge -> endpoints (uncapped),
/// vertex -> sink (cap `vertex_cap`).
fn edge_vertex_network(graph: &Graph, edge_cap: i64, vertex_cap: i64) -> EdgeVertexNetwork {
    let m = graph.m();
    let n = graph.n();
    let source = 0;
    let sink = m + n + 1;
    let vertex_node = |v: usize| m + 1 + v;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut endpoint_arcs = Vec::with_capacity(m);
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        net.add_arc(source, e + 1, edge_cap);
        let a = net.add_arc(e + 1, vertex_node(u), INF);
        let b = net.add_arc(e + 1, vertex_node(v), INF);
        endpoint_arcs.push([a, b]);
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, vertex_cap);
    }
    EdgeVertexNetwork {
        net,
        source,
        sink,
        endpoint_arcs,
    }
}

fn cut_vertices(graph: &Graph, network: &EdgeVertexNetwork) -> Vec<usize> {
    let side = network.net.source_side(network.source);
    let base = graph.m() + 1;
    (0..graph.n()).filter(|&v| side[base + v]).collect()
}

/// Some vertex set of density strictly above `num / den`, if one exists.
fn denser_than(graph: &Graph, num: i64, den: i64) -> Option<Vec<usize>> {
    let mut network = edge_vertex_network(graph, den, num);
    let flow = network.net.max_flow(network.source, network.sink);
    if flow >= den * graph.m() as i64 {
        return None;
    }
    Some(cut_vertices(graph, &network))
}

fn density_of(graph: &Graph, vertices: &[usize]) -> Ratio<u64> {
    let mut mask = vec![false; graph.n()];
    for &v in vertices {
        mask[v] = true;
    }
    Ratio::new(graph.edges_within(&mask) as u64, vertices.len() as u64)
}

/// Exact maximum subgraph density.
///
/// Binary search over thresholds `t / n^2`. Two distinct fractions with
/// denominators at most `n` are more than `1/n^2` apart, so once the bracket
/// `(lo/n^2, (lo+1)/n^2]` is reached the best witness seen is exactly the
/// optimum. Each witness found also lets the lower end jump past its own
/// density.
pub fn densest_subgraph(graph: &Graph) -> Density {
    let n = graph.n();
    if graph.m() == 0 {
        return Density {
            value: Ratio::zero(),
            witness: vec![0],
        };
    }
    let grid = (n * n) as i64;
    let to_grid_floor = |r: Ratio<u64>| -> i64 {
        // largest t with t / grid < r
        let scaled = r * Ratio::from_integer(grid as u64);
        scaled.ceil().to_integer() as i64 - 1
    };

    let mut best = {
        let all: Vec<usize> = (0..n).collect();
        let value = density_of(graph, &all);
        Density {
            value,
            witness: all,
        }
    };
    let mut lo = to_grid_floor(best.value);
    // density never exceeds (n - 1) / 2
    let mut hi = ((n - 1) as i64 * grid + 1) / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match denser_than(graph, mid, grid) {
            Some(witness) => {
                let value = density_of(graph, &witness);
                lo = mid.max(to_grid_floor(value));
                if value > best.value {
                    best = Density { value, witness };
                }
            }
            None => hi = mid,
        }
    }
    best
}

/// Orientation with every in-degree at most `d`, or a subgraph proving none
/// exists.
pub fn find_orientation(graph: &Graph, d: usize) -> Orientation {
    let cap = d.min(graph.m()) as i64;
    let mut network = edge_vertex_network(graph, 1, cap);
    let flow = network.net.max_flow(network.source, network.sink);
    if flow < graph.m() as i64 {
        let witness = cut_vertices(graph, &network);
        let mut mask = vec![false; graph.n()];
        for &v in &witness {
            mask[v] = true;
        }
        let edges = graph.edges_within(&mask);
        debug_assert!(edges > d * witness.len());
        return Orientation::Infeasible { witness, edges };
    }
    let heads = graph
        .edges()
        .iter()
        .zip(&network.endpoint_arcs)
        .map(|(&(u, v), &[to_u, _])| {
            if network.net.flow(to_u) > 0 {
                u
            } else {
                v
            }
        })
        .collect();
    Orientation::Feasible(OrientedGraph::from_heads(graph.clone(), heads).expect("heads are endpoints"))
}

/// Smallest feasible in-degree bound, `ceil(D(G))`, with an orientation
/// achieving it.
pub fn min_orientation(graph: &Graph) -> (usize, OrientedGraph) {
    let d = densest_subgraph(graph).ceil() as usize;
    let oriented = find_orientation(graph, d)
        .feasible()
        .expect("ceil of the density is always feasible");
    (d, oriented)
}

/// Orientation with in-degree at most `palette - 1`, built from an acyclic
/// coloring: each two-colored forest is rooted at its lowest vertex in every
/// tree and oriented away from the roots.
pub fn orientation_from_acyclic(graph: &Graph, coloring: &VertexColoring) -> Result<OrientedGraph> {
    coloring.check_covers(graph)?;
    if !verify_acyclic(graph, coloring) {
        return Err(Error::NotAcyclic);
    }
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let (a, b) = (coloring.color(u), coloring.color(v));
        by_pair.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut heads = vec![usize::MAX; graph.m()];
    for edges in by_pair.values() {
        let mut adj: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for &e in edges {
            let (u, v) = graph.edges()[e];
            adj.entry(u).or_default().push((v, e));
            adj.entry(v).or_default().push((u, e));
        }
        let mut roots: Vec<usize> = adj.keys().copied().collect();
        roots.sort_unstable();
        let mut visited = HashSet::new();
        for root in roots {
            if !visited.insert(root) {
                continue;
            }
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let mut nbrs = adj[&x].clone();
                nbrs.sort_unstable();
                for (y, e) in nbrs {
                    if visited.insert(y) {
                        heads[e] = y;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    debug_assert!(heads.iter().all(|&h| h != usize::MAX));
    OrientedGraph::from_heads(graph.clone(), heads)
}
