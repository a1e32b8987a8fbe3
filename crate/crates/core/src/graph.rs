//! Core graph types.
//!
//! Vertices are dense ids `0..n`. Edges are stored once, as `(u, v)` with
//! `u < v`, sorted lexicographically; an edge's position in that list is its
//! edge id, and every per-edge table in the crate (colors, directions) is
//! indexed by it.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Loop(a));
            }
            for id in [a, b] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            list.push(e);
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order; the index is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Subgraph induced by `subset`, re-indexed by ascending original id.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<InducedSubgraph> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut original: Vec<usize> = subset.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in original.iter().enumerate() {
            if old >= self.n {
                return Err(Error::VertexOutOfRange { id: old, n: self.n });
            }
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let graph = Graph::new(original.len(), edges)?;
        Ok(InducedSubgraph { graph, original })
    }

    /// Number of edges with both endpoints in `subset` (`subset` as a
    /// membership mask).
    pub fn edges_within(&self, mask: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| mask[u] && mask[v])
            .count()
    }
}

/// An induced subgraph plus the map from its ids back to the parent's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// A simple graph with every edge labelled by a color in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    graph: Graph,
    k: u32,
    colors: Vec<u32>,
}

impl EdgeColoredGraph {
    /// `colors[e]` is the color of edge id `e` of `graph`.
    pub fn new(graph: Graph, k: u32, colors: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidPalette(k));
        }
        if colors.len() != graph.m() {
            return Err(Error::EdgeCountMismatch {
                declared: graph.m(),
                found: colors.len(),
            });
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color, k });
        }
        Ok(EdgeColoredGraph { graph, k, colors })
    }

    /// Builds from `(u, v, color)` triples in any order.
    pub fn from_triples<I>(n: usize, k: u32, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let triples: Vec<_> = triples.into_iter().collect();
        let graph = Graph::new(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
        let mut colors = vec![0; graph.m()];
        for &(u, v, c) in &triples {
            if c == 0 || c > k {
                return Err(Error::ColorOutOfRange { color: c, k });
            }
            let e = graph.edge_id(u, v).expect("edge was just inserted");
            colors[e] = c;
        }
        EdgeColoredGraph::new(graph, k, colors)
    }

    /// Every edge gets `color`.
    pub fn monochromatic(graph: Graph, k: u32, color: u32) -> Result<Self> {
        let colors = vec![color; graph.m()];
        EdgeColoredGraph::new(graph, k, colors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn edge_color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn color(&self, u: usize, v: usize) -> Option<u32> {
        self.graph.edge_id(u, v).map(|e| self.colors[e])
    }

    pub fn into_parts(self) -> (Graph, u32, Vec<u32>) {
        (self.graph, self.k, self.colors)
    }
}

/// A graph together with a direction for each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    graph: Graph,
    heads: Vec<usize>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

impl OrientedGraph {
    /// `heads[e]` must be one of the endpoints of edge `e`.
    pub fn from_heads(graph: Graph, heads: Vec<usize>) -> Result<Self> {
        if heads.len() != graph.m() {
            return Err(Error::OrientationMismatch);
        }
        let mut parents = vec![Vec::new(); graph.n()];
        let mut children = vec![Vec::new(); graph.n()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let head = heads[e];
            let tail = if head == v {
                u
            } else if head == u {
                v
            } else {
                return Err(Error::OrientationMismatch);
            };
            parents[head].push(tail);
            children[tail].push(head);
        }
        for list in parents.iter_mut().chain(children.iter_mut()) {
            list.sort_unstable();
        }
        Ok(OrientedGraph {
            graph,
            heads,
            parents,
            children,
        })
    }

    /// Builds from `(tail, head)` arcs, one per edge of `graph`.
    pub fn from_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != graph.m() {
            return Err(Error::OrientationMismatch);
        }
        let mut heads = vec![usize::MAX; graph.m()];
        for &(tail, head) in arcs {
            let e = graph
                .edge_id(tail, head)
                .filter(|_| tail < graph.n() && head < graph.n() && tail != head)
                .ok_or(Error::OrientationMismatch)?;
            if heads[e] != usize::MAX {
                return Err(Error::OrientationMismatch);
            }
            heads[e] = head;
        }
        OrientedGraph::from_heads(graph, heads)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        let (u, v) = self.graph.edges()[e];
        if self.heads[e] == v {
            u
        } else {
            v
        }
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    /// `(tail, head)` for every edge, in edge-id order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.m()).map(move |e| (self.tail(e), self.head(e)))
    }

    /// Tails of the arcs entering `v`, ascending.
    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.parents[v].len()
    }

    pub fn max_in_degree(&self) -> usize {
        self.parents.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Same graph with every arc reversed.
    pub fn transpose(&self) -> OrientedGraph {
        let heads = (0..self.graph.m()).map(|e| self.tail(e)).collect();
        OrientedGraph::from_heads(self.graph.clone(), heads).expect("tails are endpoints")
    }
}

/// Vertex coloring with colors in `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    palette: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(palette: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|&(_, &c)| c == 0 || c > palette)
        {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c} outside 1..={palette}"
            )));
        }
        Ok(VertexColoring { palette, colors })
    }

    /// Palette is the largest color used (at least 1).
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let palette = colors.iter().copied().max().unwrap_or(1).max(1);
        VertexColoring::new(palette, colors)
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub(crate) fn check_covers(&self, graph: &Graph) -> Result<()> {
        if self.colors.len() != graph.n() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} entries but the graph has {} vertices",
                self.colors.len(),
                graph.n()
            )));
        }
        Ok(())
    }
}

/// A vertex map from a source graph into a target; `map[u]` is the image of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>) -> Self {
        Homomorphism { map }
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::Loop(0))));
        assert!(matches!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        ));
        assert!(matches!(Graph::edgeless(0), Err(Error::EmptyGraph)));
    }

    #[test]
    fn induced_clique_restriction() {
        let sub = k4().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph.n(), 3);
        assert_eq!(sub.graph.m(), 3);
        assert_eq!(sub.original, vec![0, 1, 2]);
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = k4();
        let sub = g.induced_subgraph(&[3, 2, 1, 0]).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.original, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_nonadjacent_pair() {
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let sub = p.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.m(), 0);
        assert_eq!(sub.original, vec![0, 2]);
    }

    #[test]
    fn induced_errors() {
        let g = k4();
        assert!(matches!(g.induced_subgraph(&[]), Err(Error::EmptySubset)));
        assert!(matches!(
            g.induced_subgraph(&[0, 7]),
            Err(Error::VertexOutOfRange { id: 7, .. })
        ));
    }

    #[test]
    fn orientation_bookkeeping() {
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let o = OrientedGraph::from_arcs(p, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(o.parents(2), &[1]);
        assert_eq!(o.children(0), &[1]);
        assert_eq!(o.max_in_degree(), 1);
        let t = o.transpose();
        assert_eq!(t.parents(0), &[1]);
        assert_eq!(t.parents(1), &[2]);
    }

    #[test]
    fn orientation_rejects_non_edges() {
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(OrientedGraph::from_arcs(p.clone(), &[(0, 2), (1, 2)]).is_err());
        assert!(OrientedGraph::from_arcs(p.clone(), &[(0, 1), (1, 0)]).is_err());
        assert!(OrientedGraph::from_heads(p, vec![2, 2]).is_err());
    }

    #[test]
    fn coloring_range_checked() {
        assert!(VertexColoring::new(2, vec![1, 2, 3]).is_err());
        assert!(VertexColoring::new(2, vec![0, 1]).is_err());
        let c = VertexColoring::from_colors(vec![1, 3, 1]).unwrap();
        assert_eq!(c.palette(), 3);
        assert_eq!(c.distinct_colors(), 2);
    }

    #[test]
    fn colored_from_triples() {
        let g = EdgeColoredGraph::from_triples(3, 2, [(2, 1, 2), (0, 1, 1)]).unwrap();
        assert_eq!(g.color(1, 2), Some(2));
        assert_eq!(g.color(0, 1), Some(1));
        assert_eq!(g.color(0, 2), None);
        assert!(EdgeColoredGraph::from_triples(2, 2, [(0, 1, 3)]).is_err());
    }
}
