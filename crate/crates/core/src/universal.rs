//! Universal targets for `k`-edge-colored graphs.
//!
//! [`UniversalTarget`] is the complete graph on tuples `(i, x_1, ..., x_q)`
//! with `i` in `1..=q`, each `x_j` in `1..=k`, and at most `d` coordinates
//! different from `k`. The edge between `(i, x..)` and `(j, y..)` has color
//! `min(y_i, x_j)`. Any graph with a `d`-orientation that has an out-coloring
//! `f` with `q` colors maps into it: a vertex goes to `(f(u), x..)`, where
//! `x_i` is the color of the edge to the parent of `u` colored `i` (or `k`
//! when there is none).
//!
//! The brute-force side (homomorphism search, universality checking, the
//! smallest-target search) works on explicit targets and serves as the
//! oracle for the constructive side.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::generate::{complete, nth_edge_coloring};
use crate::graph::{EdgeColoredGraph, Graph, Homomorphism, OrientedGraph, VertexColoring};
use crate::limits::Limits;
use crate::out_coloring::verify_out_coloring;

/// Anything that answers "which color joins these two vertices".
pub trait ColoredTarget {
    fn vertex_count(&self) -> usize;
    fn color_between(&self, a: usize, b: usize) -> Option<u32>;
}

impl ColoredTarget for EdgeColoredGraph {
    fn vertex_count(&self) -> usize {
        self.graph().n()
    }

    fn color_between(&self, a: usize, b: usize) -> Option<u32> {
        self.color(a, b)
    }
}

/// Parameters from which a [`UniversalTarget`] is rebuilt bit-exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetHeader {
    pub q: usize,
    pub d: usize,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalTarget {
    q: usize,
    d: usize,
    k: u32,
    len: usize,
    /// `completions[len][budget]`: number of `x`-suffixes of length `len`
    /// with at most `budget` entries different from `k`.
    completions: Vec<Vec<u128>>,
}

/// `q * sum_{j <= min(d, q)} C(q, j) (k - 1)^j`.
pub fn target_vertex_count(q: usize, d: usize, k: u32) -> BigUint {
    let d = d.min(q);
    let km1 = BigUint::from(k.saturating_sub(1));
    let sum: BigUint = (0..=d)
        .map(|j| binomial(q as u64, j as u64) * km1.pow(j as u32))
        .sum();
    BigUint::from(q) * sum
}

/// `q * C(q, d) * k^d`, the coarse size bound for the target.
pub fn target_size_bound(q: usize, d: usize, k: u32) -> BigUint {
    BigUint::from(q) * binomial(q as u64, d as u64) * BigUint::from(k).pow(d as u32)
}

impl UniversalTarget {
    /// Tuples are never stored: ids and tuples convert through the
    /// completion table, so only the id range has to fit in `usize`.
    /// `d` larger than `q` is capped at `q`.
    pub fn build(q: usize, d: usize, k: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::Precondition("q must be at least 1".into()));
        }
        if k < 2 {
            return Err(Error::InvalidPalette(k));
        }
        let d = d.min(q);
        let count = target_vertex_count(q, d, k);
        let len = match count.to_u64() {
            Some(c) if c <= usize::MAX as u64 => c as usize,
            _ => {
                return Err(Error::GuardExceeded {
                    what: "universal target vertex count",
                    limit: usize::MAX as u128,
                    actual: count.to_u128().unwrap_or(u128::MAX),
                })
            }
        };

        let mut completions = vec![vec![1u128; d + 1]; q + 1];
        for len in 1..=q {
            for budget in 0..=d {
                let keep = completions[len - 1][budget];
                let change = if budget > 0 {
                    (k as u128 - 1) * completions[len - 1][budget - 1]
                } else {
                    0
                };
                completions[len][budget] = keep + change;
            }
        }
        debug_assert_eq!(q as u128 * completions[q][d], len as u128);
        Ok(UniversalTarget {
            q,
            d,
            k,
            len,
            completions,
        })
    }

    pub fn from_header(header: TargetHeader) -> Result<Self> {
        UniversalTarget::build(header.q, header.d, header.k)
    }

    pub fn header(&self) -> TargetHeader {
        TargetHeader {
            q: self.q,
            d: self.d,
            k: self.k,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// In-degree bound, already capped at `q`.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `(i, x_1, ..., x_q)` of vertex `id`, the `id`-th tuple in
    /// lexicographic order.
    pub fn tuple(&self, id: usize) -> Vec<u32> {
        assert!(id < self.len, "vertex {id} out of range");
        let per_class = self.completions[self.q][self.d];
        let mut rest_id = id as u128 % per_class;
        let mut tuple = Vec::with_capacity(self.q + 1);
        tuple.push((id as u128 / per_class) as u32 + 1);
        let mut budget = self.d;
        for pos in 0..self.q {
            let rest = self.q - pos - 1;
            for value in 1..=self.k {
                let block = if value == self.k {
                    self.completions[rest][budget]
                } else if budget > 0 {
                    self.completions[rest][budget - 1]
                } else {
                    0
                };
                if rest_id < block {
                    tuple.push(value);
                    if value != self.k {
                        budget -= 1;
                    }
                    break;
                }
                rest_id -= block;
            }
        }
        tuple
    }

    /// Every tuple in id order.
    pub fn tuples(&self, limits: &Limits) -> Result<Vec<Vec<u32>>> {
        if self.len as u128 > limits.target_vertices {
            return Err(Error::GuardExceeded {
                what: "enumerated target vertex count",
                limit: limits.target_vertices,
                actual: self.len as u128,
            });
        }
        Ok((0..self.len).map(|id| self.tuple(id)).collect())
    }

    /// Id of a tuple, or `None` if it is not a vertex of this target.
    pub fn rank(&self, tuple: &[u32]) -> Option<usize> {
        if tuple.len() != self.q + 1 {
            return None;
        }
        let i = tuple[0] as usize;
        if i == 0 || i > self.q {
            return None;
        }
        let mut rank = (i as u128 - 1) * self.completions[self.q][self.d];
        let mut budget = self.d;
        for (pos, &x) in tuple[1..].iter().enumerate() {
            if x == 0 || x > self.k {
                return None;
            }
            let rest = self.q - pos - 1;
            if budget > 0 {
                rank += (x as u128 - 1) * self.completions[rest][budget - 1];
            }
            if x != self.k {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
            }
        }
        Some(rank as usize)
    }

    /// Color of the edge between two distinct tuples.
    pub fn edge_color(&self, u: &[u32], v: &[u32]) -> Result<u32> {
        if u == v {
            return Err(Error::Precondition("the target has no loops".into()));
        }
        let (i, j) = (u[0] as usize, v[0] as usize);
        Ok(v[i].min(u[j]))
    }

    /// The target as an explicit complete edge-colored graph.
    pub fn to_edge_colored(&self) -> Result<EdgeColoredGraph> {
        const MAX_EXPLICIT: usize = 4096;
        let p = self.len();
        if p > MAX_EXPLICIT {
            return Err(Error::GuardExceeded {
                what: "explicit target vertex count",
                limit: MAX_EXPLICIT as u128,
                actual: p as u128,
            });
        }
        let tuples: Vec<Vec<u32>> = (0..p).map(|id| self.tuple(id)).collect();
        let graph = complete(p)?;
        let colors = graph
            .edges()
            .iter()
            .map(|&(a, b)| self.edge_color(&tuples[a], &tuples[b]).expect("distinct vertices"))
            .collect();
        EdgeColoredGraph::new(graph, self.k, colors)
    }
}

impl ColoredTarget for UniversalTarget {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn color_between(&self, a: usize, b: usize) -> Option<u32> {
        if a == b || a >= self.len() || b >= self.len() {
            return None;
        }
        self.edge_color(&self.tuple(a), &self.tuple(b)).ok()
    }
}

/// The explicit map into the target built from an out-coloring.
pub fn build_homomorphism(
    source: &EdgeColoredGraph,
    oriented: &OrientedGraph,
    out_coloring: &VertexColoring,
    target: &UniversalTarget,
) -> Result<Homomorphism> {
    let graph = source.graph();
    if oriented.graph() != graph {
        return Err(Error::OrientationMismatch);
    }
    out_coloring.check_covers(graph)?;
    if source.k() != target.k() {
        return Err(Error::Precondition(format!(
            "source uses k = {} but the target uses k = {}",
            source.k(),
            target.k()
        )));
    }
    if out_coloring.palette() > target.q() {
        return Err(Error::Precondition(format!(
            "out-coloring palette {} exceeds target q = {}",
            out_coloring.palette(),
            target.q()
        )));
    }
    if target.d() < target.q() && oriented.max_in_degree() > target.d() {
        return Err(Error::Precondition(format!(
            "orientation has in-degree {} but the target allows {}",
            oriented.max_in_degree(),
            target.d()
        )));
    }
    if !verify_out_coloring(oriented, out_coloring) {
        return Err(Error::NotOutColoring);
    }
    let mut tuple = vec![0u32; target.q() + 1];
    let map = (0..graph.n())
        .map(|u| {
            tuple[0] = out_coloring.color(u) as u32;
            tuple[1..].fill(target.k());
            for &p in oriented.parents(u) {
                let e = graph.edge_id(u, p).expect("parent is adjacent");
                tuple[out_coloring.color(p)] = source.edge_color(e);
            }
            target.rank(&tuple).expect("tuple has at most d non-k entries")
        })
        .collect();
    Ok(Homomorphism::new(map))
}

/// Every edge goes to an edge of the same color between distinct vertices.
pub fn verify_homomorphism<T: ColoredTarget + ?Sized>(
    source: &EdgeColoredGraph,
    target: &T,
    hom: &Homomorphism,
) -> bool {
    let graph = source.graph();
    if hom.map.len() != graph.n() || hom.map.iter().any(|&t| t >= target.vertex_count()) {
        return false;
    }
    graph.edges().iter().enumerate().all(|(e, &(u, v))| {
        let (a, b) = (hom.image(u), hom.image(v));
        a != b && target.color_between(a, b) == Some(source.edge_color(e))
    })
}

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut s = BitSet::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Complete backtracking search for a homomorphism.
pub fn find_homomorphism<T: ColoredTarget + ?Sized>(
    source: &EdgeColoredGraph,
    target: &T,
) -> Result<Option<Homomorphism>> {
    find_homomorphism_with(source, target, &Limits::default())
}

/// Source vertices are assigned by descending degree, candidates by
/// ascending target id, and each assignment filters the domains of the
/// unassigned neighbours down to vertices joined by the right color.
pub fn find_homomorphism_with<T: ColoredTarget + ?Sized>(
    source: &EdgeColoredGraph,
    target: &T,
    limits: &Limits,
) -> Result<Option<Homomorphism>> {
    let graph = source.graph();
    let p = target.vertex_count();
    if graph.n() > limits.hom_source {
        return Err(Error::GuardExceeded {
            what: "homomorphism source vertex count",
            limit: limits.hom_source as u128,
            actual: graph.n() as u128,
        });
    }
    if p > limits.hom_target {
        return Err(Error::GuardExceeded {
            what: "homomorphism target vertex count",
            limit: limits.hom_target as u128,
            actual: p as u128,
        });
    }
    if p == 0 {
        return Ok(None);
    }

    let k = source.k() as usize;
    // by_color[c][t]: target vertices joined to t by an edge of color c
    let mut by_color = vec![vec![BitSet::empty(p); p]; k + 1];
    for a in 0..p {
        for b in 0..p {
            if let Some(c) = target.color_between(a, b) {
                if (c as usize) <= k {
                    by_color[c as usize][a].insert(b);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut position = vec![0; graph.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    struct Search<'a> {
        graph: &'a Graph,
        source: &'a EdgeColoredGraph,
        order: &'a [usize],
        position: &'a [usize],
        by_color: &'a [Vec<BitSet>],
        map: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize, domains: &[BitSet]) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for t in domains[v].iter() {
                let mut next = domains.to_vec();
                let mut dead = false;
                for &w in self.graph.neighbors(v) {
                    if self.position[w] <= depth {
                        continue;
                    }
                    let e = self.graph.edge_id(v, w).expect("adjacent");
                    let c = self.source.edge_color(e) as usize;
                    next[w].intersect(&self.by_color[c][t]);
                    if next[w].is_empty() {
                        dead = true;
                        break;
                    }
                }
                if dead {
                    continue;
                }
                self.map[v] = t;
                if self.go(depth + 1, &next) {
                    return true;
                }
            }
            false
        }
    }

    let domains = vec![BitSet::full(p); graph.n()];
    let mut search = Search {
        graph,
        source,
        order: &order,
        position: &position,
        by_color: &by_color,
        map: vec![0; graph.n()],
    };
    if search.go(0, &domains) {
        let hom = Homomorphism::new(search.map);
        debug_assert!(verify_homomorphism(source, target, &hom));
        Ok(Some(hom))
    } else {
        Ok(None)
    }
}

/// Result of checking a target against every edge coloring of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universality {
    Universal,
    /// The lexicographically first coloring with no homomorphism.
    Counterexample(EdgeColoredGraph),
}

impl Universality {
    pub fn is_universal(&self) -> bool {
        matches!(self, Universality::Universal)
    }
}

/// Tries every `k`-edge-coloring of `graph` against `target`.
pub fn check_universal<T: ColoredTarget + ?Sized>(target: &T, graph: &Graph, k: u32) -> Result<Universality> {
    check_universal_with(target, graph, k, &Limits::default())
}

pub fn check_universal_with<T: ColoredTarget + ?Sized>(
    target: &T,
    graph: &Graph,
    k: u32,
    limits: &Limits,
) -> Result<Universality> {
    if k < 2 {
        return Err(Error::InvalidPalette(k));
    }
    let total = (k as u128).checked_pow(graph.m() as u32).unwrap_or(u128::MAX);
    if total > limits.edge_colorings {
        return Err(Error::GuardExceeded {
            what: "number of edge colorings",
            limit: limits.edge_colorings,
            actual: total,
        });
    }
    for index in 0..total {
        let colored = nth_edge_coloring(graph, k, index);
        if find_homomorphism_with(&colored, target, limits)?.is_none() {
            return Ok(Universality::Counterexample(colored));
        }
    }
    Ok(Universality::Universal)
}

/// Edge-index permutations of `K_p` induced by every vertex permutation.
fn vertex_permutations(p: usize) -> Vec<Vec<usize>> {
    let kp = complete(p).expect("p >= 1");
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..p).collect();
    permute(&mut current, 0, &mut |perm| {
        perms.push(
            kp.edges()
                .iter()
                .map(|&(u, v)| kp.edge_id(perm[u], perm[v]).expect("complete"))
                .collect(),
        )
    });
    perms
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, start: usize, emit: &mut F) {
    if start == items.len() {
        emit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, emit);
        items.swap(start, i);
    }
}

/// Is `colors` the least among its images under vertex relabelling and
/// color permutation?
fn is_canonical(colors: &[u32], edge_perms: &[Vec<usize>], color_perms: &[Vec<u32>]) -> bool {
    let mut image = vec![0u32; colors.len()];
    for ep in edge_perms {
        for cp in color_perms {
            for (e, &c) in colors.iter().enumerate() {
                image[ep[e]] = cp[c as usize];
            }
            if image.as_slice() < colors {
                return false;
            }
        }
    }
    true
}

/// Smallest `k`-universal target for the given graphs, searching complete
/// targets on `1..=p_max` vertices. Only complete targets are tried: adding
/// an edge of any color to a target never destroys a homomorphism into it,
/// so a smallest universal target can always be taken complete.
pub fn min_universal_size(graphs: &[Graph], k: u32, p_max: usize) -> Result<Option<(usize, EdgeColoredGraph)>> {
    min_universal_size_with(graphs, k, p_max, &Limits::default())
}

pub fn min_universal_size_with(
    graphs: &[Graph],
    k: u32,
    p_max: usize,
    limits: &Limits,
) -> Result<Option<(usize, EdgeColoredGraph)>> {
    if k < 2 {
        return Err(Error::InvalidPalette(k));
    }
    if p_max > limits.min_target_p {
        return Err(Error::GuardExceeded {
            what: "minimum target size bound",
            limit: limits.min_target_p as u128,
            actual: p_max as u128,
        });
    }
    let mut color_perms = Vec::new();
    let mut colors: Vec<usize> = (1..=k as usize).collect();
    permute(&mut colors, 0, &mut |perm| {
        let mut table = vec![0u32];
        table.extend(perm.iter().map(|&c| c as u32));
        color_perms.push(table);
    });

    for p in 1..=p_max {
        let kp = complete(p)?;
        let pairs = kp.m();
        let total = (k as u128).checked_pow(pairs as u32).unwrap_or(u128::MAX);
        if total > limits.min_target_candidates {
            return Err(Error::GuardExceeded {
                what: "candidate targets at one size",
                limit: limits.min_target_candidates,
                actual: total,
            });
        }
        let edge_perms = vertex_permutations(p);
        'candidates: for index in 0..total {
            let candidate = nth_edge_coloring(&kp, k, index);
            if !is_canonical(candidate.colors(), &edge_perms, &color_perms) {
                continue;
            }
            for g in graphs {
                if !check_universal_with(&candidate, g, k, limits)?.is_universal() {
                    continue 'candidates;
                }
            }
            return Ok(Some((p, candidate)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::greedy_star_coloring;
    use crate::density::min_orientation;
    use crate::generate;
    use crate::out_coloring::build_out_coloring;

    /// Hand enumeration: all tuples satisfying the defining condition.
    fn brute_tuples(q: usize, d: usize, k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let total = (q as u64) * (k as u64).pow(q as u32);
        for code in 0..total {
            let mut c = code;
            let mut xs = vec![0u32; q];
            for slot in xs.iter_mut().rev() {
                *slot = (c % k as u64) as u32 + 1;
                c /= k as u64;
            }
            let i = c as u32 + 1;
            if xs.iter().filter(|&&x| x != k).count() <= d {
                let mut t = vec![i];
                t.extend(xs);
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn small_targets_match_enumeration() {
        let t = UniversalTarget::build(2, 1, 2).unwrap();
        assert_eq!(t.len(), 6);
        let t = UniversalTarget::build(1, 1, 3).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.tuple(0), [1, 1]);
        assert_eq!(t.tuple(1), [1, 2]);
        assert_eq!(t.tuple(2), [1, 3]);
        let t = UniversalTarget::build(3, 0, 5).unwrap();
        assert_eq!(t.len(), 3);
        assert!((0..3).all(|id| t.tuple(id)[1..].iter().all(|&x| x == 5)));
    }

    #[test]
    fn tuples_and_ranks_agree_with_brute_force() {
        for (q, d, k) in [(1, 1, 2), (2, 1, 2), (3, 2, 3), (4, 2, 2), (3, 3, 4), (4, 1, 5)] {
            let t = UniversalTarget::build(q, d, k).unwrap();
            let expected = brute_tuples(q, d, k);
            assert_eq!(t.len(), expected.len());
            for (id, tuple) in expected.iter().enumerate() {
                assert_eq!(&t.tuple(id), tuple);
                assert_eq!(t.rank(tuple), Some(id));
            }
            assert_eq!(BigUint::from(t.len()), target_vertex_count(q, d, k));
        }
    }

    #[test]
    fn rank_rejects_foreign_tuples() {
        let t = UniversalTarget::build(3, 1, 3).unwrap();
        assert_eq!(t.rank(&[1, 1, 1, 3]), None);
        assert_eq!(t.rank(&[4, 3, 3, 3]), None);
        assert_eq!(t.rank(&[1, 3, 3]), None);
        assert_eq!(t.rank(&[1, 0, 3, 3]), None);
    }

    #[test]
    fn d_is_capped() {
        let t = UniversalTarget::build(2, 7, 2).unwrap();
        assert_eq!(t.d(), 2);
        assert_eq!(t.len(), 2 * 4);
    }

    #[test]
    fn build_guard() {
        let small = Limits {
            target_vertices: 5,
            ..Limits::default()
        };
        let t = UniversalTarget::build(2, 1, 2).unwrap();
        assert!(matches!(t.tuples(&small), Err(Error::GuardExceeded { .. })));
        assert_eq!(t.tuples(&Limits::default()).unwrap().len(), 6);
        // 1.5 million vertices are addressable without enumeration
        let big = UniversalTarget::build(20, 3, 5).unwrap();
        assert_eq!(big.len(), 1_521_620);
        let last = big.tuple(big.len() - 1);
        assert_eq!(big.rank(&last), Some(big.len() - 1));
        assert!(matches!(big.tuples(&Limits::default()), Err(Error::GuardExceeded { .. })));
        assert!(UniversalTarget::build(0, 1, 2).is_err());
        assert!(UniversalTarget::build(1, 1, 1).is_err());
    }

    #[test]
    fn edge_color_examples() {
        let t = UniversalTarget::build(2, 2, 2).unwrap();
        assert_eq!(t.edge_color(&[1, 2, 2], &[2, 1, 2]).unwrap(), 1);
        assert_eq!(t.edge_color(&[2, 1, 2], &[1, 2, 2]).unwrap(), 1);
        assert_eq!(t.edge_color(&[1, 2, 2], &[2, 2, 2]).unwrap(), 2);
        assert!(t.edge_color(&[1, 2, 2], &[1, 2, 2]).is_err());
        for a in 0..t.len() {
            for b in 0..t.len() {
                if a != b {
                    let c = t.color_between(a, b).unwrap();
                    assert_eq!(Some(c), t.color_between(b, a));
                    assert!((1..=2).contains(&c));
                }
            }
        }
    }

    #[test]
    fn isolated_vertex_maps_to_all_k() {
        let g = EdgeColoredGraph::new(Graph::edgeless(2).unwrap(), 3, vec![]).unwrap();
        let o = OrientedGraph::from_heads(g.graph().clone(), vec![]).unwrap();
        let f = VertexColoring::new(2, vec![1, 2]).unwrap();
        let t = UniversalTarget::build(2, 1, 3).unwrap();
        let h = build_homomorphism(&g, &o, &f, &t).unwrap();
        assert_eq!(t.tuple(h.image(0)), [1, 3, 3]);
        assert_eq!(t.tuple(h.image(1)), [2, 3, 3]);
    }

    #[test]
    fn parents_fill_their_coordinates() {
        // star with centre 0 and three parents 1, 2, 3 of distinct out-colors
        let g = EdgeColoredGraph::from_triples(4, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 1)]).unwrap();
        let o = OrientedGraph::from_arcs(g.graph().clone(), &[(1, 0), (2, 0), (3, 0)]).unwrap();
        let f = VertexColoring::new(4, vec![1, 2, 3, 4]).unwrap();
        let t = UniversalTarget::build(4, 3, 3).unwrap();
        let h = build_homomorphism(&g, &o, &f, &t).unwrap();
        let centre = t.tuple(h.image(0));
        let centre = centre.as_slice();
        assert_eq!(centre, [1, 3, 1, 2, 1]);
        assert_eq!(centre[1..].iter().filter(|&&x| x != 3).count(), 3);
        assert!(verify_homomorphism(&g, &t, &h));
    }

    #[test]
    fn build_homomorphism_preconditions() {
        let g = EdgeColoredGraph::from_triples(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let o = OrientedGraph::from_arcs(g.graph().clone(), &[(0, 1), (1, 2)]).unwrap();
        let good = VertexColoring::new(3, vec![1, 2, 3]).unwrap();
        let bad = VertexColoring::new(3, vec![1, 2, 1]).unwrap();
        let t = UniversalTarget::build(3, 1, 2).unwrap();
        assert!(build_homomorphism(&g, &o, &good, &t).is_ok());
        assert!(matches!(
            build_homomorphism(&g, &o, &bad, &t),
            Err(Error::NotOutColoring)
        ));
        let small = UniversalTarget::build(2, 1, 2).unwrap();
        assert!(matches!(
            build_homomorphism(&g, &o, &good, &small),
            Err(Error::Precondition(_))
        ));
        let wrong_k = UniversalTarget::build(3, 1, 3).unwrap();
        assert!(matches!(
            build_homomorphism(&g, &o, &good, &wrong_k),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn verify_homomorphism_examples() {
        let tri = EdgeColoredGraph::from_triples(3, 2, [(0, 1, 1), (1, 2, 2), (0, 2, 1)]).unwrap();
        assert!(verify_homomorphism(&tri, &tri, &Homomorphism::new(vec![0, 1, 2])));
        assert!(!verify_homomorphism(&tri, &tri, &Homomorphism::new(vec![0, 0, 2])));
        // edge {1,2} has color 2 but {0,1} has color 1
        let edge = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 2)]).unwrap();
        assert!(!verify_homomorphism(&edge, &tri, &Homomorphism::new(vec![0, 1])));
        assert!(verify_homomorphism(&edge, &tri, &Homomorphism::new(vec![1, 2])));
        assert!(!verify_homomorphism(&edge, &tri, &Homomorphism::new(vec![1, 5])));
    }

    #[test]
    fn find_homomorphism_examples() {
        let mono = EdgeColoredGraph::monochromatic(generate::complete(3).unwrap(), 2, 1).unwrap();
        let h = find_homomorphism(&mono, &mono).unwrap().unwrap();
        assert!(verify_homomorphism(&mono, &mono, &h));

        let two = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 2)]).unwrap();
        let one = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 1)]).unwrap();
        assert_eq!(find_homomorphism(&two, &one).unwrap(), None);
    }

    #[test]
    fn search_agrees_with_construction_on_triangle() {
        let tri = EdgeColoredGraph::from_triples(3, 2, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        let (_, o) = min_orientation(tri.graph());
        let star = greedy_star_coloring(tri.graph(), 0);
        let cert = build_out_coloring(&o, &star).unwrap();
        let t = UniversalTarget::build(cert.coloring.palette(), o.max_in_degree(), 2).unwrap();
        let built = build_homomorphism(&tri, &o, &cert.coloring, &t).unwrap();
        assert!(verify_homomorphism(&tri, &t, &built));
        let found = find_homomorphism(&tri, &t).unwrap().unwrap();
        assert!(verify_homomorphism(&tri, &t, &found));

        let six = UniversalTarget::build(2, 1, 2).unwrap();
        let tri112 = EdgeColoredGraph::from_triples(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 2)]).unwrap();
        let h = find_homomorphism(&tri112, &six).unwrap().unwrap();
        assert!(verify_homomorphism(&tri112, &six, &h));
    }

    #[test]
    fn pipeline_target_is_universal_for_triangle() {
        let k3 = generate::complete(3).unwrap();
        let (_, o) = min_orientation(&k3);
        let star = greedy_star_coloring(&k3, 0);
        let cert = build_out_coloring(&o, &star).unwrap();
        let t = UniversalTarget::build(cert.coloring.palette(), o.max_in_degree(), 2).unwrap();
        assert!(check_universal(&t, &k3, 2).unwrap().is_universal());
        let explicit = t.to_edge_colored().unwrap();
        assert!(check_universal(&explicit, &k3, 2).unwrap().is_universal());
    }

    #[test]
    fn find_homomorphism_guards() {
        let big = EdgeColoredGraph::monochromatic(generate::path(13).unwrap(), 2, 1).unwrap();
        let one = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 1)]).unwrap();
        assert!(matches!(
            find_homomorphism(&big, &one),
            Err(Error::GuardExceeded { .. })
        ));
        let t = UniversalTarget::build(3, 3, 3).unwrap();
        let small = EdgeColoredGraph::monochromatic(generate::path(2).unwrap(), 3, 1).unwrap();
        assert!(matches!(
            find_homomorphism(&small, &t),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn check_universal_examples() {
        let k2 = generate::path(2).unwrap();
        let path12 = EdgeColoredGraph::from_triples(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert_eq!(check_universal(&path12, &k2, 2).unwrap(), Universality::Universal);

        let single = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 1)]).unwrap();
        match check_universal(&single, &k2, 2).unwrap() {
            Universality::Counterexample(c) => assert_eq!(c.colors(), &[2]),
            Universality::Universal => panic!("a single color-1 edge is not universal"),
        }
    }

    #[test]
    fn check_universal_guard() {
        let g = generate::complete(7).unwrap();
        let t = EdgeColoredGraph::from_triples(2, 2, [(0, 1, 1)]).unwrap();
        assert!(matches!(
            check_universal(&t, &g, 2),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn min_target_examples() {
        let (size, target) = min_universal_size(&[generate::path(2).unwrap()], 2, 3)
            .unwrap()
            .unwrap();
        assert_eq!(size, 3);
        assert!(check_universal(&target, &generate::path(2).unwrap(), 2)
            .unwrap()
            .is_universal());

        let (size, _) = min_universal_size(&[Graph::edgeless(4).unwrap()], 3, 3)
            .unwrap()
            .unwrap();
        assert_eq!(size, 1);
    }

    #[test]
    fn canonical_filter_keeps_one_per_class() {
        // 2-colorings of K3 up to relabelling and color swap: mono, one odd edge
        let kp = generate::complete(3).unwrap();
        let perms = vertex_permutations(3);
        let cperms = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let canon: Vec<Vec<u32>> = (0..8)
            .map(|i| nth_edge_coloring(&kp, 2, i).colors().to_vec())
            .filter(|c| is_canonical(c, &perms, &cperms))
            .collect();
        assert_eq!(canon, vec![vec![1, 1, 1], vec![1, 1, 2]]);
    }
}
