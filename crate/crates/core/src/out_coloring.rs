//! Out-colorings of oriented graphs.
//!
//! A coloring of an oriented graph is an out-coloring when
//! (C1) adjacent vertices differ, (C2) two parents of one vertex differ and
//! (C3) every vertex differs from each of its grandparents.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bounds::ceil_log;
use crate::coloring::{is_proper, verify_star};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, OrientedGraph, VertexColoring};
use crate::limits::Limits;
use crate::universal::find_homomorphism_with;

/// Why an auxiliary arc `tail -> head` was added.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuxRule {
    /// `tail` and `head` are parents of a common vertex and share a star color.
    SharedChild,
    /// `tail -> x -> head` and the ends share a star color.
    Grandchild,
    /// `tail` is the same-index grandparent of `head`.
    SameIndexGrandparent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AuxArc {
    pub tail: usize,
    pub head: usize,
    pub rule: AuxRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutColoringCertificate {
    pub coloring: VertexColoring,
    /// Declared palette bound.
    pub budget: u128,
    pub construction_log: Vec<AuxArc>,
    /// Largest in-degree in the auxiliary digraph, counting distinct tails.
    pub aux_max_in_degree: usize,
}

#[derive(Serialize)]
struct Header {
    palette: usize,
    budget: String,
    rule_counts: BTreeMap<AuxRule, usize>,
}

impl OutColoringCertificate {
    pub fn rule_counts(&self) -> BTreeMap<AuxRule, usize> {
        let mut counts = BTreeMap::new();
        for arc in &self.construction_log {
            *counts.entry(arc.rule).or_insert(0) += 1;
        }
        counts
    }

    /// `{palette, budget, rule_counts}` as one JSON line.
    pub fn header_json(&self) -> String {
        serde_json::to_string(&Header {
            palette: self.coloring.palette(),
            budget: self.budget.to_string(),
            rule_counts: self.rule_counts(),
        })
        .expect("header serializes")
    }

    /// Header line followed by the coloring lines.
    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}",
            self.header_json(),
            crate::io::serialize_coloring(&self.coloring)
        )
    }
}

pub fn verify_out_coloring(oriented: &OrientedGraph, coloring: &VertexColoring) -> bool {
    let graph = oriented.graph();
    if coloring.len() != graph.n() || !is_proper(graph, coloring) {
        return false;
    }
    (0..graph.n()).all(|x| {
        let parents = oriented.parents(x);
        let mut seen = BTreeSet::new();
        let distinct = parents.iter().all(|&p| seen.insert(coloring.color(p)));
        distinct
            && parents.iter().all(|&p| {
                oriented
                    .parents(p)
                    .iter()
                    .all(|&gp| gp == x || coloring.color(gp) != coloring.color(x))
            })
    })
}

/// Checked directly on the in-coloring conditions: proper, two children of a
/// vertex differ, and a vertex differs from its grandchildren.
pub fn verify_in_coloring(oriented: &OrientedGraph, coloring: &VertexColoring) -> bool {
    let graph = oriented.graph();
    if coloring.len() != graph.n() || !is_proper(graph, coloring) {
        return false;
    }
    (0..graph.n()).all(|x| {
        let children = oriented.children(x);
        let mut seen = BTreeSet::new();
        let distinct = children.iter().all(|&c| seen.insert(coloring.color(c)));
        distinct
            && children.iter().all(|&c| {
                oriented
                    .children(c)
                    .iter()
                    .all(|&gc| gc == x || coloring.color(gc) != coloring.color(x))
            })
    })
}

/// Greedy coloring along a minimum-degree elimination order. Colors are
/// 1-based; the count never exceeds the degeneracy plus one.
fn degeneracy_coloring(adj: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(BTreeSet::len).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    let mut color = vec![0; n];
    for &v in order.iter().rev() {
        let used: BTreeSet<usize> = adj[v].iter().map(|&w| color[w]).collect();
        color[v] = (1..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    color
}

/// Undirected adjacency and max in-degree (distinct tails) of a set of arcs.
fn aux_structure(n: usize, arcs: &BTreeSet<(usize, usize)>) -> (Vec<BTreeSet<usize>>, usize) {
    let mut adj = vec![BTreeSet::new(); n];
    let mut in_degree = vec![0; n];
    for &(t, h) in arcs {
        adj[t].insert(h);
        adj[h].insert(t);
        in_degree[h] += 1;
    }
    (adj, in_degree.into_iter().max().unwrap_or(0))
}

/// Rank each vertex's tuple among the distinct tuples, in lexicographic order.
fn flatten<T: Ord + Clone>(tuples: &[T]) -> VertexColoring {
    let distinct: BTreeSet<T> = tuples.iter().cloned().collect();
    let rank: BTreeMap<&T, usize> = distinct.iter().enumerate().map(|(i, t)| (t, i + 1)).collect();
    let colors = tuples.iter().map(|t| rank[t]).collect();
    VertexColoring::new(distinct.len().max(1), colors).expect("ranks lie in 1..=distinct")
}

/// Out-coloring from a star coloring: color `v` by `(star(v), aux(v))`,
/// where `aux` greedily colors the auxiliary digraph of same-star-color
/// conflicts. Palette at most `2 d s^2`.
pub fn build_out_coloring(oriented: &OrientedGraph, star: &VertexColoring) -> Result<OutColoringCertificate> {
    let graph = oriented.graph();
    star.check_covers(graph)?;
    if !verify_star(graph, star) {
        return Err(Error::NotStar);
    }
    let n = graph.n();
    let d = oriented.max_in_degree();
    let s = star.palette();

    let mut log = BTreeSet::new();
    for x in 0..n {
        let parents = oriented.parents(x);
        for &b in parents {
            for &a in parents {
                if a != b && star.color(a) == star.color(b) {
                    log.insert(AuxArc {
                        tail: b,
                        head: a,
                        rule: AuxRule::SharedChild,
                    });
                }
            }
            for &a in oriented.children(x) {
                if star.color(a) == star.color(b) {
                    log.insert(AuxArc {
                        tail: b,
                        head: a,
                        rule: AuxRule::Grandchild,
                    });
                }
            }
        }
    }
    let arcs: BTreeSet<(usize, usize)> = log.iter().map(|a| (a.tail, a.head)).collect();
    let (adj, aux_max_in_degree) = aux_structure(n, &arcs);
    if aux_max_in_degree > d * s.saturating_sub(1) {
        return Err(Error::Precondition(format!(
            "auxiliary in-degree {} exceeds d(s-1) = {}",
            aux_max_in_degree,
            d * s.saturating_sub(1)
        )));
    }
    let aux = degeneracy_coloring(&adj);
    let tuples: Vec<(usize, usize)> = (0..n).map(|v| (star.color(v), aux[v])).collect();
    let coloring = flatten(&tuples);

    let budget = if d == 0 {
        s as u128
    } else {
        2 * d as u128 * (s as u128) * (s as u128)
    };
    if !verify_out_coloring(oriented, &coloring) || coloring.palette() as u128 > budget {
        return Err(Error::NotOutColoring);
    }
    Ok(OutColoringCertificate {
        coloring,
        budget,
        construction_log: log.into_iter().collect(),
        aux_max_in_degree,
    })
}

/// Base-`k` digit `i` of `x`.
fn digit(x: usize, i: u32, k: u32) -> u32 {
    ((x as u128 / (k as u128).pow(i)) % k as u128) as u32
}

/// Out-coloring read off a universal target: `m` edge colorings encode the
/// parent index of each arc in base `k`; the images of `m` homomorphisms
/// into `target` separate parents, and a greedy coloring of the
/// same-index grandparent conflicts handles the rest. Palette at most
/// `(2d + 1) p^m` with `m = max(1, ceil(log_k d))`.
pub fn out_coloring_from_universal(
    oriented: &OrientedGraph,
    target: &EdgeColoredGraph,
    k: u32,
) -> Result<OutColoringCertificate> {
    out_coloring_from_universal_with(oriented, target, k, &Limits::default())
}

pub fn out_coloring_from_universal_with(
    oriented: &OrientedGraph,
    target: &EdgeColoredGraph,
    k: u32,
    limits: &Limits,
) -> Result<OutColoringCertificate> {
    if k < 2 {
        return Err(Error::InvalidPalette(k));
    }
    if target.k() != k {
        return Err(Error::Precondition(format!(
            "target uses k = {} but k = {} was requested",
            target.k(),
            k
        )));
    }
    let graph = oriented.graph();
    let n = graph.n();
    let d = oriented.max_in_degree();
    let m = ceil_log(k as u64, d.max(1) as u64).max(1);

    let mut images: Vec<Vec<usize>> = vec![Vec::with_capacity(m as usize); n];
    for i in 0..m {
        let colors = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, _)| {
                let (tail, head) = (oriented.tail(e), oriented.head(e));
                let j = oriented
                    .parents(head)
                    .binary_search(&tail)
                    .expect("tail is a parent of head");
                digit(j, i, k) + 1
            })
            .collect();
        let colored = EdgeColoredGraph::new(graph.clone(), k, colors)?;
        match find_homomorphism_with(&colored, target, limits)? {
            Some(h) => {
                for (v, image) in images.iter_mut().enumerate() {
                    image.push(h.image(v));
                }
            }
            None => {
                return Err(Error::NotUniversal {
                    witness: Box::new(colored),
                })
            }
        }
    }

    let mut log = BTreeSet::new();
    for w in 0..n {
        for (a, &v) in oriented.parents(w).iter().enumerate() {
            if let Some(&u) = oriented.parents(v).get(a) {
                if u != w {
                    log.insert(AuxArc {
                        tail: u,
                        head: w,
                        rule: AuxRule::SameIndexGrandparent,
                    });
                }
            }
        }
    }
    let arcs: BTreeSet<(usize, usize)> = log.iter().map(|a| (a.tail, a.head)).collect();
    let (adj, aux_max_in_degree) = aux_structure(n, &arcs);
    let aux = degeneracy_coloring(&adj);
    let tuples: Vec<(Vec<usize>, usize)> = images.into_iter().zip(aux).collect();
    let coloring = flatten(&tuples);

    let p = target.graph().n() as u128;
    let budget = (2 * d.max(1) as u128 + 1).saturating_mul(p.saturating_pow(m));
    if !verify_out_coloring(oriented, &coloring) || coloring.palette() as u128 > budget {
        return Err(Error::NotOutColoring);
    }
    Ok(OutColoringCertificate {
        coloring,
        budget,
        construction_log: log.into_iter().collect(),
        aux_max_in_degree,
    })
}
