//! Plain-text formats.
//!
//! Graphs: a header line `n m k`, then `m` lines `u v c`. Oriented graphs add
//! a trailing direction flag, `>` when `u` is the tail and `<` when `v` is.
//! Vertex colorings: a `palette q` line, then one `v c` line per vertex.
//! Homomorphisms: one `u h(u)` line per source vertex. In every format lines
//! starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Graph, Homomorphism, OrientedGraph, VertexColoring};

struct Line<'a> {
    number: usize,
    fields: Vec<&'a str>,
}

fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some(Line {
                number: i + 1,
                fields: trimmed.split_whitespace().collect(),
            })
        }
    })
}

fn header_num(line: &Line<'_>, idx: usize, name: &str) -> Result<usize> {
    line.fields
        .get(idx)
        .ok_or_else(|| Error::MalformedHeader {
            line: line.number,
            reason: format!("missing {name}"),
        })?
        .parse()
        .map_err(|_| Error::MalformedHeader {
            line: line.number,
            reason: format!("{name} is not a non-negative integer"),
        })
}

fn field_num<T: std::str::FromStr>(line: &Line<'_>, idx: usize, name: &str) -> Result<T> {
    line.fields
        .get(idx)
        .ok_or_else(|| Error::MalformedLine {
            line: line.number,
            reason: format!("missing {name}"),
        })?
        .parse()
        .map_err(|_| Error::MalformedLine {
            line: line.number,
            reason: format!("{name} is not a non-negative integer"),
        })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
}

struct RawGraph {
    n: usize,
    k: u32,
    edges: Vec<(usize, usize, u32, Option<Direction>)>,
}

fn parse_raw(
    text: &str,
    min_k: u32,
    color_optional: bool,
    require_direction: bool,
) -> Result<RawGraph> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or(Error::MalformedHeader {
        line: 1,
        reason: "empty input".into(),
    })?;
    if header.fields.len() < 2 || header.fields.len() > 3 {
        return Err(Error::MalformedHeader {
            line: header.number,
            reason: "expected `n m k`".into(),
        });
    }
    if header.fields.len() == 2 && !color_optional {
        return Err(Error::MalformedHeader {
            line: header.number,
            reason: "expected `n m k`".into(),
        });
    }
    let n = header_num(&header, 0, "n")?;
    let m = header_num(&header, 1, "m")?;
    let k = if header.fields.len() == 3 {
        header_num(&header, 2, "k")? as u32
    } else {
        1
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if k < min_k {
        return Err(Error::InvalidPalette(k));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let u: usize = field_num(&line, 0, "u")?;
        let v: usize = field_num(&line, 1, "v")?;
        let mut rest = 2;
        let c: u32 = match line.fields.get(2) {
            Some(tok) if *tok != ">" && *tok != "<" => {
                rest = 3;
                field_num(&line, 2, "c")?
            }
            _ if color_optional => 1,
            _ => {
                return Err(Error::MalformedLine {
                    line: line.number,
                    reason: "missing c".into(),
                })
            }
        };
        let dir = match line.fields.get(rest) {
            None => None,
            Some(&">") => Some(Direction::Forward),
            Some(&"<") => Some(Direction::Backward),
            Some(other) => {
                return Err(Error::MalformedLine {
                    line: line.number,
                    reason: format!("unexpected token `{other}`"),
                })
            }
        };
        if require_direction && dir.is_none() {
            return Err(Error::MalformedLine {
                line: line.number,
                reason: "missing direction flag".into(),
            });
        }
        if line.fields.len() > rest + 1 {
            return Err(Error::MalformedLine {
                line: line.number,
                reason: "trailing tokens".into(),
            });
        }
        if c == 0 || c > k {
            return Err(Error::ColorOutOfRange { color: c, k });
        }
        edges.push((u, v, c, dir));
    }
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(RawGraph { n, k, edges })
}

/// Parses an edge-colored graph (`k >= 2`).
pub fn parse_edge_colored(text: &str) -> Result<EdgeColoredGraph> {
    let raw = parse_raw(text, 2, false, false)?;
    EdgeColoredGraph::from_triples(raw.n, raw.k, raw.edges.iter().map(|&(u, v, c, _)| (u, v, c)))
}

/// Parses a plain graph. The header may omit `k` and edge lines may omit `c`;
/// any colors present are range-checked and then dropped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let raw = parse_raw(text, 1, true, false)?;
    Graph::new(raw.n, raw.edges.iter().map(|&(u, v, _, _)| (u, v)))
}

/// Parses an oriented graph: every edge line carries a `>` or `<` flag.
/// Edge colors, when present, are returned alongside.
pub fn parse_oriented(text: &str) -> Result<(OrientedGraph, u32, Vec<u32>)> {
    let raw = parse_raw(text, 1, true, true)?;
    let graph = Graph::new(raw.n, raw.edges.iter().map(|&(u, v, _, _)| (u, v)))?;
    let mut heads = vec![0; graph.m()];
    let mut colors = vec![1; graph.m()];
    for &(u, v, c, dir) in &raw.edges {
        let e = graph.edge_id(u, v).expect("edge present");
        heads[e] = match dir {
            Some(Direction::Backward) => u,
            _ => v,
        };
        colors[e] = c;
    }
    Ok((OrientedGraph::from_heads(graph, heads)?, raw.k, colors))
}

/// Canonical text of an edge-colored graph: edges sorted lexicographically.
pub fn serialize(graph: &EdgeColoredGraph) -> String {
    let g = graph.graph();
    let mut out = format!("{} {} {}\n", g.n(), g.m(), graph.k());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", graph.edge_color(e));
    }
    out
}

/// Plain graph with `k = 1` and every color 1.
pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("{} {} 1\n", graph.n(), graph.m());
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v} 1");
    }
    out
}

/// Oriented graph; pass `None` for colors to write `k = 1`.
pub fn serialize_oriented(oriented: &OrientedGraph, colors: Option<(u32, &[u32])>) -> String {
    let g = oriented.graph();
    let k = colors.map_or(1, |(k, _)| k);
    let mut out = format!("{} {} {}\n", g.n(), g.m(), k);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = colors.map_or(1, |(_, cs)| cs[e]);
        let flag = if oriented.head(e) == v { '>' } else { '<' };
        let _ = writeln!(out, "{u} {v} {c} {flag}");
    }
    out
}

pub fn serialize_coloring(coloring: &VertexColoring) -> String {
    let mut out = format!("palette {}\n", coloring.palette());
    for (v, c) in coloring.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

/// Parses a vertex coloring; the vertex ids must be exactly `0..len`.
pub fn parse_coloring(text: &str) -> Result<VertexColoring> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or(Error::MalformedHeader {
        line: 1,
        reason: "empty input".into(),
    })?;
    if header.fields.len() != 2 || header.fields[0] != "palette" {
        return Err(Error::MalformedHeader {
            line: header.number,
            reason: "expected `palette q`".into(),
        });
    }
    let palette = header_num(&header, 1, "q")?;
    let pairs = lines
        .map(|line| Ok((field_num(&line, 0, "v")?, field_num(&line, 1, "c")?)))
        .collect::<Result<Vec<(usize, usize)>>>()?;
    let colors = dense_map(pairs, "coloring")?;
    VertexColoring::new(palette, colors)
}

pub fn serialize_homomorphism(hom: &Homomorphism) -> String {
    let mut out = String::new();
    for (u, h) in hom.map.iter().enumerate() {
        let _ = writeln!(out, "{u} {h}");
    }
    out
}

pub fn parse_homomorphism(text: &str) -> Result<Homomorphism> {
    let pairs = content_lines(text)
        .map(|line| Ok((field_num(&line, 0, "u")?, field_num(&line, 1, "h(u)")?)))
        .collect::<Result<Vec<(usize, usize)>>>()?;
    Ok(Homomorphism::new(dense_map(pairs, "homomorphism")?))
}

fn dense_map(pairs: Vec<(usize, usize)>, what: &str) -> Result<Vec<usize>> {
    let mut out = vec![usize::MAX; pairs.len()];
    for (key, value) in pairs {
        if key >= out.len() || out[key] != usize::MAX {
            return Err(Error::InvalidColoring(format!(
                "{what} keys must be exactly 0..{} once each (bad key {key})",
                out.len()
            )));
        }
        out[key] = value;
    }
    Ok(out)
}
