//! `ectarget`: build and check universal targets for edge-colored graphs.
//!
//! Exit codes: 0 success, 1 verified negative (infeasible, none found,
//! counterexample, rejected certificate), 2 usage or input error, 3 search
//! guard exceeded. Guards scale by the integer in `ECTARGET_GUARD_OVERRIDE`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ectarget_core::bounds::{genus_density_bounds, planar_bounds, universal_lower_bound, upper_report};
use ectarget_core::coloring::{exact_star_coloring_with, greedy_star_coloring, verify_star};
use ectarget_core::density::{densest_subgraph, find_orientation, min_orientation, Orientation};
use ectarget_core::io;
use ectarget_core::out_coloring::{build_out_coloring, verify_out_coloring};
use ectarget_core::universal::{
    build_homomorphism, check_universal_with, min_universal_size_with, target_size_bound, verify_homomorphism,
    ColoredTarget, TargetHeader, Universality, UniversalTarget,
};
use ectarget_core::{EdgeColoredGraph, Error, Graph, Limits, OrientedGraph};

#[derive(Parser)]
#[command(name = "ectarget", version, about = "Universal targets for k-edge-colored graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for every randomized heuristic.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum subgraph density with a densest vertex set.
    Density { graph: PathBuf },
    /// Orientation with in-degree at most D (smallest possible when omitted).
    Orient {
        graph: PathBuf,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Star coloring, greedy by default or exact with at most C colors.
    StarColor {
        graph: PathBuf,
        #[arg(long, value_name = "C")]
        exact: Option<usize>,
    },
    /// Out-coloring of an oriented graph from a star coloring.
    OutColor {
        graph: PathBuf,
        #[arg(long)]
        orientation: PathBuf,
    },
    /// Universal target parameters and size; optionally list or write it.
    BuildTarget {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
        /// Print every tuple.
        #[arg(long)]
        list: bool,
        /// Write the target as an explicit edge-colored graph.
        #[arg(long, value_name = "PATH")]
        explicit: Option<PathBuf>,
    },
    /// Full pipeline: orient, star-color, out-color, build target, map.
    Map {
        graph: PathBuf,
        /// Declared edge palette; defaults to the header value.
        #[arg(long)]
        k: Option<u32>,
        /// Write the target header here.
        #[arg(long, value_name = "PATH")]
        target: Option<PathBuf>,
        /// Write the homomorphism here.
        #[arg(long, value_name = "PATH")]
        hom: Option<PathBuf>,
    },
    /// Check a homomorphism file against a graph and a target.
    Verify {
        graph: PathBuf,
        target: PathBuf,
        hom: PathBuf,
    },
    /// Try every k-edge-coloring of a graph against a target.
    CheckUniversal {
        target: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Smallest complete target universal for all given graphs.
    MinTarget {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long)]
        k: u32,
        #[arg(long = "max-p")]
        max_p: usize,
    },
    /// Closed-form bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Planar graphs: lower k^3 and the upper bound with r = 5, d = 3.
    Planar {
        #[arg(long)]
        k: u64,
    },
    /// Density bounds for graphs of genus G.
    Genus {
        #[arg(long)]
        g: u64,
    },
    /// Upper bound 8dr^4 C(8dr^4, d) k^d.
    #[command(alias = "theorem4")]
    Upper {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } => 3,
            Error::NotUniversal { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: output text and exit code.
struct Report {
    code: u8,
    body: String,
}

type Outcome = Result<Report, Failure>;

fn ok(body: String) -> Outcome {
    Ok(Report { code: 0, body })
}

fn negative(body: String) -> Outcome {
    Ok(Report { code: 1, body })
}

fn emit(format: Format, value: Value, text: String) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(&value).expect("json")),
        Format::Text => text,
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_colored(path: &Path) -> Result<EdgeColoredGraph, Failure> {
    io::parse_edge_colored(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

enum Target {
    Compact(UniversalTarget),
    Explicit(EdgeColoredGraph),
}

impl Target {
    fn as_colored(&self) -> &dyn ColoredTarget {
        match self {
            Target::Compact(t) => t,
            Target::Explicit(g) => g,
        }
    }
}

/// A target file holds either a `{q, d, k}` JSON header or an explicit graph.
fn load_target(path: &Path) -> Result<Target, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let header: TargetHeader = serde_json::from_str(&text)
            .map_err(|e| Failure::usage(format!("{}: bad target header: {e}", path.display())))?;
        Ok(Target::Compact(UniversalTarget::from_header(header)?))
    } else {
        Ok(Target::Explicit(io::parse_edge_colored(&text).map_err(|e| {
            Failure::usage(format!("{}: {e}", path.display()))
        })?))
    }
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var("ECTARGET_GUARD_OVERRIDE") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&f| f >= 1)
            .map(Limits::scaled)
            .ok_or_else(|| Failure::usage("ECTARGET_GUARD_OVERRIDE must be a positive integer factor")),
        Err(_) => Ok(Limits::default()),
    }
}

fn density(format: Format, path: &Path) -> Outcome {
    let g = load_graph(path)?;
    let d = densest_subgraph(&g);
    ok(emit(
        format,
        json!({"density": d.value.to_string(), "witness": d.witness}),
        format!(
            "density {}\nwitness {}\n",
            d.value,
            d.witness.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        ),
    ))
}

fn orientation_json(o: &OrientedGraph) -> Value {
    json!({
        "feasible": true,
        "max_in_degree": o.max_in_degree(),
        "arcs": o.arcs().map(|(t, h)| [t, h]).collect::<Vec<_>>(),
    })
}

fn orient(format: Format, path: &Path, d: Option<usize>) -> Outcome {
    let g = load_graph(path)?;
    let oriented = match d {
        None => min_orientation(&g).1,
        Some(d) => match find_orientation(&g, d) {
            Orientation::Feasible(o) => o,
            Orientation::Infeasible { witness, edges } => {
                let value = json!({"feasible": false, "d": d, "witness": witness, "witness_edges": edges});
                let text = format!(
                    "infeasible: {} vertices span {edges} edges > {d} * {}\nwitness {}\n",
                    witness.len(),
                    witness.len(),
                    witness.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                );
                return negative(emit(format, value, text));
            }
        },
    };
    if d.is_some_and(|d| oriented.max_in_degree() > d) {
        return Err(Failure::usage("internal: orientation failed verification"));
    }
    ok(emit(format, orientation_json(&oriented), io::serialize_oriented(&oriented, None)))
}

fn star_color(format: Format, seed: u64, path: &Path, exact: Option<usize>) -> Outcome {
    let g = load_graph(path)?;
    let coloring = match exact {
        None => greedy_star_coloring(&g, seed),
        Some(c) => match exact_star_coloring_with(&g, c, &limits()?)? {
            Some(col) => col,
            None => {
                return negative(emit(
                    format,
                    json!({"found": false, "max_colors": c}),
                    format!("no star coloring with at most {c} colors\n"),
                ))
            }
        },
    };
    if !verify_star(&g, &coloring) {
        return Err(Failure::usage("internal: star coloring failed verification"));
    }
    ok(emit(
        format,
        json!({"found": true, "palette": coloring.palette(), "colors": coloring.colors(), "verified": true}),
        io::serialize_coloring(&coloring),
    ))
}

fn out_color(format: Format, seed: u64, path: &Path, orientation: &Path) -> Outcome {
    let g = load_graph(path)?;
    let (oriented, _, _) = io::parse_oriented(&read(orientation)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", orientation.display())))?;
    if oriented.graph() != &g {
        return Err(Error::OrientationMismatch.into());
    }
    let star = greedy_star_coloring(&g, seed);
    let cert = build_out_coloring(&oriented, &star)?;
    if !verify_out_coloring(&oriented, &cert.coloring) {
        return Err(Failure::usage("internal: out-coloring failed verification"));
    }
    let value = json!({
        "palette": cert.coloring.palette(),
        "budget": cert.budget.to_string(),
        "rule_counts": cert.rule_counts(),
        "aux_max_in_degree": cert.aux_max_in_degree,
        "star_palette": star.palette(),
        "colors": cert.coloring.colors(),
        "verified": true,
    });
    ok(emit(format, value, cert.to_text()))
}

fn build_target(format: Format, q: usize, d: usize, k: u32, list: bool, explicit: Option<&Path>) -> Outcome {
    let target = UniversalTarget::build(q, d, k)?;
    let header = target.header();
    if let Some(path) = explicit {
        write(path, &io::serialize(&target.to_edge_colored()?))?;
    }
    let tuples = if list { Some(target.tuples(&limits()?)?) } else { None };
    let mut value = json!({
        "q": header.q,
        "d": header.d,
        "k": header.k,
        "vertices": target.len().to_string(),
        "size_bound": target_size_bound(q, header.d, k).to_string(),
    });
    let mut text = format!(
        "{}\nvertices {}\n",
        serde_json::to_string(&header).expect("json"),
        target.len()
    );
    if let Some(tuples) = tuples {
        value["tuples"] = json!(tuples);
        for (id, t) in tuples.iter().enumerate() {
            let parts: Vec<String> = t.iter().map(u32::to_string).collect();
            text.push_str(&format!("{id} {}\n", parts.join(" ")));
        }
    }
    ok(emit(format, value, text))
}

fn map(
    format: Format,
    seed: u64,
    path: &Path,
    k: Option<u32>,
    target_out: Option<&Path>,
    hom_out: Option<&Path>,
) -> Outcome {
    let mut colored = load_colored(path)?;
    if let Some(k) = k {
        let (graph, _, colors) = colored.into_parts();
        colored = EdgeColoredGraph::new(graph, k, colors)?;
    }
    let g = colored.graph();
    let density = densest_subgraph(g);
    let (d, oriented) = min_orientation(g);
    let star = greedy_star_coloring(g, seed);
    if !verify_star(g, &star) {
        return Err(Failure::usage("internal: star coloring failed verification"));
    }
    let cert = build_out_coloring(&oriented, &star)?;
    let target = UniversalTarget::build(cert.coloring.palette(), d, colored.k())?;
    let hom = build_homomorphism(&colored, &oriented, &cert.coloring, &target)?;
    if !verify_homomorphism(&colored, &target, &hom) {
        return Err(Failure::usage("internal: homomorphism failed verification"));
    }
    let header = target.header();
    if let Some(p) = target_out {
        write(p, &format!("{}\n", serde_json::to_string(&header).expect("json")))?;
    }
    if let Some(p) = hom_out {
        write(p, &io::serialize_homomorphism(&hom))?;
    }
    let value = json!({
        "n": g.n(),
        "m": g.m(),
        "k": colored.k(),
        "density": density.value.to_string(),
        "in_degree": d,
        "star_palette": star.palette(),
        "out_palette": cert.coloring.palette(),
        "out_budget": cert.budget.to_string(),
        "aux_max_in_degree": cert.aux_max_in_degree,
        "target": header,
        "target_vertices": target.len().to_string(),
        "homomorphism": hom.map,
        "verified": true,
    });
    let text = format!(
        "n {}\nm {}\nk {}\ndensity {}\nin_degree {d}\nstar_palette {}\nout_palette {}\nout_budget {}\n\
         target {}\ntarget_vertices {}\nverified true\n{}",
        g.n(),
        g.m(),
        colored.k(),
        density.value,
        star.palette(),
        cert.coloring.palette(),
        cert.budget,
        serde_json::to_string(&header).expect("json"),
        target.len(),
        io::serialize_homomorphism(&hom)
    );
    ok(emit(format, value, text))
}

fn verify(format: Format, graph: &Path, target: &Path, hom: &Path) -> Outcome {
    let colored = load_colored(graph)?;
    let target = load_target(target)?;
    let hom = io::parse_homomorphism(&read(hom)?).map_err(|e| Failure::usage(format!("{}: {e}", hom.display())))?;
    let good = verify_homomorphism(&colored, target.as_colored(), &hom);
    let body = emit(format, json!({"verified": good}), format!("verified {good}\n"));
    if good {
        ok(body)
    } else {
        negative(body)
    }
}

fn check_universal_cmd(format: Format, target: &Path, graph: &Path, k: u32) -> Outcome {
    let limits = limits()?;
    let target = load_target(target)?;
    let g = load_graph(graph)?;
    match check_universal_with(target.as_colored(), &g, k, &limits)? {
        Universality::Universal => ok(emit(format, json!({"universal": true}), "universal true\n".into())),
        Universality::Counterexample(c) => {
            let text = io::serialize(&c);
            negative(emit(
                format,
                json!({"universal": false, "counterexample": text}),
                format!("universal false\n{text}"),
            ))
        }
    }
}

fn min_target(format: Format, paths: &[PathBuf], k: u32, max_p: usize) -> Outcome {
    let limits = limits()?;
    let graphs = paths.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
    let lower: Vec<Value> = graphs
        .iter()
        .map(|g| {
            let b = universal_lower_bound(g, k as u64);
            json!({"exponent": b.exponent.to_string(), "approx": b.approx, "ceil": b.ceil().to_string()})
        })
        .collect();
    match min_universal_size_with(&graphs, k, max_p, &limits)? {
        Some((size, target)) => {
            let text = io::serialize(&target);
            ok(emit(
                format,
                json!({"size": size, "target": text, "lower_bounds": lower}),
                format!("size {size}\n{text}"),
            ))
        }
        None => negative(emit(
            format,
            json!({"size": null, "exceeds": max_p, "lower_bounds": lower}),
            format!("no universal target with at most {max_p} vertices\n"),
        )),
    }
}

fn bounds(format: Format, which: &BoundsCommand) -> Outcome {
    let (value, text) = match *which {
        BoundsCommand::Planar { k } => {
            let r = planar_bounds(k)?;
            (json!(r), format!("lower {}\nupper {}\n", r.lower, r.upper))
        }
        BoundsCommand::Upper { r, d, k } => {
            let rep = upper_report(r, d, k)?;
            (json!(rep), format!("upper {}\n", rep.upper))
        }
        BoundsCommand::Genus { g } => {
            let b = genus_density_bounds(g)?;
            let value = json!({
                "g": b.g,
                "t": b.t,
                "lower": b.lower.to_string(),
                "upper": b.upper.to_string(),
                "lower_approx": format!("{:.15}", b.lower_approx),
                "upper_approx": format!("{:.15}", b.upper_approx),
            });
            let text = format!(
                "lower {} ~ {:.15}\nupper {} ~ {:.15}\nt {}\n",
                b.lower, b.lower_approx, b.upper, b.upper_approx, b.t
            );
            (value, text)
        }
    };
    ok(emit(format, value, text))
}

fn run(cli: Cli) -> Outcome {
    let (format, seed) = (cli.format, cli.seed);
    match &cli.command {
        Command::Density { graph } => density(format, graph),
        Command::Orient { graph, d } => orient(format, graph, *d),
        Command::StarColor { graph, exact } => star_color(format, seed, graph, *exact),
        Command::OutColor { graph, orientation } => out_color(format, seed, graph, orientation),
        Command::BuildTarget {
            q,
            d,
            k,
            list,
            explicit,
        } => build_target(format, *q, *d, *k, *list, explicit.as_deref()),
        Command::Map { graph, k, target, hom } => map(format, seed, graph, *k, target.as_deref(), hom.as_deref()),
        Command::Verify { graph, target, hom } => verify(format, graph, target, hom),
        Command::CheckUniversal { target, graph, k } => check_universal_cmd(format, target, graph, *k),
        Command::MinTarget { graphs, k, max_p } => min_target(format, graphs, *k, *max_p),
        Command::Bounds { which } => bounds(format, which),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.body);
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
