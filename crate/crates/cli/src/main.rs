mod batch;
mod input;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use input::{emit, load_graph, load_rep, GraphFormat, Loaded};
use overlap_core::bounds::{certify, BoundCertificate, BoundError, BoundsOptions, BoundsReport};
use overlap_core::constructions::{
    clique_rep, decomposition_rep, default_edge, edge_bound_rep, greedy_triangle_decomposition, small_graph_rep,
    CliqueDecomposition,
};
use overlap_core::exact::{exact_phi_reduced, solve, SearchConfig, SearchStatus, VertexOrder};
use overlap_core::families;
use overlap_core::graph::{to_edge_list, to_graph6};
use overlap_core::model::to_text;
use overlap_core::planar::{plan_decompose, planar_phi_upper, planar_pol_upper, to_rotation_text, PlaneGraph};
use overlap_core::tree::{skeleton, tree_overlap_rep};
use overlap_core::{verify, Graph, OverlapRep, Quantity, RepKind};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Failures with a dedicated exit status.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Verify(String),
    Budget(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Verify(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Precondition(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Verify(m) => write!(f, "verification failed: {m}"),
            Failure::Budget(m) => write!(f, "node budget exceeded: {m}"),
            Failure::Precondition(m) => write!(f, "precondition unmet: {m}"),
        }
    }
}

impl std::error::Error for Failure {}

fn precondition(e: impl fmt::Display) -> Failure {
    Failure::Precondition(e.to_string())
}

fn bound_failure(e: BoundError) -> Failure {
    match e {
        BoundError::Verify(_) | BoundError::SizeMismatch { .. } | BoundError::Overclaimed { .. } => {
            Failure::Verify(e.to_string())
        }
        _ => Failure::Precondition(e.to_string()),
    }
}

/// Overlap representations of graphs: constructions, verification, exact
/// search and certified bounds.
#[derive(Parser)]
#[command(name = "overlap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Not accepted: every computation is deterministic.
    #[arg(long, global = true, hide = true)]
    seed: Option<String>,
}

#[derive(Args, Clone)]
struct GraphInput {
    /// Graph file (`-` for standard input).
    graph: PathBuf,
    /// Input format.
    #[arg(long, value_enum, default_value = "auto")]
    format: GraphFormat,
}

impl GraphInput {
    fn load(&self) -> Result<Loaded> {
        load_graph(&self.graph, self.format)
    }
}

#[derive(Args, Clone)]
struct SearchArgs {
    /// Node budget for exhaustive search.
    #[arg(long, env = "OVERLAP_NODE_BUDGET")]
    budget: Option<u64>,
    /// Search the top of the tree in parallel.
    #[arg(long)]
    parallel: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig { node_limit: self.budget, parallel: self.parallel, ..SearchConfig::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Skeleton of a tree and its caterpillar decomposition.
    Skeleton {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Optimal overlap representation of a tree.
    TreeRep {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Checks a representation (or an upper certificate) against a graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Representation or certificate file.
        rep: PathBuf,
        #[arg(long, default_value = "overlap")]
        kind: RepKind,
    },
    /// Builds a representation with one construction and prints its certificate.
    Construct {
        #[arg(value_enum)]
        method: Method,
        #[command(flatten)]
        input: GraphInput,
        /// Edge `u v` for the edge-bound construction.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<usize>>,
        /// Pure representation (planar method only).
        #[arg(long)]
        pure: bool,
        /// Also write the bare representation here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decomposes a plane graph (rotation system) into edges and facial triangles.
    DecomposePlanar {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Computes φ or Φ by exhaustive search.
    Exact {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "phi")]
        quantity: Quantity,
        #[arg(long)]
        t_min: Option<usize>,
        #[arg(long, default_value_t = 16)]
        t_max: usize,
        /// Branch on vertices in id order instead of reverse degeneracy order.
        #[arg(long)]
        natural_order: bool,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness representation here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// All certificates for a graph, and the value when the bounds meet.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "phi")]
        quantity: Quantity,
        /// Run exhaustive search up to this many (reduced) vertices.
        #[arg(long, default_value_t = 6)]
        exact_threshold: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Writes graphs of a family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Certifies every graph file in a directory and prints a CSV table.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: GraphFormat,
        #[arg(long, default_value_t = 6)]
        exact_threshold: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// One label per edge except a chosen edge (minimum degree 2, not a book).
    EdgeBound,
    /// Greedy triangles plus single edges as a clique decomposition.
    Decomp,
    /// Planar construction; needs a rotation system.
    Planar,
    /// Representation of a complete graph.
    Clique,
    /// Graphs on at most five vertices.
    Small,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Edges,
    Graph6,
}

#[derive(Args)]
struct Out {
    /// Output file; standard output if absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edges")]
    format: OutFormat,
}

#[derive(Subcommand)]
enum Family {
    /// K_{⌊n/2⌋,⌈n/2⌉} minus a matching of size ⌊n/2⌋.
    BicliqueMinusMatching {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Plane graph with all faces of length four (rotation system).
    Quadrangulation {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n − 2 triangles sharing an edge.
    Book {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Spine path with the given number of leaves at each spine vertex.
    Caterpillar {
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Paths of the given lengths joined at a centre.
    Spider {
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Spider with k legs of length two.
    SkeletonSample {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Out,
    },
    /// All trees on n vertices, one file each.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value = "edges")]
        format: OutFormat,
    },
    /// All connected graphs on n vertices, one file each.
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value = "edges")]
        format: OutFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.seed.is_some() {
        eprintln!("error: --seed is not supported; all computations are deterministic");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.chain().find_map(|c| c.downcast_ref::<Failure>()).map_or(1, Failure::code);
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Skeleton { input } => cmd_skeleton(&input.load()?.graph),
        Command::TreeRep { input, output } => {
            let g = input.load()?.graph;
            let rep = tree_overlap_rep(&g).map_err(precondition)?;
            check(&g, &rep, RepKind::Overlap)?;
            emit(output.as_deref(), &to_text(&rep))
        }
        Command::Verify { input, rep, kind } => {
            let g = input.load()?.graph;
            let rep = load_rep(&rep)?;
            match verify(&g, &rep, kind) {
                Ok(()) => {
                    println!("ok {kind} size {}", rep.size());
                    Ok(())
                }
                Err(e) => {
                    if let overlap_core::model::VerifyError::Violations(list) = &e {
                        for v in list {
                            println!("{v}");
                        }
                    }
                    Err(Failure::Verify(e.to_string()).into())
                }
            }
        }
        Command::Construct { method, input, edge, pure, output } => {
            let loaded = input.load()?;
            let cert = construct(method, &loaded, edge.as_deref(), pure)?;
            cert.recheck(&loaded.graph).map_err(bound_failure)?;
            if let Some(path) = output.as_deref() {
                emit(Some(path), &to_text(cert.witness.as_ref().unwrap()))?;
            }
            emit(None, &cert.to_text())
        }
        Command::DecomposePlanar { input } => {
            let plane = require_plane(input.load()?)?;
            let d = plan_decompose(&plane).map_err(precondition)?;
            print!("{d}");
            Ok(())
        }
        Command::Exact { input, quantity, t_min, t_max, natural_order, search, witness } => {
            let g = input.load()?.graph;
            let cfg = SearchConfig {
                t_min,
                t_max,
                order: if natural_order { VertexOrder::Natural } else { VertexOrder::ReverseDegeneracy },
                ..search.config()
            };
            let res = match quantity {
                Quantity::Phi => exact_phi_reduced(&g, &cfg),
                Quantity::Pol => solve(&g, quantity, &cfg),
            }
            .map_err(precondition)?;
            if let Some(w) = &res.witness {
                check(&g, w, quantity.kind())?;
                if let Some(path) = witness.as_deref() {
                    emit(Some(path), &to_text(w))?;
                }
            }
            println!("quantity {quantity}\nvalue {}\nstatus {}\nnodes {}", res.value, res.status, res.nodes);
            match res.status {
                SearchStatus::BudgetExceeded => {
                    Err(Failure::Budget(format!("{} ≥ {} after {} nodes", quantity, res.value, res.nodes)).into())
                }
                SearchStatus::Exhausted => {
                    Err(precondition(format!("no representation with at most {t_max} labels")).into())
                }
                _ => Ok(()),
            }
        }
        Command::Bounds { input, quantity, exact_threshold, search } => {
            let loaded = input.load()?;
            let opts = BoundsOptions { exact_threshold, search: search.config() };
            let report =
                certify(&loaded.graph, quantity, loaded.plane.as_ref(), &opts).map_err(bound_failure)?;
            print_report(&report, &loaded.graph)?;
            if report.exact.as_ref().is_some_and(|r| r.status == SearchStatus::BudgetExceeded) && report.pinned().is_none() {
                return Err(Failure::Budget("exact search stopped before the bounds met".into()).into());
            }
            Ok(())
        }
        Command::Generate { family } => generate(family),
        Command::Batch { dir, format, exact_threshold, search, output } => {
            let opts = BoundsOptions { exact_threshold, search: search.config() };
            let table = batch::run(&dir, format, &opts)?;
            emit(output.as_deref(), &table.csv)?;
            if table.failures > 0 {
                eprintln!("{} file(s) failed; see the lower_rule column", table.failures);
            }
            Ok(())
        }
    }
}

fn check(g: &Graph, rep: &OverlapRep, kind: RepKind) -> Result<(), Failure> {
    verify(g, rep, kind).map_err(|e| Failure::Verify(e.to_string()))
}

fn require_plane(loaded: Loaded) -> Result<PlaneGraph, Failure> {
    loaded.plane.ok_or_else(|| precondition("a rotation-system input is required"))
}

fn cmd_skeleton(g: &Graph) -> Result<()> {
    let s = skeleton(g).map_err(precondition)?;
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    println!("size {}", s.size());
    println!("vertices {}", join(&s.vertices));
    for step in &s.steps {
        let mut line = String::from("caterpillar");
        if let Some(a) = step.attachment {
            line.push_str(&format!(" attach {a}"));
        }
        line.push_str(&format!(" spine {}", join(&step.spine)));
        if !step.legs.is_empty() {
            let legs: Vec<String> = step.legs.iter().map(|(l, s)| format!("{l}-{s}")).collect();
            line.push_str(&format!(" legs {}", legs.join(" ")));
        }
        println!("{line}");
    }
    Ok(())
}

fn construct(method: Method, loaded: &Loaded, edge: Option<&[usize]>, pure: bool) -> Result<BoundCertificate> {
    let g = &loaded.graph;
    let phi = |rep: OverlapRep, rule: &str| BoundCertificate::upper(Quantity::Phi, rep, rule);
    let pol = |rep: OverlapRep, rule: &str| BoundCertificate::upper(Quantity::Pol, rep, rule);
    Ok(match method {
        Method::EdgeBound => {
            let (u, v) = match edge {
                Some(&[u, v]) => (u, v),
                _ => default_edge(g).ok_or_else(|| precondition("graph has no edge"))?,
            };
            phi(edge_bound_rep(g, u, v).map_err(precondition)?, &format!("edge-bound {u} {v}"))
        }
        Method::Decomp => {
            let f = greedy_triangle_decomposition(g);
            let triangles = f.parts.iter().filter(|p| p.len() == 3).count();
            let rep = decomposition_rep(g, &f)
                .or_else(|_| decomposition_rep(g, &CliqueDecomposition::edges(g)))
                .map_err(precondition)?;
            let rule = if rep.size() == f.len() { format!("decomposition triangles {triangles}") } else { "decomposition edges".into() };
            pol(rep, &rule)
        }
        Method::Planar => {
            let plane = loaded.plane.as_ref().ok_or_else(|| precondition("a rotation-system input is required"))?;
            if pure {
                let (rep, route) = planar_pol_upper(plane).map_err(precondition)?;
                pol(rep, &format!("planar {route}"))
            } else {
                let (rep, route) = planar_phi_upper(plane).map_err(precondition)?;
                phi(rep, &format!("planar {route}"))
            }
        }
        Method::Clique => {
            if !g.is_complete() || g.n() == 0 {
                bail!(precondition("graph is not a nonempty complete graph"));
            }
            pol(clique_rep(g.n()), "clique")
        }
        Method::Small => {
            let (rep, rule) = small_graph_rep(g).map_err(precondition)?;
            phi(rep, &format!("small {rule}"))
        }
    })
}

fn print_report(report: &BoundsReport, g: &Graph) -> Result<()> {
    for c in report.lower.iter().chain(std::iter::once(&report.upper)) {
        c.recheck(g).map_err(bound_failure)?;
        print!("{c}");
    }
    if let Some(r) = &report.exact {
        println!("# exact search: status {} value {} nodes {}", r.status, r.value, r.nodes);
    }
    let low = report.best_lower();
    let pinned = report.pinned().map_or("no".to_string(), |v| v.to_string());
    println!(
        "result {} lower {} ({}) upper {} ({}) pinned {pinned}",
        report.quantity, low.value, low.rule, report.upper.value, report.upper.rule
    );
    Ok(())
}

fn graph_text(g: &Graph, format: OutFormat) -> String {
    match format {
        OutFormat::Edges => to_edge_list(g),
        OutFormat::Graph6 => format!("{}\n", to_graph6(g)),
    }
}

fn generate(family: Family) -> Result<()> {
    let single = |g: Result<Graph, families::FamilyError>, out: Out| -> Result<()> {
        let g = g.map_err(precondition)?;
        emit(out.output.as_deref(), &graph_text(&g, out.format))
    };
    match family {
        Family::BicliqueMinusMatching { n, out } => single(families::gen_biclique_minus_matching(n), out),
        Family::Book { n, out } => single(families::gen_book(n), out),
        Family::Caterpillar { legs, out } => single(families::gen_caterpillar(&legs), out),
        Family::Spider { legs, out } => single(families::gen_spider(&legs), out),
        Family::SkeletonSample { k, out } => single(families::gen_skeleton_sample(k), out),
        Family::Quadrangulation { n, output } => {
            let pg = families::gen_quadrangulation(n).map_err(precondition)?;
            emit(output.as_deref(), &to_rotation_text(&pg))
        }
        Family::Trees { n, out_dir, format } => {
            write_all(&out_dir, "tree", n, &families::enum_trees(n).map_err(precondition)?, format)
        }
        Family::Graphs { n, out_dir, format } => {
            write_all(&out_dir, "graph", n, &families::enum_connected_graphs(n).map_err(precondition)?, format)
        }
    }
}

fn write_all(dir: &Path, stem: &str, n: usize, graphs: &[Graph], format: OutFormat) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let ext = match format {
        OutFormat::Edges => "txt",
        OutFormat::Graph6 => "g6",
    };
    for (i, g) in graphs.iter().enumerate() {
        let path = dir.join(format!("{stem}-n{n}-{i:04}.{ext}"));
        emit(Some(&path), &graph_text(g, format))?;
    }
    println!("{} file(s) written to {}", graphs.len(), dir.display());
    Ok(())
}
