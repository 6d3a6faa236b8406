//! Command-line interface: structural analysis, connection numbers,
//! colorings and their verification, line graphs, and trajectory queries,
//! all reported as JSON with a fixed field order.

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cfc::coloring::construct_cfc_coloring_with;
use cfc::generators;
use cfc::graph::Edge;
use cfc::solver::{
    cfc_exact_with, cfc_iterated_with, cfc_oracle_with, k0_with, verify_cfc_with, CfcResult,
    IteratedCfc, K0Result, Limits, OracleMode, SolveMode,
};
use cfc::structure::{
    block_decomposition, classify_cut_components_with, is_claw_free, is_two_connected,
    is_two_edge_connected, Block, CutComponent,
};
use cfc::{EdgeColoring, Error, Graph};

#[derive(Parser)]
#[command(
    name = "cfc",
    version,
    about = "Conflict-free connection numbers of graphs",
    long_about = "Computes conflict-free connection numbers: the fewest edge colors such that \
                  every vertex pair is joined by a path carrying some color exactly once. \
                  Reads edge lists ('u v' per line, '#' comments) or a subset of DOT."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Omit timing fields so the output is byte-stable.
    #[arg(long, global = true)]
    quiet: bool,

    /// Edge budget for the exhaustive search and for pairwise verification
    /// (defaults: 12 for search, 24 for verification).
    #[arg(long, global = true, value_name = "N")]
    max_edges: Option<usize>,

    /// Largest color count the exhaustive search may try (default 16).
    #[arg(long, global = true, value_name = "N")]
    max_colors: Option<usize>,

    /// Largest edge count a line-graph iterate may reach (default 50000).
    #[arg(long, global = true, value_name = "N")]
    edge_cap: Option<usize>,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (edge list or DOT); "-" reads standard input.
    #[arg(value_name = "FILE", required_unless_present = "demo", conflicts_with = "demo")]
    file: Option<PathBuf>,

    /// Built-in graph instead of a file: path-N, star-N (N leaves),
    /// complete-N, paw, bowtie, triangle-chain[-T], petersen, spider[-LxK].
    #[arg(long, value_name = "NAME")]
    demo: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: shape flags, bridges, blocks, cut components.
    Analyze(GraphInput),
    /// The conflict-free connection number, with method and certificate.
    Cfc {
        #[command(flatten)]
        input: GraphInput,
        /// auto: closed forms, search as fallback; formula: closed forms
        /// only; oracle: search only.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Construct an optimal coloring.
    Color {
        #[command(flatten)]
        input: GraphInput,
        /// Also write the coloring JSON to this file.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check a coloring against the graph, pair by pair.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Coloring JSON file, as produced by `color`.
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
    },
    /// The (iterated) line graph, printed as an edge list.
    Line {
        #[command(flatten)]
        input: GraphInput,
        /// How many times to apply the operation.
        #[arg(short = 'k', long = "iterations", default_value_t = 1)]
        k: usize,
        /// Append comment lines mapping each vertex to its source edge.
        #[arg(long)]
        provenance: bool,
    },
    /// Connection numbers of the first k line-graph iterates.
    Iterate {
        #[command(flatten)]
        input: GraphInput,
        /// Largest iterate to report.
        #[arg(short = 'k', long = "iterations")]
        k: usize,
    },
    /// Where the trajectory of iterated values reaches 2.
    K0(GraphInput),
    /// Exhaustive search, ignoring all closed forms.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Enumerate without pruning (same result, slower).
        #[arg(long)]
        naive: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Formula,
    Oracle,
}

#[derive(Serialize)]
struct GraphSummary {
    vertices: usize,
    edges: usize,
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    schema: u32,
    command: &'static str,
    graph: GraphSummary,
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct AnalyzeBody {
    connected: bool,
    complete: bool,
    path: bool,
    star: bool,
    claw_free: bool,
    two_edge_connected: bool,
    two_connected: bool,
    bridges: Vec<Edge>,
    cut_vertices: Vec<String>,
    blocks: Vec<Block>,
    cut_components: Vec<CutComponent>,
    p: usize,
    h: usize,
}

#[derive(Serialize)]
struct ResultBody {
    result: CfcResult,
}

#[derive(Serialize)]
struct ColorBody {
    num_colors: usize,
    coloring: EdgeColoring,
}

#[derive(Serialize)]
struct VerifyBody {
    status: &'static str,
    num_colors: usize,
    checked_pairs: usize,
    failing_pair: Option<(String, String)>,
}

#[derive(Serialize)]
struct IterateBody {
    trajectory: Vec<IteratedCfc>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            e.exit()
        }
        Err(e) => {
            let _ = e.print();
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

/// 1: unusable input (parse, disconnected, unknown vertices, preconditions,
/// internal bugs). 2: a coloring that does not fit the graph. 3: no closed
/// form under --method formula. 4: the input was understood but exceeds a
/// resource limit.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Disconnected
        | Error::UnknownVertex(_)
        | Error::Precondition(_)
        | Error::Internal(_) => 1,
        Error::InvalidColoring(_) | Error::PartialColoring { .. } | Error::AlienEdges { .. } => 2,
        Error::NoFormulaApplies => 3,
        Error::ScaleLimit { .. }
        | Error::EdgeCapExceeded { .. }
        | Error::ComponentUndecidable { .. }
        | Error::SearchBudget { .. } => 4,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_edges {
        limits.oracle_max_edges = n;
        limits.verify_max_edges = n;
    }
    if let Some(n) = cli.max_colors {
        limits.max_colors = n;
    }
    if let Some(n) = cli.edge_cap {
        limits.edge_cap = n;
    }
    let started = Instant::now();
    let quiet = cli.quiet;

    match cli.command {
        Command::Analyze(input) => {
            let g = load_graph(&input)?;
            let structure = classify_cut_components_with(&g, &limits)?;
            let blocks = if g.vertex_count() >= 2 {
                block_decomposition(&g)?
            } else {
                cfc::structure::BlockDecomposition {
                    blocks: Vec::new(),
                    cut_vertices: Vec::new(),
                    tree: Vec::new(),
                }
            };
            let body = AnalyzeBody {
                connected: true,
                complete: g.is_complete(),
                path: g.is_path(),
                star: g.is_star(),
                claw_free: is_claw_free(&g),
                two_edge_connected: is_two_edge_connected(&g),
                two_connected: is_two_connected(&g),
                bridges: structure.bridges.clone(),
                cut_vertices: blocks.cut_vertices,
                blocks: blocks.blocks,
                cut_components: structure.components,
                p: structure.p,
                h: structure.h,
            };
            emit("analyze", &g, body, started, quiet);
        }
        Command::Cfc { input, method } => {
            let g = load_graph(&input)?;
            let mode = match method {
                MethodArg::Auto => SolveMode::Auto,
                MethodArg::Formula => SolveMode::FormulaOnly,
                MethodArg::Oracle => SolveMode::OracleOnly,
            };
            let result = cfc_exact_with(&g, &limits, mode)?;
            emit("cfc", &g, ResultBody { result }, started, quiet);
        }
        Command::Color { input, output } => {
            let g = load_graph(&input)?;
            let coloring = construct_cfc_coloring_with(&g, &limits)?;
            if let Some(path) = output {
                std::fs::write(&path, coloring.to_json_pretty() + "\n").map_err(|e| {
                    Error::Precondition(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let body = ColorBody { num_colors: coloring.num_colors(), coloring };
            emit("color", &g, body, started, quiet);
        }
        Command::Verify { input, coloring } => {
            let g = load_graph(&input)?;
            let text = std::fs::read_to_string(&coloring).map_err(|e| {
                Error::Precondition(format!("cannot read {}: {e}", coloring.display()))
            })?;
            let coloring = EdgeColoring::from_json_for_graph(&text, &g)?;
            let verification = verify_cfc_with(&g, &coloring, &limits)?;
            let body = VerifyBody {
                status: if verification.ok { "PASS" } else { "FAIL" },
                num_colors: coloring.num_colors(),
                checked_pairs: verification.checked_pairs,
                failing_pair: verification.failing_pair,
            };
            emit("verify", &g, body, started, quiet);
        }
        Command::Line { input, k, provenance } => {
            let g = load_graph(&input)?;
            let result = cfc::line_graph::iterated_line_graph(&g, k, limits.edge_cap)?;
            let mut text = format!(
                "# vertices: {}\n# edges: {}\n{}",
                result.graph.vertex_count(),
                result.graph.edge_count(),
                result.graph.render_edge_list()
            );
            if provenance {
                text.push_str("# provenance\n");
                for (vertex, edge) in &result.provenance {
                    text.push_str(&format!(
                        "# {vertex} <- {} {}\n",
                        edge.endpoints().0,
                        edge.endpoints().1
                    ));
                }
            }
            write_stdout(&text);
        }
        Command::Iterate { input, k } => {
            let g = load_graph(&input)?;
            let trajectory = cfc_iterated_with(&g, k, &limits)?;
            emit("iterate", &g, IterateBody { trajectory }, started, quiet);
        }
        Command::K0(input) => {
            let g = load_graph(&input)?;
            let result: K0Result = k0_with(&g, &limits)?;
            emit("k0", &g, result, started, quiet);
        }
        Command::Oracle { input, naive } => {
            let g = load_graph(&input)?;
            let mode = if naive { OracleMode::Naive } else { OracleMode::Pruned };
            let result = cfc_oracle_with(&g, &limits, mode)?;
            emit("oracle", &g, ResultBody { result }, started, quiet);
        }
    }
    Ok(())
}

fn emit<T: Serialize>(command: &'static str, g: &Graph, body: T, started: Instant, quiet: bool) {
    let report = Report {
        schema: 1,
        command,
        graph: GraphSummary { vertices: g.vertex_count(), edges: g.edge_count() },
        body,
        elapsed_ms: if quiet { None } else { Some(started.elapsed().as_millis()) },
    };
    let mut rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    rendered.push('\n');
    write_stdout(&rendered);
}

/// Writes to stdout, treating a closed pipe as a normal exit rather than a
/// panic (so `cfc ... | head` stays quiet).
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, Error> {
    let g = if let Some(name) = &input.demo {
        demo_graph(name)?
    } else {
        let path = input.file.as_ref().expect("clap enforces file xor demo");
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Precondition(format!("cannot read standard input: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?
        };
        Graph::parse(&text)?
    };
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

fn demo_graph(name: &str) -> Result<Graph, Error> {
    let bad = |msg: String| Error::Precondition(msg);
    let parse_n = |s: &str, what: &str| {
        s.parse::<usize>().map_err(|_| bad(format!("invalid {what} in demo name: {s:?}")))
    };
    match name {
        "paw" => return Ok(generators::paw()),
        "bowtie" => return Ok(generators::bowtie()),
        "petersen" => return Ok(generators::petersen()),
        "triangle-chain" => return Ok(generators::triangle_chain(2)),
        "spider" => return Ok(generators::spider(3, 2)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("path-") {
        let n = parse_n(rest, "vertex count")?;
        if n == 0 {
            return Err(bad("path-N needs N >= 1".to_string()));
        }
        return Ok(generators::path_graph(n));
    }
    if let Some(rest) = name.strip_prefix("star-") {
        let n = parse_n(rest, "leaf count")?;
        if n == 0 {
            return Err(bad("star-N needs N >= 1".to_string()));
        }
        return Ok(generators::star_graph(n));
    }
    if let Some(rest) = name.strip_prefix("complete-") {
        let n = parse_n(rest, "vertex count")?;
        if n == 0 {
            return Err(bad("complete-N needs N >= 1".to_string()));
        }
        return Ok(generators::complete_graph(n));
    }
    if let Some(rest) = name.strip_prefix("triangle-chain-") {
        let t = parse_n(rest, "triangle count")?;
        if t == 0 {
            return Err(bad("triangle-chain-T needs T >= 1".to_string()));
        }
        return Ok(generators::triangle_chain(t));
    }
    if let Some(rest) = name.strip_prefix("spider-") {
        let (legs, len) = rest
            .split_once('x')
            .ok_or_else(|| bad(format!("spider demo must look like spider-LxK, got {name:?}")))?;
        let legs = parse_n(legs, "leg count")?;
        let len = parse_n(len, "leg length")?;
        if legs < 3 || len == 0 {
            return Err(bad("spider-LxK needs L >= 3 and K >= 1".to_string()));
        }
        return Ok(generators::spider(legs, len));
    }
    Err(bad(format!(
        "unknown demo {name:?}; expected path-N, star-N, complete-N, paw, bowtie, \
         triangle-chain[-T], petersen, or spider[-LxK]"
    )))
}
