//! Command-line front end: parse graph and line-arrangement files, run the
//! engines and the brute-force oracles, and emit human or JSON reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 brute-force size limit,
//! 4 verification mismatch.

mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chromatica::{
    bond_lattice_characteristic, chambers, characteristic_lines, chromatic, chromatic_traced,
    coloring_count, count_patterns, fp_point_count, inductive_chromatic, leading_coefficients,
    whitney_chromatic, BigInt, ComputationTrace, EngineOptions, Error, Graph, GraphicArrangement,
};

const SCHEMA: &str = "chromatica/1";

#[derive(Parser)]
#[command(
    name = "chromatica",
    version,
    about = "Exact chromatic polynomials and arrangement chamber counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Debug)]
enum Method {
    /// Memoized deletion-contraction with closed forms (default engine)
    Auto,
    /// Spanning-tree growth by bridge / minimal-cycle quotient rules
    Inductive,
    /// Explicit deletion-contraction engine
    Delcontr,
    /// Edge-subset expansion oracle (2^m, size-limited)
    Whitney,
    /// Bond-lattice Möbius-sum oracle (size-limited)
    Lattice,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Inductive => "inductive",
            Method::Delcontr => "delcontr",
            Method::Whitney => "whitney",
            Method::Lattice => "lattice",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of a graph file
    Chromatic {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Also print recursion and rule counters
        #[arg(long)]
        trace: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial and chamber counts of an arrangement
    Chambers {
        path: PathBuf,
        /// Treat the input as a graph file (graphic arrangement); default
        #[arg(long, conflicts_with = "lines")]
        graph: bool,
        /// Treat the input as a projective-line arrangement file
        #[arg(long)]
        lines: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pattern counts and leading coefficients, checked against the expansion
    Coeffs {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every applicable brute-force oracle against the engine
    Check {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the inductive procedure with naive deletion-contraction
    Bench {
        path: PathBuf,
        /// Timing repetitions to average over
        #[arg(long, default_value_t = 1)]
        repeat: u32,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Parse(String),
    TooLarge(String),
    Mismatch(String),
    Other(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::TooLarge(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::TooLarge(m)
            | CliError::Mismatch(m)
            | CliError::Other(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge(_) => CliError::TooLarge(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Chromatic {
            path,
            method,
            trace,
            json,
        } => cmd_chromatic(&path, method, trace, json),
        Command::Chambers {
            path,
            graph,
            lines,
            json,
        } => cmd_chambers(&path, graph, lines, json),
        Command::Coeffs { path, json } => cmd_coeffs(&path, json),
        Command::Check { path, json } => cmd_check(&path, json),
        Command::Bench { path, repeat, json } => cmd_bench(&path, repeat.max(1), json),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    format::parse_graph(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct TraceJson {
    nodes: u64,
    memo_hits: u64,
    bridge_rules: u64,
    minimal_cycle_rules: u64,
    fallbacks: u64,
}

impl From<ComputationTrace> for TraceJson {
    fn from(t: ComputationTrace) -> Self {
        TraceJson {
            nodes: t.recursion_nodes,
            memo_hits: t.memo_hits,
            bridge_rules: t.bridge_rules,
            minimal_cycle_rules: t.minimal_cycle_rules,
            fallbacks: t.fallbacks,
        }
    }
}

fn print_trace(method: Method, t: ComputationTrace) {
    println!("method: {}", method.name());
    println!("nodes: {}", t.recursion_nodes);
    println!("memo hits: {}", t.memo_hits);
    println!("bridge rules: {}", t.bridge_rules);
    println!("minimal-cycle rules: {}", t.minimal_cycle_rules);
    println!("fallbacks: {}", t.fallbacks);
}

#[derive(Serialize)]
struct ChromaticJson {
    schema: &'static str,
    command: &'static str,
    n: usize,
    m: usize,
    method: &'static str,
    coefficients: Vec<String>,
    display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceJson>,
}

fn cmd_chromatic(path: &Path, method: Method, trace: bool, json: bool) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let (chi, counters) = match method {
        Method::Auto | Method::Delcontr => chromatic_traced(&g, EngineOptions::default()),
        Method::Inductive => inductive_chromatic(&g),
        Method::Whitney => (whitney_chromatic(&g)?, ComputationTrace::default()),
        Method::Lattice => (
            bond_lattice_characteristic(&g)?,
            ComputationTrace::default(),
        ),
    };
    if json {
        let report = ChromaticJson {
            schema: SCHEMA,
            command: "chromatic",
            n: g.vertex_count(),
            m: g.edge_count(),
            method: method.name(),
            coefficients: chi.coeff_strings(),
            display: chi.to_string(),
            trace: trace.then(|| counters.into()),
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("chi(G, t) = {chi}");
        if trace {
            print_trace(method, counters);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ChambersJson {
    schema: &'static str,
    command: &'static str,
    input: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    ambient_dim: Option<usize>,
    hyperplanes: usize,
    coefficients: Vec<String>,
    display: String,
    chambers: String,
    bounded_chambers: String,
}

fn cmd_chambers(path: &Path, _graph: bool, lines: bool, json: bool) -> Result<(), CliError> {
    let (input, ambient_dim, hyperplanes, chi) = if lines {
        let text = read_file(path)?;
        let arrangement = format::parse_lines(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let chi = characteristic_lines(&arrangement)?;
        ("lines", None, arrangement.len(), chi)
    } else {
        let g = load_graph(path)?;
        let a = GraphicArrangement::new(g);
        let chi = a.characteristic();
        ("graph", Some(a.ambient_dim()), a.hyperplane_count(), chi)
    };
    let counts = chambers(&chi);
    if json {
        let report = ChambersJson {
            schema: SCHEMA,
            command: "chambers",
            input,
            ambient_dim,
            hyperplanes,
            coefficients: chi.coeff_strings(),
            display: chi.to_string(),
            chambers: counts.chambers.to_string(),
            bounded_chambers: counts.bounded.to_string(),
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("chi(A, t) = {chi}");
        println!("chambers: {}", counts.chambers);
        println!("bounded chambers: {}", counts.bounded);
    }
    Ok(())
}

#[derive(Serialize)]
struct CoeffsJson {
    schema: &'static str,
    command: &'static str,
    n: usize,
    m: usize,
    triangles: u64,
    four_cycles: u64,
    k4: u64,
    diamonds: u64,
    formula: Vec<String>,
    expansion: Vec<String>,
    verdict: &'static str,
}

fn cmd_coeffs(path: &Path, json: bool) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let patterns = count_patterns(&g);
    let formula = leading_coefficients(&g);
    let chi = chromatic(&g);
    let n = g.vertex_count();
    let expansion: Vec<BigInt> = (0..formula.len()).map(|k| chi.coeff(n - k)).collect();
    let matches = formula == expansion;
    let verdict = if matches { "MATCH" } else { "MISMATCH" };
    let render = |v: &[BigInt]| {
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    if json {
        let report = CoeffsJson {
            schema: SCHEMA,
            command: "coeffs",
            n,
            m: g.edge_count(),
            triangles: patterns.triangles,
            four_cycles: patterns.four_cycles,
            k4: patterns.cliques4,
            diamonds: patterns.diamonds,
            formula: formula.iter().map(|c| c.to_string()).collect(),
            expansion: expansion.iter().map(|c| c.to_string()).collect(),
            verdict,
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("n: {}  m: {}", n, g.edge_count());
        println!(
            "patterns: triangles={} four-cycles={} k4={} diamonds={}",
            patterns.triangles, patterns.four_cycles, patterns.cliques4, patterns.diamonds
        );
        println!("formula:   {}", render(&formula));
        println!("expansion: {}", render(&expansion));
        println!("verdict: {verdict}");
    }
    if matches {
        Ok(())
    } else {
        Err(CliError::Mismatch(
            "coefficient formulas disagree with the expansion".into(),
        ))
    }
}

#[derive(Serialize)]
struct CheckJson {
    schema: &'static str,
    command: &'static str,
    n: usize,
    m: usize,
    display: String,
    whitney: &'static str,
    bond_lattice: &'static str,
    coloring_counts: &'static str,
    point_counts: &'static str,
    verdict: String,
}

fn cmd_check(path: &Path, json: bool) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let chi = chromatic(&g);

    let whitney_ok = whitney_chromatic(&g)? == chi;
    let lattice_ok = bond_lattice_characteristic(&g)? == chi;
    let coloring_ks: [u64; 5] = [0, 1, 2, 3, 5];
    let mut coloring_ok = true;
    for k in coloring_ks {
        coloring_ok &= BigInt::from(coloring_count(&g, k)?) == chi.eval_int(k as i64);
    }
    let point_ps: [u64; 3] = [2, 3, 5];
    let mut points_ok = true;
    for p in point_ps {
        points_ok &= BigInt::from(fp_point_count(&g, p)?) == chi.eval_int(p as i64);
    }

    let status = |ok: bool| if ok { "agree" } else { "DISAGREE" };
    let agreeing = [whitney_ok, lattice_ok, coloring_ok, points_ok]
        .iter()
        .filter(|&&ok| ok)
        .count();
    let verdict = format!("{agreeing}/4 oracles agree");
    if json {
        let report = CheckJson {
            schema: SCHEMA,
            command: "check",
            n: g.vertex_count(),
            m: g.edge_count(),
            display: chi.to_string(),
            whitney: status(whitney_ok),
            bond_lattice: status(lattice_ok),
            coloring_counts: status(coloring_ok),
            point_counts: status(points_ok),
            verdict: verdict.clone(),
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("chi(G, t) = {chi}");
        println!("whitney: {}", status(whitney_ok));
        println!("bond-lattice: {}", status(lattice_ok));
        println!("coloring counts (k = 0,1,2,3,5): {}", status(coloring_ok));
        println!("point counts (p = 2,3,5): {}", status(points_ok));
        println!("verdict: {verdict}");
    }
    if agreeing == 4 {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{} oracle group(s) disagree with the engine",
            4 - agreeing
        )))
    }
}

#[derive(Serialize)]
struct BenchJson {
    schema: &'static str,
    command: &'static str,
    n: usize,
    m: usize,
    repeat: u32,
    inductive: BenchSideJson,
    naive: BenchSideJson,
}

#[derive(Serialize)]
struct BenchSideJson {
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    bridge_rules: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_cycle_rules: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fallbacks: Option<u64>,
    seconds: f64,
}

fn cmd_bench(path: &Path, repeat: u32, json: bool) -> Result<(), CliError> {
    let g = load_graph(path)?;

    let mut inductive_time = Duration::ZERO;
    let mut inductive_out = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let out = inductive_chromatic(&g);
        inductive_time += start.elapsed();
        inductive_out = Some(out);
    }
    let (ind_chi, ind_trace) = inductive_out.expect("repeat >= 1");

    let naive_opts = EngineOptions {
        memoize: false,
        memo_threshold: 0,
    };
    let mut naive_time = Duration::ZERO;
    let mut naive_out = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let out = chromatic_traced(&g, naive_opts);
        naive_time += start.elapsed();
        naive_out = Some(out);
    }
    let (naive_chi, naive_trace) = naive_out.expect("repeat >= 1");

    let ind_secs = inductive_time.as_secs_f64() / repeat as f64;
    let naive_secs = naive_time.as_secs_f64() / repeat as f64;

    if json {
        let report = BenchJson {
            schema: SCHEMA,
            command: "bench",
            n: g.vertex_count(),
            m: g.edge_count(),
            repeat,
            inductive: BenchSideJson {
                nodes: ind_trace.recursion_nodes,
                bridge_rules: Some(ind_trace.bridge_rules),
                minimal_cycle_rules: Some(ind_trace.minimal_cycle_rules),
                fallbacks: Some(ind_trace.fallbacks),
                seconds: ind_secs,
            },
            naive: BenchSideJson {
                nodes: naive_trace.recursion_nodes,
                bridge_rules: None,
                minimal_cycle_rules: None,
                fallbacks: None,
                seconds: naive_secs,
            },
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("graph: n={} m={}", g.vertex_count(), g.edge_count());
        println!(
            "inductive: nodes={} bridge-rules={} minimal-cycle-rules={} fallbacks={} time={:.6}s",
            ind_trace.recursion_nodes,
            ind_trace.bridge_rules,
            ind_trace.minimal_cycle_rules,
            ind_trace.fallbacks,
            ind_secs
        );
        println!(
            "naive: nodes={} time={:.6}s",
            naive_trace.recursion_nodes, naive_secs
        );
    }
    if ind_chi != naive_chi {
        return Err(CliError::Mismatch(
            "inductive and naive engines returned different polynomials".into(),
        ));
    }
    Ok(())
}
