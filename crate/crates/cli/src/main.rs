//! `bisect2`: check, solve, verify, search and generate around
//! 2-bisections of cubic graphs.
//!
//! Exit codes: 0 success, 1 domain failure (preconditions, no result,
//! over cap), 2 input error (unreadable or malformed files), 3 internal
//! invariant breach (a constructed colouring failed self-verification).
//! Multi-line graph6 inputs are processed as a batch: one JSON record per
//! graph, order preserved, worst record severity as the exit code.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use bisect2::bisector::{solve_with_report, verify, SolveError};
use bisect2::codec::{
    read_colouring, read_edge_list, read_graph6, write_colouring, write_edge_list, write_graph6,
};
use bisect2::decomposition::decompose;
use bisect2::generators::{
    gen_insert_string, gen_named, gen_random_bridgeless_cubic, gen_ring_of_diamonds,
    gen_triangle_replacement,
};
use bisect2::graph::Multigraph;
use bisect2::oracle::{
    count_k_bisections_capped, search_k_bisection_capped, DEFAULT_COUNT_CAP, DEFAULT_SEARCH_CAP,
};
use bisect2::recognition::recognize;

const SCHEMA_VERSION: u32 = 1;
const ORACLE_CAP_ENV: &str = "BISECT2_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "bisect2",
    version,
    about = "2-bisections of claw-free cubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// graph6 lines (simple graphs; multiple lines form a batch)
    G6,
    /// `n m` + edge-lines document (multigraphs)
    El,
    /// by file extension: .g6 or .el
    Auto,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file to read
    input: PathBuf,
    /// Input format override
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Report the solver preconditions (connected, cubic, bridgeless,
    /// claw-free); exit 0 only when all hold
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Include the structure decomposition in the report
        #[arg(long)]
        structure: bool,
    },
    /// Construct a 2-bisection, self-verify it, and emit the colouring
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Write the colouring document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the full JSON report instead of the bare colouring
        #[arg(long)]
        json: bool,
    },
    /// Check a colouring document against a graph as a k-bisection
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Colouring document (one line over {B, W})
        colouring: PathBuf,
        #[arg(long, short, default_value_t = 2)]
        k: usize,
    },
    /// Exhaustively search (or count) k-bisections
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short, default_value_t = 2)]
        k: usize,
        /// Count all labelled k-bisections instead of finding one
        #[arg(long)]
        count: bool,
    },
    /// Emit a fixture or random instance
    Gen {
        /// k4 | petersen | prism | theta | ring | random |
        /// triangle-replacement | insert-string
        kind: String,
        /// Ring length, random order, or diamonds per inserted string
        #[arg(long)]
        size: Option<usize>,
        /// Seed for random generation
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Input graph for triangle-replacement / insert-string
        #[arg(long)]
        input: Option<PathBuf>,
        /// Edge id to replace for insert-string
        #[arg(long)]
        edge: Option<usize>,
        /// Output file (.g6 or .el decides the format); stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Record severity, ordered; the process exits with the worst one seen.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Severity {
    Ok = 0,
    Domain = 1,
    Input = 2,
    Internal = 3,
}

struct Failure {
    severity: Severity,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            severity: Severity::Input,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            severity: Severity::Domain,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let severity = match Cli::parse().command {
        Command::Check { input, structure } => cmd_check(&input, structure),
        Command::Solve { input, out, json } => cmd_solve(&input, out.as_deref(), json),
        Command::Verify {
            input,
            colouring,
            k,
        } => cmd_verify(&input, &colouring, k),
        Command::Oracle { input, k, count } => cmd_oracle(&input, k, count),
        Command::Gen {
            kind,
            size,
            seed,
            input,
            edge,
            out,
        } => cmd_gen(&kind, size, seed, input.as_deref(), edge, out.as_deref()),
    };
    ExitCode::from(severity as u8)
}

fn detect_format(path: &Path, format: Format) -> Result<Format, Failure> {
    match format {
        Format::Auto => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Ok(Format::G6),
            Some("el") => Ok(Format::El),
            other => Err(Failure::input(format!(
                "cannot infer format from extension {other:?}; pass --format"
            ))),
        },
        explicit => Ok(explicit),
    }
}

/// Reads one or more graphs. Edge-list files carry exactly one graph;
/// graph6 files may carry one per line (an optional `>>graph6<<` header
/// line and blank lines are skipped).
fn read_graphs(args: &InputArgs) -> Result<Vec<Result<Multigraph, Failure>>, Failure> {
    let format = detect_format(&args.input, args.format)?;
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", args.input.display())))?;
    match format {
        Format::El => Ok(vec![read_edge_list(&text)
            .map_err(|e| Failure::input(format!("edge-list parse error: {e}")))]),
        Format::G6 | Format::Auto => Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with(">>graph6<<"))
            .map(|l| read_graph6(l).map_err(|e| Failure::input(format!("graph6 parse error: {e}"))))
            .collect()),
    }
}

fn emit_records<T: Serialize>(records: &[T], batch: bool) {
    if batch {
        for r in records {
            println!("{}", serde_json::to_string(r).expect("reports serialize"));
        }
    } else if let Some(r) = records.first() {
        println!(
            "{}",
            serde_json::to_string_pretty(r).expect("reports serialize")
        );
    }
}

fn cmd_check(input: &InputArgs, structure: bool) -> Severity {
    let graphs = match read_graphs(input) {
        Ok(graphs) => graphs,
        Err(f) => return fail(f),
    };
    let batch = graphs.len() > 1;
    let mut worst = Severity::Ok;
    let mut records = Vec::new();
    for (index, item) in graphs.into_iter().enumerate() {
        let record = match item {
            Err(f) => {
                worst = worst.max(f.severity);
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "index": index,
                    "error": f.message,
                })
            }
            Ok(g) => {
                let report = recognize(&g);
                let admissible = report.admissible();
                if !admissible {
                    worst = worst.max(Severity::Domain);
                }
                let decomposition = if structure && admissible {
                    match decompose(&g) {
                        Ok(d) => Some(serde_json::to_value(&d).expect("structure serializes")),
                        Err(e) => {
                            worst = worst.max(Severity::Internal);
                            Some(json!({ "error": e.to_string() }))
                        }
                    }
                } else {
                    None
                };
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "index": index,
                    "n": g.n(),
                    "m": g.m(),
                    "recognition": report,
                    "admissible": admissible,
                    "structure": decomposition,
                })
            }
        };
        records.push(record);
    }
    emit_records(&records, batch);
    worst
}

fn cmd_solve(input: &InputArgs, out: Option<&Path>, json: bool) -> Severity {
    let graphs = match read_graphs(input) {
        Ok(graphs) => graphs,
        Err(f) => return fail(f),
    };
    let batch = graphs.len() > 1;
    if batch && out.is_some() {
        return fail(Failure::input("--out needs a single-graph input"));
    }
    let mut worst = Severity::Ok;
    let mut records = Vec::new();
    let mut colouring_line: Option<String> = None;
    for (index, item) in graphs.into_iter().enumerate() {
        let record = match item {
            Err(f) => {
                worst = worst.max(f.severity);
                json!({ "schema_version": SCHEMA_VERSION, "index": index, "error": f.message })
            }
            Ok(g) => match solve_with_report(&g) {
                Ok(report) => {
                    colouring_line = Some(write_colouring(&report.colouring));
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "index": index,
                        "recognition": report.recognition,
                        "variant": report.variant,
                        "matching": report.matching,
                        "colouring": report.colouring,
                        "verify": report.verify,
                    })
                }
                Err(SolveError::PreconditionFailed(report)) => {
                    worst = worst.max(Severity::Domain);
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "index": index,
                        "recognition": *report,
                        "error": "preconditions failed",
                    })
                }
                Err(SolveError::Internal(message)) => {
                    worst = worst.max(Severity::Internal);
                    json!({ "schema_version": SCHEMA_VERSION, "index": index, "error": message })
                }
            },
        };
        records.push(record);
    }
    // Failures always surface as a report, even without --json.
    if json || batch || worst > Severity::Ok {
        emit_records(&records, batch);
    }
    if let Some(line) = colouring_line {
        match out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &line) {
                    return fail(Failure::input(format!(
                        "cannot write {}: {e}",
                        path.display()
                    )));
                }
            }
            None if !json && !batch => print!("{line}"),
            None => {}
        }
    }
    worst
}

fn cmd_verify(input: &InputArgs, colouring_path: &Path, k: usize) -> Severity {
    let graphs = match read_graphs(input) {
        Ok(graphs) => graphs,
        Err(f) => return fail(f),
    };
    if graphs.len() != 1 {
        return fail(Failure::input("verify expects a single-graph input"));
    }
    let g = match graphs.into_iter().next().unwrap() {
        Ok(g) => g,
        Err(f) => return fail(f),
    };
    let text = match std::fs::read_to_string(colouring_path) {
        Ok(text) => text,
        Err(e) => {
            return fail(Failure::input(format!(
                "cannot read {}: {e}",
                colouring_path.display()
            )))
        }
    };
    let colouring = match read_colouring(&text) {
        Ok(c) => c,
        Err(e) => return fail(Failure::input(format!("colouring parse error: {e}"))),
    };
    match verify(&g, &colouring, k) {
        Ok(report) => {
            let valid = report.is_valid();
            let record = json!({
                "schema_version": SCHEMA_VERSION,
                "k": k,
                "valid": valid,
                "report": report,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("reports serialize")
            );
            if valid {
                Severity::Ok
            } else {
                Severity::Domain
            }
        }
        Err(e) => fail(Failure::input(format!("{e}"))),
    }
}

fn oracle_cap(default: usize) -> Result<usize, Failure> {
    match std::env::var(ORACLE_CAP_ENV) {
        Err(_) => Ok(default),
        Ok(raw) => raw
            .parse()
            .map_err(|_| Failure::input(format!("{ORACLE_CAP_ENV}={raw} is not a size"))),
    }
}

fn cmd_oracle(input: &InputArgs, k: usize, count: bool) -> Severity {
    let graphs = match read_graphs(input) {
        Ok(graphs) => graphs,
        Err(f) => return fail(f),
    };
    let cap = match oracle_cap(if count {
        DEFAULT_COUNT_CAP
    } else {
        DEFAULT_SEARCH_CAP
    }) {
        Ok(cap) => cap,
        Err(f) => return fail(f),
    };
    let batch = graphs.len() > 1;
    let mut worst = Severity::Ok;
    let mut records = Vec::new();
    for (index, item) in graphs.into_iter().enumerate() {
        let record = match item {
            Err(f) => {
                worst = worst.max(f.severity);
                json!({ "schema_version": SCHEMA_VERSION, "index": index, "error": f.message })
            }
            Ok(g) => {
                if count {
                    match count_k_bisections_capped(&g, k, cap) {
                        Ok(total) => json!({
                            "schema_version": SCHEMA_VERSION,
                            "index": index,
                            "k": k,
                            "count": total,
                        }),
                        Err(e) => {
                            worst = worst.max(Severity::Domain);
                            json!({
                                "schema_version": SCHEMA_VERSION,
                                "index": index,
                                "k": k,
                                "error": e.to_string(),
                            })
                        }
                    }
                } else {
                    match search_k_bisection_capped(&g, k, cap) {
                        Ok((witness, stats)) => json!({
                            "schema_version": SCHEMA_VERSION,
                            "index": index,
                            "k": k,
                            "exists": witness.is_some(),
                            "colouring": witness,
                            "stats": {
                                "nodes_explored": stats.nodes_explored,
                                "solutions_found": stats.solutions_found,
                                "elapsed_us": stats.elapsed.as_micros() as u64,
                            },
                        }),
                        Err(e) => {
                            worst = worst.max(Severity::Domain);
                            json!({
                                "schema_version": SCHEMA_VERSION,
                                "index": index,
                                "k": k,
                                "error": e.to_string(),
                            })
                        }
                    }
                }
            }
        };
        records.push(record);
    }
    emit_records(&records, batch);
    worst
}

fn cmd_gen(
    kind: &str,
    size: Option<usize>,
    seed: u64,
    input: Option<&Path>,
    edge: Option<usize>,
    out: Option<&Path>,
) -> Severity {
    let need_size =
        |what: &str| size.ok_or_else(|| Failure::input(format!("gen {what} needs --size")));
    let read_input = |what: &str| -> Result<Multigraph, Failure> {
        let path = input.ok_or_else(|| Failure::input(format!("gen {what} needs --input")))?;
        let args = InputArgs {
            input: path.to_path_buf(),
            format: Format::Auto,
        };
        let mut graphs = read_graphs(&args)?;
        if graphs.len() != 1 {
            return Err(Failure::input("gen expects a single-graph input"));
        }
        graphs.remove(0)
    };
    let generated: Result<Multigraph, Failure> = match kind {
        "k4" | "petersen" | "prism" | "theta" => {
            gen_named(kind).map_err(|e| Failure::domain(e.to_string()))
        }
        "ring" => need_size("ring").and_then(|k| {
            gen_ring_of_diamonds(k).map_err(|e| Failure::domain(e.to_string()))
        }),
        "random" => need_size("random").and_then(|n| {
            gen_random_bridgeless_cubic(n, seed).map_err(|e| Failure::domain(e.to_string()))
        }),
        "triangle-replacement" => read_input("triangle-replacement").and_then(|h| {
            gen_triangle_replacement(&h).map_err(|e| Failure::domain(e.to_string()))
        }),
        "insert-string" => read_input("insert-string").and_then(|g| {
            let edge = edge.ok_or_else(|| Failure::input("gen insert-string needs --edge"))?;
            let k = size.unwrap_or(1);
            gen_insert_string(&g, edge, k).map_err(|e| Failure::domain(e.to_string()))
        }),
        other => Err(Failure::input(format!(
            "unknown kind {other:?}; expected k4 | petersen | prism | theta | ring | random | triangle-replacement | insert-string"
        ))),
    };
    let g = match generated {
        Ok(g) => g,
        Err(f) => return fail(f),
    };
    let document = match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("g6") => match write_graph6(&g) {
            Ok(line) => line + "\n",
            Err(e) => return fail(Failure::domain(format!("{e}"))),
        },
        Some("el") => write_edge_list(&g),
        Some(other) => {
            return fail(Failure::input(format!(
                "unknown output extension {other:?}; use .g6 or .el"
            )))
        }
        // No --out: graph6 when possible, edge list for multigraphs.
        None => match write_graph6(&g) {
            Ok(line) => line + "\n",
            Err(_) => write_edge_list(&g),
        },
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &document) {
                return fail(Failure::input(format!(
                    "cannot write {}: {e}",
                    path.display()
                )));
            }
        }
        None => print!("{document}"),
    }
    Severity::Ok
}

fn fail(f: Failure) -> Severity {
    eprintln!("error: {}", f.message);
    f.severity
}
