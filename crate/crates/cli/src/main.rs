mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use lc_equiv_core::oracle::{orbit_bfs, DEFAULT_CAP};
use lc_equiv_core::{check_equivalence, stabilizer_to_graph, verify_witness};
use serde_json::json;

use input::{read_graph, read_stabilizer, GraphFormat};
use report::{qubit_entries, WitnessReport};

/// Local Clifford equivalence of graph states.
///
/// Exit status: 0 equivalent / success, 1 not equivalent (or invalid
/// witness), 2 usage or parse error.
#[derive(Parser, Debug)]
#[command(name = "lc-equiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two graph states are local Clifford equivalent.
    Check {
        first: PathBuf,
        second: PathBuf,
        /// Input format (default: by extension, .g6 is graph6; otherwise sniffed).
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Print the witness report.
        #[arg(long)]
        witness: bool,
        /// Print the report as JSON (schema lc-witness/1).
        #[arg(long)]
        json: bool,
        /// Validate a previously emitted JSON witness for this pair instead of solving.
        #[arg(long, value_name = "REPORT")]
        verify_witness: Option<PathBuf>,
    },
    /// Apply local complementations, left to right.
    Lc {
        file: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<usize>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Enumerate the local complementation orbit of a graph.
    Orbit {
        file: PathBuf,
        /// Stop after this many members.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Reduce a stabilizer state (Pauli strings, one generator per line) to a graph state.
    FromStabilizer {
        file: PathBuf,
        /// Also print the local Clifford operation of the reduction.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
}

/// What to print and which status to exit with.
struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn run(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Check {
            first,
            second,
            format,
            witness,
            json,
            verify_witness: report_path,
        } => {
            let (g, _) = read_graph(&first, format)?;
            let (h, _) = read_graph(&second, format)?;
            if let Some(path) = report_path {
                return check_report(&g, &h, &path);
            }
            let start = Instant::now();
            let verdict = check_equivalence(&g, &h)?;
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let report = WitnessReport::from_verdict(g.n(), &verdict, elapsed_ms);
            let stdout = if json {
                format!("{}\n", serde_json::to_string_pretty(&report)?)
            } else if witness {
                report.render_text()
            } else {
                report.render_text().lines().next().unwrap_or_default().to_string() + "\n"
            };
            Ok(Output {
                stdout,
                code: if verdict.equivalent { 0 } else { 1 },
            })
        }
        Command::Lc { file, at, format } => {
            let (g, fmt) = read_graph(&file, format)?;
            let out = g.apply_lc_sequence(&at)?;
            Ok(Output::ok(fmt.encode(&out)))
        }
        Command::Orbit { file, cap, format } => {
            let (g, _) = read_graph(&file, format)?;
            let orbit = orbit_bfs(&g, Some(cap));
            let mut stdout = if orbit.truncated {
                format!("truncated at {} members\n", orbit.len())
            } else {
                format!("orbit size: {}\n", orbit.len())
            };
            for m in &orbit.members {
                stdout.push_str(m);
                stdout.push('\n');
            }
            Ok(Output::ok(stdout))
        }
        Command::FromStabilizer { file, witness, json } => {
            let s = read_stabilizer(&file)?;
            let (g, q) = stabilizer_to_graph(&s)?;
            let stdout = if json {
                let mut value = json!({ "graph6": g.to_graph6() });
                if witness {
                    value["qubits"] = serde_json::to_value(qubit_entries(&q))?;
                }
                format!("{}\n", serde_json::to_string_pretty(&value)?)
            } else {
                let mut s = format!("{}\n", g.to_graph6());
                if witness {
                    for e in qubit_entries(&q) {
                        let [a, b, c, d] = e.quadruple;
                        s.push_str(&format!("qubit {}: [{a} {b} {c} {d}] {}\n", e.index, e.class));
                    }
                }
                s
            };
            Ok(Output::ok(stdout))
        }
    }
}

fn check_report(g: &lc_equiv_core::Graph, h: &lc_equiv_core::Graph, path: &PathBuf) -> Result<Output> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("{}: cannot read file", path.display()))?;
    let report: WitnessReport = serde_json::from_str(&text)
        .with_context(|| format!("{}: not a witness report", path.display()))?;
    let op = report
        .operation()
        .with_context(|| format!("{}: invalid witness", path.display()))?;
    Ok(match verify_witness(g, h, &op) {
        Ok(()) => Output::ok("witness valid\n".into()),
        Err(failure) => Output {
            stdout: format!("witness invalid: {failure}\n"),
            code: 1,
        },
    })
}

fn configure_threads() {
    let Ok(value) = std::env::var("LC_EQUIV_THREADS") else {
        return;
    };
    match value.parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                log::warn!("LC_EQUIV_THREADS ignored: {e}");
            }
        }
        _ => log::warn!("LC_EQUIV_THREADS={value} is not a positive integer; ignored"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
