//! `mbqc`: compile, extract, certify, synthesize and verify measurement patterns.

mod cert;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::input::Inputs;
use crate::report::{RunReport, INPUT_ERROR};

#[derive(Parser, Debug)]
#[command(name = "mbqc", version, about = "Measurement-based quantum computation toolkit")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write a Graphviz rendering here.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Simulator worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Omit timing so identical inputs give identical bytes.
    #[arg(long, global = true)]
    canonical: bool,
    /// Global-phase tolerance; defaults to $MBQC_TOL or 1e-9.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Circuit to standard pattern.
    Compile { circuit: String },
    /// Standard pattern back to a circuit.
    Extract { pattern: String },
    /// Search for a flow, or an extended flow with `--eflow T=a,b`.
    Flow {
        geometry: String,
        #[arg(long)]
        eflow: Option<String>,
    },
    /// Check a gflow certificate against a geometry.
    VerifyGflow { geometry: String, certificate: String },
    /// Simulate a pattern or circuit; compare with a reference if one is given or carried.
    Verify { input: String, reference: Option<String> },
    /// Realize a quadratic form expansion.
    Synth {
        qfe: String,
        #[arg(long, value_enum)]
        via: Via,
        /// Gflow certificate for `--via gflow`; a lifted flow is used otherwise.
        #[arg(long)]
        cert: Option<String>,
    },
    /// Built-in instances.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Graphviz rendering of a geometry, pattern, circuit or expansion.
    ExportDot { input: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Via {
    Flow,
    Eflow,
    Gflow,
}

#[derive(Subcommand, Debug)]
pub enum Gen {
    Grid { rows: usize, cols: usize },
    /// Extremal flow geometry for a non-decreasing partition of n.
    Extremal { parts: Vec<usize> },
    Qft { k: usize },
    /// `angle` is a multiple of pi such as `1/4`.
    Zzmany { k: usize, angle: String },
    Noflow,
    Reversal { k: usize },
}

fn tolerance(flag: Option<f64>) -> Result<f64, String> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("MBQC_TOL") {
        Ok(s) => s.trim().parse().map_err(|_| format!("MBQC_TOL: not a number: {s}")),
        Err(_) => Ok(mbqc_sim::DEFAULT_TOL),
    }
}

fn emit(cli: &Cli, report: &RunReport) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    match &cli.out {
        Some(p) => std::fs::write(p, text),
        None => stdout(&text),
    }
}

/// A closed downstream pipe is not an error.
fn stdout(text: &str) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = commands::name(&cli.command);
    let mut inputs = Inputs::new();
    let start = Instant::now();
    let tol = tolerance(cli.tol);
    if cli.threads > 1 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let ctx = commands::Ctx {
        tol: tol.clone().unwrap_or(mbqc_sim::DEFAULT_TOL),
        parallel: cli.threads > 1,
        dot: cli.dot.clone(),
    };
    let result = match tol {
        Err(e) => Err(report::Failure::input(e)),
        Ok(_) => commands::run(&cli.command, &ctx, &mut inputs),
    };
    let (mut report, code) = match result {
        Ok((r, code)) => (r, code),
        Err(f) => {
            let mut r = RunReport::new(name, inputs.digest());
            r.verdict("error").note(f.message.clone());
            eprintln!("mbqc {name}: {}", f.message);
            (r, f.code)
        }
    };
    report.input_digest = inputs.digest();
    if !cli.canonical {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    if let Some(raw) = report.outcome.remove("dot_text") {
        // export-dot prints the rendering itself unless --dot is given
        if let Some(s) = raw.as_str() {
            if cli.dot.is_none() {
                if let Err(e) = stdout(s) {
                    eprintln!("mbqc: cannot write output: {e}");
                    return ExitCode::from(INPUT_ERROR as u8);
                }
                return ExitCode::from(code as u8);
            }
        }
    }
    if let Err(e) = emit(&cli, &report) {
        eprintln!("mbqc: cannot write report: {e}");
        return ExitCode::from(INPUT_ERROR as u8);
    }
    ExitCode::from(code as u8)
}
