//! `frechet-range`: build, query, verify and benchmark Fréchet range indexes
//! over time series stored as JSON lines.

mod bench;
mod data;
mod store;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frechet_range::{Backend, Error, Radius, DEFAULT_SEQUENCE_CAP};

/// Exit codes.
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_TOO_LONG: u8 = 3;

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CanonicalTooLong { .. } => EXIT_TOO_LONG,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult<T = ()> = Result<T, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineKind {
    /// Rectangles per stored series, stabbed by the query.
    Stab,
    /// Points per stored series, reported by query rectangles.
    Pointstore,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Stab => "stab",
            EngineKind::Pointstore => "pointstore",
        }
    }
}

#[derive(Parser)]
#[command(name = "frechet-range", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from a JSON-lines dataset and write it to disk.
    Build(BuildArgs),
    /// Answer JSON-lines queries against a saved index.
    Query(QueryArgs),
    /// Check both engines against the naive scan and the reductions.
    Verify(verify::VerifyArgs),
    /// Time builds and queries on synthetic data and write a CSV report.
    Bench(bench::BenchArgs),
}

#[derive(clap::Args)]
struct BuildArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    rho: f64,
    /// Maximum canonical complexity of queries.
    #[arg(long)]
    tq: usize,
    /// Maximum canonical complexity accepted for stored series. Defaults to
    /// the largest one present.
    #[arg(long)]
    ts: Option<usize>,
    #[arg(long, value_enum, default_value = "stab")]
    engine: EngineKind,
    #[arg(long, default_value = "tree")]
    backend: Backend,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct QueryArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long)]
    queries: PathBuf,
}

#[derive(serde::Serialize)]
struct QueryLine<'a> {
    query_id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<Vec<&'a str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn radius(rho: f64) -> CmdResult<Radius> {
    Ok(Radius::new(rho)?)
}

/// Cap on valid cell sequences, overridable through `FRECHET_STAB_SEQ_CAP`.
pub fn sequence_cap() -> CmdResult<u64> {
    match std::env::var("FRECHET_STAB_SEQ_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("FRECHET_STAB_SEQ_CAP must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SEQUENCE_CAP),
    }
}

fn build(args: BuildArgs) -> CmdResult {
    let series = data::read_series(&args.input)?;
    if let Some(ts) = args.ts {
        for s in &series {
            let len = frechet_range::canonical_len(s);
            if len > ts {
                return Err(Error::CanonicalTooLong {
                    id: s.id().to_string(),
                    canonical_len: len,
                    target: ts,
                }
                .into());
            }
        }
    }
    let engine = store::Engine::build(args.engine, &series, radius(args.rho)?, args.tq, args.backend, sequence_cap()?)?;
    store::save(&args.out, &engine)?;
    let stats = engine.stats();
    let summary = serde_json::json!({
        "engine": args.engine.name(),
        "backend": args.backend.name(),
        "rho": args.rho,
        "n": stats.n,
        "t_q": stats.t_q,
        "t_s": stats.t_s,
        "cell_sequences": stats.cell_sequences,
        "structures": stats.structures,
        "stored_objects": stats.stored_objects,
    });
    println!("{summary}");
    Ok(())
}

fn query(args: QueryArgs) -> CmdResult {
    use rayon::prelude::*;
    use std::io::Write;

    let engine = store::load(&args.index)?;
    let queries = data::read_series(&args.queries)?;
    let lines: Vec<String> = queries
        .par_iter()
        .map(|q| {
            let line = match engine.query(q) {
                Ok(ids) => QueryLine {
                    query_id: q.id(),
                    matches: Some(ids),
                    error: None,
                },
                Err(e) => QueryLine {
                    query_id: q.id(),
                    matches: None,
                    error: Some(e.to_string()),
                },
            };
            serde_json::to_string(&line).expect("plain strings serialize")
        })
        .collect();
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for line in lines {
        writeln!(out, "{line}").map_err(|e| Failure::input(format!("writing output: {e}")))?;
    }
    out.flush().map_err(|e| Failure::input(format!("writing output: {e}")))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => build(a),
        Command::Query(a) => query(a),
        Command::Verify(a) => verify::run(a),
        Command::Bench(a) => bench::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
