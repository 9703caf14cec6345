//! Timing runs on synthetic workloads.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use frechet_range::synth::bench_workload;
use frechet_range::{naive_query, Backend, TimeSeries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::store::Engine;
use crate::{radius, sequence_cap, CmdResult, EngineKind, Failure};

#[derive(clap::Args)]
pub struct BenchArgs {
    /// Comma-separated dataset sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    tq: usize,
    #[arg(long, default_value_t = 4)]
    ts: usize,
    #[arg(long, default_value_t = 5.0)]
    rho: f64,
    #[arg(long, value_delimiter = ',', default_value = "naive,tree")]
    backends: Vec<Backend>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "stab,pointstore")]
    engines: Vec<EngineKind>,
    #[arg(long, default_value_t = 100)]
    queries: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Serialize)]
struct Row {
    engine: &'static str,
    backend: &'static str,
    n: usize,
    tq: usize,
    ts: usize,
    rho: f64,
    build_ms: f64,
    mean_query_us: f64,
    output_size: usize,
}

/// Timings are kept to three decimals.
fn round3(x: f64) -> f64 {
    (x * 1e3).round() / 1e3
}

fn mean_us(total: Duration, count: usize) -> f64 {
    round3(total.as_secs_f64() * 1e6 / count as f64)
}

fn time_queries(queries: &[TimeSeries], mut run: impl FnMut(&TimeSeries) -> CmdResult<usize>) -> CmdResult<(f64, usize)> {
    let start = Instant::now();
    let mut out = 0;
    for q in queries {
        out += run(q)?;
    }
    Ok((mean_us(start.elapsed(), queries.len()), out))
}

pub fn run(args: BenchArgs) -> CmdResult {
    let rho = radius(args.rho)?;
    if args.tq < 2 || args.ts < 2 {
        return Err(Failure::input("--tq and --ts must be at least 2"));
    }
    if args.n.contains(&0) || args.queries == 0 {
        return Err(Failure::input("--n values and --queries must be positive"));
    }
    let cap = sequence_cap()?;
    let mut rows = Vec::new();
    for &n in &args.n {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let (stored, queries) = bench_workload(&mut rng, n, args.queries, args.ts, args.tq);
        let (scan_us, scan_out) = time_queries(&queries, |q| Ok(naive_query(&stored, q, rho).len()))?;
        rows.push(Row {
            engine: "scan",
            backend: "none",
            n,
            tq: args.tq,
            ts: args.ts,
            rho: args.rho,
            build_ms: 0.0,
            mean_query_us: scan_us,
            output_size: scan_out,
        });
        for &kind in &args.engines {
            for &backend in &args.backends {
                let start = Instant::now();
                let engine = Engine::build(kind, &stored, rho, args.tq, backend, cap)?;
                let build_ms = round3(start.elapsed().as_secs_f64() * 1e3);
                let (query_us, out) = time_queries(&queries, |q| Ok(engine.query(q)?.len()))?;
                if out != scan_out {
                    eprintln!("warning: {} {backend} reported {out} matches, the scan {scan_out}", kind.name());
                }
                if backend == Backend::Tree && n >= 100_000 {
                    if query_us * 10.0 > scan_us {
                        eprintln!(
                            "warning: {} tree query {query_us:.1}us is less than 10x faster than the scan ({scan_us:.1}us) at n={n}",
                            kind.name()
                        );
                    }
                    if build_ms > 60_000.0 {
                        eprintln!("warning: {} tree build took {build_ms:.0}ms at n={n}", kind.name());
                    }
                }
                rows.push(Row {
                    engine: kind.name(),
                    backend: backend.name(),
                    n,
                    tq: args.tq,
                    ts: args.ts,
                    rho: args.rho,
                    build_ms,
                    mean_query_us: query_us,
                    output_size: out,
                });
            }
        }
    }
    let fail = |e: &dyn std::fmt::Display| Failure::input(format!("{}: {e}", args.out.display()));
    let mut w = csv::Writer::from_path(&args.out).map_err(|e| fail(&e))?;
    for row in &rows {
        w.serialize(row).map_err(|e| fail(&e))?;
    }
    w.flush().map_err(|e| fail(&e))?;
    Ok(())
}
