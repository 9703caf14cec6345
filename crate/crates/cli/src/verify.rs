//! Self-check against the naive scan and the geometric reductions.

use std::path::PathBuf;

use frechet_range::reductions::{solve_range_via_frechet, solve_stabbing_via_frechet, StabInstance};
use frechet_range::synth::{random_dataset, random_stab_instance};
use frechet_range::{naive_query, Backend, Radius, TimeSeries};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::data::{read_series, DatasetRecord};
use crate::store::Engine;
use crate::{radius, sequence_cap, CmdResult, EngineKind, Failure, EXIT_MISMATCH};

/// Queries drawn from the input dataset.
const DATASET_QUERIES: usize = 256;

#[derive(clap::Args)]
pub struct VerifyArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1.0)]
    rho: f64,
    #[arg(long, default_value_t = 4)]
    tq: usize,
    /// Random engine instances, and again as many reduction round trips.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn records(series: &[TimeSeries]) -> Vec<DatasetRecord> {
    series.iter().map(DatasetRecord::from).collect()
}

/// Compares every engine and backend with the naive scan on `queries`.
fn check_engines(series: &[TimeSeries], queries: &[TimeSeries], rho: Radius, t_q: usize, cap: u64) -> CmdResult<Option<Value>> {
    for kind in [EngineKind::Stab, EngineKind::Pointstore] {
        for backend in [Backend::Naive, Backend::Tree] {
            let engine = Engine::build(kind, series, rho, t_q, backend, cap)?;
            for q in queries {
                let want = naive_query(series, q, rho);
                let got = engine.query(q)?;
                if got != want {
                    return Ok(Some(json!({
                        "kind": "engine",
                        "engine": kind.name(),
                        "backend": backend.name(),
                        "rho": rho.get(),
                        "t_q": t_q,
                        "dataset": records(series),
                        "query": DatasetRecord::from(q),
                        "expected": want,
                        "got": got,
                    })));
                }
            }
        }
    }
    Ok(None)
}

fn contains(r: &frechet_range::Rect, p: &[f64]) -> bool {
    r.intervals().iter().zip(p).all(|(iv, &x)| iv.lo <= x && x <= iv.hi)
}

fn check_round_trip(inst: &StabInstance, backend: Backend, stabbing: bool) -> CmdResult<Option<Value>> {
    let (got, want): (Vec<Vec<usize>>, Vec<Vec<usize>>) = if stabbing {
        let got = solve_stabbing_via_frechet(inst, backend)?;
        let want = inst
            .points
            .iter()
            .map(|p| (0..inst.rects.len()).filter(|&k| contains(&inst.rects[k], p)).collect())
            .collect();
        (got, want)
    } else {
        let got = solve_range_via_frechet(&inst.points, &inst.rects, backend)?;
        let want = inst
            .rects
            .iter()
            .map(|r| (0..inst.points.len()).filter(|&k| contains(r, &inst.points[k])).collect())
            .collect();
        (got, want)
    };
    if got == want {
        return Ok(None);
    }
    Ok(Some(json!({
        "kind": if stabbing { "stabbing" } else { "range" },
        "backend": backend.name(),
        "instance": inst,
        "expected": want,
        "got": got,
    })))
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let rho = radius(args.rho)?;
    if args.tq < 2 {
        return Err(Failure::input(format!("--tq must be at least 2, got {}", args.tq)));
    }
    let cap = sequence_cap()?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let series = match &args.input {
        Some(path) => read_series(path)?,
        None => Vec::new(),
    };

    // Stored series cut to the query complexity, plus perturbed copies.
    let picks = sample(&mut rng, series.len(), series.len().min(DATASET_QUERIES / 2));
    let mut queries = Vec::new();
    for k in picks {
        let v = &series[k].values()[..series[k].len().min(args.tq)];
        let jitter: Vec<f64> = v.iter().map(|x| x + rng.random_range(-1.0..=1.0) * args.rho).collect();
        queries.push(TimeSeries::new(format!("q{k}"), v.to_vec())?);
        queries.push(TimeSeries::new(format!("q{k}~"), jitter)?);
    }
    let mut failure = check_engines(&series, &queries, rho, args.tq, cap)?;

    for _ in 0..args.trials {
        if failure.is_some() {
            break;
        }
        let n = rng.random_range(0..=40);
        let t_q = rng.random_range(2..=6);
        let stored = random_dataset(&mut rng, n, 6, 0.0, 100.0, Some(0.25));
        let rho = Radius::new(rng.random_range(1..=120) as f64 / 4.0)?;
        let mut qs = random_dataset(&mut rng, 3, t_q, 0.0, 100.0, Some(0.25));
        for (k, q) in qs.iter_mut().enumerate() {
            *q = TimeSeries::new(format!("q{k}"), q.values().to_vec())?;
        }
        failure = check_engines(&stored, &qs, rho, t_q, cap)?;
    }

    for t in 0..args.trials {
        if failure.is_some() {
            break;
        }
        let d = rng.random_range(1..=3);
        let n = rng.random_range(0..=100);
        let backend = if t % 3 == 0 { Backend::Naive } else { Backend::Tree };
        let stabbing = t % 2 == 0;
        let inst = if stabbing {
            random_stab_instance(&mut rng, d, n, 4)
        } else {
            random_stab_instance(&mut rng, d, 4, n)
        };
        failure = check_round_trip(&inst, backend, stabbing)?;
    }

    match failure {
        None => {
            let report = json!({
                "status": "pass",
                "dataset_series": series.len(),
                "dataset_queries": queries.len(),
                "trials": args.trials,
                "round_trips": args.trials,
                "seed": args.seed,
            });
            println!("{report}");
            Ok(())
        }
        Some(counterexample) => {
            println!("{}", json!({ "status": "fail", "counterexample": counterexample }));
            Err(Failure {
                code: EXIT_MISMATCH,
                message: "verification found a mismatch".into(),
            })
        }
    }
}
