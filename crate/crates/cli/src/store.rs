//! Saved index files.
//!
//! Layout, little endian: 8-byte magic, `u32` format version, `f64` radius,
//! `u32` t_q, `u32` t_s, `u8` backend tag, `u8` engine tag, then the engine
//! encoded with bincode.

use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use frechet_range::{Backend, FrechetIndex, IndexStats, PointStoreIndex, Radius, Result, TimeSeries};
use serde::{Deserialize, Serialize};

use crate::{CmdResult, EngineKind, Failure};

const MAGIC: &[u8; 8] = b"FRECHIDX";
const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
pub enum Engine {
    Stab(FrechetIndex),
    Points(PointStoreIndex),
}

impl Engine {
    pub fn build(kind: EngineKind, series: &[TimeSeries], rho: Radius, t_q: usize, backend: Backend, cap: u64) -> Result<Self> {
        Ok(match kind {
            EngineKind::Stab => Engine::Stab(FrechetIndex::build(series, rho, t_q, backend, cap)?),
            EngineKind::Pointstore => Engine::Points(PointStoreIndex::build(series, rho, t_q, backend, cap)?),
        })
    }

    pub fn kind(&self) -> EngineKind {
        match self {
            Engine::Stab(_) => EngineKind::Stab,
            Engine::Points(_) => EngineKind::Pointstore,
        }
    }

    pub fn query(&self, q: &TimeSeries) -> Result<Vec<&str>> {
        match self {
            Engine::Stab(i) => i.query(q),
            Engine::Points(i) => i.query(q),
        }
    }

    pub fn stats(&self) -> IndexStats {
        match self {
            Engine::Stab(i) => i.stats(),
            Engine::Points(i) => i.stats(),
        }
    }

    fn header(&self) -> (Radius, usize, usize, Backend) {
        match self {
            Engine::Stab(i) => (i.rho(), i.t_q(), i.t_s(), i.backend()),
            Engine::Points(i) => (i.rho(), i.t_q(), i.t_s(), i.backend()),
        }
    }
}

fn backend_tag(b: Backend) -> u8 {
    match b {
        Backend::Naive => 0,
        Backend::Tree => 1,
    }
}

fn engine_tag(k: EngineKind) -> u8 {
    match k {
        EngineKind::Stab => 0,
        EngineKind::Pointstore => 1,
    }
}

pub fn save(path: &Path, engine: &Engine) -> CmdResult {
    let fail = |e: &dyn std::fmt::Display| Failure::input(format!("{}: {e}", path.display()));
    let file = std::fs::File::create(path).map_err(|e| fail(&e))?;
    let mut w = BufWriter::new(file);
    let (rho, t_q, t_s, backend) = engine.header();
    let mut head = Vec::with_capacity(30);
    head.extend_from_slice(MAGIC);
    head.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    head.extend_from_slice(&rho.get().to_le_bytes());
    head.extend_from_slice(&(t_q as u32).to_le_bytes());
    head.extend_from_slice(&(t_s as u32).to_le_bytes());
    head.push(backend_tag(backend));
    head.push(engine_tag(engine.kind()));
    w.write_all(&head).map_err(|e| fail(&e))?;
    bincode::serialize_into(&mut w, engine).map_err(|e| fail(&e))?;
    w.flush().map_err(|e| fail(&e))
}

pub fn load(path: &Path) -> CmdResult<Engine> {
    let fail = |msg: String| Failure::input(format!("{}: {msg}", path.display()));
    let file = std::fs::File::open(path).map_err(|e| fail(e.to_string()))?;
    let mut r = BufReader::new(file);
    let mut head = [0u8; 30];
    r.read_exact(&mut head).map_err(|_| fail("not an index file".into()))?;
    if &head[..8] != MAGIC {
        return Err(fail("not an index file".into()));
    }
    let u32_at = |k: usize| u32::from_le_bytes(head[k..k + 4].try_into().unwrap());
    let version = u32_at(8);
    if version != FORMAT_VERSION {
        return Err(fail(format!(
            "index format version {version} is not supported (expected {FORMAT_VERSION})"
        )));
    }
    let rho = f64::from_le_bytes(head[12..20].try_into().unwrap());
    let (t_q, t_s) = (u32_at(20) as usize, u32_at(24) as usize);
    let (backend, kind) = (head[28], head[29]);
    let engine: Engine = bincode::deserialize_from(&mut r).map_err(|e| fail(format!("corrupt payload: {e}")))?;
    let (p_rho, p_tq, p_ts, p_backend) = engine.header();
    if p_rho.get().to_bits() != rho.to_bits()
        || p_tq != t_q
        || p_ts != t_s
        || backend_tag(p_backend) != backend
        || engine_tag(engine.kind()) != kind
    {
        return Err(fail("header does not match payload".into()));
    }
    Ok(engine)
}
