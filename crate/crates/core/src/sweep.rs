//! Exhaustive comparison of the closed form against the oracle over a grid
//! of weight vectors.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::WeightVector;
use crate::error::{Error, Result};
use crate::formula::{expected_dim_i2, CaseLabel};
use crate::linalg::PrimeField;
use crate::oracle::generic_dim_i2;

/// Environment variable capping sweep parallelism; 0 or unset means one
/// thread per core.
pub const THREADS_ENV: &str = "QUADRICA_THREADS";

pub const CSV_HEADER: &str =
    "n,s,weights,case,tau,v,expected_dim,oracle_dim,agree,trials,prime,seed";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub s: usize,
    /// Weights joined by `;`.
    pub weights: String,
    pub case: CaseLabel,
    pub tau: Option<usize>,
    pub v: Option<usize>,
    pub expected_dim: u64,
    pub oracle_dim: usize,
    pub agree: bool,
    pub trials: usize,
    pub prime: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub s_max: usize,
    pub trials: usize,
    pub field: PrimeField,
    pub seed: u64,
    /// Worker threads, 0 for automatic.
    pub threads: usize,
}

/// Reads [`THREADS_ENV`]; unparsable values fall back to automatic.
pub fn thread_cap_from_env() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn row_for(w: &WeightVector, cfg: &SweepConfig) -> Result<SweepRow> {
    let exp = expected_dim_i2(w);
    let rep = generic_dim_i2(w, cfg.trials, cfg.field, cfg.seed)?;
    Ok(SweepRow {
        n: w.n(),
        s: w.len(),
        weights: w.joined(";"),
        case: exp.label,
        tau: exp.tau,
        v: exp.v,
        expected_dim: exp.dim_i2,
        oracle_dim: rep.oracle_dim,
        agree: rep.agree,
        trials: cfg.trials,
        prime: cfg.field.modulus(),
        seed: cfg.seed,
    })
}

/// One row per weight vector with `2 <= n <= n_max`, `1 <= s <= s_max`,
/// in enumeration order. Every vector is sampled with the same base seed.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    if cfg.n_max < 2 || cfg.s_max < 1 {
        return Err(Error::Precondition("need n-max >= 2 and s-max >= 1".into()));
    }
    let grid = WeightVector::enumerate(cfg.n_max, cfg.s_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| grid.par_iter().map(|w| row_for(w, cfg)).collect())
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for row in rows {
        wtr.serialize(row).map_err(csv_error)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Precondition(format!("csv: {other:?}")),
    }
}
