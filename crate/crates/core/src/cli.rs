//! Command-line front end. Exit codes: 0 success or agreement, 1 a negative
//! answer (mismatch, no decomposition, (★) fails), 2 bad input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::apolarity::{
    decomposition_verdict, star_verdict, DecompositionInput, DecompositionVerdict,
};
use crate::arrangement::WeightVector;
use crate::error::{Error, Result};
use crate::formula::{
    dim_dl, expected_dim_i2, fano_dim, fiber_deficiency, lemma_bound, max_plane_dim_on_rank_r,
    Expectation,
};
use crate::linalg::{PrimeField, DEFAULT_PRIME};
use crate::oracle::{generic_dim_i2, DEFAULT_TRIALS};
use crate::sweep::{run_sweep, thread_cap_from_env, write_csv, write_json, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "quadrica",
    version,
    about = "Quadrics through generic configurations of linear spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form dim (I_Λ)_2 and HF(Λ, 2) for a weight vector.
    Expect {
        #[arg(long)]
        n: usize,
        /// Comma-separated component dimensions, in any order.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare the closed form against random samples.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verify every weight vector in a grid and write a table.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        s_max: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the table goes to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Dimension of the variety of m-planes on a smooth quadric in P^n.
    Fano {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Largest linear space on a rank-r quadric in P^n.
    Rankbound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Dimension count excluding rank-r quadrics through a disjoint configuration.
    Fiber {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether quadrics split along families of linear forms, or
    /// decompose a target quadric.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Skip the prime-field pass and answer over the rationals only.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct ExpectOutput<'a> {
    n: usize,
    weights: &'a [usize],
    #[serde(flatten)]
    expectation: &'a Expectation,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Expect { n, weights, json } => {
            let w = WeightVector::parse(n, &weights)?;
            let e = expected_dim_i2(&w);
            if json {
                emit_json(
                    out,
                    &ExpectOutput {
                        n,
                        weights: w.weights(),
                        expectation: &e,
                    },
                )?;
            } else {
                writeln!(out, "weights: {w}")?;
                writeln!(out, "case: {}", e.label)?;
                if let (Some(tau), Some(v)) = (e.tau, e.v) {
                    writeln!(out, "tau: {tau}")?;
                    writeln!(out, "v: {v}")?;
                }
                writeln!(out, "dim_I2: {}", e.dim_i2)?;
                writeln!(out, "HF2: {}", e.hf2)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            weights,
            trials,
            prime,
            seed,
            json,
        } => {
            let w = WeightVector::parse(n, &weights)?;
            let rep = generic_dim_i2(&w, trials, PrimeField::new(prime)?, seed)?;
            if json {
                emit_json(out, &rep)?;
            } else {
                let dims: Vec<String> = rep.per_trial_dims.iter().map(usize::to_string).collect();
                writeln!(out, "weights: {w}")?;
                writeln!(out, "trials: {trials} (prime {prime}, seed {seed})")?;
                writeln!(out, "per-trial dims: {}", dims.join(","))?;
                writeln!(out, "oracle dim_I2: {}", rep.oracle_dim)?;
                writeln!(out, "formula dim_I2: {}", rep.formula_dim)?;
                writeln!(out, "agree: {}", rep.agree)?;
            }
            Ok(if rep.agree { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Sweep {
            n_max,
            s_max,
            trials,
            prime,
            seed,
            out: path,
            format,
        } => {
            if trials == 0 {
                return Err(Error::Precondition("at least one trial is required".into()));
            }
            let cfg = SweepConfig {
                n_max,
                s_max,
                trials,
                field: PrimeField::new(prime)?,
                seed,
                threads: thread_cap_from_env(),
            };
            let rows = run_sweep(&cfg)?;
            let mismatches = rows.iter().filter(|r| !r.agree).count();
            let summary = format!("rows: {}, mismatches: {mismatches}", rows.len());
            match path {
                Some(path) => {
                    let file = BufWriter::new(File::create(&path)?);
                    match format {
                        Format::Csv => write_csv(&rows, file)?,
                        Format::Json => write_json(&rows, file)?,
                    }
                    writeln!(out, "{summary}")?;
                }
                None => {
                    match format {
                        Format::Csv => write_csv(&rows, &mut *out)?,
                        Format::Json => write_json(&rows, &mut *out)?,
                    }
                    writeln!(err, "{summary}")?;
                }
            }
            Ok(if mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Fano { m, n, json } => {
            let dim = fano_dim(m, n)?;
            if json {
                emit_json(out, &json!({ "m": m, "n": n, "dim": dim }))?;
            } else {
                match dim {
                    Some(d) => writeln!(out, "{d}")?,
                    None => writeln!(out, "empty")?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Rankbound { n, r, json } => {
            let m = max_plane_dim_on_rank_r(n, r)?;
            if json {
                emit_json(out, &json!({ "n": n, "r": r, "max_plane_dim": m }))?;
            } else {
                writeln!(out, "{m}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Fiber {
            n,
            weights,
            r,
            json,
        } => {
            let w = WeightVector::parse(n, &weights)?;
            let rep = fiber_deficiency(&w, r)?;
            let f = lemma_bound(&w, r)?;
            let dl = dim_dl(&w);
            if json {
                let mut value = serde_json::to_value(&rep)?;
                value["f"] = json!(f);
                value["dim_dl"] = json!(dl);
                emit_json(out, &value)?;
            } else {
                writeln!(out, "weights: {w}")?;
                writeln!(out, "r: {r}")?;
                writeln!(out, "f(p): {f}")?;
                writeln!(out, "family dim: {}", rep.family_dim)?;
                writeln!(out, "fiber over one quadric: {}", rep.fiber_over_one)?;
                writeln!(out, "dim D_L: {dl}")?;
                writeln!(out, "deficiency: {}", rep.deficiency)?;
                writeln!(
                    out,
                    "no rank-{r} quadric for generic configurations: {}",
                    rep.lemma_applies
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose {
            input,
            exact,
            prime,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let input = DecompositionInput::from_json_str(&text)?;
            let families = input.form_families()?;
            let field = PrimeField::new(prime)?;
            match &input.target {
                None => {
                    let verdict = star_verdict(&families, field, exact)?;
                    if let Some(fast) = verdict.overruled {
                        writeln!(
                            err,
                            "warning: prime-field pass (p = {prime}) gave defect {}, exact arithmetic gives {}",
                            fast.defect, verdict.report.defect
                        )?;
                    }
                    emit_json(out, &verdict.report)?;
                    Ok(if verdict.report.holds {
                        EXIT_OK
                    } else {
                        EXIT_NEGATIVE
                    })
                }
                Some(target) => {
                    let (verdict, overruled) =
                        decomposition_verdict(target, &families, field, exact)?;
                    if overruled {
                        writeln!(
                            err,
                            "warning: prime-field pass (p = {prime}) disagreed with exact arithmetic; using the exact answer"
                        )?;
                    }
                    let (doc, code) = match verdict {
                        DecompositionVerdict::Prime(w) => (
                            json!({ "decomposition": true, "arithmetic": "prime", "prime": prime, "witness": w.to_json() }),
                            EXIT_OK,
                        ),
                        DecompositionVerdict::Exact(w) => (
                            json!({ "decomposition": true, "arithmetic": "exact", "witness": w.to_json() }),
                            EXIT_OK,
                        ),
                        DecompositionVerdict::NoDecomposition => {
                            (json!({ "decomposition": false }), EXIT_NEGATIVE)
                        }
                    };
                    emit_json(out, &doc)?;
                    Ok(code)
                }
            }
        }
    }
}

fn emit_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
