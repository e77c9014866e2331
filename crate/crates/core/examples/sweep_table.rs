//! Runs the formula/oracle comparison over a small grid and writes the CSV
//! table to standard output.
//!
//! `cargo run --release --example sweep_table`

use quadrica::sweep::{run_sweep, write_csv, SweepConfig};
use quadrica::PrimeField;

fn main() -> quadrica::Result<()> {
    let cfg = SweepConfig {
        n_max: 5,
        s_max: 3,
        trials: 3,
        field: PrimeField::default(),
        seed: 0,
        threads: 0,
    };
    let rows = run_sweep(&cfg)?;
    write_csv(&rows, std::io::stdout().lock())?;
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    eprintln!("{} rows, {mismatches} mismatches", rows.len());
    Ok(())
}
