//! Checks a prediction against random configurations over GF(2^31 - 1) and
//! prints one of the quadrics found.
//!
//! `cargo run --example oracle_verify -- 9 5,5,5`

use quadrica::{generic_dim_i2, kernel_quadrics, random_configuration, PrimeField, WeightVector};

fn main() -> quadrica::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map_or(Ok(9), |a| a.parse())
        .expect("n must be an integer");
    let weights = args.next().unwrap_or_else(|| "5,5,5".into());
    let w = WeightVector::parse(n, &weights)?;
    let field = PrimeField::default();

    let report = generic_dim_i2(&w, 3, field, 0)?;
    println!("{w}");
    println!(
        "per-trial dims {:?}, formula {}, agree {}",
        report.per_trial_dims, report.formula_dim, report.agree
    );

    let config = random_configuration(&w, field, 0)?;
    if let Some(q) = kernel_quadrics(&config).first() {
        println!(
            "a quadric through the sample has rank {} (of {})",
            q.rank(),
            n + 1
        );
    } else {
        println!("no quadric contains the sample");
    }
    Ok(())
}
