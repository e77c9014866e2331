//! Closed-form quadric counts for a handful of weight vectors.
//!
//! `cargo run --example expectation`

use quadrica::{expected_dim_i2, WeightVector};

fn main() -> quadrica::Result<()> {
    let cases: [(usize, &[usize]); 6] = [
        (3, &[1, 1, 1, 1]),
        (4, &[3, 1]),
        (9, &[5, 5, 5]),
        (7, &[4, 3, 3, 3]),
        (7, &[4, 4, 4, 1]),
        (5, &[2, 2]),
    ];
    println!(
        "{:<18} {:>8} {:>4} {:>4} {:>7} {:>5}",
        "weights", "case", "tau", "v", "dim I2", "HF2"
    );
    for (n, ws) in cases {
        let w = WeightVector::new(n, ws.to_vec())?;
        let e = expected_dim_i2(&w);
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:<18} {:>8} {:>4} {:>4} {:>7} {:>5}",
            w.to_string(),
            e.label,
            show(e.tau),
            show(e.v),
            e.dim_i2,
            e.hf2
        );
    }
    Ok(())
}
