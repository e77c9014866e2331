//! The dimension count that rules out quadrics of each rank through a
//! generic configuration of pairwise disjoint spaces.
//!
//! `cargo run --example lemma_fiber -- 4 1,1,1,1,1,1,1`

use quadrica::{dim_dl, fiber_deficiency, lemma_bound, WeightVector};

fn main() -> quadrica::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map_or(Ok(4), |a| a.parse())
        .expect("n must be an integer");
    let weights = args.next().unwrap_or_else(|| "1,1,1,1,1,1,1".into());
    let w = WeightVector::parse(n, &weights)?;

    println!("{w}, dim D_L = {}", dim_dl(&w));
    println!(
        "{:>3} {:>5} {:>7} {:>6} {:>11}  excluded",
        "r", "f(p)", "family", "fiber", "deficiency"
    );
    for r in 1..=(2 * (n - w.m(0))).min(n + 1) {
        let rep = fiber_deficiency(&w, r)?;
        println!(
            "{r:>3} {:>5} {:>7} {:>6} {:>11}  {}",
            lemma_bound(&w, r)?,
            rep.family_dim,
            rep.fiber_over_one,
            rep.deficiency,
            rep.lemma_applies
        );
    }
    Ok(())
}
