//! Linear spaces on quadrics: Fano dimensions for smooth quadrics and the
//! largest plane on a quadric of each rank.
//!
//! `cargo run --example fano_and_rank`

use quadrica::{fano_dim, max_plane_dim_on_rank_r};

fn main() -> quadrica::Result<()> {
    println!("dimension of the variety of m-planes on a smooth quadric in P^n");
    print!("{:>4}", "n\\m");
    for m in 0..=4 {
        print!("{m:>6}");
    }
    println!();
    for n in 2..=9 {
        print!("{n:>4}");
        for m in 0..=4 {
            match fano_dim(m, n)? {
                Some(d) => print!("{d:>6}"),
                None => print!("{:>6}", "-"),
            }
        }
        println!();
    }

    let n = 9;
    println!("\nlargest plane on a rank-r quadric in P^{n}");
    for r in 1..=n + 1 {
        println!("  r = {r:>2}: P^{}", max_plane_dim_on_rank_r(n, r)?);
    }
    Ok(())
}
