//! Projects an intersecting configuration from the span of its forced
//! intersections and compares the quadric counts before and after.
//!
//! `cargo run --example vertex_projection`

use quadrica::{
    dim_i2_exact, pairwise_vertex, project_from, random_configuration, tau_v, PrimeField,
    WeightVector,
};

fn main() -> quadrica::Result<()> {
    let field = PrimeField::default();
    for (n, ws) in [
        (4, vec![3, 1]),
        (3, vec![2, 2]),
        (6, vec![4, 3, 2]),
        (7, vec![4, 4, 1]),
    ] {
        let w = WeightVector::new(n, ws)?;
        let (tau, _) = tau_v(&w)?;
        let c = random_configuration(&w, field, 0)?;
        let v = pairwise_vertex(&c, tau)?;
        let vdim = v.as_ref().map_or(-1, |v| v.dim() as i64);
        match project_from(&c, v.as_ref()) {
            Ok(p) => println!(
                "{w}: vertex P^{vdim}, image in P^{} with dims {:?}, dim I2 {} -> {}",
                p.ambient_n(),
                p.dims(),
                dim_i2_exact(&c),
                dim_i2_exact(&p)
            ),
            Err(e) => println!("{w}: vertex P^{vdim}, not projectable ({e})"),
        }
    }
    Ok(())
}
