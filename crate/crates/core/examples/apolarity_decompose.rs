//! Writing quadratic forms as sums of forms in prescribed families of linear
//! forms, over GF(p) and over the rationals.
//!
//! `cargo run --example apolarity_decompose`

use num_bigint::BigInt;
use quadrica::apolarity::WitnessScalar;
use quadrica::{
    annihilator_configuration, decompose_quadric_exact, dim_i2_exact, star_holds_d2, FormFamily,
    PrimeField,
};

fn main() -> quadrica::Result<()> {
    let field = PrimeField::default();

    // four lines in P^3: every quadric in y_0..y_3 splits along them
    let lines = vec![
        FormFamily::new(3, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]])?,
        FormFamily::new(3, vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]])?,
        FormFamily::new(3, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]])?,
        FormFamily::new(3, vec![vec![1, 2, 3, 5], vec![7, -1, 4, 2]])?,
    ];
    let report = star_holds_d2(&lines, field)?;
    let dual = annihilator_configuration(&lines, field)?;
    println!(
        "four pencils: holds {}, defect {}, quadrics through the dual lines {}",
        report.holds,
        report.defect,
        dim_i2_exact(&dual)
    );

    // two pencils miss four dimensions of quadrics
    let pencils = &lines[..2];
    println!(
        "two pencils: defect {}",
        star_holds_d2(pencils, field)?.defect
    );

    // y_0 y_1 + y_2 y_3 = f_1(y_0, y_1) + f_2(y_2, y_3)
    let target: Vec<BigInt> = [0, 1, 0, 0, 0, 0, 0, 0, 1, 0].map(BigInt::from).to_vec();
    match decompose_quadric_exact(&target, pencils)? {
        Some(w) => {
            for (i, fam) in w.families.iter().enumerate() {
                let gram: Vec<String> = fam
                    .gram
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| x.to_json().as_str().unwrap_or_default().to_owned())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                println!(
                    "family {i}: forms {:?}, gram [{}]",
                    fam.forms,
                    gram.join("; ")
                );
            }
        }
        None => println!("no decomposition"),
    }
    Ok(())
}
