mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use quadrica::apolarity::{decomposition_verdict, expand_witness, DecompositionVerdict};
use quadrica::{
    annihilator_configuration, decompose_quadric, decompose_quadric_exact, dim_i2_exact,
    star_holds_d2, star_holds_d2_exact, FormFamily, PrimeField, QuadricCoeffs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fp() -> PrimeField {
    PrimeField::default()
}

fn families() -> impl Strategy<Value = (usize, Vec<FormFamily>, u64)> {
    (1usize..=4, 1usize..=5, any::<u64>()).prop_map(|(n, s, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (n, common::random_families(&mut rng, n, s), seed)
    })
}

/// Replaces each family's forms by random integer combinations of them
/// through an invertible unitriangular matrix.
fn remix(rng: &mut ChaCha8Rng, fam: &FormFamily) -> FormFamily {
    let forms = fam.forms();
    let mut out = forms.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        for later in &forms[i + 1..] {
            let c: i64 = rng.gen_range(-3..=3);
            for (o, f) in row.iter_mut().zip(later) {
                *o += c * f;
            }
        }
    }
    out.reverse();
    FormFamily::new(fam.n(), out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn defect_counts_quadrics_through_the_dual_configuration((_n, fams, _seed) in families()) {
        let report = star_holds_d2(&fams, fp()).unwrap();
        let config = annihilator_configuration(&fams, fp()).unwrap();
        prop_assert_eq!(report.defect, dim_i2_exact(&config));
        prop_assert_eq!(report.holds, report.defect == 0);
    }

    #[test]
    fn exact_and_prime_defects_agree((_n, fams, _seed) in families()) {
        prop_assert_eq!(star_holds_d2_exact(&fams).unwrap(), star_holds_d2(&fams, fp()).unwrap());
    }

    #[test]
    fn synthesized_targets_roundtrip((n, fams, seed) in families()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let target = common::synthesize_target(&mut rng, n, &fams);

        let reduced: Vec<u64> = target.iter().map(|&c| fp().reduce_i64(c)).collect();
        let q = QuadricCoeffs::new(fp(), n, reduced.clone()).unwrap();
        let w = decompose_quadric(&q, &fams).unwrap().expect("prime-field witness");
        prop_assert_eq!(&w.reconstruction, &reduced);
        prop_assert_eq!(expand_witness(&w, &fams, fp()).unwrap(), reduced);

        let big: Vec<BigInt> = target.iter().map(|&c| BigInt::from(c)).collect();
        let w = decompose_quadric_exact(&big, &fams).unwrap().expect("rational witness");
        let expected: Vec<_> = big.into_iter().map(num_rational::BigRational::from_integer).collect();
        prop_assert_eq!(w.reconstruction, expected);

        let (verdict, overruled) = decomposition_verdict(&target, &fams, fp(), false).unwrap();
        prop_assert!(matches!(verdict, DecompositionVerdict::Prime(_)));
        prop_assert!(!overruled);
    }

    #[test]
    fn any_returned_witness_is_sound((n, fams, seed) in families()) {
        // arbitrary targets: a witness, when present, must reconstruct them
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        let len = (n + 1) * (n + 2) / 2;
        let target: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
        let big: Vec<BigInt> = target.iter().map(|&c| BigInt::from(c)).collect();
        if let Some(w) = decompose_quadric_exact(&big, &fams).unwrap() {
            let expected: Vec<_> = big.into_iter().map(num_rational::BigRational::from_integer).collect();
            prop_assert_eq!(w.reconstruction, expected);
        }
        let reduced: Vec<u64> = target.iter().map(|&c| fp().reduce_i64(c)).collect();
        let q = QuadricCoeffs::new(fp(), n, reduced.clone()).unwrap();
        if let Some(w) = decompose_quadric(&q, &fams).unwrap() {
            prop_assert_eq!(expand_witness(&w, &fams, fp()).unwrap(), reduced);
        }
    }

    #[test]
    fn remixing_a_family_keeps_the_defect((_n, fams, seed) in families()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
        let mixed: Vec<FormFamily> = fams.iter().map(|f| remix(&mut rng, f)).collect();
        prop_assert_eq!(star_holds_d2(&mixed, fp()).unwrap(), star_holds_d2(&fams, fp()).unwrap());
    }
}
