mod common;

use proptest::prelude::*;
use quadrica::{
    dim_i2_exact, expected_dim_i2, kernel_quadrics, pairwise_vertex, project_from,
    random_configuration, tau_v, Configuration, DenseMatrix, LinearSpace, PrimeField, WeightVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fp() -> PrimeField {
    PrimeField::default()
}

fn weights(n_max: usize, s_max: usize) -> impl Strategy<Value = WeightVector> {
    (2usize..=n_max, 1usize..=s_max)
        .prop_flat_map(|(n, s)| (Just(n), prop::collection::vec(0..n, s)))
        .prop_map(|(n, ws)| WeightVector::new(n, ws).unwrap())
}

fn intersecting_weights(n_max: usize, s_max: usize) -> impl Strategy<Value = WeightVector> {
    weights(n_max, s_max).prop_filter("m_1 + m_2 >= n", |w| {
        w.len() >= 2 && w.m(0) + w.m(1) >= w.n()
    })
}

/// The row space of the kernel quadrics, as a matrix whose rank measures
/// how many independent quadrics two kernels share.
fn kernel_matrix(c: &Configuration) -> DenseMatrix {
    let cols: Vec<Vec<u64>> = kernel_quadrics(c)
        .iter()
        .map(|q| q.coeffs().to_vec())
        .collect();
    let len = (c.ambient_n() + 1) * (c.ambient_n() + 2) / 2;
    if cols.is_empty() {
        DenseMatrix::zeros(c.field(), len, 0)
    } else {
        DenseMatrix::from_columns(c.field(), len, &cols).unwrap()
    }
}

#[test]
fn generic_intersections_have_expected_dimension() {
    let mut failures = 0;
    let mut samples = 0;
    for w in WeightVector::enumerate(7, 2)
        .into_iter()
        .filter(|w| w.len() == 2)
    {
        let (n, a, b) = (w.n(), w.m(0), w.m(1));
        if a + b < n {
            continue;
        }
        for seed in 0..4 {
            let c = random_configuration(&w, fp(), seed).unwrap();
            let [x, y] = c.spaces() else { unreachable!() };
            samples += 1;
            if x.intersection_dim(y).unwrap() != (a + b - n) as i64 {
                failures += 1;
            }
        }
    }
    assert!(samples >= 100, "only {samples} samples");
    assert_eq!(failures, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersection_is_symmetric(w in weights(7, 3), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        for a in c.spaces() {
            prop_assert_eq!(a.intersection_dim(a).unwrap(), a.dim() as i64);
            for b in c.spaces() {
                prop_assert_eq!(a.intersection_dim(b).unwrap(), b.intersection_dim(a).unwrap());
                if let Some(meet) = a.intersection(b).unwrap() {
                    prop_assert!(meet.is_contained_in(a).unwrap());
                    prop_assert!(meet.is_contained_in(b).unwrap());
                    prop_assert_eq!(meet.dim() as i64, a.intersection_dim(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn projection_preserves_quadric_count(w in intersecting_weights(7, 5), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        let (tau, _) = tau_v(&w).unwrap();
        let v = pairwise_vertex(&c, tau).unwrap();
        let d = v.as_ref().map_or(-1, |v| v.dim() as i64);
        match project_from(&c, v.as_ref()) {
            Ok(p) => {
                prop_assert_eq!(p.ambient_n() as i64, w.n() as i64 - d - 1);
                prop_assert_eq!(dim_i2_exact(&p), dim_i2_exact(&c));
            }
            Err(quadrica::Error::ProjectionAnnihilates(_)) => {}
            Err(quadrica::Error::Precondition(_)) => prop_assert!(d >= w.n() as i64),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn samples_never_undershoot_the_formula(w in weights(6, 5), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        prop_assert!(dim_i2_exact(&c) as u64 >= expected_dim_i2(&w).dim_i2);
    }

    #[test]
    fn small_fields_also_respect_semicontinuity(w in weights(5, 4), seed in any::<u64>()) {
        // special samples over GF(5) can only gain quadrics
        let c = random_configuration(&w, PrimeField::new(5).unwrap(), seed);
        if let Ok(c) = c {
            prop_assert!(dim_i2_exact(&c) as u64 >= expected_dim_i2(&w).dim_i2);
        }
    }

    #[test]
    fn kernel_quadrics_vanish_on_components(w in weights(6, 4), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        let qs = kernel_quadrics(&c);
        prop_assert_eq!(qs.len(), dim_i2_exact(&c));
        for q in &qs {
            for s in c.spaces() {
                prop_assert!(q.pullback(s.span()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn component_order_is_irrelevant(w in weights(6, 5), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut spaces = c.spaces().to_vec();
        for i in (1..spaces.len()).rev() {
            spaces.swap(i, rng.gen_range(0..=i));
        }
        let shuffled = Configuration::new(fp(), c.ambient_n(), spaces).unwrap();
        let (k1, k2) = (kernel_matrix(&c), kernel_matrix(&shuffled));
        prop_assert_eq!(k1.cols(), k2.cols());
        prop_assert_eq!(k1.hcat(&k2).unwrap().rank(), k1.cols());
    }

    #[test]
    fn change_of_basis_is_irrelevant(w in weights(6, 5), seed in any::<u64>()) {
        let c = random_configuration(&w, fp(), seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let p = fp().modulus();
        let spaces: Vec<LinearSpace> = c
            .spaces()
            .iter()
            .map(|s| {
                let k = s.dim() + 1;
                let g = loop {
                    let data = (0..k * k).map(|_| rng.gen_range(0..p)).collect();
                    let g = DenseMatrix::new(fp(), k, k, data).unwrap();
                    if g.rank() == k {
                        break g;
                    }
                };
                LinearSpace::new(c.ambient_n(), s.span().mul(&g).unwrap()).unwrap()
            })
            .collect();
        let moved = Configuration::new(fp(), c.ambient_n(), spaces).unwrap();
        let (k1, k2) = (kernel_matrix(&c), kernel_matrix(&moved));
        prop_assert_eq!(k1.cols(), k2.cols());
        prop_assert_eq!(k1.hcat(&k2).unwrap().rank(), k1.cols());
    }
}
