mod common;

use common::{span_of, subspaces};
use quadrica::oracle::monomial_index;
use quadrica::{fano_dim, max_plane_dim_on_rank_r, LinearSpace, PrimeField, QuadricCoeffs};

/// `x_0 x_1 + x_2 x_3 + ...` on the first `r` variables, plus `x_{r-1}^2`
/// when `r` is odd: a split form of rank `r`.
fn split_quadric(field: PrimeField, n: usize, r: usize) -> QuadricCoeffs {
    let mut coeffs = vec![0; (n + 1) * (n + 2) / 2];
    for k in 0..r / 2 {
        coeffs[monomial_index(n, 2 * k, 2 * k + 1)] = 1;
    }
    if r % 2 == 1 {
        coeffs[monomial_index(n, r - 1, r - 1)] = 1;
    }
    QuadricCoeffs::new(field, n, coeffs).unwrap()
}

#[test]
fn lines_on_the_smooth_quadric_surface_over_gf7() {
    let f = PrimeField::new(7).unwrap();
    let mut coeffs = vec![0; 10];
    coeffs[monomial_index(3, 0, 3)] = 1;
    coeffs[monomial_index(3, 1, 2)] = 6;
    let q = QuadricCoeffs::new(f, 3, coeffs).unwrap();
    assert_eq!(q.rank(), 4);

    let all = subspaces(7, 4, 2);
    assert_eq!(all.len(), 2850);
    let lines: Vec<LinearSpace> = all
        .iter()
        .map(|rows| span_of(f, rows))
        .filter(|b| q.pullback(b).unwrap().is_zero())
        .map(|b| LinearSpace::new(3, b).unwrap())
        .collect();
    // two rulings, each a P^1 of lines: 2 * |P^1(F_7)|
    assert_eq!(lines.len(), 16);

    let mut ruling = vec![None; lines.len()];
    ruling[0] = Some(0);
    for j in 1..lines.len() {
        let skew = lines[0].intersection_dim(&lines[j]).unwrap() < 0;
        ruling[j] = Some(if skew { 0 } else { 1 });
    }
    let sizes = [0, 1].map(|k| ruling.iter().filter(|&&r| r == Some(k)).count());
    assert_eq!(sizes, [8, 8]);
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let meet = lines[a].intersection_dim(&lines[b]).unwrap();
            if ruling[a] == ruling[b] {
                assert_eq!(meet, -1, "lines of one ruling are disjoint");
            } else {
                assert_eq!(meet, 0, "lines of opposite rulings meet in a point");
            }
        }
    }
    assert_eq!(fano_dim(1, 3).unwrap(), Some(1));
}

#[test]
fn largest_isotropic_subspaces_over_gf3() {
    let f = PrimeField::new(3).unwrap();
    for n in 2..=4 {
        for r in 1..=n + 1 {
            let q = split_quadric(f, n, r);
            assert_eq!(q.rank(), r);
            let best = (1..=n + 1)
                .rev()
                .find(|&k| {
                    subspaces(3, n + 1, k)
                        .iter()
                        .any(|rows| q.pullback(&span_of(f, rows)).unwrap().is_zero())
                })
                .map(|k| k as i64 - 1)
                .unwrap_or(-1);
            assert_eq!(best, max_plane_dim_on_rank_r(n, r).unwrap(), "n={n}, r={r}");
        }
    }
}

#[test]
fn six_plane_on_a_rank_six_quadric_in_p9() {
    let f = PrimeField::default();
    let q = split_quadric(f, 9, 6);
    let plane = LinearSpace::coordinate(f, 9, &[0, 2, 4, 6, 7, 8, 9]).unwrap();
    assert_eq!(plane.dim(), 6);
    assert!(q.pullback(plane.span()).unwrap().is_zero());
    assert_eq!(max_plane_dim_on_rank_r(9, 6).unwrap(), 6);
    let bigger = LinearSpace::coordinate(f, 9, &[0, 1, 2, 4, 6, 7, 8, 9]).unwrap();
    assert!(!q.pullback(bigger.span()).unwrap().is_zero());
}
