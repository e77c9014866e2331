//! Exact ground truth for `dim (I_Λ)_2`: a quadric contains a linear space
//! iff its pullback along the spanning matrix vanishes identically, which
//! is a linear condition on the quadric's coefficients.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{random_configuration, Configuration, WeightVector};
use crate::error::{Error, Result};
use crate::formula::{expected_dim_i2, quadric_count};
use crate::linalg::{DenseMatrix, PrimeField};

/// Default number of random samples per weight vector.
pub const DEFAULT_TRIALS: usize = 3;

/// Quadratic monomials `x_i x_j`, `i <= j`, in lexicographic order of
/// `(i, j)`. This order is the coefficient layout everywhere in the crate.
pub fn monomials(n: usize) -> Vec<(usize, usize)> {
    (0..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
}

/// Position of `x_i x_j` in [`monomials`].
pub fn monomial_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (n + 1) - i * i.saturating_sub(1) / 2 + (j - i)
}

/// A quadratic form `Σ_{i<=j} q_ij x_i x_j` over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadricCoeffs {
    n: usize,
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl QuadricCoeffs {
    pub fn new(field: PrimeField, n: usize, coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.len() != quadric_count(n) {
            return Err(Error::Shape(format!(
                "{} coefficients for {} quadratic monomials",
                coeffs.len(),
                quadric_count(n)
            )));
        }
        let p = field.modulus();
        Ok(Self {
            n,
            field,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The form `t ↦ q(B t)` for an `(n+1) × k` matrix `B`, as
    /// coefficients over the `k` new variables.
    pub fn pullback(&self, b: &DenseMatrix) -> Result<QuadricCoeffs> {
        if b.rows() != self.n + 1 || b.field() != self.field {
            return Err(Error::Shape(format!(
                "pullback along a {}x{} matrix of a form in {} variables",
                b.rows(),
                b.cols(),
                self.n + 1
            )));
        }
        let k = b.cols();
        if k == 0 {
            return Err(Error::Shape("pullback along an empty matrix".into()));
        }
        let rows = pullback_rows(b);
        let coeffs = rows.mul_vec(&self.coeffs)?;
        QuadricCoeffs::new(self.field, k - 1, coeffs)
    }

    /// Twice the Gram matrix: `2 q_ii` on the diagonal and `q_ij` off it.
    /// Same rank as the Gram matrix in odd characteristic.
    pub fn doubled_gram(&self) -> DenseMatrix {
        let f = self.field;
        let size = self.n + 1;
        let mut data = vec![0; size * size];
        for (idx, (i, j)) in monomials(self.n).into_iter().enumerate() {
            let q = self.coeffs[idx];
            if i == j {
                data[i * size + i] = f.add(q, q);
            } else {
                data[i * size + j] = q;
                data[j * size + i] = q;
            }
        }
        DenseMatrix::new(f, size, size, data).expect("square")
    }

    /// Rank of the quadric (rank of its symmetric matrix). Needs an odd
    /// prime.
    pub fn rank(&self) -> usize {
        self.doubled_gram().rank()
    }
}

/// Rows `(a, b)`, `a <= b`, each the functional taking a quadric's
/// coefficients to the coefficient of `t_a t_b` in its pullback along `B`.
fn pullback_rows(b: &DenseMatrix) -> DenseMatrix {
    let f = b.field();
    let n = b.rows() - 1;
    let k = b.cols();
    let monos = monomials(n);
    let mut data = Vec::with_capacity(k * (k + 1) / 2 * monos.len());
    for a in 0..k {
        for c in a..k {
            for &(i, j) in &monos {
                let v = if a == c {
                    f.mul(b.get(i, a), b.get(j, a))
                } else {
                    f.add(
                        f.mul(b.get(i, a), b.get(j, c)),
                        f.mul(b.get(i, c), b.get(j, a)),
                    )
                };
                data.push(v);
            }
        }
    }
    DenseMatrix::new(f, k * (k + 1) / 2, monos.len(), data).expect("row count")
}

/// The linear conditions for a quadric to contain every component: one
/// block of `C(m_i + 2, 2)` rows per component, `C(n + 2, 2)` columns.
pub fn constraint_matrix(c: &Configuration) -> DenseMatrix {
    let field = c.field();
    let cols = quadric_count(c.ambient_n());
    c.spaces()
        .iter()
        .map(|s| pullback_rows(s.span()))
        .fold(DenseMatrix::zeros(field, 0, cols), |acc, block| {
            acc.vcat(&block).expect("shared column count")
        })
}

/// `dim (I_Λ)_2` for this particular configuration.
pub fn dim_i2_exact(c: &Configuration) -> usize {
    quadric_count(c.ambient_n()) - constraint_matrix(c).rank()
}

/// A basis of `(I_Λ)_2`.
pub fn kernel_quadrics(c: &Configuration) -> Vec<QuadricCoeffs> {
    let kernel = constraint_matrix(c).kernel_basis();
    let quadrics: Vec<QuadricCoeffs> = kernel
        .columns()
        .into_iter()
        .map(|col| QuadricCoeffs::new(c.field(), c.ambient_n(), col).expect("kernel length"))
        .collect();
    for q in &quadrics {
        for s in c.spaces() {
            assert!(
                q.pullback(s.span()).expect("same ambient").is_zero(),
                "kernel quadric does not vanish on a component"
            );
        }
    }
    quadrics
}

/// Outcome of comparing the closed form with random samples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub weight: WeightVector,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub per_trial_dims: Vec<usize>,
    pub oracle_dim: usize,
    pub formula_dim: u64,
    pub agree: bool,
}

/// Estimates the generic `dim (I_Λ)_2` as the minimum over `trials` random
/// configurations (trial `t` uses seed `seed + t`) and compares it with the
/// closed form.
///
/// The dimension is upper semicontinuous, so each sample can only
/// overshoot the generic value.
pub fn generic_dim_i2(
    w: &WeightVector,
    trials: usize,
    field: PrimeField,
    seed: u64,
) -> Result<OracleReport> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    let per_trial_dims = (0..trials as u64)
        .into_par_iter()
        .map(|t| random_configuration(w, field, seed.wrapping_add(t)).map(|c| dim_i2_exact(&c)))
        .collect::<Result<Vec<_>>>()?;
    let oracle_dim = *per_trial_dims.iter().min().expect("trials >= 1");
    let formula_dim = expected_dim_i2(w).dim_i2;
    Ok(OracleReport {
        weight: w.clone(),
        prime: field.modulus(),
        seed,
        trials,
        per_trial_dims,
        oracle_dim,
        formula_dim,
        agree: oracle_dim as u64 == formula_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::LinearSpace;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn monomial_layout() {
        let n = 3;
        let monos = monomials(n);
        assert_eq!(monos.len(), 10);
        assert_eq!(monos[0], (0, 0));
        assert_eq!(monos[4], (1, 1));
        for (idx, &(i, j)) in monos.iter().enumerate() {
            assert_eq!(monomial_index(n, i, j), idx);
            assert_eq!(monomial_index(n, j, i), idx);
        }
    }

    #[test]
    fn point_constraint_is_evaluation() {
        let pt = DenseMatrix::from_rows(fp(), &[vec![2], vec![3], vec![5]]).unwrap();
        let c = Configuration::new(fp(), 2, vec![LinearSpace::new(2, pt).unwrap()]).unwrap();
        let m = constraint_matrix(&c);
        assert_eq!((m.rows(), m.cols()), (1, 6));
        assert_eq!(m.row(0), &[4, 6, 10, 9, 15, 25]);
        assert_eq!(dim_i2_exact(&c), 5);
    }

    #[test]
    fn coordinate_line_picks_out_coefficients() {
        let line = LinearSpace::coordinate(fp(), 2, &[0, 1]).unwrap();
        let c = Configuration::new(fp(), 2, vec![line]).unwrap();
        let m = constraint_matrix(&c);
        // q_00, q_01, q_11 sit at positions 0, 1, 3
        let expected = DenseMatrix::from_rows(
            fp(),
            &[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
            ],
        )
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn coordinate_planes_give_x0_x1() {
        // x_0 = 0 and x_1 = 0 in P^3
        let a = LinearSpace::coordinate(fp(), 3, &[1, 2, 3]).unwrap();
        let b = LinearSpace::coordinate(fp(), 3, &[0, 2, 3]).unwrap();
        let c = Configuration::new(fp(), 3, vec![a, b]).unwrap();
        assert_eq!(dim_i2_exact(&c), 1);
        let ks = kernel_quadrics(&c);
        assert_eq!(ks.len(), 1);
        let q = &ks[0];
        let nonzero: Vec<usize> = (0..10).filter(|&i| q.coeffs()[i] != 0).collect();
        assert_eq!(nonzero, vec![monomial_index(3, 0, 1)]);
    }

    #[test]
    fn two_random_planes_in_p3() {
        for seed in 0..4 {
            let w = WeightVector::new(3, vec![2, 2]).unwrap();
            let c = random_configuration(&w, fp(), seed).unwrap();
            let m = constraint_matrix(&c);
            assert_eq!((m.rows(), m.cols()), (12, 10));
            assert_eq!(m.rank(), 9);
            assert_eq!(m.kernel_basis().cols(), 1);
            let ks = kernel_quadrics(&c);
            assert_eq!(ks.len(), 1);
            assert_eq!(ks[0].rank(), 2);
        }
    }

    #[test]
    fn four_random_lines_lie_on_no_quadric() {
        let w = WeightVector::new(3, vec![1, 1, 1, 1]).unwrap();
        let c = random_configuration(&w, fp(), 0).unwrap();
        assert_eq!(dim_i2_exact(&c), 0);
        assert!(kernel_quadrics(&c).is_empty());
    }

    #[test]
    fn report_takes_the_minimum() {
        let w = WeightVector::new(4, vec![3, 1]).unwrap();
        let rep = generic_dim_i2(&w, 3, fp(), 0).unwrap();
        assert_eq!(rep.per_trial_dims.len(), 3);
        assert_eq!(rep.oracle_dim, *rep.per_trial_dims.iter().min().unwrap());
        assert_eq!((rep.oracle_dim, rep.formula_dim, rep.agree), (3, 3, true));
        assert!(generic_dim_i2(&w, 0, fp(), 0).is_err());
    }

    #[test]
    fn pullback_shape_checked() {
        let q = QuadricCoeffs::new(fp(), 2, vec![1; 6]).unwrap();
        let b = DenseMatrix::identity(fp(), 4);
        assert!(q.pullback(&b).is_err());
        assert!(QuadricCoeffs::new(fp(), 2, vec![1; 5]).is_err());
    }
}
