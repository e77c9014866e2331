use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, PrimeField};

/// Dense row-major matrix over the integers, eliminated fraction-free
/// (Bareiss) so every intermediate value stays an exact integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

struct BareissEchelon {
    cols: usize,
    data: Vec<BigInt>,
    pivots: Vec<usize>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(format!("columns must have length {rows}")));
        }
        let cols = columns.len();
        let mut data = vec![BigInt::zero(); rows * cols];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                data[i * cols + j] = v.clone();
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    /// Reduction modulo a prime.
    pub fn to_prime_field(&self, field: PrimeField) -> DenseMatrix {
        let data = self.data.iter().map(|v| field.reduce_bigint(v)).collect();
        DenseMatrix::new(field, self.rows, self.cols, data).expect("shape preserved")
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn bareiss(&self) -> BareissEchelon {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        for c in 0..cols {
            let r = pivots.len();
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    a.swap(piv * cols + j, r * cols + j);
                }
            }
            let pivot = a[r * cols + c].clone();
            for i in r + 1..rows {
                let lead = a[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = &pivot * &a[i * cols + j] - &lead * &a[r * cols + j];
                    // exact: Sylvester's identity
                    a[i * cols + j] = v / &prev;
                }
                a[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            pivots.push(c);
        }
        BareissEchelon {
            cols,
            data: a,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.bareiss().pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.bareiss().pivots
    }

    /// Solves `self * x = b` over the rationals, with free variables set to
    /// zero. `None` when the system is inconsistent.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let cols = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * cols);
        for (r, rhs) in b.iter().enumerate() {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
            data.push(rhs.clone());
        }
        let ech = IntMatrix {
            rows: self.rows,
            cols,
            data,
        }
        .bareiss();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let entry =
            |r: usize, c: usize| BigRational::from_integer(ech.data[r * ech.cols + c].clone());
        let mut x = vec![BigRational::zero(); self.cols];
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let mut acc = entry(k, self.cols);
            for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                if !xj.is_zero() {
                    acc -= entry(k, j) * xj;
                }
            }
            x[pc] = acc / entry(k, pc);
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_small() {
        assert_eq!(IntMatrix::from_rows(&[]).unwrap().rank(), 0);
        let m = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3], vec![0, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let m = IntMatrix::from_rows(&[vec![0, 3], vec![5, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_over_rationals() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let x = m
            .solve(&[BigInt::from(1), BigInt::from(1)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![q(1, 2), q(1, 3)]);

        let m = IntMatrix::from_rows(&[vec![1, 1]]).unwrap();
        let x = m.solve(&[BigInt::from(5)]).unwrap().unwrap();
        assert_eq!(x, vec![q(5, 1), q(0, 1)]);

        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.solve(&[BigInt::from(1), BigInt::from(2)]).unwrap(), None);
    }

    #[test]
    fn skipped_columns_keep_divisions_exact() {
        let m = IntMatrix::from_rows(&[
            vec![0, 2, 3, 1],
            vec![0, 4, 6, 5],
            vec![0, 6, 1, 2],
            vec![0, 2, 3, 7],
        ])
        .unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank(), m.to_prime_field(PrimeField::default()).rank());
    }
}
