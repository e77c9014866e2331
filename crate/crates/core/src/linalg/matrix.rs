use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Dense row-major matrix of residues modulo a prime.
///
/// Matrices are immutable once built; every elimination routine works on
/// a private copy of the entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
struct Echelon {
    cols: usize,
    data: Vec<u64>,
    pivots: Vec<usize>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries, reducing them modulo `p`.
    pub fn new(field: PrimeField, rows: usize, cols: usize, mut data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let p = field.modulus();
        data.iter_mut().for_each(|x| *x %= p);
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self {
            field,
            rows: n,
            cols: n,
            data,
        }
    }

    /// Builds a matrix from signed integer rows.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.reduce_i64(v)))
            .collect();
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given residue vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(format!("columns must have length {rows}")));
        }
        let cols = columns.len();
        let p = field.modulus();
        let mut data = vec![0; rows * cols];
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                data[i * cols + j] = v % p;
            }
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        Self {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<Self> {
        if self.cols != rhs.rows || self.field != rhs.field {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[u64]) -> Result<Vec<u64>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &DenseMatrix) -> Result<Self> {
        if self.rows != rhs.rows || self.field != rhs.field {
            return Err(Error::Shape(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, rhs.rows
            )));
        }
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, rhs: &DenseMatrix) -> Result<Self> {
        if self.cols != rhs.cols || self.field != rhs.field {
            return Err(Error::Shape(format!(
                "cannot stack {} columns on {} columns",
                self.cols, rhs.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Self {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let columns: Vec<Vec<u64>> = idx.iter().map(|&c| self.column(c)).collect();
        Self::from_columns(self.field, self.rows, &columns).expect("columns share a length")
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Self {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// Rank over the prime field, by forward elimination.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in c..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a[rank * cols + c]);
            for r in rank + 1..rows {
                let lead = a[r * cols + c];
                if lead == 0 {
                    continue;
                }
                let factor = f.mul(lead, inv);
                for j in c..cols {
                    let v = f.mul(factor, a[rank * cols + j]);
                    a[r * cols + j] = f.sub(a[r * cols + j], v);
                }
            }
            rank += 1;
        }
        rank
    }

    fn rref(&self) -> Echelon {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        for c in 0..cols {
            let rank = pivots.len();
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a[rank * cols + c]);
            for j in c..cols {
                a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
            }
            for r in 0..rows {
                let lead = a[r * cols + c];
                if r == rank || lead == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(lead, a[rank * cols + j]);
                    a[r * cols + j] = f.sub(a[r * cols + j], v);
                }
            }
            pivots.push(c);
        }
        Echelon {
            cols,
            data: a,
            pivots,
        }
    }

    /// Indices of the pivot columns, i.e. the leftmost maximal set of
    /// linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// The pivot columns of `self`, a basis of its column space.
    pub fn column_basis(&self) -> Self {
        self.select_columns(&self.pivot_columns())
    }

    /// Basis of the right null space, one column per free variable in
    /// increasing column order.
    pub fn kernel_basis(&self) -> Self {
        let f = self.field;
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let columns: Vec<Vec<u64>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = f.neg(ech.data[r * ech.cols + fc]);
                }
                v
            })
            .collect();
        Self::from_columns(f, self.cols, &columns).expect("kernel columns share a length")
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let ech = self
            .hcat(&Self::identity(self.field, n))
            .expect("same row count")
            .rref();
        if !ech.pivots.iter().take(n).copied().eq(0..n) {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            data.extend_from_slice(&ech.data[r * ech.cols + n..(r + 1) * ech.cols]);
        }
        Some(Self {
            field: self.field,
            rows: n,
            cols: n,
            data,
        })
    }

    /// Solves `self * x = b`. Free variables are set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Self::from_columns(self.field, self.rows, &[b.to_vec()])?;
        let ech = self.hcat(&rhs)?.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.data[r * ech.cols + self.cols];
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix {}x{} mod {}",
            self.rows,
            self.cols,
            self.field.modulus()
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}
