//! Sums of quadratic forms in prescribed families of linear forms.
//!
//! Every quadratic form in `y_0..y_n` is a sum `f_1(l_1,..) + ... + f_s(l_s,..)`
//! exactly when the products `l_{i,a} l_{i,b}` span all quadrics. Under the
//! differentiation pairing the missing part of that span is dual to the
//! quadrics containing the configuration `Λ_1 + ... + Λ_s`, where `Λ_i` is
//! the span of the `i`-th family's coefficient vectors. The defect of the
//! product span therefore equals `dim (I_Λ)_2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arrangement::{Configuration, LinearSpace};
use crate::error::{Error, Result};
use crate::formula::quadric_count;
use crate::linalg::{DenseMatrix, IntMatrix, PrimeField};
use crate::oracle::{monomials, QuadricCoeffs};

/// Linear forms `Σ_k c_k y_k` given by their integer coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormFamily {
    n: usize,
    forms: Vec<Vec<i64>>,
}

impl FormFamily {
    pub fn new(n: usize, forms: Vec<Vec<i64>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Precondition(
                "a family needs at least one form".into(),
            ));
        }
        if forms.iter().any(|f| f.len() != n + 1) {
            return Err(Error::Shape(format!(
                "linear forms in {} variables need {} coefficients",
                n + 1,
                n + 1
            )));
        }
        Ok(Self { n, forms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[Vec<i64>] {
        &self.forms
    }

    fn prime_columns(&self, field: PrimeField) -> Vec<Vec<u64>> {
        self.forms
            .iter()
            .map(|f| f.iter().map(|&c| field.reduce_i64(c)).collect())
            .collect()
    }

    fn matrix(&self, field: PrimeField) -> DenseMatrix {
        DenseMatrix::from_columns(field, self.n + 1, &self.prime_columns(field))
            .expect("validated lengths")
    }

    fn int_matrix(&self) -> IntMatrix {
        let columns: Vec<Vec<BigInt>> = self
            .forms
            .iter()
            .map(|f| f.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        IntMatrix::from_columns(self.n + 1, &columns).expect("validated lengths")
    }
}

fn check_families(families: &[FormFamily]) -> Result<usize> {
    let first = families
        .first()
        .ok_or_else(|| Error::Precondition("at least one family is required".into()))?;
    let n = first.n();
    if let Some(f) = families.iter().find(|f| f.n() != n) {
        return Err(Error::AmbientMismatch(n, f.n()));
    }
    Ok(n)
}

/// The linear space spanned by the family's coefficient vectors; its ideal
/// is generated by the linear forms in `x` annihilating the family.
pub fn annihilator_space(fam: &FormFamily, field: PrimeField) -> Result<LinearSpace> {
    let basis = fam.matrix(field).column_basis();
    if basis.cols() == 0 {
        return Err(Error::Precondition(
            "every form in the family is zero".into(),
        ));
    }
    LinearSpace::new(fam.n(), basis)
}

/// The configuration dual to a list of families. Families with equal spans
/// give the same component and are merged.
pub fn annihilator_configuration(
    families: &[FormFamily],
    field: PrimeField,
) -> Result<Configuration> {
    let n = check_families(families)?;
    let spaces = families
        .iter()
        .map(|f| annihilator_space(f, field))
        .collect::<Result<Vec<_>>>()?;
    Configuration::new_dedup(field, n, spaces)
}

/// Coefficients of `l * m` in the quadratic monomial order, generic over
/// the scalar arithmetic.
fn product_coeffs<T, A, M>(n: usize, l: &[T], m: &[T], add: A, mul: M) -> Vec<T>
where
    T: Clone,
    A: Fn(T, T) -> T,
    M: Fn(&T, &T) -> T,
{
    monomials(n)
        .into_iter()
        .map(|(i, j)| {
            if i == j {
                mul(&l[i], &m[i])
            } else {
                add(mul(&l[i], &m[j]), mul(&l[j], &m[i]))
            }
        })
        .collect()
}

fn prime_product(field: PrimeField, n: usize, l: &[u64], m: &[u64]) -> Vec<u64> {
    product_coeffs(n, l, m, |a, b| field.add(a, b), |a, b| field.mul(*a, *b))
}

fn int_product(n: usize, l: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    product_coeffs(n, l, m, |a, b| a + b, |a, b| a * b)
}

/// Answer to the question whether the families' degree-two parts span all
/// quadratic forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarReport {
    pub holds: bool,
    /// `C(n+2, 2)` minus the dimension of the span of all products.
    pub defect: usize,
}

impl StarReport {
    fn from_rank(n: usize, rank: usize) -> Self {
        let defect = quadric_count(n) - rank;
        Self {
            holds: defect == 0,
            defect,
        }
    }
}

fn all_prime_products(families: &[FormFamily], field: PrimeField, n: usize) -> Vec<Vec<u64>> {
    let mut columns = Vec::new();
    for fam in families {
        let forms = fam.prime_columns(field);
        for a in 0..forms.len() {
            for b in a..forms.len() {
                columns.push(prime_product(field, n, &forms[a], &forms[b]));
            }
        }
    }
    columns
}

/// Decides, over the prime field, whether every quadratic form is a sum of
/// quadratic forms in the individual families.
pub fn star_holds_d2(families: &[FormFamily], field: PrimeField) -> Result<StarReport> {
    let n = check_families(families)?;
    let columns = all_prime_products(families, field, n);
    let a = DenseMatrix::from_columns(field, quadric_count(n), &columns)?;
    Ok(StarReport::from_rank(n, a.rank()))
}

/// Same as [`star_holds_d2`], over the rationals.
pub fn star_holds_d2_exact(families: &[FormFamily]) -> Result<StarReport> {
    let n = check_families(families)?;
    let mut columns = Vec::new();
    for fam in families {
        let forms: Vec<Vec<BigInt>> = fam
            .forms()
            .iter()
            .map(|f| f.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        for a in 0..forms.len() {
            for b in a..forms.len() {
                columns.push(int_product(n, &forms[a], &forms[b]));
            }
        }
    }
    let a = IntMatrix::from_columns(quadric_count(n), &columns)?;
    Ok(StarReport::from_rank(n, a.rank()))
}

/// The part of a decomposition living in one family: `f_i(z) = zᵀ G z`
/// evaluated at the family's independent forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness<T> {
    /// Indices (into the family) of the forms substituted for `z`.
    pub forms: Vec<usize>,
    /// Symmetric matrix `G`.
    pub gram: Vec<Vec<T>>,
}

/// Certificate that a target quadric is a sum of forms in the families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionWitness<T> {
    pub families: Vec<FamilyWitness<T>>,
    /// `Σ_i f_i(l_i)` expanded in the quadratic monomial order; equals the
    /// target.
    pub reconstruction: Vec<T>,
}

/// Which products enter the linear system: `(family, a, b)` with `a <= b`
/// indexing the family's independent forms.
fn product_layout(independent: &[Vec<usize>]) -> Vec<(usize, usize, usize)> {
    let mut layout = Vec::new();
    for (fi, idx) in independent.iter().enumerate() {
        for a in 0..idx.len() {
            for b in a..idx.len() {
                layout.push((fi, a, b));
            }
        }
    }
    layout
}

fn gram_matrices<T: Clone>(
    independent: &[Vec<usize>],
    layout: &[(usize, usize, usize)],
    x: &[T],
    zero: T,
    half: impl Fn(&T) -> T,
) -> Vec<FamilyWitness<T>> {
    let mut out: Vec<FamilyWitness<T>> = independent
        .iter()
        .map(|idx| FamilyWitness {
            forms: idx.clone(),
            gram: vec![vec![zero.clone(); idx.len()]; idx.len()],
        })
        .collect();
    for (&(fi, a, b), v) in layout.iter().zip(x) {
        let g = &mut out[fi].gram;
        if a == b {
            g[a][a] = v.clone();
        } else {
            let h = half(v);
            g[a][b] = h.clone();
            g[b][a] = h;
        }
    }
    out
}

/// Looks for quadratic forms `f_i` with `target = Σ_i f_i(l_{i,0}, ...)`,
/// over the prime field. Each `f_i` is expressed in a maximal independent
/// subset of its family (leftmost forms first); when several decompositions
/// exist the one with free coordinates set to zero is returned.
pub fn decompose_quadric(
    target: &QuadricCoeffs,
    families: &[FormFamily],
) -> Result<Option<DecompositionWitness<u64>>> {
    let n = check_families(families)?;
    if target.n() != n {
        return Err(Error::AmbientMismatch(n, target.n()));
    }
    let field = target.field();
    let independent: Vec<Vec<usize>> = families
        .iter()
        .map(|f| f.matrix(field).pivot_columns())
        .collect();
    let forms: Vec<Vec<Vec<u64>>> = families.iter().map(|f| f.prime_columns(field)).collect();
    let layout = product_layout(&independent);
    let columns: Vec<Vec<u64>> = layout
        .iter()
        .map(|&(fi, a, b)| {
            let idx = &independent[fi];
            prime_product(field, n, &forms[fi][idx[a]], &forms[fi][idx[b]])
        })
        .collect();
    let a = DenseMatrix::from_columns(field, quadric_count(n), &columns)?;
    let Some(x) = a.solve(target.coeffs())? else {
        return Ok(None);
    };
    let reconstruction = a.mul_vec(&x)?;
    assert_eq!(
        reconstruction,
        target.coeffs(),
        "witness does not reconstruct the target"
    );
    let half = field.inv(2 % field.modulus());
    let families_out = gram_matrices(&independent, &layout, &x, 0, |v| field.mul(*v, half));
    Ok(Some(DecompositionWitness {
        families: families_out,
        reconstruction,
    }))
}

/// [`decompose_quadric`] over the rationals, with fraction-free elimination.
pub fn decompose_quadric_exact(
    target: &[BigInt],
    families: &[FormFamily],
) -> Result<Option<DecompositionWitness<BigRational>>> {
    let n = check_families(families)?;
    if target.len() != quadric_count(n) {
        return Err(Error::Shape(format!(
            "target has {} coefficients, expected {}",
            target.len(),
            quadric_count(n)
        )));
    }
    let independent: Vec<Vec<usize>> = families
        .iter()
        .map(|f| f.int_matrix().pivot_columns())
        .collect();
    let forms: Vec<Vec<Vec<BigInt>>> = families
        .iter()
        .map(|f| {
            f.forms()
                .iter()
                .map(|l| l.iter().map(|&c| BigInt::from(c)).collect())
                .collect()
        })
        .collect();
    let layout = product_layout(&independent);
    let columns: Vec<Vec<BigInt>> = layout
        .iter()
        .map(|&(fi, a, b)| {
            let idx = &independent[fi];
            int_product(n, &forms[fi][idx[a]], &forms[fi][idx[b]])
        })
        .collect();
    let a = IntMatrix::from_columns(quadric_count(n), &columns)?;
    let Some(x) = a.solve(target)? else {
        return Ok(None);
    };
    let reconstruction: Vec<BigRational> = (0..a.rows())
        .map(|r| {
            (0..a.cols()).fold(BigRational::zero(), |acc, c| {
                acc + BigRational::from_integer(a.get(r, c).clone()) * &x[c]
            })
        })
        .collect();
    let expected: Vec<BigRational> = target
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    assert_eq!(
        reconstruction, expected,
        "witness does not reconstruct the target"
    );
    let half = BigRational::new(1.into(), 2.into());
    let families_out = gram_matrices(&independent, &layout, &x, BigRational::zero(), |v| {
        v * &half
    });
    Ok(Some(DecompositionWitness {
        families: families_out,
        reconstruction,
    }))
}

/// Expands `Σ_i zᵀ G_i z` at the witness forms over the prime field.
pub fn expand_witness(
    witness: &DecompositionWitness<u64>,
    families: &[FormFamily],
    field: PrimeField,
) -> Result<Vec<u64>> {
    let n = check_families(families)?;
    let mut acc = vec![0; quadric_count(n)];
    for (fw, fam) in witness.families.iter().zip(families) {
        let forms = fam.prime_columns(field);
        for (a, &ia) in fw.forms.iter().enumerate() {
            for (b, &ib) in fw.forms.iter().enumerate() {
                let prod = prime_product(field, n, &forms[ia], &forms[ib]);
                // l_a l_b appears twice for a != b, once per ordered pair
                let g = fw.gram[a][b];
                for (slot, v) in acc.iter_mut().zip(prod) {
                    *slot = field.add(*slot, field.mul(g, v));
                }
            }
        }
    }
    Ok(acc)
}

/// Scalars that can be written into witness JSON.
pub trait WitnessScalar {
    fn to_json(&self) -> Value;
}

impl WitnessScalar for u64 {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl WitnessScalar for BigRational {
    fn to_json(&self) -> Value {
        if self.is_integer() {
            json!(self.numer().to_string())
        } else {
            let sign = if self.is_negative() { "-" } else { "" };
            json!(format!("{sign}{}/{}", self.numer().abs(), self.denom()))
        }
    }
}

impl<T: WitnessScalar> DecompositionWitness<T> {
    /// `{"families": [{"forms": [...], "gram": [[...]]}], "reconstruction": [...]}`.
    pub fn to_json(&self) -> Value {
        let families: Vec<Value> = self
            .families
            .iter()
            .map(|f| {
                let gram: Vec<Vec<Value>> = f
                    .gram
                    .iter()
                    .map(|row| row.iter().map(WitnessScalar::to_json).collect())
                    .collect();
                json!({ "forms": f.forms, "gram": gram })
            })
            .collect();
        let reconstruction: Vec<Value> = self
            .reconstruction
            .iter()
            .map(WitnessScalar::to_json)
            .collect();
        json!({ "families": families, "reconstruction": reconstruction })
    }
}

/// Input file for decomposition queries. `target`, when present, uses the
/// quadratic monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionInput {
    pub n: usize,
    pub families: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<i64>>,
}

impl DecompositionInput {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let input: Self = serde_json::from_str(s)?;
        input.form_families()?;
        if let Some(t) = &input.target {
            if t.len() != quadric_count(input.n) {
                return Err(Error::Shape(format!(
                    "target has {} coefficients, expected {}",
                    t.len(),
                    quadric_count(input.n)
                )));
            }
        }
        Ok(input)
    }

    pub fn form_families(&self) -> Result<Vec<FormFamily>> {
        if self.families.is_empty() {
            return Err(Error::Precondition(
                "at least one family is required".into(),
            ));
        }
        self.families
            .iter()
            .map(|f| FormFamily::new(self.n, f.clone()))
            .collect()
    }
}

/// A (★) verdict, with the prime-field answer when it was overruled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarVerdict {
    pub report: StarReport,
    pub overruled: Option<StarReport>,
}

/// User-supplied forms are not generic, so a prime-field answer is only a
/// fast first pass: the rational answer is final. With `exact_only` the
/// prime pass is skipped.
pub fn star_verdict(
    families: &[FormFamily],
    field: PrimeField,
    exact_only: bool,
) -> Result<StarVerdict> {
    let exact = star_holds_d2_exact(families)?;
    if exact_only {
        return Ok(StarVerdict {
            report: exact,
            overruled: None,
        });
    }
    let fast = star_holds_d2(families, field)?;
    Ok(StarVerdict {
        report: exact,
        overruled: (fast != exact).then_some(fast),
    })
}

/// Decomposition outcome after reconciling both arithmetics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionVerdict {
    Prime(DecompositionWitness<u64>),
    Exact(DecompositionWitness<BigRational>),
    NoDecomposition,
}

/// Decomposes `target` with the same policy as [`star_verdict`]. The
/// prime-field witness is kept when both arithmetics agree that a
/// decomposition exists; otherwise the rational result stands. The second
/// value reports whether the prime pass was overruled.
pub fn decomposition_verdict(
    target: &[i64],
    families: &[FormFamily],
    field: PrimeField,
    exact_only: bool,
) -> Result<(DecompositionVerdict, bool)> {
    let big: Vec<BigInt> = target.iter().map(|&c| BigInt::from(c)).collect();
    let exact = decompose_quadric_exact(&big, families)?;
    if exact_only {
        return Ok((
            exact.map_or(
                DecompositionVerdict::NoDecomposition,
                DecompositionVerdict::Exact,
            ),
            false,
        ));
    }
    let n = check_families(families)?;
    let reduced = QuadricCoeffs::new(
        field,
        n,
        target.iter().map(|&c| field.reduce_i64(c)).collect(),
    )?;
    let fast = decompose_quadric(&reduced, families)?;
    Ok(match (fast, exact) {
        (Some(w), Some(_)) => (DecompositionVerdict::Prime(w), false),
        (None, None) => (DecompositionVerdict::NoDecomposition, false),
        (_, Some(w)) => (DecompositionVerdict::Exact(w), true),
        (_, None) => (DecompositionVerdict::NoDecomposition, true),
    })
}
