//! Configurations of linear spaces in projective space, stored by spanning
//! columns over a prime field.
//!
//! A component `Λ ≅ P^m ⊂ P^n` is the column space of an `(n+1) × (m+1)`
//! matrix of full column rank. Random configurations are drawn from a
//! counter-based stream keyed by `(seed, component index)`, so a sample is
//! reproducible and independent of how many other components are drawn.
//!
//! "Generic" is never certified: a uniformly random sample over a field of
//! size about 2^31 lies in any fixed dense open set with overwhelming
//! probability, and the oracle takes the minimum over several samples.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, PrimeField};

const MAX_RESAMPLES: usize = 16;

/// Ambient dimension together with the component dimensions, sorted
/// non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    n: usize,
    weights: Vec<usize>,
}

impl WeightVector {
    /// Validates and sorts the weights (largest first).
    pub fn new(n: usize, mut weights: Vec<usize>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights(
                "at least one component is required".into(),
            ));
        }
        if let Some(&m) = weights.iter().find(|&&m| m >= n) {
            return Err(Error::InvalidWeights(format!(
                "component dimension {m} must be below the ambient dimension {n}"
            )));
        }
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { n, weights })
    }

    /// Parses a comma-separated list such as `"5,5,5"`.
    pub fn parse(n: usize, weights: &str) -> Result<Self> {
        let parsed = weights
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidWeights(format!("cannot parse {w:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `m_i`, zero-based.
    pub fn m(&self, i: usize) -> usize {
        self.weights[i]
    }

    /// A copy with one more component.
    pub fn with_component(&self, m: usize) -> Result<Self> {
        let mut w = self.weights.clone();
        w.push(m);
        Self::new(self.n, w)
    }

    /// Weights joined by `sep`.
    pub fn joined(&self, sep: &str) -> String {
        self.weights
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Every weight vector with `2 <= n <= n_max` and `1 <= s <= s_max`, in
    /// order of `n`, then `s`, then lexicographically decreasing weights.
    pub fn enumerate(n_max: usize, s_max: usize) -> Vec<WeightVector> {
        let mut out = Vec::new();
        for n in 2..=n_max {
            for s in 1..=s_max {
                let mut current = Vec::with_capacity(s);
                push_non_increasing(n, s, n - 1, &mut current, &mut out);
            }
        }
        out
    }
}

fn push_non_increasing(
    n: usize,
    s: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<WeightVector>,
) {
    if current.len() == s {
        out.push(WeightVector {
            n,
            weights: current.clone(),
        });
        return;
    }
    for m in (0..=max).rev() {
        current.push(m);
        push_non_increasing(n, s, m, current, out);
        current.pop();
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; {}", self.n, self.joined(","))
    }
}

/// A projective linear subspace given by spanning columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearSpace {
    ambient_n: usize,
    span: DenseMatrix,
}

impl LinearSpace {
    /// `span` must have `ambient_n + 1` rows and full column rank.
    pub fn new(ambient_n: usize, span: DenseMatrix) -> Result<Self> {
        if span.rows() != ambient_n + 1 {
            return Err(Error::Shape(format!(
                "span has {} rows, expected {}",
                span.rows(),
                ambient_n + 1
            )));
        }
        if span.cols() == 0 || span.rank() != span.cols() {
            return Err(Error::RankDeficientSpan);
        }
        Ok(Self { ambient_n, span })
    }

    /// The subspace spanned by the coordinate points `e_i`, `i ∈ indices`.
    pub fn coordinate(field: PrimeField, ambient_n: usize, indices: &[usize]) -> Result<Self> {
        let columns: Vec<Vec<u64>> = indices
            .iter()
            .map(|&i| {
                let mut e = vec![0; ambient_n + 1];
                if i <= ambient_n {
                    e[i] = 1;
                }
                e
            })
            .collect();
        Self::new(
            ambient_n,
            DenseMatrix::from_columns(field, ambient_n + 1, &columns)?,
        )
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn span(&self) -> &DenseMatrix {
        &self.span
    }

    pub fn field(&self) -> PrimeField {
        self.span.field()
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.span.cols() - 1
    }

    fn check_ambient(&self, other: &LinearSpace) -> Result<()> {
        if self.ambient_n != other.ambient_n {
            return Err(Error::AmbientMismatch(self.ambient_n, other.ambient_n));
        }
        if self.field() != other.field() {
            return Err(Error::Precondition(
                "spaces live over different fields".into(),
            ));
        }
        Ok(())
    }

    /// Projective dimension of `self ∩ other`, `-1` when empty.
    pub fn intersection_dim(&self, other: &LinearSpace) -> Result<i64> {
        self.check_ambient(other)?;
        let stacked = self.span.hcat(&other.span)?;
        Ok(self.span.cols() as i64 + other.span.cols() as i64 - stacked.rank() as i64 - 1)
    }

    /// `self ∩ other` as a linear space, `None` when empty.
    pub fn intersection(&self, other: &LinearSpace) -> Result<Option<LinearSpace>> {
        self.check_ambient(other)?;
        let kernel = self.span.hcat(&other.span)?.kernel_basis();
        if kernel.cols() == 0 {
            return Ok(None);
        }
        let own: Vec<usize> = (0..self.span.cols()).collect();
        let coeffs = kernel.select_rows(&own);
        let basis = self.span.mul(&coeffs)?;
        LinearSpace::new(self.ambient_n, basis).map(Some)
    }

    /// Whether the two spaces coincide.
    pub fn same_space(&self, other: &LinearSpace) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.intersection_dim(other)? == self.dim() as i64)
    }

    /// Whether `self ⊆ other`.
    pub fn is_contained_in(&self, other: &LinearSpace) -> Result<bool> {
        Ok(self.intersection_dim(other)? == self.dim() as i64)
    }
}

/// A finite set of pairwise distinct linear spaces sharing one ambient space.
///
/// Components of dimension `n` (the whole ambient space) are allowed here,
/// since projections can produce them; weight vectors are stricter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    ambient_n: usize,
    field: PrimeField,
    spaces: Vec<LinearSpace>,
}

impl Configuration {
    pub fn new(field: PrimeField, ambient_n: usize, spaces: Vec<LinearSpace>) -> Result<Self> {
        for s in &spaces {
            if s.ambient_n() != ambient_n {
                return Err(Error::AmbientMismatch(ambient_n, s.ambient_n()));
            }
            if s.field() != field {
                return Err(Error::Precondition(
                    "component over a different field".into(),
                ));
            }
        }
        for i in 0..spaces.len() {
            for j in i + 1..spaces.len() {
                if spaces[i].same_space(&spaces[j])? {
                    return Err(Error::DuplicateComponent(i, j));
                }
            }
        }
        Ok(Self {
            ambient_n,
            field,
            spaces,
        })
    }

    /// Like [`Configuration::new`], but drops repeated components, keeping
    /// the first occurrence.
    pub fn new_dedup(
        field: PrimeField,
        ambient_n: usize,
        spaces: Vec<LinearSpace>,
    ) -> Result<Self> {
        let mut kept: Vec<LinearSpace> = Vec::with_capacity(spaces.len());
        for s in spaces {
            let mut duplicate = false;
            for k in &kept {
                if k.same_space(&s)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                kept.push(s);
            }
        }
        Self::new(field, ambient_n, kept)
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn spaces(&self) -> &[LinearSpace] {
        &self.spaces
    }

    /// Component dimensions in stored order.
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(LinearSpace::dim).collect()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: ConfigurationJson = serde_json::from_str(s)?;
        raw.into_configuration()
    }

    pub fn to_json(&self) -> ConfigurationJson {
        ConfigurationJson {
            n: self.ambient_n,
            prime: self.field.modulus(),
            spaces: self
                .spaces
                .iter()
                .map(|s| SpaceJson {
                    basis: s
                        .span
                        .columns()
                        .into_iter()
                        .map(|c| c.into_iter().map(|v| v as i64).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// On-disk configuration: each basis is a list of spanning points, one row
/// of `n + 1` integers per point, reduced modulo `prime` on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub n: usize,
    pub prime: u64,
    pub spaces: Vec<SpaceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub basis: Vec<Vec<i64>>,
}

impl ConfigurationJson {
    pub fn into_configuration(self) -> Result<Configuration> {
        let field = PrimeField::new(self.prime)?;
        let spaces = self
            .spaces
            .iter()
            .map(|s| {
                if s.basis.iter().any(|p| p.len() != self.n + 1) {
                    return Err(Error::Shape(format!(
                        "basis points must have {} coordinates",
                        self.n + 1
                    )));
                }
                let points = DenseMatrix::from_rows(field, &s.basis)?;
                LinearSpace::new(self.n, points.transpose())
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(field, self.n, spaces)
    }
}

fn component_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Draws a configuration with weight vector `w`: every span entry is an
/// independent uniform residue. Components that come out rank deficient or
/// equal to an earlier component are redrawn from the same stream.
pub fn random_configuration(
    w: &WeightVector,
    field: PrimeField,
    seed: u64,
) -> Result<Configuration> {
    let n = w.n();
    let p = field.modulus();
    let mut spaces: Vec<LinearSpace> = Vec::with_capacity(w.len());
    for (i, &m) in w.weights().iter().enumerate() {
        let mut rng = component_rng(seed, i);
        let mut attempt = 0;
        let space = loop {
            if attempt == MAX_RESAMPLES {
                return Err(Error::RetryExhausted(MAX_RESAMPLES));
            }
            attempt += 1;
            let data: Vec<u64> = (0..(n + 1) * (m + 1))
                .map(|_| rng.gen_range(0..p))
                .collect();
            let span = DenseMatrix::new(field, n + 1, m + 1, data)?;
            let Ok(space) = LinearSpace::new(n, span) else {
                continue;
            };
            let mut fresh = true;
            for s in &spaces {
                if s.same_space(&space)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                break space;
            }
        };
        spaces.push(space);
    }
    Configuration::new(field, n, spaces)
}

/// Span of the intersections of the first component with components
/// `2..=tau` (one-based). `None` when every such intersection is empty.
pub fn pairwise_vertex(c: &Configuration, tau: usize) -> Result<Option<LinearSpace>> {
    if tau < 2 || tau > c.spaces().len() {
        return Err(Error::Precondition(format!(
            "tau = {tau} must lie in [2, {}]",
            c.spaces().len()
        )));
    }
    let first = &c.spaces()[0];
    let mut generators: Option<DenseMatrix> = None;
    for other in &c.spaces()[1..tau] {
        if let Some(meet) = first.intersection(other)? {
            generators = Some(match generators {
                None => meet.span().clone(),
                Some(g) => g.hcat(meet.span())?,
            });
        }
    }
    generators
        .map(|g| LinearSpace::new(c.ambient_n(), g.column_basis()))
        .transpose()
}

/// Projects every component from `vertex` into a complement of it.
///
/// The target is `P^{n - dim V - 1}`, realized as the quotient by the
/// vertex: coordinates are taken relative to the basis
/// `[vertex | e_k ...]` and the vertex part is discarded. Component `i`
/// lands in dimension `m_i - dim(V ∩ Λ_i) - 1`; components that become
/// equal are merged, keeping the first. With `vertex = None` the
/// configuration is returned unchanged.
pub fn project_from(c: &Configuration, vertex: Option<&LinearSpace>) -> Result<Configuration> {
    let Some(vertex) = vertex else {
        return Ok(c.clone());
    };
    let n = c.ambient_n();
    if vertex.ambient_n() != n {
        return Err(Error::AmbientMismatch(n, vertex.ambient_n()));
    }
    let d = vertex.dim();
    if d >= n {
        return Err(Error::Precondition(
            "the projection vertex must be a proper subspace".into(),
        ));
    }
    let field = c.field();
    let completed = vertex.span().hcat(&DenseMatrix::identity(field, n + 1))?;
    let basis = completed.select_columns(&completed.pivot_columns());
    let to_split = basis.inverse().expect("pivot columns form a basis");
    let quotient_rows: Vec<usize> = (d + 1..=n).collect();

    let mut projected = Vec::with_capacity(c.spaces().len());
    for (i, space) in c.spaces().iter().enumerate() {
        let coords = to_split.mul(space.span())?;
        let image = coords.select_rows(&quotient_rows).column_basis();
        if image.cols() == 0 {
            return Err(Error::ProjectionAnnihilates(i));
        }
        projected.push(LinearSpace::new(n - d - 1, image)?);
    }
    Configuration::new_dedup(field, n - d - 1, projected)
}
