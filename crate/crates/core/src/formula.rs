//! Closed-form counts for quadrics through a generic configuration of
//! linear spaces, and the numerics of linear spaces on quadrics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::WeightVector;
use crate::error::{Error, Result};

/// `C(a, 2)`, taken to be 0 for every `a <= 1`.
pub fn binom2(a: i64) -> i64 {
    if a <= 1 {
        0
    } else {
        a * (a - 1) / 2
    }
}

/// Number of quadratic monomials in `n + 1` variables.
pub fn quadric_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    Disjoint,
    #[serde(rename = "I")]
    CaseI,
    #[serde(rename = "IIa")]
    CaseIIa,
    #[serde(rename = "IIb")]
    CaseIIb,
    #[serde(rename = "IIc")]
    CaseIIc,
    #[serde(rename = "III")]
    CaseIII,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::Disjoint => "Disjoint",
            CaseLabel::CaseI => "I",
            CaseLabel::CaseIIa => "IIa",
            CaseLabel::CaseIIb => "IIb",
            CaseLabel::CaseIIc => "IIc",
            CaseLabel::CaseIII => "III",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// The predicted values for a generic configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    #[serde(rename = "case")]
    pub label: CaseLabel,
    pub tau: Option<usize>,
    pub v: Option<usize>,
    pub dim_i2: u64,
    pub hf2: u64,
}

fn intersecting(w: &WeightVector) -> bool {
    w.len() >= 2 && w.m(0) + w.m(1) >= w.n()
}

fn expected_count(w: &WeightVector) -> i64 {
    binom2(w.n() as i64 + 2)
        - w.weights()
            .iter()
            .map(|&m| binom2(m as i64 + 2))
            .sum::<i64>()
}

/// `τ`, the number of components `i` with `m_1 + m_i >= n`, and
/// `v = Σ_{i=2..τ} (m_1 + m_i - n + 1)`.
pub fn tau_v(w: &WeightVector) -> Result<(usize, usize)> {
    if !intersecting(w) {
        return Err(Error::Precondition(
            "tau and v are only defined when m_1 + m_2 >= n".into(),
        ));
    }
    let (n, m1) = (w.n(), w.m(0));
    let tau = w.weights().iter().take_while(|&&m| m1 + m >= n).count();
    let v = w.weights()[1..tau].iter().map(|&m| m1 + m + 1 - n).sum();
    Ok((tau, v))
}

/// `max(C(n+2,2) - Σ C(m_i+2,2), 0)`, valid when no two generic
/// components meet.
pub fn disjoint_dim(w: &WeightVector) -> Result<u64> {
    if intersecting(w) {
        return Err(Error::Precondition(
            "components are forced to meet (m_1 + m_2 >= n)".into(),
        ));
    }
    Ok(expected_count(w).max(0) as u64)
}

/// Dimension of the space of quadrics through a generic configuration with
/// weight vector `w`, together with the case that produced it.
///
/// When `τ = 3`, `s >= 4` and `2n = m_1 + m_2 + m_3 + m_4 + 2`, both the
/// "zero" case IIb and the formula case IIc apply; the result is reported
/// as IIc, whose clamped value is 0 there as well.
pub fn expected_dim_i2(w: &WeightVector) -> Expectation {
    let n = w.n() as i64;
    let total = binom2(n + 2);
    let finish = |label, tau, v, dim: i64| {
        let dim_i2 = dim.max(0) as u64;
        Expectation {
            label,
            tau,
            v,
            dim_i2,
            hf2: total as u64 - dim_i2,
        }
    };

    if !intersecting(w) {
        return finish(CaseLabel::Disjoint, None, None, expected_count(w));
    }

    let (tau, v) = tau_v(w).expect("intersecting regime");
    let m: Vec<i64> = w.weights().iter().map(|&x| x as i64).collect();
    let (m1, vi) = (m[0], v as i64);
    let s = m.len();

    if vi > m1 {
        return finish(CaseLabel::CaseI, Some(tau), Some(v), 0);
    }
    if vi >= 2 * m1 - n + 2 {
        assert!(tau >= 3, "case II with tau = {tau} for {w}");
        if tau >= 4 {
            return finish(CaseLabel::CaseIIa, Some(tau), Some(v), 0);
        }
        if s >= 4 && 2 * n < m[..4].iter().sum::<i64>() + 2 {
            return finish(CaseLabel::CaseIIb, Some(tau), Some(v), 0);
        }
        let pairs =
            binom2(m[0] + m[1] - n + 2) + binom2(m[0] + m[2] - n + 2) + binom2(m[1] + m[2] - n + 2);
        return finish(
            CaseLabel::CaseIIc,
            Some(tau),
            Some(v),
            expected_count(w) + pairs,
        );
    }
    let correction: i64 = m[1..tau].iter().map(|&mi| binom2(m1 + mi - n + 2)).sum();
    finish(
        CaseLabel::CaseIII,
        Some(tau),
        Some(v),
        expected_count(w) + correction,
    )
}

/// Dimension of the variety of `m`-planes on a smooth quadric
/// hypersurface in `P^n`, or `None` when there are none
/// (`m > (n - 1) / 2`).
pub fn fano_dim(m: usize, n: usize) -> Result<Option<u64>> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "a smooth quadric hypersurface needs n >= 2, got {n}"
        )));
    }
    if 2 * m > n - 1 {
        return Ok(None);
    }
    let twice = (m as i64 + 1) * (2 * n as i64 - 2 - 3 * m as i64);
    assert!(
        twice % 2 == 0,
        "non-integral Fano dimension for m={m}, n={n}"
    );
    Ok(Some((twice / 2) as u64))
}

/// Largest `m` such that a rank-`r` quadric in `P^n` contains an `m`-plane:
/// `n - ceil(r / 2)`.
pub fn max_plane_dim_on_rank_r(n: usize, r: usize) -> Result<i64> {
    if r == 0 || r > n + 1 {
        return Err(Error::Precondition(format!(
            "quadric rank {r} outside [1, {}]",
            n + 1
        )));
    }
    Ok(n as i64 - r.div_ceil(2) as i64)
}

fn check_lemma_range(w: &WeightVector, r: usize) -> Result<()> {
    if intersecting(w) {
        return Err(Error::Precondition(
            "the rank bound needs m_1 + m_2 < n".into(),
        ));
    }
    let max_r = 2 * (w.n() - w.m(0));
    if r == 0 || r > max_r {
        return Err(Error::Precondition(format!(
            "quadric rank {r} outside [1, {max_r}]"
        )));
    }
    Ok(())
}

/// The bound `f(p)` (with `r = 2p` or `r = 2p + 1`) against which the
/// codimension of rank-`r` quadrics is compared.
pub fn lemma_bound(w: &WeightVector, r: usize) -> Result<i64> {
    check_lemma_range(w, r)?;
    let p = (r / 2) as i64;
    let m = w.weights().iter().map(|&x| x as i64);
    let small: i64 = m
        .clone()
        .filter(|&mi| mi < p)
        .map(|mi| binom2(mi + 2))
        .sum();
    let large = m.filter(|&mi| mi >= p);
    let twice = if r.is_multiple_of(2) {
        p * large.map(|mi| 2 * mi + 3 - p).sum::<i64>()
    } else {
        large
            .map(|mi| 2 * mi + 2 + p * (2 * mi + 1 - p))
            .sum::<i64>()
    };
    assert!(twice % 2 == 0, "non-integral bound for {w}, r={r}");
    Ok(small + twice / 2)
}

/// Dimension count for rank-`r` quadrics through a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub r: usize,
    /// Dimension of the family of rank-`r` quadrics.
    pub family_dim: i64,
    /// Dimension of the configurations contained in one such quadric.
    pub fiber_over_one: i64,
    /// Dimension of the incidence locus over rank-`r` quadrics minus the
    /// dimension of the configuration space.
    pub deficiency: i64,
    pub lemma_applies: bool,
}

/// Dimension count behind the rank bound: when the family of rank-`r`
/// quadrics plus the configurations on one of them cannot fill the
/// configuration space, a generic configuration lies on no rank-`r`
/// quadric.
pub fn fiber_deficiency(w: &WeightVector, r: usize) -> Result<FiberReport> {
    let f = lemma_bound(w, r)?;
    let n = w.n() as i64;
    let ri = r as i64;
    let codim = binom2(n + 2) - binom2(n - ri + 2);
    let family_dim = codim - 1;

    // planes of the smooth base quadric have dimension at most m'
    let m_prime = (ri - 2).div_euclid(2);
    let twice_fiber: i64 = w
        .weights()
        .iter()
        .map(|&mi| {
            let mi = mi as i64;
            if 2 * mi <= ri - 2 {
                (mi + 1) * (2 * n - 3 * mi - 2)
            } else {
                (m_prime + 1) * (2 * ri - 2 - 3 * m_prime + 2 * mi) + 2 * (mi + 1) * (n - ri - mi)
            }
        })
        .sum();
    assert!(
        twice_fiber % 2 == 0,
        "non-integral fiber dimension for {w}, r={r}"
    );

    Ok(FiberReport {
        r,
        family_dim,
        fiber_over_one: twice_fiber / 2,
        deficiency: codim - f - 1,
        lemma_applies: codim <= f,
    })
}

/// Dimension of the product of Grassmannians parametrizing configurations
/// with weight vector `w`.
pub fn dim_dl(w: &WeightVector) -> u64 {
    let n = w.n() as u64;
    w.weights()
        .iter()
        .map(|&m| (m as u64 + 1) * (n - m as u64))
        .sum()
}
