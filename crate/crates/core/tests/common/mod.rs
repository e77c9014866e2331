#![allow(dead_code)]

use quadrica::oracle::monomials;
use quadrica::{DenseMatrix, FormFamily, PrimeField};
use rand::Rng;

/// Every `k`-dimensional subspace of `F_q^len`, as the rows of its reduced
/// row echelon form.
pub fn subspaces(q: u64, len: usize, k: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(len, k, 0, &mut pivots, &mut |piv| {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                ((piv[r] + 1)..len)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u64; len]; k];
            for (r, &p) in piv.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = c % q;
                c /= q;
            }
            out.push(rows);
        }
    });
    out
}

fn pivot_sets(
    len: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for p in start..len {
        cur.push(p);
        pivot_sets(len, k, p + 1, cur, f);
        cur.pop();
    }
}

/// Span matrix whose columns are the given row vectors.
pub fn span_of(field: PrimeField, rows: &[Vec<u64>]) -> DenseMatrix {
    DenseMatrix::from_columns(field, rows[0].len(), rows).unwrap()
}

/// `s` families of linear forms in `n + 1` variables with coefficients in
/// `[-9, 9]`; every family has at least one nonzero form.
pub fn random_families<R: Rng>(rng: &mut R, n: usize, s: usize) -> Vec<FormFamily> {
    (0..s)
        .map(|_| {
            let k = rng.gen_range(1..=n + 1);
            let mut forms: Vec<Vec<i64>> = (0..k)
                .map(|_| (0..=n).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            if forms.iter().all(|f| f.iter().all(|&c| c == 0)) {
                forms[0][rng.gen_range(0..=n)] = 1;
            }
            FormFamily::new(n, forms).unwrap()
        })
        .collect()
}

/// Coefficients of `l * m` in the crate's monomial order.
pub fn product(n: usize, l: &[i64], m: &[i64]) -> Vec<i64> {
    monomials(n)
        .into_iter()
        .map(|(i, j)| {
            if i == j {
                l[i] * m[i]
            } else {
                l[i] * m[j] + l[j] * m[i]
            }
        })
        .collect()
}

/// `Σ_i f_i(l_{i,1}, ...)` for random integer quadratic forms `f_i`.
pub fn synthesize_target<R: Rng>(rng: &mut R, n: usize, families: &[FormFamily]) -> Vec<i64> {
    let mut target = vec![0i64; monomials(n).len()];
    for fam in families {
        let forms = fam.forms();
        for a in 0..forms.len() {
            for b in a..forms.len() {
                let g: i64 = rng.gen_range(-9..=9);
                for (t, v) in target.iter_mut().zip(product(n, &forms[a], &forms[b])) {
                    *t += g * v;
                }
            }
        }
    }
    target
}
