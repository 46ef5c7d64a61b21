//! Executable forms of the operator rank facts: local dependence of
//! operators, the Capelli rank bound, and dependence of `A, ..., A^{r+1}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matexact::alternating::{eval_alternating, AlternatingKind};
use crate::matexact::matrix::{mat_rank, MatrixExact};
use crate::matexact::symbolic::{determinant, SymbolicVector};
use crate::scalar::{Field, Scalar};

fn common_shape(ts: &[MatrixExact]) -> Result<(usize, Field)> {
    let first = ts.first().ok_or(Error::EmptyFamily)?;
    let (dim, field) = (first.dim(), first.field());
    for t in ts {
        if t.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: t.dim(),
            });
        }
        if t.field() != field {
            return Err(Error::FieldMismatch(field, t.field()));
        }
    }
    Ok((dim, field))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Decides whether `T_1 v, ..., T_m v` are linearly dependent for every
/// vector `v`. Forms the `d x m` matrix `[T_1 v ... T_m v]` over the
/// polynomial ring in the coordinates of `v` and checks that every `m x m`
/// minor is the zero polynomial. More operators than dimensions are always
/// dependent.
pub fn verify_local_dependence_exact(ts: &[MatrixExact]) -> Result<bool> {
    let (d, field) = common_shape(ts)?;
    let m = ts.len();
    if m > d {
        return Ok(true);
    }
    let images: Vec<SymbolicVector> = ts.iter().map(SymbolicVector::generic_image).collect();
    for rows in combinations(d, m) {
        let minor: Vec<Vec<_>> = rows
            .iter()
            .map(|&r| images.iter().map(|img| img.entries[r].clone()).collect())
            .collect();
        if !determinant(&minor, field, d).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vector `v` with `T_1 v, ..., T_m v` independent, if one exists on the
/// grid `{0, ..., m}^d` (which always suffices over the rationals, since
/// each minor has degree at most `m` in every coordinate). Standard basis
/// vectors are tried first.
pub fn local_independence_witness(ts: &[MatrixExact]) -> Result<Option<Vec<Scalar>>> {
    let (d, field) = common_shape(ts)?;
    let m = ts.len();
    if m > d {
        return Ok(None);
    }
    let independent = |v: &[Scalar]| {
        let rows: Vec<Vec<Scalar>> = ts.iter().map(|t| t.apply(v)).collect();
        linalg::rank(&rows, field) == m
    };
    for k in 0..d {
        let mut e = vec![field.zero(); d];
        e[k] = field.one();
        if independent(&e) {
            return Ok(Some(e));
        }
    }
    let base = m as u64 + 1;
    let total = base.checked_pow(d as u32).unwrap_or(u64::MAX).min(1 << 20);
    for code in 0..total {
        let mut c = code;
        let v: Vec<Scalar> = (0..d)
            .map(|_| {
                let digit = c % base;
                c /= base;
                field.from_i64(digit as i64)
            })
            .collect();
        if independent(&v) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapelliRankReport {
    pub rank: usize,
    pub bound: usize,
    pub holds: bool,
}

/// `(m - 1) * m!`, saturating.
pub fn capelli_rank_bound(m: usize) -> usize {
    (1..=m)
        .try_fold(m.saturating_sub(1), |acc, k| acc.checked_mul(k))
        .unwrap_or(usize::MAX)
}

/// Rank of `C_{2m-1}(T_1..T_m, D_1..D_{m-1})` against the bound
/// `(m - 1) * m!`. The `T`'s must be locally linearly dependent.
pub fn capelli_rank_bound_check(
    ts: &[MatrixExact],
    ds: &[MatrixExact],
) -> Result<CapelliRankReport> {
    let m = ts.len();
    if m == 0 {
        return Err(Error::EmptyFamily);
    }
    if ds.len() != m - 1 {
        return Err(Error::InterleaverCount {
            expected: m - 1,
            found: ds.len(),
        });
    }
    if !verify_local_dependence_exact(ts)? {
        return Err(Error::NotLocallyDependent);
    }
    let value = eval_alternating(AlternatingKind::Capelli, m, ts, Some(ds))?;
    let rank = mat_rank(&value);
    let bound = capelli_rank_bound(m);
    Ok(CapelliRankReport {
        rank,
        bound,
        holds: rank <= bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDependence {
    /// Rank of `A`.
    pub r: usize,
    /// True once `coefficients` has been checked to annihilate the powers.
    pub dependent: bool,
    /// `c` with `sum_i c_i A^i = 0`, `i = 1..=r+1`.
    pub coefficients: Vec<Scalar>,
}

/// Exhibits a dependence among `A, A^2, ..., A^{r+1}` where `r = rank A`.
pub fn power_dependence_check(a: &MatrixExact) -> PowerDependence {
    let r = mat_rank(a);
    let mut rows = Vec::with_capacity(r + 1);
    let mut power = a.clone();
    for _ in 0..=r {
        rows.push(power.vectorize());
        power = &power * a;
    }
    let ncols = a.dim() * a.dim();
    match linalg::left_kernel_vector(&rows, ncols, a.field()) {
        Some(coefficients) => PowerDependence {
            r,
            dependent: linalg::combination_vanishes(&coefficients, &rows, a.field()),
            coefficients,
        },
        None => PowerDependence {
            r,
            dependent: false,
            coefficients: Vec::new(),
        },
    }
}
