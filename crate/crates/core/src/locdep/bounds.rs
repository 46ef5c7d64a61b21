use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::NcPoly;

/// Matrix sizes beyond which local dependence of a family forces global
/// dependence, and the Fock space dimension. All products saturate at
/// `u128::MAX`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Family size.
    pub m: usize,
    /// Number of variables used for `sigma`.
    pub n: u32,
    pub degs: Vec<usize>,
    /// `sum deg f_j + m - 1`, the degree of the Capelli composition.
    pub beta: u128,
    /// Smallest `s` with `2s > beta`.
    pub s_local_min: u128,
    /// `(m - 1) * m!`, the rank bound for Capelli values at locally
    /// dependent operators.
    pub d_rank: u128,
    /// `(d+1)(d+2)/2 * (m - 1 + sum deg f_j) + d`.
    pub gamma: u128,
    /// Smallest `s` with `2s > gamma`.
    pub s_dir_min: u128,
    pub k_max: usize,
    /// `sum_{i=0}^{k_max} n^i`, the dimension of polynomials of degree at
    /// most `k_max` in `n` variables.
    pub sigma: u128,
}

/// `sum_{i=0}^{k} n^i`, saturating.
pub fn fock_dimension(n: u32, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..=k {
        total = total.saturating_add(power);
        power = power.saturating_mul(n as u128);
    }
    total
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).fold(1u128, u128::saturating_mul)
}

/// Bounds for a family of nonzero polynomials in `n` variables.
pub fn compute_bounds(fs: &[NcPoly], n: u32) -> Result<BoundReport> {
    if fs.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let degs = fs
        .iter()
        .enumerate()
        .map(|(index, f)| f.degree().finite().ok_or(Error::ZeroMember { index }))
        .collect::<Result<Vec<usize>>>()?;
    let m = fs.len();
    let deg_sum: u128 = degs.iter().map(|&d| d as u128).sum();
    let beta = deg_sum + m as u128 - 1;
    let d_rank = (m as u128 - 1).saturating_mul(factorial(m));
    let tri = d_rank
        .saturating_add(1)
        .saturating_mul(d_rank.saturating_add(2))
        / 2;
    let gamma = tri.saturating_mul(beta).saturating_add(d_rank);
    let k_max = degs.iter().copied().max().unwrap_or(0);
    Ok(BoundReport {
        m,
        n,
        degs,
        beta,
        s_local_min: beta / 2 + 1,
        d_rank,
        gamma,
        s_dir_min: gamma / 2 + 1,
        k_max,
        sigma: fock_dimension(n, k_max),
    })
}

/// Number of variables a family uses (at least 1).
pub fn family_nvars(fs: &[NcPoly]) -> u32 {
    fs.iter().map(NcPoly::nvars).max().unwrap_or(0).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse_poly;
    use crate::scalar::Field;
    use crate::specialpoly::central_poly_2x2;

    const Q: Field = Field::Rational;

    fn fam(src: &[&str]) -> Vec<NcPoly> {
        src.iter().map(|s| parse_poly(s, Q).unwrap()).collect()
    }

    #[test]
    fn linear_and_constant() {
        let b = compute_bounds(&fam(&["X1", "1"]), 1).unwrap();
        assert_eq!(b.beta, 2);
        assert_eq!(b.s_local_min, 2);
    }

    #[test]
    fn two_variables() {
        let b = compute_bounds(&fam(&["X1", "X2"]), 2).unwrap();
        assert_eq!(
            (b.beta, b.s_local_min, b.d_rank, b.gamma, b.s_dir_min),
            (3, 2, 2, 20, 11)
        );
        assert_eq!(b.k_max, 1);
        assert_eq!(b.sigma, 3);
    }

    #[test]
    fn central_family() {
        let fs = vec![central_poly_2x2(Q), NcPoly::one(Q)];
        let b = compute_bounds(&fs, 2).unwrap();
        assert_eq!((b.beta, b.s_local_min), (5, 3));
        assert_eq!(b.degs, vec![4, 0]);
    }

    #[test]
    fn single_polynomial() {
        let b = compute_bounds(&fam(&["X1*X2*X1"]), 2).unwrap();
        assert_eq!((b.beta, b.d_rank, b.gamma, b.s_dir_min), (3, 0, 3, 2));
    }

    #[test]
    fn zero_member_rejected() {
        assert_eq!(
            compute_bounds(&fam(&["X1", "0"]), 1),
            Err(Error::ZeroMember { index: 1 })
        );
        assert_eq!(compute_bounds(&[], 1), Err(Error::EmptyFamily));
    }

    #[test]
    fn fock_dimensions() {
        assert_eq!(fock_dimension(1, 1), 2);
        assert_eq!(fock_dimension(2, 2), 7);
        assert_eq!(fock_dimension(3, 3), 40);
        assert_eq!(fock_dimension(0, 3), 1);
        assert_eq!(fock_dimension(u32::MAX, 10), u128::MAX);
    }
}
