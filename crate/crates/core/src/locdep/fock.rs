//! Truncated Fock space: words of degree at most `k` in `n` letters, with
//! the creation operators `S_j w = X_j w` (zero on the top degree).
//!
//! Evaluating `p` at the shifts and applying the result to the empty word
//! reproduces `p` itself, so dependence of the vectors `f_j(S) 1` is
//! dependence of the `f_j`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::{Letter, NcPoly, Word};
use crate::linalg;
use crate::locdep::bounds::fock_dimension;
use crate::matexact::{apply_family, MatTuple, MatrixExact, OperatorTuple};
use crate::scalar::{Field, Scalar};
use crate::verdict::DependenceVerdict;

pub const DEFAULT_SIGMA_CAP: usize = 10_000;

/// Shift operators on the truncated Fock space, stored sparsely: each shift
/// sends a basis word to at most one basis word.
#[derive(Clone, Debug)]
pub struct FockOperators {
    pub n: Letter,
    pub k: usize,
    pub sigma: usize,
    field: Field,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    // targets[j - 1][b]: position of X_j * basis[b], if it has degree <= k
    targets: Vec<Vec<Option<usize>>>,
}

impl FockOperators {
    /// Basis words in deglex order; position 0 is the empty word.
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    /// Dense matrix of `S_j` (1-based `j`).
    pub fn shift_matrix(&self, j: Letter) -> MatrixExact {
        let mut rows = vec![vec![self.field.zero(); self.sigma]; self.sigma];
        for (b, t) in self.targets[j as usize - 1].iter().enumerate() {
            if let Some(t) = t {
                rows[*t][b] = self.field.one();
            }
        }
        MatrixExact::from_rows(self.field, rows).expect("square")
    }

    /// All shifts as a dense tuple, for evaluation with
    /// [`crate::matexact::evaluate_poly`].
    pub fn to_tuple(&self) -> MatTuple {
        let ms = (1..=self.n).map(|j| self.shift_matrix(j)).collect();
        MatTuple::new(self.field, self.sigma, ms).expect("uniform shape")
    }

    /// The vector `1` (the empty word).
    pub fn vacuum(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.sigma];
        v[0] = self.field.one();
        v
    }

    /// Coefficients of `p` in basis order. Words outside the truncated
    /// space are an error.
    pub fn coefficient_vector(&self, p: &NcPoly) -> Result<Vec<Scalar>> {
        let mut v = vec![self.field.zero(); self.sigma];
        for (w, c) in p.terms() {
            let &i = self.index.get(w).ok_or(Error::UncoveredVariable {
                needed: w.max_letter(),
                available: self.n as usize,
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }
}

impl OperatorTuple for FockOperators {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self) -> usize {
        self.sigma
    }

    fn len(&self) -> usize {
        self.n as usize
    }

    fn apply(&self, var: Letter, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.sigma];
        for (b, t) in self.targets[var as usize - 1].iter().enumerate() {
            if let Some(t) = t {
                out[*t] = v[b].clone();
            }
        }
        out
    }
}

pub fn fock_shift_operators(n: Letter, k: usize, field: Field) -> Result<FockOperators> {
    fock_shift_operators_capped(n, k, field, DEFAULT_SIGMA_CAP)
}

pub fn fock_shift_operators_capped(
    n: Letter,
    k: usize,
    field: Field,
    cap: usize,
) -> Result<FockOperators> {
    if n == 0 {
        return Err(Error::NonPositive("variable count"));
    }
    let sigma = fock_dimension(n, k);
    if sigma > cap as u128 {
        return Err(Error::SigmaCap { sigma, cap });
    }
    let basis = Word::all_up_to(n, k);
    let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let targets = (1..=n)
        .map(|j| {
            let xj = Word::letter(j);
            basis
                .iter()
                .map(|w| (w.degree() < k).then(|| index[&xj.concat(w)]))
                .collect()
        })
        .collect();
    Ok(FockOperators {
        n,
        k,
        sigma: sigma as usize,
        field,
        basis,
        index,
        targets,
    })
}

/// Exact verdict from the directional evaluation at `(S, 1)` on the Fock
/// space of degree `max deg f_j`.
pub fn fock_certify(fs: &[NcPoly]) -> Result<DependenceVerdict> {
    fock_certify_capped(fs, DEFAULT_SIGMA_CAP)
}

pub fn fock_certify_capped(fs: &[NcPoly], cap: usize) -> Result<DependenceVerdict> {
    let first = fs.first().ok_or(Error::EmptyFamily)?;
    let field = first.field();
    if let Some(f) = fs.iter().find(|f| f.field() != field) {
        return Err(Error::FieldMismatch(field, f.field()));
    }
    let n = fs.iter().map(NcPoly::nvars).max().unwrap_or(0).max(1);
    let k = fs.iter().filter_map(|f| f.degree().finite()).max().unwrap_or(0);
    let ops = fock_shift_operators_capped(n, k, field, cap)?;
    let vectors = apply_family(fs, &ops, &ops.vacuum())?;
    match linalg::left_kernel_vector(&vectors, ops.sigma, field) {
        Some(alpha) => {
            let mut sum = NcPoly::zero(field);
            for (a, f) in alpha.iter().zip(fs) {
                sum = sum.try_add(&f.scale(a)?)?;
            }
            if !sum.is_zero() {
                return Err(Error::DeciderDisagreement(
                    "Fock kernel vector does not annihilate the family".into(),
                ));
            }
            Ok(DependenceVerdict::dependent(alpha))
        }
        None => Ok(DependenceVerdict::independent()),
    }
}
