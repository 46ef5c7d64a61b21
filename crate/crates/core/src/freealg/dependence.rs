use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::freealg::poly::NcPoly;
use crate::freealg::word::Word;
use crate::linalg;
use crate::scalar::{Field, Scalar};
use crate::verdict::DependenceVerdict;

/// Coefficients of a family over the union of their supports. Column `k`
/// is `basis[k]`; row `i` is polynomial `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub field: Field,
    pub basis: Vec<Word>,
    pub rows: Vec<Vec<Scalar>>,
}

impl CoefficientMatrix {
    /// Reassembles polynomial `i` from its row.
    pub fn row_poly(&self, i: usize) -> NcPoly {
        NcPoly::from_terms(
            self.field,
            self.basis.iter().cloned().zip(self.rows[i].iter().cloned()),
        )
        .expect("row scalars share the matrix field")
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows, self.field)
    }
}

fn family_field(fs: &[NcPoly]) -> Result<Field> {
    let field = fs.first().ok_or(Error::EmptyFamily)?.field();
    if let Some(f) = fs.iter().find(|f| f.field() != field) {
        return Err(Error::FieldMismatch(field, f.field()));
    }
    Ok(field)
}

pub fn coefficient_matrix(fs: &[NcPoly]) -> Result<CoefficientMatrix> {
    let field = family_field(fs)?;
    let support: BTreeSet<&Word> = fs.iter().flat_map(|f| f.terms().map(|(w, _)| w)).collect();
    let basis: Vec<Word> = support.into_iter().cloned().collect();
    let rows = fs
        .iter()
        .map(|f| basis.iter().map(|w| f.coeff(w)).collect())
        .collect();
    Ok(CoefficientMatrix { field, basis, rows })
}

/// Exact dependence of the family in the free algebra: the rows of its
/// coefficient matrix are dependent. A returned coefficient vector is
/// re-expanded before it is reported.
pub fn global_dependence(fs: &[NcPoly]) -> Result<DependenceVerdict> {
    let cm = coefficient_matrix(fs)?;
    match linalg::left_kernel_vector(&cm.rows, cm.basis.len(), cm.field) {
        Some(alpha) => {
            let mut sum = NcPoly::zero(cm.field);
            for (a, f) in alpha.iter().zip(fs) {
                sum = sum.try_add(&f.scale(a)?)?;
            }
            if !sum.is_zero() {
                return Err(Error::DeciderDisagreement(
                    "kernel vector failed to re-expand to zero".into(),
                ));
            }
            Ok(DependenceVerdict::dependent(alpha))
        }
        None => Ok(DependenceVerdict::independent()),
    }
}
