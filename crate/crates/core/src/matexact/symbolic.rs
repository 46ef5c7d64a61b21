//! Commutative polynomials in `v_1..v_d`, just enough to decide whether
//! `T_1 v, ..., T_m v` are dependent for a generic vector `v`.

use std::collections::BTreeMap;

use crate::matexact::matrix::MatrixExact;
use crate::scalar::{Field, Scalar};

/// Polynomial in commuting indeterminates, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    field: Field,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl CommPoly {
    pub fn zero(field: Field) -> Self {
        CommPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum_k coeffs[k] * v_k`.
    pub fn linear(coeffs: &[Scalar], field: Field) -> Self {
        let d = coeffs.len();
        let mut p = CommPoly::zero(field);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u16; d];
                e[k] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    fn add_term(&mut self, e: Vec<u16>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(|| self.field.zero());
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, rhs: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CommPoly {
        CommPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero(self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

/// A vector whose entries are commutative polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicVector {
    pub entries: Vec<CommPoly>,
}

impl SymbolicVector {
    /// `T v` for the generic vector `v = (v_1, ..., v_d)`.
    pub fn generic_image(t: &MatrixExact) -> Self {
        SymbolicVector {
            entries: t
                .rows()
                .iter()
                .map(|row| CommPoly::linear(row, t.field()))
                .collect(),
        }
    }
}

/// Determinant of a square matrix of polynomials, by subset DP over the
/// rows already assigned to earlier columns.
/// `nvars` is the number of indeterminates the entries live in.
pub fn determinant(m: &[Vec<CommPoly>], field: Field, nvars: usize) -> CommPoly {
    let n = m.len();
    let mut one = CommPoly::zero(field);
    one.terms.insert(vec![0; nvars], field.one());
    let mut state: Vec<Option<CommPoly>> = vec![None; 1 << n];
    state[0] = Some(one);
    for mask in 0..(1usize << n) {
        let Some(partial) = state[mask].take() else {
            continue;
        };
        let col = mask.count_ones() as usize;
        if col == n {
            state[mask] = Some(partial);
            continue;
        }
        for (row, entries) in m.iter().enumerate() {
            let bit = 1 << row;
            if mask & bit != 0 || entries[col].is_zero() {
                continue;
            }
            let mut term = partial.mul(&entries[col]);
            if (mask >> (row + 1)).count_ones() % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut state[mask | bit];
            *slot = Some(match slot.take() {
                Some(acc) => acc.add(&term),
                None => term,
            });
        }
    }
    state[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| CommPoly::zero(field))
}
