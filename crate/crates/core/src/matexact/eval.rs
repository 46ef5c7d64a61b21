use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::{Letter, NcPoly};
use crate::matexact::matrix::{MatTuple, MatrixExact};
use crate::scalar::{Field, Scalar};

/// Evaluates polynomials at one matrix tuple, caching the product of every
/// word prefix it has seen. Families sharing monomial prefixes (standard and
/// Capelli shapes especially) multiply each prefix once.
pub struct Evaluator<'a> {
    tuple: &'a MatTuple,
    prefixes: HashMap<Vec<Letter>, MatrixExact>,
}

impl<'a> Evaluator<'a> {
    pub fn new(tuple: &'a MatTuple) -> Self {
        Evaluator {
            tuple,
            prefixes: HashMap::new(),
        }
    }

    fn check(&self, p: &NcPoly) -> Result<()> {
        if p.field() != self.tuple.field() {
            return Err(Error::FieldMismatch(self.tuple.field(), p.field()));
        }
        let needed = p.nvars();
        if needed as usize > self.tuple.len() {
            return Err(Error::UncoveredVariable {
                needed,
                available: self.tuple.len(),
            });
        }
        Ok(())
    }

    fn word_product(&mut self, letters: &[Letter]) -> MatrixExact {
        let mut known = letters.len();
        while known > 0 && !self.prefixes.contains_key(&letters[..known]) {
            known -= 1;
        }
        let mut acc = if known == 0 {
            MatrixExact::identity(self.tuple.field(), self.tuple.dim())
        } else {
            self.prefixes[&letters[..known]].clone()
        };
        for i in known..letters.len() {
            let m = self.tuple.get(letters[i]).expect("checked coverage");
            acc = &acc * m;
            self.prefixes.insert(letters[..=i].to_vec(), acc.clone());
        }
        acc
    }

    pub fn eval(&mut self, p: &NcPoly) -> Result<MatrixExact> {
        self.check(p)?;
        let mut out = MatrixExact::zeros(self.tuple.field(), self.tuple.dim());
        for (w, c) in p.terms() {
            let m = self.word_product(w.letters());
            out = &out + &m.scale(c);
        }
        Ok(out)
    }
}

/// `p(a)`, the image of `p` under the homomorphism `X_i -> a_i`.
pub fn evaluate_poly(p: &NcPoly, a: &MatTuple) -> Result<MatrixExact> {
    Evaluator::new(a).eval(p)
}

/// Evaluates every member of a family at one tuple with a shared cache.
pub fn evaluate_family(fs: &[NcPoly], a: &MatTuple) -> Result<Vec<MatrixExact>> {
    let mut ev = Evaluator::new(a);
    fs.iter().map(|f| ev.eval(f)).collect()
}

/// A tuple of linear operators that can be applied to vectors without
/// necessarily being stored as dense matrices.
pub trait OperatorTuple {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    /// Number of operators; operator `i` stands for `X_i`.
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn apply(&self, var: Letter, v: &[Scalar]) -> Vec<Scalar>;
}

impl OperatorTuple for MatTuple {
    fn field(&self) -> Field {
        MatTuple::field(self)
    }

    fn dim(&self) -> usize {
        MatTuple::dim(self)
    }

    fn len(&self) -> usize {
        MatTuple::len(self)
    }

    fn apply(&self, var: Letter, v: &[Scalar]) -> Vec<Scalar> {
        self.get(var).expect("operator index in range").apply(v)
    }
}

/// Directional evaluation `p(a) v`, computed right to left so only vectors
/// are formed. Word suffixes are cached across terms.
pub fn apply_poly<T: OperatorTuple + ?Sized>(p: &NcPoly, ops: &T, v: &[Scalar]) -> Result<Vec<Scalar>> {
    apply_family(std::slice::from_ref(p), ops, v).map(|mut r| r.remove(0))
}

/// `[f_1(a) v, ..., f_m(a) v]` with one suffix cache for the whole family.
pub fn apply_family<T: OperatorTuple + ?Sized>(
    fs: &[NcPoly],
    ops: &T,
    v: &[Scalar],
) -> Result<Vec<Vec<Scalar>>> {
    let field = ops.field();
    if v.len() != ops.dim() {
        return Err(Error::DimensionMismatch {
            expected: ops.dim(),
            found: v.len(),
        });
    }
    let mut suffixes: HashMap<Vec<Letter>, Vec<Scalar>> = HashMap::new();
    let mut out = Vec::with_capacity(fs.len());
    for p in fs {
        if p.field() != field {
            return Err(Error::FieldMismatch(field, p.field()));
        }
        if p.nvars() as usize > ops.len() {
            return Err(Error::UncoveredVariable {
                needed: p.nvars(),
                available: ops.len(),
            });
        }
        let mut acc = vec![field.zero(); ops.dim()];
        for (w, c) in p.terms() {
            let letters = w.letters();
            let n = letters.len();
            let mut start = 0;
            while start < n && !suffixes.contains_key(&letters[start..]) {
                start += 1;
            }
            let mut cur = if start == n {
                v.to_vec()
            } else {
                suffixes[&letters[start..]].clone()
            };
            for i in (0..start).rev() {
                cur = ops.apply(letters[i], &cur);
                suffixes.insert(letters[i..].to_vec(), cur.clone());
            }
            for (a, x) in acc.iter_mut().zip(&cur) {
                *a = &*a + &(c * x);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse_poly;

    const Q: Field = Field::Rational;

    fn p(s: &str) -> NcPoly {
        parse_poly(s, Q).unwrap()
    }

    fn unit(d: usize, i: usize, j: usize) -> MatrixExact {
        MatrixExact::unit(Q, d, i, j)
    }

    #[test]
    fn commutator_of_matrix_units() {
        let a = MatTuple::from_matrices(vec![unit(2, 1, 1), unit(2, 1, 2)]).unwrap();
        assert_eq!(evaluate_poly(&p("X1*X2 - X2*X1"), &a).unwrap(), unit(2, 1, 2));
    }

    #[test]
    fn constants_and_scalars() {
        let a = MatTuple::new(Q, 3, vec![]).unwrap();
        assert_eq!(
            evaluate_poly(&p("1"), &a).unwrap(),
            MatrixExact::identity(Q, 3)
        );
        assert!(evaluate_poly(&p("0"), &a).unwrap().is_zero());
        // 1x1 matrices commute
        let b = MatTuple::from_matrices(vec![
            MatrixExact::from_i64_rows(Q, &[&[3]]).unwrap(),
            MatrixExact::from_i64_rows(Q, &[&[-2]]).unwrap(),
        ])
        .unwrap();
        let v = evaluate_poly(&p("X1*X2 - 2*X2*X1 + X1^2"), &b).unwrap();
        assert_eq!(v.get(0, 0), &Q.from_i64(-6 + 12 + 9));
    }

    #[test]
    fn uncovered_variable_rejected() {
        let a = MatTuple::from_matrices(vec![unit(2, 1, 1)]).unwrap();
        assert!(matches!(
            evaluate_poly(&p("X2"), &a),
            Err(Error::UncoveredVariable { needed: 2, .. })
        ));
        let v = vec![Q.one(), Q.zero()];
        assert!(apply_poly(&p("X3"), &a, &v).is_err());
        assert!(apply_poly(&p("X1"), &a, &[Q.one()]).is_err());
    }

    #[test]
    fn directional_matches_dense() {
        let a = crate::matexact::random_matrix_tuple(Q, 3, 3, 4, 9).unwrap();
        let v = crate::matexact::random_vector(Q, 3, 4, 1);
        let fs = [p("X1*X2*X3 - X3*X1 + 2"), p("X2^3 - X1*X2*X3"), p("0")];
        let dense = evaluate_family(&fs, &a).unwrap();
        let dir = apply_family(&fs, &a, &v).unwrap();
        for (m, w) in dense.iter().zip(&dir) {
            assert_eq!(&m.apply(&v), w);
        }
    }
}
