use std::fmt;
use std::ops::{Add, Mul, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freealg::Letter;
use crate::linalg;
use crate::scalar::{Field, Scalar};

/// Square `d x d` matrix over a single field, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixExact {
    dim: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl MatrixExact {
    pub fn zeros(field: Field, dim: usize) -> Self {
        MatrixExact {
            dim,
            field,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        Self::scalar(field.one(), dim)
    }

    pub fn scalar(c: Scalar, dim: usize) -> Self {
        let field = c.field();
        let mut m = Self::zeros(field, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    /// The matrix unit `E_{row,col}` with 1-based indices.
    pub fn unit(field: Field, dim: usize, row: usize, col: usize) -> Self {
        assert!((1..=dim).contains(&row) && (1..=dim).contains(&col));
        let mut m = Self::zeros(field, dim);
        m.entries[(row - 1) * dim + (col - 1)] = field.one();
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                entries.push(s);
            }
        }
        Ok(MatrixExact {
            dim,
            field,
            entries,
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    /// Row-major vectorization; the fixed linear isomorphism used when
    /// matrices are stacked for dependence tests.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar_identity(&self) -> Option<Scalar> {
        let d = self.dim;
        let c = if d == 0 {
            self.field.zero()
        } else {
            self.entries[0].clone()
        };
        let ok = (0..d).all(|i| {
            (0..d).all(|j| {
                let e = &self.entries[i * d + j];
                if i == j {
                    *e == c
                } else {
                    e.is_zero()
                }
            })
        });
        ok.then_some(c)
    }

    pub fn rank(&self) -> usize {
        mat_rank(self)
    }

    pub fn scale(&self, c: &Scalar) -> MatrixExact {
        MatrixExact {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length must match the matrix");
        (0..self.dim)
            .map(|i| {
                let row = &self.entries[i * self.dim..(i + 1) * self.dim];
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Places `self` in the top-left block of a larger zero matrix.
    pub fn embed(&self, dim: usize) -> MatrixExact {
        assert!(dim >= self.dim);
        let mut m = Self::zeros(self.field, dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.entries[i * dim + j] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn pow(&self, k: u32) -> MatrixExact {
        let mut acc = Self::identity(self.field, self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn assert_compatible(&self, rhs: &MatrixExact) {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        assert_eq!(self.field, rhs.field, "matrix fields differ");
    }
}

impl<'a> Mul<&'a MatrixExact> for &'a MatrixExact {
    type Output = MatrixExact;

    /// # Panics
    /// On mismatched dimensions or fields.
    fn mul(self, rhs: &'a MatrixExact) -> MatrixExact {
        self.assert_compatible(rhs);
        let d = self.dim;
        let mut out = MatrixExact::zeros(self.field, d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * d + j];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a MatrixExact> for &'a MatrixExact {
    type Output = MatrixExact;

    fn add(self, rhs: &'a MatrixExact) -> MatrixExact {
        self.assert_compatible(rhs);
        MatrixExact {
            dim: self.dim,
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a MatrixExact> for &'a MatrixExact {
    type Output = MatrixExact;

    fn sub(self, rhs: &'a MatrixExact) -> MatrixExact {
        self.assert_compatible(rhs);
        MatrixExact {
            dim: self.dim,
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for MatrixExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.dim + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatrixExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixExact({}x{})\n{self}", self.dim, self.dim)
    }
}

/// Exact rank via fraction-free elimination (rationals) or Gaussian
/// elimination (prime fields).
pub fn mat_rank(m: &MatrixExact) -> usize {
    linalg::rank(&m.rows(), m.field)
}

/// An evaluation point: matrix `i - 1` stands for `X_i`. All matrices share
/// one dimension and field; the dimension is recorded even for an empty
/// tuple so constants can still be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatTuple {
    dim: usize,
    field: Field,
    matrices: Vec<MatrixExact>,
}

impl MatTuple {
    pub fn new(field: Field, dim: usize, matrices: Vec<MatrixExact>) -> Result<Self> {
        for m in &matrices {
            if m.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim,
                });
            }
            if m.field != field {
                return Err(Error::FieldMismatch(field, m.field));
            }
        }
        Ok(MatTuple {
            dim,
            field,
            matrices,
        })
    }

    /// Builds a tuple from a nonempty list, taking dimension and field from
    /// the first matrix.
    pub fn from_matrices(matrices: Vec<MatrixExact>) -> Result<Self> {
        let first = matrices.first().ok_or(Error::EmptyFamily)?;
        let (field, dim) = (first.field, first.dim);
        Self::new(field, dim, matrices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[MatrixExact] {
        &self.matrices
    }

    /// The matrix standing for `X_var`.
    pub fn get(&self, var: Letter) -> Option<&MatrixExact> {
        (var as usize)
            .checked_sub(1)
            .and_then(|i| self.matrices.get(i))
    }
}

/// Mixes a master seed and a trial index into an independent per-trial seed
/// (SplitMix64 finalizer).
pub fn derive_seed(master: u64, trial: u64) -> u64 {
    let mut z = master ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `count` matrices of size `dim` with entries uniform on `[-bound, bound]`.
/// Deterministic in `seed`.
pub fn random_matrix_tuple(
    field: Field,
    count: usize,
    dim: usize,
    bound: u32,
    seed: u64,
) -> Result<MatTuple> {
    if dim == 0 {
        return Err(Error::NonPositive("matrix dimension"));
    }
    if bound == 0 {
        return Err(Error::NonPositive("entry bound"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = bound as i64;
    let matrices = (0..count)
        .map(|_| MatrixExact {
            dim,
            field,
            entries: (0..dim * dim)
                .map(|_| field.from_i64(rng.gen_range(-b..=b)))
                .collect(),
        })
        .collect();
    MatTuple::new(field, dim, matrices)
}

/// Vector with entries uniform on `[-bound, bound]`.
pub fn random_vector(field: Field, dim: usize, bound: u32, seed: u64) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = bound as i64;
    (0..dim)
        .map(|_| field.from_i64(rng.gen_range(-b..=b)))
        .collect()
}
