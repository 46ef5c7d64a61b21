//! Dense exact elimination on row lists.
//!
//! Rank over the rationals goes through fraction-free (Bareiss) elimination
//! on integer-cleared rows; prime fields use ordinary Gaussian elimination.
//! [`rref`] is the plain field-division route and serves kernels and the
//! rank test oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{Field, Rational, Scalar};

/// Exact rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<Scalar>], field: Field) -> usize {
    match field {
        Field::Rational => bareiss_rank(rows),
        Field::Prime(_) => rref(rows).1.len(),
    }
}

fn clear_denominators(row: &[Scalar]) -> Vec<Rational> {
    let rats: Vec<&Rational> = row
        .iter()
        .map(|s| s.as_rational().expect("rational field"))
        .collect();
    let lcm = rats
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
    if lcm.is_one() {
        return rats.into_iter().cloned().collect();
    }
    let scale = Rational::new(lcm, BigInt::one()).expect("nonzero");
    rats.into_iter().map(|r| r * &scale).collect()
}

/// Fraction-free elimination. Every intermediate entry is a minor of the
/// input, so the division by the previous pivot is exact.
pub fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = Rational::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let prev_inv = prev.recip().expect("pivots are nonzero");
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let v = &(pivot * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = &v * &prev_inv;
            }
            row[c] = Rational::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form and pivot columns.
pub fn rref(rows: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            let pivot_row = a[r].clone();
            for (x, p) in a[i][c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A nonzero `alpha` with `sum_i alpha_i * rows[i] = 0`, or `None` when the
/// rows are independent. `ncols` fixes the row length (needed when `rows`
/// are all empty).
///
/// The vector is normalized: over the rationals it is a primitive integer
/// vector whose first nonzero entry is positive; over a prime field the
/// first nonzero entry is 1.
pub fn left_kernel_vector(rows: &[Vec<Scalar>], ncols: usize, field: Field) -> Option<Vec<Scalar>> {
    let m = rows.len();
    if m == 0 {
        return None;
    }
    let transposed: Vec<Vec<Scalar>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    let (reduced, pivots) = rref(&transposed);
    let free = (0..m).find(|c| !pivots.contains(c))?;
    let mut alpha = vec![field.zero(); m];
    alpha[free] = field.one();
    for (row, &pc) in reduced.iter().zip(&pivots) {
        alpha[pc] = -&row[free];
    }
    Some(normalize(alpha, field))
}

fn normalize(alpha: Vec<Scalar>, field: Field) -> Vec<Scalar> {
    let lead = alpha
        .iter()
        .find(|a| !a.is_zero())
        .cloned()
        .expect("kernel vector is nonzero");
    match field {
        Field::Prime(_) => {
            let inv = lead.inv().expect("nonzero");
            alpha.iter().map(|a| a * &inv).collect()
        }
        Field::Rational => {
            let rats: Vec<&Rational> = alpha.iter().map(|a| a.as_rational().unwrap()).collect();
            let lcm = rats
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
            let gcd = rats
                .iter()
                .fold(BigInt::zero(), |acc, r| acc.gcd(&r.numer()));
            let mut s = Rational::new(lcm, gcd).expect("gcd of a nonzero vector");
            if lead.is_negative() {
                s = -&s;
            }
            rats.into_iter().map(|r| Scalar::Rat(r * &s)).collect()
        }
    }
}

/// True when `sum_i coeffs[i] * rows[i]` is the zero row.
pub fn combination_vanishes(coeffs: &[Scalar], rows: &[Vec<Scalar>], field: Field) -> bool {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols).all(|c| {
        coeffs
            .iter()
            .zip(rows)
            .fold(field.zero(), |acc, (a, r)| &acc + &(a * &r[c]))
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let f = Field::Rational;
        assert_eq!(rank(&mat(f, &[&[1, 0], &[0, 1]]), f), 2);
        assert_eq!(rank(&mat(f, &[&[0, 0], &[0, 0]]), f), 0);
        assert_eq!(rank(&mat(f, &[&[1, 2], &[2, 4]]), f), 1);
        assert_eq!(rank(&mat(f, &[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]), f), 2);
        assert_eq!(rank(&[], f), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 5
        let rows = [&[1, 2][..], &[-1, 3][..]];
        assert_eq!(rank(&mat(Field::Rational, &rows), Field::Rational), 2);
        let p5 = Field::prime(5).unwrap();
        assert_eq!(rank(&mat(p5, &rows), p5), 1);
    }

    #[test]
    fn bareiss_handles_fractions() {
        let f = Field::Rational;
        let rows = vec![
            vec![f.parse_scalar("1/2").unwrap(), f.parse_scalar("1/3").unwrap()],
            vec![f.parse_scalar("3").unwrap(), f.parse_scalar("2").unwrap()],
        ];
        assert_eq!(bareiss_rank(&rows), 1);
    }

    #[test]
    fn kernel_normalization() {
        let f = Field::Rational;
        let k = left_kernel_vector(&mat(f, &[&[1], &[2]]), 1, f).unwrap();
        assert_eq!(k, vec![f.from_i64(2), f.from_i64(-1)]);
        assert!(left_kernel_vector(&mat(f, &[&[1, 0], &[0, 1]]), 2, f).is_none());
        let k = left_kernel_vector(&mat(f, &[&[1, 0], &[0, 0]]), 2, f).unwrap();
        assert_eq!(k, vec![f.from_i64(0), f.from_i64(1)]);
        let p = Field::prime(7).unwrap();
        let k = left_kernel_vector(&mat(p, &[&[2], &[4]]), 1, p).unwrap();
        assert_eq!(k[0], p.one());
        assert!(combination_vanishes(&k, &mat(p, &[&[2], &[4]]), p));
    }
}
