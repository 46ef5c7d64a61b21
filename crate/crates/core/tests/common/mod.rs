//! Test-only generators and oracles. The oracles here deliberately avoid
//! the library routines they are used to check.

#![allow(dead_code)]

use nclindep::freealg::{NcPoly, Word};
use nclindep::matexact::MatrixExact;
use nclindep::scalar::{Field, Scalar};
use rand::Rng;

pub const Q: Field = Field::Rational;

pub fn p(s: &str) -> NcPoly {
    nclindep::ncparse::parse_poly(s, Q).unwrap()
}

/// Random polynomial with `1..=max_terms` terms, words over `1..=nvars` of
/// degree at most `max_deg`, integer coefficients in `[-c, c]` (zero sums
/// may cancel terms away).
pub fn random_poly<R: Rng>(rng: &mut R, nvars: u32, max_deg: usize, max_terms: usize, c: i64) -> NcPoly {
    let terms = rng.gen_range(1..=max_terms);
    let pairs = (0..terms).map(|_| {
        let deg = rng.gen_range(0..=max_deg);
        let word = Word::new((0..deg).map(|_| rng.gen_range(1..=nvars)).collect());
        (word, Q.from_i64(rng.gen_range(-c..=c)))
    });
    NcPoly::from_terms(Q, pairs.collect::<Vec<_>>()).unwrap()
}

/// Random family; with probability 1/3 the last member is a combination of
/// the others, so dependent families show up often.
pub fn random_family<R: Rng>(rng: &mut R, m: usize, nvars: u32, max_deg: usize, c: i64) -> Vec<NcPoly> {
    let mut fs: Vec<NcPoly> = (0..m).map(|_| random_poly(rng, nvars, max_deg, 4, c)).collect();
    if m >= 2 && rng.gen_range(0..3) == 0 {
        let mut comb = NcPoly::zero(Q);
        for f in &fs[..m - 1] {
            let a = Q.from_i64(rng.gen_range(-2..=2));
            comb = comb.try_add(&f.scale(&a).unwrap()).unwrap();
        }
        fs[m - 1] = comb;
    }
    fs
}

/// Naive alternating sum: enumerates every permutation depth-first and adds
/// `sign * x_{pi(1)} [y_1] x_{pi(2)} ... x_{pi(n)}`. Partial products along
/// the recursion are reused, but every one of the `n!` signed terms is formed
/// explicitly.
pub fn naive_alternating(xs: &[MatrixExact], ys: Option<&[MatrixExact]>) -> MatrixExact {
    let n = xs.len();
    let field = xs[0].field();
    let dim = xs[0].dim();
    let mut total = MatrixExact::zeros(field, dim);
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);

    fn inversions(perm: &[usize]) -> usize {
        let mut c = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        xs: &[MatrixExact],
        ys: Option<&[MatrixExact]>,
        acc: &MatrixExact,
        used: &mut [bool],
        perm: &mut Vec<usize>,
        total: &mut MatrixExact,
    ) {
        let n = xs.len();
        if perm.len() == n {
            let term = if inversions(perm) % 2 == 1 {
                acc.scale(&-&acc.field().one())
            } else {
                acc.clone()
            };
            *total = &*total + &term;
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            let mut next = acc.clone();
            if let (Some(ys), false) = (ys, perm.is_empty()) {
                next = &next * &ys[perm.len() - 1];
            }
            next = &next * &xs[j];
            used[j] = true;
            perm.push(j);
            go(xs, ys, &next, used, perm, total);
            perm.pop();
            used[j] = false;
        }
    }

    let id = MatrixExact::identity(field, dim);
    go(xs, ys, &id, &mut used, &mut perm, &mut total);
    total
}

/// Rank by full row reduction with field division, counting nonzero rows.
pub fn rref_rank(m: &MatrixExact) -> usize {
    let mut a = m.rows();
    let n = a.len();
    let mut row = 0;
    for col in 0..n {
        let Some(piv) = (row..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].inv().unwrap();
        a[row] = a[row].iter().map(|x| x * &inv).collect();
        for i in 0..n {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        row += 1;
    }
    a.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count()
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> MatrixExact {
    let rows = (0..dim)
        .map(|_| (0..dim).map(|_| Q.from_i64(rng.gen_range(-bound..=bound))).collect())
        .collect();
    MatrixExact::from_rows(Q, rows).unwrap()
}

/// Random matrix of rank at most `r`: `B * diag(1,..,1,0,..,0) * C`.
pub fn random_low_rank<R: Rng>(rng: &mut R, dim: usize, r: usize, bound: i64) -> MatrixExact {
    let b = random_int_matrix(rng, dim, bound);
    let c = random_int_matrix(rng, dim, bound);
    let mut proj = MatrixExact::zeros(Q, dim);
    for i in 0..r.min(dim) {
        proj = &proj + &MatrixExact::unit(Q, dim, i + 1, i + 1);
    }
    &(&b * &proj) * &c
}

/// `sum_j alpha_j f_j`.
pub fn combination(alpha: &[Scalar], fs: &[NcPoly]) -> NcPoly {
    alpha
        .iter()
        .zip(fs)
        .fold(NcPoly::zero(Q), |acc, (a, f)| acc.try_add(&f.scale(a).unwrap()).unwrap())
}
