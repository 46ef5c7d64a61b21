use crate::error::{Error, Result};
use crate::matexact::matrix::MatrixExact;

/// Which alternating polynomial to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlternatingKind {
    /// `St_n(x_1..x_n)`.
    Standard,
    /// `C_{2n-1}(x_1..x_n, y_1..y_{n-1})`, with `y_i` between the `i`-th and
    /// `(i+1)`-th alternating slot.
    Capelli,
}

/// Largest `n` accepted; the state table has `2^n` slots.
pub const MAX_ALTERNATING_ARITY: usize = 24;

/// Evaluates `St_n` or `C_{2n-1}` at matrices by dynamic programming over
/// subsets, using `O(n 2^n)` matrix products instead of `n! n`.
///
/// `state[P]` holds the signed sum, over all orderings of the index set `P`,
/// of the partial product of the chosen `x`'s with the first `|P| - 1`
/// interleavers. Appending index `j` contributes `(-1)^{#{i in P : i > j}}`,
/// the number of inversions it creates.
pub fn eval_alternating(
    kind: AlternatingKind,
    n: usize,
    xs: &[MatrixExact],
    ys: Option<&[MatrixExact]>,
) -> Result<MatrixExact> {
    if n == 0 {
        return Err(Error::NonPositive("alternating arity"));
    }
    if n > MAX_ALTERNATING_ARITY {
        return Err(Error::DimensionMismatch {
            expected: MAX_ALTERNATING_ARITY,
            found: n,
        });
    }
    if xs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: xs.len(),
        });
    }
    let ys: &[MatrixExact] = match (kind, ys) {
        (AlternatingKind::Standard, _) => &[],
        (AlternatingKind::Capelli, Some(ys)) if ys.len() == n - 1 => ys,
        (AlternatingKind::Capelli, ys) => {
            return Err(Error::InterleaverCount {
                expected: n - 1,
                found: ys.map_or(0, <[_]>::len),
            })
        }
    };
    let (dim, field) = (xs[0].dim(), xs[0].field());
    for m in xs.iter().chain(ys) {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.dim(),
            });
        }
        if m.field() != field {
            return Err(Error::FieldMismatch(field, m.field()));
        }
    }

    let full = (1usize << n) - 1;
    let mut state: Vec<Option<MatrixExact>> = vec![None; 1 << n];
    state[0] = Some(MatrixExact::identity(field, dim));
    for mask in 0..full {
        let Some(partial) = state[mask].take() else {
            continue;
        };
        let size = mask.count_ones() as usize;
        let base = match ys.get(size.wrapping_sub(1)) {
            Some(y) if size > 0 => &partial * y,
            _ => partial,
        };
        for (j, x) in xs.iter().enumerate() {
            let bit = 1 << j;
            if mask & bit != 0 {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let mut term = &base * x;
            if above % 2 == 1 {
                term = term.scale(&-&field.one());
            }
            let slot = &mut state[mask | bit];
            *slot = Some(match slot.take() {
                Some(acc) => &acc + &term,
                None => term,
            });
        }
    }
    Ok(state[full].take().expect("full set is reached"))
}
