//! Standard, Capelli and central polynomials, the commutator embedding of
//! many variables into two, and the symbolic Capelli dependence test.

use crate::error::{Error, Result};
use crate::freealg::{global_dependence, Letter, NcPoly, Word};
use crate::scalar::{Field, Scalar};
use crate::verdict::{DependenceVerdict, Status};

/// All permutations of `0..n` with their signs, in lexicographic order.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), odd));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            // choosing the i-th smallest remaining element creates i inversions
            go(rest, cur, odd ^ (i % 2 == 1), out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), false, &mut out);
    out
}

fn sign(field: Field, odd: bool) -> Scalar {
    if odd {
        field.from_i64(-1)
    } else {
        field.one()
    }
}

/// `St_n = sum_{pi in S_n} sign(pi) X_{pi(1)} ... X_{pi(n)}`.
pub fn standard_poly(n: usize, field: Field) -> Result<NcPoly> {
    if n == 0 {
        return Err(Error::NonPositive("standard polynomial degree"));
    }
    NcPoly::from_terms(
        field,
        signed_permutations(n).into_iter().map(|(perm, odd)| {
            let letters = perm.iter().map(|&i| i as Letter + 1).collect();
            (Word::new(letters), sign(field, odd))
        }),
    )
}

/// `C_{2n-1} = sum_{pi} sign(pi) X_{pi(1)} X_{n+1} X_{pi(2)} X_{n+2} ... X_{2n-1} X_{pi(n)}`.
pub fn capelli_poly(n: usize, field: Field) -> Result<NcPoly> {
    if n == 0 {
        return Err(Error::NonPositive("Capelli polynomial arity"));
    }
    NcPoly::from_terms(
        field,
        signed_permutations(n).into_iter().map(|(perm, odd)| {
            let mut letters = Vec::with_capacity(2 * n - 1);
            for (k, &i) in perm.iter().enumerate() {
                if k > 0 {
                    letters.push((n + k) as Letter);
                }
                letters.push(i as Letter + 1);
            }
            (Word::new(letters), sign(field, odd))
        }),
    )
}

/// `(X1 X2 - X2 X1)^2`, central on 2x2 matrices.
pub fn central_poly_2x2(field: Field) -> NcPoly {
    let st2 = standard_poly(2, field).expect("n = 2");
    st2.try_mul(&st2).expect("same field")
}

/// Rewrites `p` in two variables via `X_1 -> X1` and
/// `X_k -> [image(X_{k-1}), X2]`.
pub fn commutator_embed(p: &NcPoly) -> NcPoly {
    let field = p.field();
    let y = NcPoly::var(field, 2);
    let mut images = vec![NcPoly::var(field, 1)];
    for _ in 1..p.nvars() {
        let prev = images.last().expect("nonempty");
        let next = prev
            .try_mul(&y)
            .and_then(|a| a.try_sub(&y.try_mul(prev)?))
            .expect("same field");
        images.push(next);
    }
    p.substitute_with(|l| images.get(l as usize - 1).cloned())
        .expect("every variable has an image")
}

/// `h = C_{2m-1}(f_1, ..., f_m, Y_1, ..., Y_{m-1})` with fresh letters for
/// the `Y`'s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapelliComposition {
    pub h: NcPoly,
    /// Letters standing for `Y_1..Y_{m-1}`, all above every letter of the
    /// family.
    pub fresh_vars: Vec<Letter>,
    /// Set when some `f_j` is zero, which forces `h = 0` by alternation.
    pub zero_argument: bool,
}

fn family_field(fs: &[NcPoly]) -> Result<Field> {
    let field = fs.first().ok_or(Error::EmptyFamily)?.field();
    if let Some(f) = fs.iter().find(|f| f.field() != field) {
        return Err(Error::FieldMismatch(field, f.field()));
    }
    Ok(field)
}

pub fn capelli_compose(fs: &[NcPoly]) -> Result<CapelliComposition> {
    let field = family_field(fs)?;
    let m = fs.len();
    let top = fs.iter().map(NcPoly::nvars).max().unwrap_or(0);
    let fresh_vars: Vec<Letter> = (1..m as Letter).map(|k| top + k).collect();
    if fs.iter().any(NcPoly::is_zero) {
        return Ok(CapelliComposition {
            h: NcPoly::zero(field),
            fresh_vars,
            zero_argument: true,
        });
    }
    let ys: Vec<NcPoly> = fresh_vars.iter().map(|&v| NcPoly::var(field, v)).collect();
    let mut h = NcPoly::zero(field);
    for (perm, odd) in signed_permutations(m) {
        let mut term = NcPoly::constant(sign(field, odd));
        for (k, &i) in perm.iter().enumerate() {
            if k > 0 {
                term = term.try_mul(&ys[k - 1])?;
            }
            term = term.try_mul(&fs[i])?;
        }
        h = h.try_add(&term)?;
    }
    Ok(CapelliComposition {
        h,
        fresh_vars,
        zero_argument: false,
    })
}

/// Dependent exactly when `C_{2m-1}(f_1..f_m, Y_1..Y_{m-1})` vanishes in the
/// free algebra. The coefficients of a dependent verdict come from the
/// global decider; if that decider sees independence the two routes
/// disagree and an error is returned.
pub fn razmyslov_symbolic_dependence(fs: &[NcPoly]) -> Result<DependenceVerdict> {
    let comp = capelli_compose(fs)?;
    if !comp.h.is_zero() {
        return Ok(DependenceVerdict::independent());
    }
    let global = global_dependence(fs)?;
    if global.status != Status::Dependent {
        return Err(Error::DeciderDisagreement(
            "Capelli composition vanishes but the coefficient matrix has full rank".into(),
        ));
    }
    Ok(global)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::{format_poly, parse_poly};
    use std::collections::BTreeMap;

    const Q: Field = Field::Rational;

    fn p(s: &str) -> NcPoly {
        parse_poly(s, Q).unwrap()
    }

    #[test]
    fn standard_examples() {
        assert_eq!(format_poly(&standard_poly(1, Q).unwrap()), "X1");
        assert_eq!(format_poly(&standard_poly(2, Q).unwrap()), "X1*X2 - X2*X1");
        assert_eq!(
            standard_poly(3, Q).unwrap(),
            p("X1*X2*X3 - X1*X3*X2 - X2*X1*X3 + X2*X3*X1 + X3*X1*X2 - X3*X2*X1")
        );
        assert_eq!(standard_poly(4, Q).unwrap().len(), 24);
        assert!(standard_poly(0, Q).is_err());
    }

    #[test]
    fn capelli_examples() {
        assert_eq!(capelli_poly(2, Q).unwrap(), p("X1*X3*X2 - X2*X3*X1"));
        assert_eq!(capelli_poly(1, Q).unwrap(), p("X1"));
        let c5 = capelli_poly(3, Q).unwrap();
        assert_eq!(c5.len(), 6);
        assert_eq!(c5.coeff(&Word::new(vec![1, 4, 2, 5, 3])), Q.one());
        assert!(capelli_poly(0, Q).is_err());
    }

    #[test]
    fn capelli_reduces_to_standard() {
        for n in 1..=5 {
            let c = capelli_poly(n, Q).unwrap();
            let reduced = c
                .substitute_with(|l| {
                    Some(if l as usize > n {
                        NcPoly::one(Q)
                    } else {
                        NcPoly::var(Q, l)
                    })
                })
                .unwrap();
            assert_eq!(reduced, standard_poly(n, Q).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn alternation_under_identification() {
        for n in 2..=5 {
            for (name, poly) in [
                ("St", standard_poly(n, Q).unwrap()),
                ("C", capelli_poly(n, Q).unwrap()),
            ] {
                for i in 1..=n as Letter {
                    for j in i + 1..=n as Letter {
                        let merged = poly
                            .substitute_with(|l| Some(NcPoly::var(Q, if l == j { i } else { l })))
                            .unwrap();
                        assert!(merged.is_zero(), "{name} n={n} X{i}=X{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn central_poly_support() {
        let c = central_poly_2x2(Q);
        assert_eq!(
            format_poly(&c),
            "X1*X2*X1*X2 - X1*X2^2*X1 - X2*X1^2*X2 + X2*X1*X2*X1"
        );
    }

    #[test]
    fn commutator_embedding() {
        assert_eq!(commutator_embed(&p("X1")), p("X1"));
        assert_eq!(commutator_embed(&p("X2")), p("X1*X2 - X2*X1"));
        assert_eq!(commutator_embed(&p("X3")), p("X1*X2^2 - 2*X2*X1*X2 + X2^2*X1"));
        assert_eq!(commutator_embed(&p("3")), p("3"));
        assert!(commutator_embed(&p("X4*X1 + X3")).nvars() <= 2);
    }

    #[test]
    fn composition_examples() {
        let c = capelli_compose(&[p("X1*X2 + 3")]).unwrap();
        assert_eq!(c.h, p("X1*X2 + 3"));
        assert!(c.fresh_vars.is_empty());

        let c = capelli_compose(&[p("X1"), p("X2")]).unwrap();
        assert_eq!(c.fresh_vars, vec![3]);
        assert_eq!(c.h, p("X1*X3*X2 - X2*X3*X1"));

        let c = capelli_compose(&[p("X1"), p("2*X1")]).unwrap();
        assert!(c.h.is_zero());
        assert!(!c.zero_argument);

        let c = capelli_compose(&[p("X1"), p("0"), p("X2")]).unwrap();
        assert!(c.h.is_zero() && c.zero_argument);
        assert_eq!(c.fresh_vars, vec![3, 4]);
    }

    #[test]
    fn composition_degree_and_reduction() {
        let fs = [p("X1*X2 - 1"), p("X2^2"), p("X1 + X2*X1*X2")];
        let c = capelli_compose(&fs).unwrap();
        assert_eq!(c.h.degree().finite(), Some(2 + 2 + 3 + 2));
        let mut images = BTreeMap::new();
        for l in 1..=2 {
            images.insert(l, NcPoly::var(Q, l));
        }
        for &y in &c.fresh_vars {
            images.insert(y, NcPoly::one(Q));
        }
        let st3 = standard_poly(3, Q).unwrap();
        let applied = st3
            .substitute_with(|l| Some(fs[l as usize - 1].clone()))
            .unwrap();
        assert_eq!(c.h.substitute(&images).unwrap(), applied);
    }

    #[test]
    fn symbolic_examples() {
        let v = razmyslov_symbolic_dependence(&[p("X1"), p("2*X1")]).unwrap();
        assert_eq!(v.status, Status::Dependent);
        assert_eq!(v.coefficients, Some(vec![Q.from_i64(2), Q.from_i64(-1)]));
        let v = razmyslov_symbolic_dependence(&[p("X1"), p("X2")]).unwrap();
        assert_eq!(v.status, Status::Independent);
        let st4 = standard_poly(4, Q).unwrap();
        let v = razmyslov_symbolic_dependence(&[st4, p("1")]).unwrap();
        assert_eq!(v.status, Status::Independent);
    }
}
