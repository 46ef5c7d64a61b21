//! Exact field elements.
//!
//! [`Rational`] keeps an `i128` fast path and only promotes to a big
//! rational when an intermediate overflows, so desk-scale matrix products
//! stay allocation-free. [`Scalar`] is the runtime-tagged element used by
//! every other module; two scalars from different [`Field`]s never mix.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

// `Small` is used exactly when numerator and denominator both lie in
// [-i128::MAX, i128::MAX]; this keeps equality structural.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: i128, den: i128 },
    Big(BigRational),
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

fn small_fits(v: &BigInt) -> Option<i128> {
    v.to_i128().filter(|x| *x != i128::MIN)
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Rational(Repr::Small {
            num: v as i128,
            den: 1,
        })
    }

    /// Builds `num/den`, reducing to lowest terms. Fails on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    fn from_big(r: BigRational) -> Self {
        match (small_fits(r.numer()), small_fits(r.denom())) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(r)),
        }
    }

    // Caller guarantees den > 0 and both values avoid i128::MIN.
    fn from_small_parts(num: i128, den: i128) -> Self {
        if den == 1 || num == 0 {
            return Rational(Repr::Small {
                num,
                den: if num == 0 { 1 } else { den },
            });
        }
        let g = gcd_i128(num, den);
        Rational(Repr::Small {
            num: num / g,
            den: den / g,
        })
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small { num, den } => {
                let (n, d) = if *num < 0 { (-*den, -*num) } else { (*den, *num) };
                Rational(Repr::Small { num: n, den: d })
            }
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn add(self, rhs: &'a Rational) -> Rational {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &rhs.0)
        {
            if b == d {
                if let Some(n) = a.checked_add(*c).filter(|x| *x != i128::MIN) {
                    return Rational::from_small_parts(n, *b);
                }
            } else {
                let num = a
                    .checked_mul(*d)
                    .zip(c.checked_mul(*b))
                    .and_then(|(x, y)| x.checked_add(y))
                    .filter(|x| *x != i128::MIN);
                if let (Some(n), Some(den)) = (num, b.checked_mul(*d)) {
                    return Rational::from_small_parts(n, den);
                }
            }
        }
        Rational::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn mul(self, rhs: &'a Rational) -> Rational {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &rhs.0)
        {
            if *b == 1 && *d == 1 {
                if let Some(n) = a.checked_mul(*c).filter(|x| *x != i128::MIN) {
                    return Rational(Repr::Small { num: n, den: 1 });
                }
            } else {
                let g1 = gcd_i128(*a, *d).max(1);
                let g2 = gcd_i128(*c, *b).max(1);
                let num = (a / g1).checked_mul(c / g2).filter(|x| *x != i128::MIN);
                let den = (b / g2).checked_mul(d / g1);
                if let (Some(n), Some(den)) = (num, den) {
                    return Rational::from_small_parts(n, den);
                }
            }
        }
        Rational::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small {
                num: -*num,
                den: *den,
            }),
            Repr::Big(r) => Rational::from_big(-r.clone()),
        }
    }
}

impl Sub for &Rational {
    type Output = Rational;

    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other)
            .numer()
            .sign()
            .cmp(&num_bigint::Sign::NoSign)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadScalar(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = d.parse().map_err(|_| bad())?;
        if den.is_negative() {
            return Err(bad());
        }
        Rational::new(num, den)
    }
}

/// Which exact field scalars live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// Integers modulo an odd prime.
    Prime(u64),
}

impl Field {
    /// Prime-field configuration; `p` must be an odd prime below 2^62.
    pub fn prime(p: u64) -> Result<Self> {
        if p <= 2 || p >= (1 << 62) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(Rational::from_int(v)),
            Field::Prime(p) => Scalar::Mod(ModP::new(v.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// Maps `num/den` into the field. Prime fields reject denominators
    /// divisible by `p`.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match self {
            Field::Rational => Ok(Scalar::Rat(Rational::new(num.clone(), den.clone())?)),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |v: &BigInt| v.mod_floor(&pb).to_u64().unwrap_or(0);
                let d = ModP::new(reduce(den), p);
                let inv = d.inv().ok_or(Error::NotInvertibleModP {
                    value: den.to_string(),
                    p,
                })?;
                Ok(Scalar::Mod(ModP::new(reduce(num), p).mul(inv)))
            }
        }
    }

    /// Parses `"a"` or `"a/b"`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let r: Rational = s.parse()?;
        self.from_ratio(&r.numer(), &r.denom())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime({p})"),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

// Deterministic Miller-Rabin, exact for all u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Residue modulo a prime, always in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    fn new(value: u64, p: u64) -> Self {
        ModP { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn add(self, o: ModP) -> ModP {
        let s = self.value + o.value;
        ModP::new(if s >= self.p { s - self.p } else { s }, self.p)
    }

    fn neg(self) -> ModP {
        ModP::new(if self.value == 0 { 0 } else { self.p - self.value }, self.p)
    }

    fn mul(self, o: ModP) -> ModP {
        ModP::new(mul_mod(self.value, o.value, self.p), self.p)
    }

    fn inv(self) -> Option<ModP> {
        (self.value != 0).then(|| ModP::new(pow_mod(self.value, self.p - 2, self.p), self.p))
    }
}

/// An element of the configured field.
///
/// The operator impls panic when the two operands come from different
/// fields; code that accepts scalars from outside checks fields first (see
/// [`Scalar::field`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod(ModP),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod(m) => Field::Prime(m.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => *r == Rational::one(),
            Scalar::Mod(m) => m.value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.recip().map(Scalar::Rat),
            Scalar::Mod(m) => m.inv().map(Scalar::Mod),
        }
    }

    /// Exact quotient; `None` when dividing by zero.
    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    /// True when the printed form should carry a leading minus sign.
    /// Prime residues above `p/2` print as negatives.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod(m) => m.value > m.p / 2,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed scalar fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.p == b.p => Scalar::Mod(a.add(*b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.p == b.p => Scalar::Mod(a.mul(*b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a) => Scalar::Mod(a.neg()),
        }
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `a` or `a/b`; residues print as signed
    /// representatives in `(-p/2, p/2]`, so printing then re-parsing in the
    /// same field is the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod(m) if m.value > m.p / 2 => write!(f, "-{}", m.p - m.value),
            Scalar::Mod(m) => write!(f, "{}", m.value),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn rationals_are_reduced() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("0/7").to_string(), "0");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for s in ["3/7", "-5/2", "1", "-1", "170141183460469231731687303715884105727"] {
            let a = q(s);
            assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = q("170141183460469231731687303715884105727");
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq * &big.recip().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small { .. }));
        let neg = -&big;
        assert_eq!(&(&neg - &big) + &(&big + &big), Rational::zero());
    }

    #[test]
    fn small_and_big_paths_agree() {
        let vals = ["7/3", "-11/5", "123456789012345678901234567/3", "2/9"];
        for a in vals {
            for b in vals {
                let (x, y) = (q(a), q(b));
                let bx = x.to_big();
                let by = y.to_big();
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
            }
        }
    }

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.from_i64(-1).to_string(), "-1");
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(f.parse_scalar("1/14").is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(1_000_000_007).is_ok());
    }

    #[test]
    #[should_panic(expected = "mixed scalar fields")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::prime(5).unwrap().one();
    }
}
