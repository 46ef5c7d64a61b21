use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::word::{Letter, Word};
use crate::scalar::{Field, Scalar};

/// Degree of a polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Element of the free algebra `F<X1, X2, ...>`: a finite map from words to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero(field: Field) -> Self {
        NcPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::one(), c)
    }

    /// The variable `X{index}` (1-based).
    pub fn var(field: Field, index: Letter) -> Self {
        Self::monomial(Word::letter(index), field.one())
    }

    pub fn monomial(word: Word, coeff: Scalar) -> Self {
        let field = coeff.field();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { field, terms }
    }

    /// Sums the given terms; repeated words combine and zero sums vanish.
    pub fn from_terms<I>(field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut p = NcPoly::zero(field);
        for (w, c) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    // Both operands are known to share `self.field`.
    fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deglex order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Word, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &Word) -> Scalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        // deglex puts the longest words last
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |w| Degree::Finite(w.degree()))
    }

    /// Smallest `n` such that every occurring letter is at most `n`.
    pub fn nvars(&self) -> Letter {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    fn check_field(&self, rhs: &NcPoly) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &NcPoly) -> Result<NcPoly> {
        self.check_field(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &NcPoly) -> Result<NcPoly> {
        self.try_add(&rhs.neg())
    }

    pub fn try_mul(&self, rhs: &NcPoly) -> Result<NcPoly> {
        self.check_field(rhs)?;
        let mut out = NcPoly::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<NcPoly> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch(self.field, s.field()));
        }
        if s.is_zero() {
            return Ok(NcPoly::zero(self.field));
        }
        Ok(NcPoly {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> NcPoly {
        let mut acc = NcPoly::one(self.field);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same field");
        }
        acc
    }

    /// Applies the algebra homomorphism sending `X_i` to `image(i)`.
    pub fn substitute_with<F>(&self, mut image: F) -> Result<NcPoly>
    where
        F: FnMut(Letter) -> Option<NcPoly>,
    {
        let mut cache: BTreeMap<Letter, NcPoly> = BTreeMap::new();
        for w in self.terms.keys() {
            for &l in w.letters() {
                if let Entry::Vacant(e) = cache.entry(l) {
                    let img = image(l).ok_or(Error::MissingImage(l))?;
                    self.check_field(&img)?;
                    e.insert(img);
                }
            }
        }
        let mut out = NcPoly::zero(self.field);
        for (w, c) in &self.terms {
            let mut term = NcPoly::constant(c.clone());
            for l in w.letters() {
                term = term.try_mul(&cache[l])?;
                if term.is_zero() {
                    break;
                }
            }
            for (tw, tc) in term.terms {
                out.add_term(tw, tc);
            }
        }
        Ok(out)
    }

    /// Substitution from an explicit map; variables missing from `images`
    /// are rejected.
    pub fn substitute(&self, images: &BTreeMap<Letter, NcPoly>) -> Result<NcPoly> {
        self.substitute_with(|l| images.get(&l).cloned())
    }
}

/// `p + q`.
pub fn poly_add(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    p.try_add(q)
}

/// `p * q` in the free algebra; generally differs from `q * p`.
pub fn poly_mul(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    p.try_mul(q)
}

pub fn poly_substitute(p: &NcPoly, images: &BTreeMap<Letter, NcPoly>) -> Result<NcPoly> {
    p.substitute(images)
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::ncparse::format_poly(self))
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{}]({self})", self.field)
    }
}
