//! Text syntax for noncommutative polynomials.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := ('-')? factor ('*' factor)*
//! factor := var ('^' nat)? | coeff | '(' poly ')'
//! var    := 'X' nat                  ; nat >= 1
//! coeff  := int ('/' posnat)?
//! ```
//!
//! Whitespace is ignored. Multiplication must be written out: `X1X2` is an
//! error, since `X12` would otherwise be ambiguous.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freealg::{Letter, NcPoly, Word};
use crate::scalar::{Field, Scalar};

/// Longest word a single `X_i^k` may produce.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(Letter),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(i) => format!("`X{i}`"),
            Tok::Int(v) => format!("`{v}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((pos, t));
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c == 'X' {
            i += 1;
            let ds = digits(&mut i);
            if ds.is_empty() {
                return Err(Error::Lex {
                    pos,
                    msg: "`X` must be followed by a variable index".into(),
                });
            }
            let index: Letter = ds.parse().map_err(|_| Error::Lex {
                pos,
                msg: format!("variable index {ds} is too large"),
            })?;
            if index == 0 {
                return Err(Error::Lex {
                    pos,
                    msg: "variable indices start at 1".into(),
                });
            }
            out.push((pos, Tok::Var(index)));
        } else if c.is_ascii_digit() {
            let ds = digits(&mut i);
            out.push((pos, Tok::Int(ds.parse().expect("ascii digits"))));
        } else {
            return Err(Error::Lex {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    field: Field,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        })
    }

    fn poly(&mut self) -> Result<NcPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<NcPoly> {
        match self.peek().clone() {
            Tok::Var(index) => {
                self.bump();
                let mut exp = 1;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let pos = self.pos();
                    let Tok::Int(k) = self.peek().clone() else {
                        return self.fail("a nonnegative exponent");
                    };
                    self.bump();
                    exp = match u32::try_from(&k) {
                        Ok(k) if k <= MAX_EXPONENT => k,
                        _ => {
                            return Err(Error::Syntax {
                                pos,
                                expected: format!("an exponent at most {MAX_EXPONENT}"),
                                found: format!("`{k}`"),
                            })
                        }
                    };
                }
                let word = Word::new(vec![index; exp as usize]);
                Ok(NcPoly::monomial(word, self.field.one()))
            }
            Tok::Int(num) => {
                self.bump();
                let mut den = BigInt::one();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    let Tok::Int(d) = self.peek().clone() else {
                        return self.fail("a positive denominator");
                    };
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            pos,
                            expected: "a positive denominator".into(),
                            found: "`0`".into(),
                        });
                    }
                    self.bump();
                    den = d;
                }
                Ok(NcPoly::constant(self.field.from_ratio(&num, &den)?))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail("a variable, coefficient or `(`"),
        }
    }
}

/// Parses `text` into a canonical polynomial over `field`.
pub fn parse_poly(text: &str, field: Field) -> Result<NcPoly> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        field,
    };
    let poly = p.poly()?;
    if *p.peek() != Tok::End {
        return p.fail("`+`, `-`, `*` or end of input");
    }
    Ok(poly)
}

fn magnitude(c: &Scalar) -> Scalar {
    if c.is_negative() {
        -c
    } else {
        c.clone()
    }
}

/// Canonical text: deglex term order, unit coefficients elided except on
/// the constant term, signs folded into the separators.
pub fn format_poly(p: &NcPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = magnitude(c);
        if w.is_one() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&w.to_string());
        } else {
            out.push_str(&format!("{mag}*{w}"));
        }
    }
    out
}
