//! Recursive-descent parser for polynomial expressions in `X`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*"? unary)*          juxtaposition multiplies: 3X, 2(X-1)
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := integer ("/" integer)? | "X" | "x" | "(" expr ")"
//! ```
//!
//! The only division is inside a rational literal `p/q`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Poly, RationalPoly};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum PolyExpr {
    Literal(Rational),
    Var,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Direct evaluation of the tree, without expanding.
    pub fn eval(&self, x: &Rational) -> Rational {
        match self {
            PolyExpr::Literal(r) => r.clone(),
            PolyExpr::Var => x.clone(),
            PolyExpr::Neg(e) => -e.eval(x),
            PolyExpr::Add(a, b) => a.eval(x) + b.eval(x),
            PolyExpr::Sub(a, b) => a.eval(x) - b.eval(x),
            PolyExpr::Mul(a, b) => a.eval(x) * b.eval(x),
            PolyExpr::Pow(base, e) => num_traits::pow(base.eval(x), *e as usize),
        }
    }

    /// Expands to a polynomial, refusing anything whose degree would pass `cap`.
    pub fn to_poly(&self, cap: usize) -> Result<RationalPoly> {
        Ok(match self {
            PolyExpr::Literal(r) => Poly::constant(r.clone()),
            PolyExpr::Var => Poly::x(),
            PolyExpr::Neg(e) => -e.to_poly(cap)?,
            PolyExpr::Add(a, b) => &a.to_poly(cap)? + &b.to_poly(cap)?,
            PolyExpr::Sub(a, b) => &a.to_poly(cap)? - &b.to_poly(cap)?,
            PolyExpr::Mul(a, b) => {
                let (a, b) = (a.to_poly(cap)?, b.to_poly(cap)?);
                let degree = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
                if !a.is_zero() && !b.is_zero() && degree > cap {
                    return Err(Error::DegreeCap { degree, cap });
                }
                &a * &b
            }
            PolyExpr::Pow(base, e) => {
                let base = base.to_poly(cap)?;
                let degree = base.degree().unwrap_or(0).saturating_mul(*e as usize);
                if !base.is_zero() && degree > cap {
                    return Err(Error::DegreeCap { degree, cap });
                }
                base.pow(*e)
            }
        })
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error(&mut self, expected: &[&'static str]) -> Error {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Error::Parse {
            offset: self.pos,
            expected: expected.to_vec(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(rest[..len].parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_factor(c: Option<char>) -> bool {
        matches!(c, Some('0'..='9' | 'X' | 'x' | '('))
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if Self::starts_factor(self.peek()) {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        if self.eat('-') {
            Ok(PolyExpr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<PolyExpr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.pos;
        let Some(e) = self.integer() else {
            return Err(self.error(&["non-negative integer exponent"]));
        };
        let e: u32 = (&e).try_into().map_err(|_| Error::Parse {
            offset: at,
            expected: vec!["exponent below 2^32"],
            found: e.to_string(),
        })?;
        Ok(PolyExpr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        match self.peek() {
            Some('X' | 'x') => {
                self.pos += 1;
                Ok(PolyExpr::Var)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error(&["')'", "operator"]));
                }
                Ok(inner)
            }
            Some('0'..='9') => {
                let num = self.integer().expect("digit ahead");
                if !self.eat('/') {
                    return Ok(PolyExpr::Literal(Rational::from_integer(num)));
                }
                let at = self.pos;
                match self.integer() {
                    Some(den) if !den.is_zero() => Ok(PolyExpr::Literal(Rational::new(num, den))),
                    Some(_) => Err(Error::Parse {
                        offset: at,
                        expected: vec!["non-zero denominator"],
                        found: "0".into(),
                    }),
                    None => Err(self.error(&["integer denominator"])),
                }
            }
            _ => Err(self.error(&["integer", "'X'", "'('", "'-'"])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<PolyExpr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Parses and expands; the zero polynomial is accepted here and refused by
/// the consumers that need a degree.
pub fn parse_poly(text: &str, cap: usize) -> Result<RationalPoly> {
    parse_expr(text)?.to_poly(cap)
}

/// The canonical text of a polynomial, which parses back to itself.
pub fn canonical(p: &RationalPoly) -> String {
    p.to_string()
}
