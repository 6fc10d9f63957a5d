//! Homogeneous polynomials in `X, Y, Z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{Domain, Ring};

/// Bivariate polynomial: outer variable `X`, coefficients in `Y`.
pub type BiPoly<T> = Poly<Poly<T>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

/// Exponent triple `(i, j, k)` of the monomial `X^i Y^j Z^k`.
pub type Monomial = (u32, u32, u32);

/// Sparse homogeneous polynomial of a fixed total degree.
#[derive(Clone, PartialEq)]
pub struct HomogPoly<T> {
    degree: u32,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> HomogPoly<T> {
    pub fn zero(degree: u32) -> Self {
        HomogPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(monomial, coefficient)` pairs; repeated monomials are
    /// summed. Panics if a monomial has the wrong degree.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, T)>>(degree: u32, terms: I) -> Self {
        let mut p = HomogPoly::zero(degree);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        let m = match v {
            Var::X => (1, 0, 0),
            Var::Y => (0, 1, 0),
            Var::Z => (0, 0, 1),
        };
        HomogPoly::from_terms(1, [(m, T::one())])
    }

    /// The linear form `a X + b Y + c Z`.
    pub fn linear(a: T, b: T, c: T) -> Self {
        HomogPoly::from_terms(1, [((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)])
    }

    pub fn constant(c: T) -> Self {
        HomogPoly::from_terms(0, [((0, 0, 0), c)])
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        assert_eq!(m.0 + m.1 + m.2, self.degree, "monomial of wrong degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> T {
        self.terms.get(&m).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        HomogPoly::from_terms(
            self.degree,
            self.terms.iter().map(|(m, c)| (*m, c.clone() * s.clone())),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> HomogPoly<S> {
        HomogPoly::from_terms(self.degree, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = HomogPoly::constant(T::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative; the result has degree one less (degree zero
    /// polynomials differentiate to the zero polynomial of degree zero).
    pub fn partial(&self, v: Var) -> Self {
        let mut out = HomogPoly::zero(self.degree.saturating_sub(1));
        for (&(i, j, k), c) in &self.terms {
            let (e, m) = match v {
                Var::X if i > 0 => (i, (i - 1, j, k)),
                Var::Y if j > 0 => (j, (i, j - 1, k)),
                Var::Z if k > 0 => (k, (i, j, k - 1)),
                _ => continue,
            };
            out.add_term(m, c.clone() * T::from_i64(e as i64));
        }
        out
    }

    pub fn eval(&self, x: &T, y: &T, z: &T) -> T {
        self.eval_in(x, y, z, |c| c.clone())
    }

    /// Evaluates at a point with coordinates in another ring.
    pub fn eval_in<S: Ring>(&self, x: &S, y: &S, z: &S, embed: impl Fn(&T) -> S) -> S {
        let mut acc = S::zero();
        for (&(i, j, k), c) in &self.terms {
            acc = acc + embed(c) * x.pow_u32(i) * y.pow_u32(j) * z.pow_u32(k);
        }
        acc
    }

    /// Substitutes homogeneous polynomials of a common degree for `X, Y, Z`.
    pub fn substitute(&self, x: &HomogPoly<T>, y: &HomogPoly<T>, z: &HomogPoly<T>) -> Self {
        assert!(x.degree == y.degree && y.degree == z.degree);
        let mut acc = HomogPoly::zero(self.degree * x.degree);
        for (&(i, j, k), c) in &self.terms {
            let term = &(&x.pow(i) * &y.pow(j)) * &z.pow(k);
            acc = &acc + &term.scale(c);
        }
        acc
    }

    /// Sets `Z = 1`.
    pub fn dehomogenize(&self) -> BiPoly<T> {
        let mut rows: Vec<Vec<T>> = Vec::new();
        for (&(i, j, _), c) in &self.terms {
            let (i, j) = (i as usize, j as usize);
            if rows.len() <= i {
                rows.resize_with(i + 1, Vec::new);
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, T::zero());
            }
            rows[i][j] = c.clone();
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// Homogenizes `f(X, Y)` to total degree `degree` with respect to `Z`.
    pub fn homogenize(f: &BiPoly<T>, degree: u32) -> Result<Self> {
        let mut out = HomogPoly::zero(degree);
        for (i, row) in f.terms() {
            for (j, c) in row.terms() {
                let total = (i + j) as u32;
                if total > degree {
                    return Err(Error::HomogenizationDegree {
                        degree: total as usize,
                        target: degree as usize,
                    });
                }
                out.add_term((i as u32, j as u32, degree - total), c.clone());
            }
        }
        Ok(out)
    }

    /// Lifts a univariate polynomial in the given variable to degree
    /// `degree` with `Z` as the homogenizing variable.
    pub fn from_univariate(p: &Poly<T>, v: Var, degree: u32) -> Result<Self> {
        let mut out = HomogPoly::zero(degree);
        for (e, c) in p.terms() {
            let e = e as u32;
            if e > degree {
                return Err(Error::HomogenizationDegree {
                    degree: e as usize,
                    target: degree as usize,
                });
            }
            let m = match v {
                Var::X => (e, 0, degree - e),
                Var::Y => (0, e, degree - e),
                Var::Z => panic!("Z is the homogenizing variable"),
            };
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// Swaps `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        HomogPoly::from_terms(
            self.degree,
            self.terms.iter().map(|(&(i, j, k), c)| ((j, i, k), c.clone())),
        )
    }
}

impl<T: Domain> HomogPoly<T> {
    /// Exact quotient, computed on the `Z = 1` chart and re-homogenized.
    pub fn exact_divide(&self, divisor: &HomogPoly<T>) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(HomogPoly::zero(self.degree.saturating_sub(divisor.degree)));
        }
        let target = self
            .degree
            .checked_sub(divisor.degree)
            .ok_or(Error::NotDivisible)?;
        let q = self.dehomogenize().exact_divide(&divisor.dehomogenize())?;
        let q = HomogPoly::homogenize(&q, target).map_err(|_| Error::NotDivisible)?;
        if &q * divisor == *self {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn is_divisible_by(&self, divisor: &HomogPoly<T>) -> bool {
        self.exact_divide(divisor).is_ok()
    }
}

impl<T: Ring> Add<&HomogPoly<T>> for &HomogPoly<T> {
    type Output = HomogPoly<T>;
    fn add(self, rhs: &HomogPoly<T>) -> HomogPoly<T> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<T: Ring> Sub<&HomogPoly<T>> for &HomogPoly<T> {
    type Output = HomogPoly<T>;
    fn sub(self, rhs: &HomogPoly<T>) -> HomogPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Ring> Neg for &HomogPoly<T> {
    type Output = HomogPoly<T>;
    fn neg(self) -> HomogPoly<T> {
        HomogPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<T: Ring> Mul<&HomogPoly<T>> for &HomogPoly<T> {
    type Output = HomogPoly<T>;
    fn mul(self, rhs: &HomogPoly<T>) -> HomogPoly<T> {
        let mut out = HomogPoly::zero(self.degree + rhs.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Ring + fmt::Display> fmt::Display for HomogPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j, k), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (name, e) in [("X", i), ("Y", j), ("Z", k)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for HomogPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomogPoly")
            .field("degree", &self.degree)
            .field("terms", &self.terms)
            .finish()
    }
}
