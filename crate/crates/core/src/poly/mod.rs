//! Univariate and homogeneous trivariate polynomials with exact algorithms.

mod algorithms;
pub mod cyclotomic;
pub mod homog;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Domain, Field, Rational, Ring};

pub use algorithms::{gcd, resultant, squarefree_decomposition, SquarefreeFactor};
pub use homog::{BiPoly, HomogPoly, Var};

/// Default bound on the degree of user inputs.
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `X^i`.
///
/// Trailing zeros are never stored, so the zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    /// `c * X^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut coeffs: Vec<T> = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, T::zero());
            }
            coeffs[k] = coeffs[k].clone() + c;
        }
        Poly::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Exponents with non-zero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    /// Non-zero terms, ascending by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// Horner evaluation; works for any ring receiving the coefficients.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Evaluates at an element of a ring the coefficients embed into.
    pub fn eval_in<S: Ring>(&self, at: &S, embed: impl Fn(&T) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * at.clone() + embed(c))
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &Poly<T>) -> Poly<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// `self(X + s)`.
    pub fn taylor_shift(&self, s: &T) -> Poly<T> {
        self.compose(&Poly::new(vec![s.clone(), T::one()]))
    }

    /// `self(s * X)`.
    pub fn scale_variable(&self, s: &T) -> Poly<T> {
        let mut power = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.clone() * power.clone());
            power = power * s.clone();
        }
        Poly::new(coeffs)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly<T> {
        let mut result = Poly::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Division by a divisor whose leading coefficient is one; valid over any
    /// ring.
    pub fn div_rem_monic(&self, divisor: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(
            divisor.leading().is_some_and(|c| c.is_one()),
            "div_rem_monic requires a monic divisor"
        );
        self.div_rem_with(divisor, dd, |c| Some(c.clone()))
            .expect("monic division cannot fail")
    }

    /// Pseudo-remainder: `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_remainder(&self, divisor: &Poly<T>) -> Poly<T> {
        let dd = divisor.degree().expect("division by zero polynomial");
        let Some(ds) = self.degree() else {
            return Poly::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut steps = ds - dd + 1;
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone();
            rem = &rem.scale(&lc) - &divisor.scale(&factor).shift_up(dr - dd);
            steps -= 1;
        }
        rem.scale(&lc.pow_u32(steps as u32))
    }

    fn div_rem_with(
        &self,
        divisor: &Poly<T>,
        dd: usize,
        quotient_of_lead: impl Fn(&T) -> Option<T>,
    ) -> Option<(Poly<T>, Poly<T>)> {
        let mut rem = self.clone();
        let Some(ds) = self.degree() else {
            return Some((Poly::zero(), Poly::zero()));
        };
        if ds < dd {
            return Some((Poly::zero(), rem));
        }
        let mut quot = vec![T::zero(); ds - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let q = quotient_of_lead(rem.leading().unwrap())?;
            let k = dr - dd;
            rem = &rem - &divisor.scale(&q).shift_up(k);
            // guard against rings where the leading term does not cancel
            if rem.degree() == Some(dr) {
                return None;
            }
            quot[k] = q;
        }
        Some((Poly::new(quot), rem))
    }
}

impl<T: Domain> Poly<T> {
    /// Exact quotient `self / divisor`, or an error if the division leaves a
    /// remainder.
    pub fn exact_divide(&self, divisor: &Poly<T>) -> Result<Poly<T>> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().unwrap().clone();
        match self.div_rem_with(divisor, dd, |c| c.exact_quotient(&lc)) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::NotDivisible),
        }
    }

    /// Divides every coefficient exactly by `c`.
    pub fn exact_scalar_divide(&self, c: &T) -> Option<Poly<T>> {
        let coeffs: Option<Vec<T>> = self.coeffs.iter().map(|a| a.exact_quotient(c)).collect();
        coeffs.map(Poly::new)
    }
}

impl<T: Domain> Domain for Poly<T> {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.exact_divide(divisor).ok()
    }
}

impl<T: Field> Poly<T> {
    pub fn div_rem(&self, divisor: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.leading().unwrap().inv();
        self.div_rem_with(divisor, dd, |c| Some(c.clone() * inv.clone()))
            .expect("field division cannot fail")
    }

    pub fn rem(&self, divisor: &Poly<T>) -> Poly<T> {
        self.div_rem(divisor).1
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly<T> {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv()),
            None => self.clone(),
        }
    }
}

impl Poly<Rational> {
    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn radical(&self) -> Poly<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = gcd(self, &self.derivative());
        self.exact_divide(&g).expect("gcd divides").monic()
    }

    /// Rational roots by the rational root test on the integer-scaled
    /// polynomial; each distinct root once, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        algorithms::rational_roots(self)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl<T: Ring> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    /// Renders in the parser's input syntax, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = magnitude == "1";
            let needs_parens = magnitude.contains('/');
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => {}
                (_, false) if needs_parens => write!(f, "({magnitude})*")?,
                (_, false) => write!(f, "{magnitude}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Rational polynomial, the type every classifier input is parsed into.
pub type RationalPoly = Poly<Rational>;

/// Checks a degree against a cap.
pub fn check_degree_cap(p: &RationalPoly, cap: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d > cap => Err(Error::DegreeCap { degree: d, cap }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn q(c: &[i64]) -> RationalPoly {
        Poly::from_i64s(c)
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(q(&[0, 0, 1]).taylor_shift(&int(1)), q(&[1, 2, 1]));
        let p = q(&[5, -3, 0, 2]);
        assert_eq!(p.taylor_shift(&int(0)), p);
        assert_eq!(q(&[1, 3, 3, 1]).taylor_shift(&int(-1)), q(&[0, 0, 0, 1]));
    }

    #[test]
    fn exact_divide_and_failure() {
        assert_eq!(q(&[-1, 0, 1]).exact_divide(&q(&[-1, 1])).unwrap(), q(&[1, 1]));
        assert!(matches!(
            q(&[1, 0, 1]).exact_divide(&q(&[-1, 1])),
            Err(Error::NotDivisible)
        ));
        assert!(matches!(
            q(&[1, 0, 1]).exact_divide(&Poly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn derivative_with_symbolic_coefficient() {
        // X^5 + a X^3 with a = 7/2
        let a = rat(7, 2);
        let p = Poly::from_terms([(5, int(1)), (3, a.clone())]);
        let expected = Poly::from_terms([(4, int(5)), (2, a * int(3))]);
        assert_eq!(p.derivative(), expected);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(q(&[0, 0, 1]).compose(&q(&[1, 1])), q(&[1, 2, 1]));
        assert_eq!(q(&[3]).compose(&q(&[1, 1])), q(&[3]));
    }

    #[test]
    fn pseudo_remainder_over_integers_like_ring() {
        // prem(X^2 + 1, 2X + 1) = 4 * (X^2+1) mod (2X+1) = 5
        let r = q(&[1, 0, 1]).pseudo_remainder(&q(&[1, 2]));
        assert_eq!(r, q(&[5]));
    }

    #[test]
    fn display_is_parser_syntax() {
        let p = Poly::from_terms([(3, rat(-1, 2)), (1, int(1)), (0, int(-4))]);
        assert_eq!(p.to_string(), "-(1/2)*X^3 + X - 4");
        assert_eq!(RationalPoly::zero().to_string(), "0");
    }

    #[test]
    fn float_polynomials_share_the_code() {
        let p: Poly<f64> = Poly::from_i64s(&[1, 3, 3, 1]);
        assert_eq!(p.taylor_shift(&-1.0), Poly::from_i64s(&[0, 0, 0, 1]));
        assert_eq!(p.eval(&1.0), 8.0);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let p = Poly::monomial(int(1), 70);
        assert!(matches!(
            check_degree_cap(&p, DEFAULT_DEGREE_CAP),
            Err(Error::DegreeCap { degree: 70, cap: 64 })
        ));
    }
}
