//! Coefficient traits.
//!
//! Every polynomial type in the crate is generic over a [`Ring`]. The exact
//! algorithms (gcd, squarefree decomposition, resultants) additionally need
//! exact division, expressed by [`Domain`] and [`Field`]. The concrete
//! coefficient type used by the classifier is [`Rational`]; `f32` and `f64`
//! are supported for numeric experiments and test oracles.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn pow_u32(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        result
    }

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let negative = v < 0;
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() + base;
            }
        }
        if negative {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// An integral domain in which exact quotients can be computed.
pub trait Domain: Ring {
    /// Returns `Some(q)` with `q * divisor == self`, or `None` when no such
    /// element exists (or `divisor` is zero).
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

/// A field: every non-zero element is invertible.
pub trait Field: Domain + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Domain for Rational {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}
impl Field for Rational {}

macro_rules! float_field {
    ($t:ty) => {
        impl Domain for $t {
            fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
                if *divisor == 0.0 {
                    None
                } else {
                    Some(self / divisor)
                }
            }
        }
        impl Field for $t {}
    };
}

float_field!(f32);
float_field!(f64);

/// Shorthand for building a rational from integer parts.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Serializes a rational as `"p/q"`; the denominator is always present.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Lossy conversion used by numeric oracles.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// `true` when `r` is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Absolute value helper that reads better at call sites.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&Rational::zero()), "0/1");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational(" 7 "), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&rat(10, 5)), "2/1");
    }

    #[test]
    fn generic_pow_and_embedding() {
        assert_eq!(<f64 as Ring>::pow_u32(&2.0, 10), 1024.0);
        assert_eq!(rat(1, 2).pow_u32(3), rat(1, 8));
        assert_eq!(<Rational as Ring>::from_i64(-13), int(-13));
        assert_eq!(<f64 as Ring>::from_i64(9), 9.0);
    }
}
