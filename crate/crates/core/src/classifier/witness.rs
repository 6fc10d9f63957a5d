use std::fmt;

use num_traits::{One, Zero};

use crate::criteria::{CriticalStructure, CurveKind};
use crate::curve::{bezout_irreducibility, genus_ordinary, singular_census, Irreducibility};
use crate::poly::cyclotomic::{cyclotomic, reduce_coefficients};
use crate::poly::{gcd, Poly, RationalPoly};
use crate::scalar::{format_rational, int, Rational};

/// The negative cases settled by genus rather than by an explicit pair `f, g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExceptionCase {
    /// `l = 2`, `min m = 1`: `C` is irreducible of genus zero.
    TwoCriticalOneSimple,
    /// `n = 5`, `m = (2, 2)`: `C` has genus one.
    QuinticDoubleDouble,
    /// `n = 4`, `m = (1, 1, 1)`: `C` is a smooth cubic.
    SmoothCubic,
    /// `n = 4`, critical values in a `w`-orbit: `C_w` has genus zero.
    WCase,
}

impl ExceptionCase {
    pub fn id(self) -> &'static str {
        match self {
            ExceptionCase::TwoCriticalOneSimple => "two-critical-points-one-simple",
            ExceptionCase::QuinticDoubleDouble => "quintic-two-double-points",
            ExceptionCase::SmoothCubic => "smooth-cubic",
            ExceptionCase::WCase => "quartic-w-orbit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionCertificate {
    pub case: ExceptionCase,
    pub curve: &'static str,
    pub degree: usize,
    /// Multiplicities of the multiple points from the census.
    pub multiplicities: Vec<usize>,
    pub irreducibility: Irreducibility,
    pub genus: Option<i64>,
    pub expected_genus: i64,
}

impl ExceptionCertificate {
    /// Census, Bézout irreducibility (linear components excluded, as any
    /// line on the curve already defeats uniqueness) and the genus formula.
    pub fn build(case: ExceptionCase, cs: &CriticalStructure) -> Self {
        let (curve, kind, tau, expected_genus) = match case {
            ExceptionCase::TwoCriticalOneSimple => ("C", CurveKind::F, None, 0),
            ExceptionCase::QuinticDoubleDouble | ExceptionCase::SmoothCubic => ("C", CurveKind::F, None, 1),
            ExceptionCase::WCase => ("C_w", CurveKind::Fc, Some(vec![Some(1), Some(2), Some(0)]), 0),
        };
        let census = singular_census(cs, kind, tau.as_deref());
        let (degree, multiplicities, irreducibility, genus) = match census {
            Ok(c) => {
                let irr = bezout_irreducibility(c.degree, &c, true);
                let genus = genus_ordinary(c.degree, &c, irr == Irreducibility::Certified).ok();
                (c.degree, c.entries.iter().map(|e| e.multiplicity).collect(), irr, genus)
            }
            Err(_) => (0, Vec::new(), Irreducibility::Unknown, None),
        };
        ExceptionCertificate {
            case,
            curve,
            degree,
            multiplicities,
            irreducibility,
            genus,
            expected_genus,
        }
    }

    pub fn holds(&self) -> bool {
        self.irreducibility == Irreducibility::Certified && self.genus == Some(self.expected_genus)
    }
}

/// Evidence for a negative answer.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `P(b (X - center) + center) = P(X)` for `b` a primitive `order`-th root of unity.
    Scaling { order: usize, center: Rational },
    /// `P(b (X - center) + center) = b^c_exponent P(X)`, `b^c_exponent != 1`.
    ScalingWithC {
        order: usize,
        center: Rational,
        c_exponent: usize,
    },
    /// `P(beta X + gamma) = c P(X)` over the rationals.
    Affine {
        beta: Rational,
        gamma: Rational,
        c: Rational,
    },
    GenusException(ExceptionCertificate),
}

impl Witness {
    /// A rotation about `center`, reduced to `Scaling` when `c = 1`.
    pub fn rotation(order: usize, center: Rational, c_exponent: usize) -> Self {
        if c_exponent.is_multiple_of(order) {
            Witness::Scaling { order, center }
        } else {
            Witness::ScalingWithC {
                order,
                center,
                c_exponent: c_exponent % order,
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Scaling { .. } => "scaling",
            Witness::ScalingWithC { .. } => "scaling-with-c",
            Witness::Affine { .. } => "affine",
            Witness::GenusException(_) => "genus-exception",
        }
    }

    /// `true` when the witness refutes uniqueness (not only strong uniqueness).
    pub fn has_c_one(&self) -> bool {
        match self {
            Witness::Scaling { .. } => true,
            Witness::ScalingWithC { .. } => false,
            Witness::Affine { c, .. } => c.is_one(),
            Witness::GenusException(_) => false,
        }
    }

    pub fn is_exception(&self) -> bool {
        matches!(self, Witness::GenusException(_))
    }

    /// The identity that [`Witness::verify`] replays.
    pub fn identity(&self) -> String {
        match self {
            Witness::Scaling { order, center } => format!(
                "P(b*(X - {c}) + {c}) - P(X) = 0 mod Phi_{order}(b)",
                c = format_rational(center)
            ),
            Witness::ScalingWithC { order, center, c_exponent } => format!(
                "P(b*(X - {c}) + {c}) - b^{c_exponent}*P(X) = 0 mod Phi_{order}(b)",
                c = format_rational(center)
            ),
            Witness::Affine { beta, gamma, c } => format!(
                "P({}*X + {}) - {}*P(X) = 0",
                format_rational(beta),
                format_rational(gamma),
                format_rational(c)
            ),
            Witness::GenusException(e) => format!(
                "{} irreducible of degree {} with multiple points {:?} and genus {}",
                e.curve, e.degree, e.multiplicities, e.expected_genus
            ),
        }
    }

    pub fn verify(&self, p: &RationalPoly) -> bool {
        match self {
            Witness::Scaling { order, center } => verify_rotation_about(p, *order, center, 0),
            Witness::ScalingWithC { order, center, c_exponent } => {
                *c_exponent % *order != 0 && verify_rotation_about(p, *order, center, *c_exponent)
            }
            Witness::Affine { beta, gamma, c } => {
                if beta.is_one() && gamma.is_zero() {
                    return false;
                }
                let inner = Poly::new(vec![gamma.clone(), beta.clone()]);
                (&p.compose(&inner) - &p.scale(c)).is_zero()
            }
            Witness::GenusException(e) => e.holds(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.identity())
    }
}

/// Checks `P(b (X - mu) + mu) = b^e P(X)` modulo `Phi_r(b)`.
pub fn verify_rotation_about(p: &RationalPoly, r: usize, mu: &Rational, e: usize) -> bool {
    if r < 2 {
        return false;
    }
    let modulus = cyclotomic(r);
    let b: RationalPoly = Poly::x();
    let mu_b = Poly::constant(mu.clone());
    let inner = Poly::new(vec![&mu_b - &(&b * &mu_b), b.clone()]);
    let lifted: Poly<RationalPoly> = p.map(|c| Poly::constant(c.clone()));
    let lhs = reduce_coefficients(&lifted.compose(&inner), &modulus);
    let c = b.pow(e as u32).rem(&modulus);
    let rhs = reduce_coefficients(&lifted.scale(&c), &modulus);
    lhs == rhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Only `c = 1`: refutes uniqueness.
    CEqualsOne,
    /// Any `c`: refutes strong uniqueness.
    AnyC,
}

/// The coefficient equations of `P(beta X + gamma) = c P(X)` after
/// eliminating `c = beta^n` and `gamma`, reduced to one polynomial in `beta`
/// by a gcd. The factors `beta` and `beta - 1` are removed.
pub fn constraint_polynomial(p: &RationalPoly, mode: SearchMode) -> RationalPoly {
    let n = p.degree().expect("nonzero");
    let a_n = p.coeff(n);
    let a_n1 = p.coeff(n - 1);
    let beta: RationalPoly = Poly::x();
    let one = RationalPoly::one();
    // gamma = a_(n-1) (beta - 1) / (n a_n)
    let gamma = (&beta - &one).scale(&(a_n1 / (int(n as i64) * a_n)));
    let inner: Poly<RationalPoly> = Poly::new(vec![gamma, beta.clone()]);
    let lifted: Poly<RationalPoly> = p.map(|c| Poly::constant(c.clone()));
    let diff = &lifted.compose(&inner) - &lifted.scale(&beta.pow(n as u32));
    let mut g = Poly::zero();
    for k in 0..n.saturating_sub(1) {
        g = gcd(&g, &diff.coeff(k));
    }
    if mode == SearchMode::CEqualsOne {
        let unit_roots = &beta.pow(n as u32) - &one;
        g = if g.is_zero() { unit_roots } else { gcd(&g, &unit_roots) };
    }
    if g.is_zero() {
        return g;
    }
    for trivial in [beta.clone(), &beta - &one] {
        while g.degree().unwrap_or(0) >= 1 && g.rem(&trivial).is_zero() {
            g = g.exact_divide(&trivial).expect("divisible");
        }
    }
    g
}

/// An independent oracle: a nontrivial affine `X -> beta X + gamma` with
/// `P(beta X + gamma) = c P(X)`, found by exact coefficient comparison.
/// Roots of unity are tried up to order `max_order`.
pub fn witness_search(p: &RationalPoly, mode: SearchMode, max_order: usize) -> Option<Witness> {
    let n = p.degree()?;
    if n < 1 {
        return None;
    }
    let a_n = p.coeff(n);
    let center = -p.coeff(n - 1) / (int(n as i64) * a_n);
    let g = constraint_polynomial(p, mode);
    let affine = |beta: Rational| {
        let gamma = center.clone() * (int(1) - beta.clone());
        let c = num_traits::pow(beta.clone(), n);
        Witness::Affine { beta, gamma, c }
    };
    if g.is_zero() {
        // every beta works: P is a translate of a X^n
        return Some(affine(int(-1)));
    }
    if g.degree() == Some(0) {
        return None;
    }
    if let Some(beta) = g.rational_roots().into_iter().find(|b| !b.is_zero() && !b.is_one()) {
        return Some(affine(beta));
    }
    (3..=max_order)
        .find(|&r| g.rem(&cyclotomic(r)).is_zero())
        .map(|r| Witness::rotation(r, center.clone(), n % r))
}
