//! Arithmetic criteria computed directly on `P`: index sets and their gcds,
//! normalization, the critical structure of `P'`, affine symmetries of the
//! zero set, linear factors `X - bY` of the curves, and the exceptional-case
//! predicates.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::poly::cyclotomic::{cyclotomic, reduce_coefficients};
use crate::poly::{resultant, squarefree_decomposition, Poly, RationalPoly, SquarefreeFactor};
use crate::scalar::{int, Rational};

/// Exponent sets of `P` and their gcds.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexData {
    /// Exponents with a non-zero coefficient, ascending.
    pub i_set: Vec<usize>,
    pub l_min: usize,
    /// `{i - l_min : i in I}`, ascending; always contains 0.
    pub j_set: Vec<usize>,
    pub gcd_i: usize,
    pub gcd_j: usize,
    /// Present exactly when `gcd_i == 1`; `sum index * coefficient == 1`.
    pub bezout_i: Option<BTreeMap<usize, i64>>,
    pub bezout_j: Option<BTreeMap<usize, i64>>,
}

/// Extended Euclid over a list. Zero entries are skipped, so the gcd of an
/// all-zero list is zero.
fn gcd_with_bezout(values: &[usize]) -> (usize, BTreeMap<usize, i64>) {
    let mut g: i64 = 0;
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    for &v in values.iter().filter(|&&v| v != 0) {
        let (d, s, t) = ext_gcd(g, v as i64);
        for c in coeffs.values_mut() {
            *c *= s;
        }
        *coeffs.entry(v).or_insert(0) += t;
        g = d;
    }
    coeffs.retain(|_, c| *c != 0);
    (g as usize, coeffs)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn index_data(p: &RationalPoly) -> IndexData {
    assert!(p.degree().unwrap_or(0) >= 1, "index_data needs deg P >= 1");
    let i_set = p.support();
    let l_min = i_set[0];
    let j_set: Vec<usize> = i_set.iter().map(|i| i - l_min).collect();
    let (gcd_i, bi) = gcd_with_bezout(&i_set);
    let (gcd_j, bj) = gcd_with_bezout(&j_set);
    IndexData {
        bezout_i: (gcd_i == 1).then_some(bi),
        bezout_j: (gcd_j == 1).then_some(bj),
        i_set,
        l_min,
        j_set,
        gcd_i,
        gcd_j,
    }
}

/// Verifies a Bézout certificate.
pub fn bezout_holds(witness: &BTreeMap<usize, i64>) -> bool {
    witness.iter().map(|(&i, &c)| i as i64 * c).sum::<i64>() == 1
}

/// `P` made monic and recentred so that the `X^(n-1)` coefficient vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalized {
    pub p0: RationalPoly,
    /// `p0(X) = P(X + shift) / a_n`.
    pub shift: Rational,
    pub condition_a: bool,
    pub condition_b: bool,
}

pub fn normalize(p: &RationalPoly) -> Normalized {
    let n = p.degree().expect("normalize of the zero polynomial");
    let monic = p.monic();
    let shift = if n == 0 {
        Rational::zero()
    } else {
        -monic.coeff(n - 1) / int(n as i64)
    };
    let p0 = monic.taylor_shift(&shift);
    let vanishes = |k: Option<usize>| k.is_none_or(|k| p0.coeff(k).is_zero());
    let condition_a = vanishes(n.checked_sub(2));
    let condition_b = condition_a && vanishes(n.checked_sub(3));
    Normalized {
        p0,
        shift,
        condition_a,
        condition_b,
    }
}

/// `n - m` where `m` is the largest exponent of `P` below `n`; `None` for a
/// monomial.
pub fn shape_gap(p: &RationalPoly) -> Option<usize> {
    let support = p.support();
    let n = *support.last()?;
    support.iter().rev().nth(1).map(|m| n - m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalStructure {
    pub n: usize,
    /// `m_1 >= ... >= m_l`.
    pub multiplicities: Vec<usize>,
    pub l: usize,
    /// `Res_X(rad P', T - P(X))`: monic, with one root `P(a)` per distinct
    /// critical point `a`.
    pub q: RationalPoly,
    pub separated: bool,
    pub gap: Option<usize>,
    /// Squarefree decomposition of `P'`.
    pub derivative_factors: Vec<SquarefreeFactor<Rational>>,
}

impl CriticalStructure {
    pub fn multiplicity_sum(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// The critical-value polynomial `Res_X(r(X), T - P(X))` for monic `r`.
pub fn critical_value_polynomial(p: &RationalPoly, r: &RationalPoly) -> RationalPoly {
    let lift = |c: &Rational| Poly::constant(c.clone());
    let r_t: Poly<RationalPoly> = r.map(lift);
    let t_minus_p: Poly<RationalPoly> = &Poly::constant(Poly::x()) - &p.map(lift);
    resultant(&r_t, &t_minus_p)
}

pub fn critical_structure(p: &RationalPoly) -> CriticalStructure {
    let n = p.degree().expect("critical_structure of the zero polynomial");
    assert!(n >= 2, "critical_structure needs deg P >= 2");
    let dp = p.derivative();
    let derivative_factors = squarefree_decomposition(&dp);
    let mut multiplicities = Vec::new();
    for f in &derivative_factors {
        let deg = f.factor.degree().unwrap();
        multiplicities.extend(std::iter::repeat_n(f.multiplicity, deg));
    }
    multiplicities.sort_unstable_by(|a, b| b.cmp(a));
    let q = critical_value_polynomial(p, &dp.radical());
    let separated = crate::poly::gcd(&q, &q.derivative()).degree() == Some(0);
    CriticalStructure {
        n,
        l: multiplicities.len(),
        multiplicities,
        q,
        separated,
        gap: shape_gap(p),
        derivative_factors,
    }
}

/// An affine map `x -> zeta (x - mu) + mu` with `zeta` a primitive root of
/// unity of order `rotation_order`, preserving the zero set of `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSymmetry {
    pub rotation_order: usize,
    pub centroid: Rational,
}

impl AffineSymmetry {
    pub fn description(&self) -> String {
        format!(
            "x -> z*(x - {c}) + {c}, z a primitive {g}-th root of unity",
            c = self.centroid,
            g = self.rotation_order
        )
    }

    /// Checks `rad(z(X - mu) + mu) = z^k rad(X)` modulo `Phi_g(z)`.
    pub fn verify(&self, rad: &RationalPoly) -> bool {
        let k = rad.degree().unwrap_or(0);
        let modulus = cyclotomic(self.rotation_order);
        let z: RationalPoly = Poly::x();
        let mu = Poly::constant(self.centroid.clone());
        let inner = Poly::new(vec![&mu - &(&z * &mu), z.clone()]);
        let lifted: Poly<RationalPoly> = rad.map(|c| Poly::constant(c.clone()));
        let lhs = reduce_coefficients(&lifted.compose(&inner), &modulus);
        let zk = z.pow(k as u32).rem(&modulus);
        let rhs = reduce_coefficients(&lifted.scale(&zk), &modulus);
        lhs == rhs
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Rigidity {
    Rigid,
    Symmetric(AffineSymmetry),
    /// At most one distinct root; every map fixing that point preserves it.
    Degenerate,
}

impl Rigidity {
    pub fn is_rigid(&self) -> bool {
        matches!(self, Rigidity::Rigid)
    }
}

pub fn affine_symmetry(p: &RationalPoly) -> Rigidity {
    assert!(p.degree().unwrap_or(0) >= 1, "affine_symmetry needs deg P >= 1");
    let rad = p.radical();
    let k = rad.degree().unwrap();
    if k <= 1 {
        return Rigidity::Degenerate;
    }
    let centroid = -rad.coeff(k - 1) / int(k as i64);
    let r = rad.taylor_shift(&centroid);
    let g = r
        .support()
        .iter()
        .fold(0usize, |acc, &i| num_integer::gcd(acc, k - i));
    if g >= 2 {
        Rigidity::Symmetric(AffineSymmetry {
            rotation_order: g,
            centroid,
        })
    } else {
        Rigidity::Rigid
    }
}

/// Like [`affine_symmetry`] but the rotation must also respect the
/// multiplicities of the zeros: `P(z(X - mu) + mu) = z^n P(X)`. Exactly
/// these symmetries give linear factors of `F` or `F_c`.
pub fn divisor_symmetry(p: &RationalPoly) -> Rigidity {
    let centroid = match affine_symmetry(p) {
        Rigidity::Degenerate => return Rigidity::Degenerate,
        Rigidity::Rigid => return Rigidity::Rigid,
        Rigidity::Symmetric(s) => s.centroid,
    };
    let n = p.degree().expect("nonzero");
    let g = p
        .taylor_shift(&centroid)
        .support()
        .iter()
        .fold(0usize, |acc, &i| num_integer::gcd(acc, n - i));
    if g >= 2 {
        Rigidity::Symmetric(AffineSymmetry {
            rotation_order: g,
            centroid,
        })
    } else {
        Rigidity::Rigid
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    /// `F = (P(X) - P(Y)) / (X - Y)`, homogenized.
    F,
    /// `F_c = P(X) - c P(Y)`, homogenized.
    Fc,
}

/// `X - bY` divides the curve for every primitive `order`-th root of unity
/// `b`; for `F_c` the constant is `c = b^c_exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactor {
    pub order: usize,
    pub c_exponent: usize,
    /// `c` when it is rational (necessarily `1` or `-1`).
    pub c_rational: Option<Rational>,
    /// The identity `P(bX) = c P(X)` checked modulo `Phi_order(b)`.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearFactorScan {
    /// `P` lacks the shape `n - m >= 3` after normalization.
    Inapplicable,
    NoFactor,
    Factors(Vec<LinearFactor>),
}

/// Checks `P(bX) = b^c_exponent P(X)` modulo `Phi_r(b)`.
pub fn verify_rotation_identity(p: &RationalPoly, r: usize, c_exponent: usize) -> bool {
    let modulus = cyclotomic(r);
    let b: RationalPoly = Poly::x();
    let lifted: Poly<RationalPoly> = p.map(|c| Poly::constant(c.clone()));
    let lhs = reduce_coefficients(&lifted.compose(&Poly::monomial(b.clone(), 1)), &modulus);
    let c = b.pow(c_exponent as u32).rem(&modulus);
    let rhs = reduce_coefficients(&lifted.scale(&c), &modulus);
    lhs == rhs
}

/// Linear factors `X - bY` of `F` or `F_c` for the normalized polynomial.
pub fn linear_factor_scan(p: &RationalPoly, kind: CurveKind) -> LinearFactorScan {
    let p0 = normalize(p).p0;
    if shape_gap(&p0).is_none_or(|g| g < 3) {
        return LinearFactorScan::Inapplicable;
    }
    let idx = index_data(&p0);
    let (r, c_exponent) = match kind {
        CurveKind::F => (idx.gcd_i, 0),
        CurveKind::Fc => (idx.gcd_j, idx.l_min),
    };
    if r <= 1 {
        return LinearFactorScan::NoFactor;
    }
    let factors = (2..=r)
        .filter(|d| r % d == 0)
        .map(|d| {
            let c = Poly::<Rational>::x()
                .pow(c_exponent as u32)
                .rem(&cyclotomic(d));
            let c_rational = (c.degree().unwrap_or(0) == 0).then(|| c.coeff(0));
            LinearFactor {
                order: d,
                c_exponent,
                c_rational,
                verified: verify_rotation_identity(&p0, d, c_exponent),
            }
        })
        .collect();
    LinearFactorScan::Factors(factors)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExceptionalFlags {
    pub quartic_w_case: bool,
    pub quintic_case: bool,
    pub quartic_structural: bool,
}

pub fn exceptional_flags(cs: &CriticalStructure) -> ExceptionalFlags {
    let quartic_structural = cs.n == 4 && cs.l == 3 && cs.multiplicities == [1, 1, 1];
    // Q = T^3 - e1 T^2 + e2 T - e3; an w-orbit v, wv, w^2 v has e1 = e2 = 0.
    let quartic_w_case = quartic_structural
        && cs.q.degree() == Some(3)
        && cs.q.coeff(2).is_zero()
        && cs.q.coeff(1).is_zero()
        && !cs.q.coeff(0).is_zero();
    ExceptionalFlags {
        quartic_w_case,
        quintic_case: cs.n == 5 && cs.l == 2 && cs.multiplicities == [2, 2],
        quartic_structural,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn divisor_symmetry_respects_multiplicities() {
        // X^2 (X - 2)(X^2 - 2X + 2): the zero set is a square, the divisor is not symmetric
        let p = Poly::from_i64s(&[0, 0, -4, 6, -4, 1]);
        assert!(matches!(affine_symmetry(&p), Rigidity::Symmetric(_)));
        assert_eq!(divisor_symmetry(&p), Rigidity::Rigid);
        // X^3 (X^2 + 1): rotation by -1 about 0 with c = -1
        let p = Poly::from_i64s(&[0, 0, 0, 1, 0, 1]);
        assert!(matches!(divisor_symmetry(&p), Rigidity::Symmetric(AffineSymmetry { rotation_order: 2, .. })));
    }

    fn q(c: &[i64]) -> RationalPoly {
        Poly::from_i64s(c)
    }

    fn from_terms(terms: &[(usize, i64)]) -> RationalPoly {
        Poly::from_terms(terms.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn index_data_examples() {
        let d = index_data(&from_terms(&[(7, 1), (3, 1), (1, 1)]));
        assert_eq!(d.i_set, vec![1, 3, 7]);
        assert_eq!(d.l_min, 1);
        assert_eq!(d.j_set, vec![0, 2, 6]);
        assert_eq!((d.gcd_i, d.gcd_j), (1, 2));
        assert!(bezout_holds(d.bezout_i.as_ref().unwrap()));
        assert!(d.bezout_j.is_none());

        let d = index_data(&from_terms(&[(5, 1), (3, 1), (0, 1)]));
        assert_eq!(d.i_set, vec![0, 3, 5]);
        assert_eq!(d.j_set, d.i_set);
        assert_eq!((d.gcd_i, d.gcd_j), (1, 1));
        assert!(bezout_holds(d.bezout_j.as_ref().unwrap()));

        let d = index_data(&from_terms(&[(6, 1), (3, 1)]));
        assert_eq!(d.gcd_i, 3);
    }

    #[test]
    fn monomial_has_zero_gcd_j() {
        let d = index_data(&from_terms(&[(4, 1)]));
        assert_eq!((d.gcd_i, d.gcd_j), (4, 0));
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&q(&[1, 5, 10, 10, 5, 1]));
        assert_eq!(n.p0, from_terms(&[(5, 1)]));
        assert!(n.condition_a && n.condition_b);

        // X^4 + 4X^3 + 6X^2 + 1 recentred at -1: (X-1)^4 + 4(X-1)^3 + 6(X-1)^2 + 1
        let n = normalize(&q(&[1, 0, 6, 4, 1]));
        assert_eq!(n.shift, int(-1));
        assert!(n.condition_a);
        assert_eq!(n.p0.coeff(2), int(0));
        // independent expansion: (Y-1)^4 + 4(Y-1)^3 + 6(Y-1)^2 + 1 = Y^4 - 4Y + 4
        assert_eq!(n.p0, q(&[4, -4, 0, 0, 1]));
        assert!(!n.condition_b);

        let n = normalize(&q(&[0, 0, 1, 1]));
        assert!(!n.condition_a);
        // condition (A) on the monic input: a_{n-2} = (n-1)/(2n) a_{n-1}^2
        let formula = rat(2, 6) * int(1) * int(1);
        assert_ne!(formula, int(0));
    }

    #[test]
    fn critical_structure_examples() {
        let cs = critical_structure(&q(&[0, -3, 0, 1]));
        assert_eq!(cs.q, q(&[-4, 0, 1]));
        assert!(cs.separated);
        assert_eq!(cs.multiplicities, vec![1, 1]);

        let cs = critical_structure(&q(&[0, 0, -2, 0, 1]));
        // values 0, -1, -1: Q = T (T + 1)^2
        assert_eq!(cs.q, q(&[0, 1, 2, 1]));
        assert!(!cs.separated);

        let cs = critical_structure(&q(&[0, -4, 0, 0, 1]));
        assert_eq!(cs.q, q(&[27, 0, 0, 1]));
        assert!(cs.separated);
        assert_eq!(cs.l, 3);
    }

    #[test]
    fn multiplicities_from_repeated_critical_points() {
        // P' = 5 X^2 (X - 1)^2 up to scale: P = X^5 - (5/2) X^4 + (5/3) X^3
        let p = Poly::from_terms([(5, int(1)), (4, rat(-5, 2)), (3, rat(5, 3))]);
        let cs = critical_structure(&p);
        assert_eq!(cs.multiplicities, vec![2, 2]);
        assert_eq!(cs.multiplicity_sum(), 4);
        assert!(exceptional_flags(&cs).quintic_case);
    }

    #[test]
    fn affine_symmetry_examples() {
        let p = q(&[1, 0, 1, 0, 1]);
        let Rigidity::Symmetric(s) = affine_symmetry(&p) else {
            panic!("expected a symmetry");
        };
        assert_eq!(s.rotation_order, 2);
        assert!(s.verify(&p.radical()));

        let p = q(&[-1, 0, 0, 1]);
        let Rigidity::Symmetric(s) = affine_symmetry(&p) else {
            panic!("expected a symmetry");
        };
        assert_eq!((s.rotation_order, s.centroid.clone()), (3, int(0)));
        assert!(s.verify(&p.radical()));

        assert_eq!(affine_symmetry(&q(&[1, 1, 0, 0, 1])), Rigidity::Rigid);
        assert_eq!(affine_symmetry(&q(&[1, 2, 1])), Rigidity::Degenerate);
    }

    #[test]
    fn off_centre_symmetry_is_found() {
        // roots 1 +- 1, i.e. X^2 - 2X
        let Rigidity::Symmetric(s) = affine_symmetry(&q(&[0, -2, 1])) else {
            panic!("expected a symmetry");
        };
        assert_eq!(s.centroid, int(1));
        assert!(s.verify(&q(&[0, -2, 1])));
        let wrong = AffineSymmetry { rotation_order: 3, centroid: int(1) };
        assert!(!wrong.verify(&q(&[0, -2, 1])));
    }

    #[test]
    fn linear_factor_scan_examples() {
        let p = from_terms(&[(7, 1), (3, 1), (1, 1)]);
        let LinearFactorScan::Factors(f) = linear_factor_scan(&p, CurveKind::Fc) else {
            panic!("expected factors");
        };
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].order, 2);
        assert_eq!(f[0].c_rational, Some(int(-1)));
        assert!(f[0].verified);
        // P(-X) = -P(X) by direct substitution
        assert_eq!(p.scale_variable(&int(-1)), -p.clone());

        let p = from_terms(&[(6, 1), (3, 1)]);
        let LinearFactorScan::Factors(f) = linear_factor_scan(&p, CurveKind::F) else {
            panic!("expected factors");
        };
        assert_eq!(f[0].order, 3);
        assert!(f[0].verified);

        // gcds are one, but the gap n - m = 2 leaves the scan inapplicable
        let p = from_terms(&[(5, 1), (3, 1), (0, 1)]);
        assert_eq!(linear_factor_scan(&p, CurveKind::F), LinearFactorScan::Inapplicable);
        let p = from_terms(&[(6, 1), (2, 1), (1, 1)]);
        assert_eq!(linear_factor_scan(&p, CurveKind::F), LinearFactorScan::NoFactor);
        assert_eq!(linear_factor_scan(&p, CurveKind::Fc), LinearFactorScan::NoFactor);

        assert_eq!(
            linear_factor_scan(&q(&[0, 1, 1, 0, 1]), CurveKind::F),
            LinearFactorScan::Inapplicable
        );
    }

    #[test]
    fn rotation_identity_rejects_wrong_order() {
        let p = from_terms(&[(6, 1), (3, 1)]);
        assert!(verify_rotation_identity(&p, 3, 0));
        assert!(!verify_rotation_identity(&p, 2, 0));
    }

    #[test]
    fn exceptional_flag_examples() {
        let cs = critical_structure(&q(&[0, -4, 0, 0, 1]));
        let f = exceptional_flags(&cs);
        assert!(f.quartic_w_case && f.quartic_structural && !f.quintic_case);

        let cs = critical_structure(&q(&[1, -4, 0, 0, 1]));
        assert!(!exceptional_flags(&cs).quartic_w_case);
        assert!(exceptional_flags(&cs).quartic_structural);

        let cs = critical_structure(&q(&[1, 1, 0, 0, 0, 0, 1]));
        assert_eq!(exceptional_flags(&cs), ExceptionalFlags::default());
    }
}
