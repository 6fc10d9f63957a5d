use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Poly;
use crate::scalar::{Domain, Field, Rational};

/// Monic greatest common divisor over a field. `gcd(0, 0)` is zero.
pub fn gcd<T: Field>(p: &Poly<T>, q: &Poly<T>) -> Poly<T> {
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// One entry of a squarefree decomposition: `factor` appears with exactly
/// `multiplicity` in the input.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeFactor<T> {
    pub factor: Poly<T>,
    pub multiplicity: usize,
}

/// Yun's squarefree decomposition over a field of characteristic zero.
///
/// Returns monic, pairwise coprime, squarefree factors with strictly
/// increasing multiplicities; constant factors are omitted. The input equals
/// `lc * prod factor^multiplicity`.
pub fn squarefree_decomposition<T: Field>(p: &Poly<T>) -> Vec<SquarefreeFactor<T>> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return out;
    }
    let dp = p.derivative();
    let a0 = gcd(p, &dp);
    let mut b = p.exact_divide(&a0).expect("gcd divides").monic();
    let c = dp.exact_divide(&a0).expect("gcd divides");
    let c = c.scale(&p.leading().unwrap().inv());
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push(SquarefreeFactor {
                factor: a.clone(),
                multiplicity: k,
            });
        }
        let c_next = d.exact_divide(&a).expect("gcd divides");
        b = b.exact_divide(&a).expect("gcd divides");
        d = &c_next - &b.derivative();
        k += 1;
    }
    out
}

/// Resultant `Res_X(p, q)` over an integral domain, by the subresultant
/// pseudo-remainder sequence.
///
/// Equals `lc(p)^deg(q) * prod q(a)` over the roots `a` of `p`. The
/// resultant of two non-zero constants is one.
pub fn resultant<T: Domain>(p: &Poly<T>, q: &Poly<T>) -> T {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return T::zero();
    };
    let (mut a, mut b, mut sign_negative) = if dp >= dq {
        (p.clone(), q.clone(), false)
    } else {
        (q.clone(), p.clone(), dp % 2 == 1 && dq % 2 == 1)
    };
    if b.degree() == Some(0) {
        let base = b.leading().unwrap().clone();
        let r = base.pow_u32(a.degree().unwrap() as u32);
        return if sign_negative { -r } else { r };
    }
    let mut g = T::one();
    let mut h = T::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.pseudo_remainder(&b);
        if r.is_zero() {
            return T::zero();
        }
        let divisor = g.clone() * h.pow_u32(delta);
        a = b;
        b = r
            .exact_scalar_divide(&divisor)
            .expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow_u32(delta)
                .exact_quotient(&h.pow_u32(delta - 1))
                .expect("subresultant division is exact")
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let lb = b.leading().unwrap().clone();
            let res = if da == 0 {
                T::one()
            } else {
                lb.pow_u32(da)
                    .exact_quotient(&h.pow_u32(da - 1))
                    .expect("subresultant division is exact")
            };
            return if sign_negative { -res } else { res };
        }
    }
}

/// Integer polynomial proportional to `p` (clears denominators).
pub(crate) fn integer_scaled(p: &Poly<Rational>) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn positive_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
        if i > 1_000_000 {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

pub(crate) fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    // strip the root at zero
    let low = p.support()[0];
    if low > 0 {
        roots.push(Rational::zero());
    }
    let reduced = Poly::new(p.coeffs()[low..].to_vec());
    if reduced.degree().unwrap_or(0) > 0 {
        let ints = integer_scaled(&reduced);
        let candidates = match (
            positive_divisors(&ints[0]),
            positive_divisors(ints.last().unwrap()),
        ) {
            (Some(nums), Some(dens)) => {
                let mut c = Vec::new();
                for &a in &nums {
                    for &b in &dens {
                        let r = Rational::new(BigInt::from(a), BigInt::from(b));
                        c.push(r.clone());
                        c.push(-r);
                    }
                }
                c
            }
            _ => vec![Rational::one(), -Rational::one()],
        };
        for c in candidates {
            if !roots.contains(&c) && reduced.eval(&c).is_zero() {
                roots.push(c);
            }
        }
    }
    roots.sort();
    roots
}
