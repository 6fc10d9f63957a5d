use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// The four answers for `P = (X - alpha)^n + a (X - alpha)^m + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CorollaryRow {
    pub up_rational: bool,
    pub sup_rational: bool,
    pub up_meromorphic: bool,
    pub sup_meromorphic: bool,
}

impl CorollaryRow {
    pub fn as_array(&self) -> [bool; 4] {
        [self.up_rational, self.sup_rational, self.up_meromorphic, self.sup_meromorphic]
    }
}

/// Closed-form answers for the trinomial family. `alpha` does not enter:
/// the properties are translation invariant.
pub fn corollary_classify(_alpha: &Rational, n: usize, m: usize, a: &Rational, b: &Rational) -> Result<CorollaryRow> {
    if m == 0 || m >= n {
        return Err(Error::InvalidInput(format!("need 1 <= m <= n - 1, got n = {n}, m = {m}")));
    }
    let shape = n - m >= 2 && num_integer::gcd(n, m) == 1 && !a.is_zero();
    let b_nonzero = !b.is_zero();
    Ok(CorollaryRow {
        up_rational: n >= 4 && shape,
        sup_rational: n >= 4 && shape && b_nonzero,
        up_meromorphic: n >= 5 && shape,
        sup_meromorphic: n >= 5 && shape && b_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn row(n: usize, m: usize, a: i64, b: i64) -> [bool; 4] {
        corollary_classify(&int(0), n, m, &int(a), &int(b)).unwrap().as_array()
    }

    #[test]
    fn pinned_rows() {
        assert_eq!(row(4, 1, 1, 1), [true, true, false, false]);
        assert_eq!(row(5, 2, 1, 1), [true; 4]);
        assert_eq!(row(6, 4, 1, 1), [false; 4]);
        assert_eq!(row(5, 2, 1, 0), [true, false, true, false]);
        assert!(corollary_classify(&int(0), 4, 4, &int(1), &int(1)).is_err());
    }
}
