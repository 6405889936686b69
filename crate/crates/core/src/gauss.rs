//! Exact Gaussian integers `re + i*im`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{add, mul, sos, sub};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussInt {
    pub re: i128,
    pub im: i128,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i128, im: i128) -> Self {
        GaussInt { re, im }
    }

    pub const fn real(re: i128) -> Self {
        GaussInt { re, im: 0 }
    }

    pub const fn conj(self) -> Self {
        GaussInt { re: self.re, im: -self.im }
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(GaussInt { re: sub(0, self.re)?, im: sub(0, self.im)? })
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        Ok(GaussInt { re: add(self.re, other.re)?, im: add(self.im, other.im)? })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        Ok(GaussInt { re: sub(self.re, other.re)?, im: sub(self.im, other.im)? })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        let re = sub(mul(self.re, other.re)?, mul(self.im, other.im)?)?;
        let im = add(mul(self.re, other.im)?, mul(self.im, other.re)?)?;
        Ok(GaussInt { re, im })
    }

    pub fn checked_square(self) -> Result<Self> {
        self.checked_mul(self)
    }

    /// Multiplication by `i^k`; never overflows except on `i128::MIN` parts.
    pub fn mul_i_pow(self, k: u32) -> Result<Self> {
        match k % 4 {
            0 => Ok(self),
            1 => Ok(GaussInt { re: sub(0, self.im)?, im: self.re }),
            2 => self.checked_neg(),
            _ => Ok(GaussInt { re: self.im, im: sub(0, self.re)? }),
        }
    }

    /// `re^2 + im^2`.
    pub fn norm(self) -> Result<i128> {
        sos(self.re, self.im)
    }

    pub const fn is_real(self) -> bool {
        self.im == 0
    }
}

impl From<i128> for GaussInt {
    fn from(re: i128) -> Self {
        GaussInt::real(re)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", im.unsigned_abs()),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GaussInt::I.checked_square().unwrap(), GaussInt::real(-1));
    }

    #[test]
    fn one_plus_i_to_the_fourth() {
        let z = GaussInt::new(1, 1);
        let z4 = z.checked_square().unwrap().checked_square().unwrap();
        assert_eq!(z4, GaussInt::real(-4));
    }

    #[test]
    fn overflow_is_reported() {
        let big = GaussInt::new(i128::MAX / 2, i128::MAX / 2);
        assert!(big.checked_mul(big).is_err());
        assert!(GaussInt::new(i128::MAX, 0).checked_add(GaussInt::ONE).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(GaussInt::new(3, -2).to_string(), "3-2i");
        assert_eq!(GaussInt::new(0, 5).to_string(), "5i");
        assert_eq!(GaussInt::new(-7, 0).to_string(), "-7");
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -10_000i128..10_000, b in -10_000i128..10_000,
                                  c in -10_000i128..10_000, d in -10_000i128..10_000) {
            let z = GaussInt::new(a, b);
            let w = GaussInt::new(c, d);
            let zw = z.checked_mul(w).unwrap();
            prop_assert_eq!(zw.norm().unwrap(), z.norm().unwrap() * w.norm().unwrap());
            prop_assert_eq!(z.checked_mul(z.conj()).unwrap(), GaussInt::real(z.norm().unwrap()));
        }

        #[test]
        fn mul_i_pow_matches_repeated_mul(a in -1000i128..1000, b in -1000i128..1000, k in 0u32..8) {
            let z = GaussInt::new(a, b);
            let mut expect = z;
            for _ in 0..k {
                expect = expect.checked_mul(GaussInt::I).unwrap();
            }
            prop_assert_eq!(z.mul_i_pow(k).unwrap(), expect);
        }
    }
}
