//! The coefficient vector of `C4 x C4` and its derived spectra.
//!
//! Group element `(r, s)` with `r, s` in `0..4` carries coefficient
//! `a[r + 4 s]`. The derived vectors are
//!
//! ```text
//! b_i = (a_i + a_{i+8}) + (a_{i+4} + a_{i+12})    0 <= i <= 3
//! c_i = (a_i + a_{i+8}) - (a_{i+4} + a_{i+12})    0 <= i <= 3
//! d_i = a_i - a_{i+8}                             0 <= i <= 7
//! alpha_i = d_i + i * d_{i+4}                     0 <= i <= 3
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{mul, sum};
use crate::gauss::GaussInt;
use crate::{Error, Result};

/// The sixteen integer coefficients `a_0..a_15`, indexed by `r + 4 s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CoeffVec16(pub [i64; 16]);

impl CoeffVec16 {
    pub const fn new(a: [i64; 16]) -> Self {
        CoeffVec16(a)
    }

    pub const fn zero() -> Self {
        CoeffVec16([0; 16])
    }

    /// The coefficient vector of the identity element.
    pub const fn identity() -> Self {
        let mut a = [0; 16];
        a[0] = 1;
        CoeffVec16(a)
    }

    pub const fn constant(m: i64) -> Self {
        CoeffVec16([m; 16])
    }

    /// Index of the group element `(r mod 4, s mod 4)`.
    pub const fn index(r: usize, s: usize) -> usize {
        (r % 4) + 4 * (s % 4)
    }

    pub fn get(&self, r: usize, s: usize) -> i64 {
        self.0[Self::index(r, s)]
    }

    pub fn as_array(&self) -> &[i64; 16] {
        &self.0
    }

    /// Upper bound `(sum a_i^2)^8` on `|det|`, or `None` if it does not fit in
    /// `i128`. Every row of the group matrix is a permutation of `a`, so this
    /// is Hadamard's inequality.
    pub fn hadamard_bound(&self) -> Option<i128> {
        let norm2 = self
            .0
            .iter()
            .try_fold(0i128, |acc, &x| acc.checked_add(i128::from(x).checked_mul(i128::from(x))?))?;
        norm2.checked_pow(8)
    }

    pub fn within_guard(&self) -> bool {
        self.hadamard_bound().is_some()
    }

    /// Componentwise checked sum.
    pub fn checked_add(&self, other: &CoeffVec16) -> Option<CoeffVec16> {
        let mut out = [0i64; 16];
        for (o, (x, y)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = x.checked_add(*y)?;
        }
        Some(CoeffVec16(out))
    }
}

impl From<[i64; 16]> for CoeffVec16 {
    fn from(a: [i64; 16]) -> Self {
        CoeffVec16(a)
    }
}

impl TryFrom<&[i64]> for CoeffVec16 {
    type Error = Error;

    fn try_from(a: &[i64]) -> Result<Self> {
        let arr: [i64; 16] = a.try_into().map_err(|_| {
            Error::PreconditionViolated(format!("expected 16 coefficients, got {}", a.len()))
        })?;
        Ok(CoeffVec16(arr))
    }
}

impl fmt::Display for CoeffVec16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses 16 integers separated by commas and/or whitespace, with optional
/// surrounding parentheses or brackets.
impl FromStr for CoeffVec16 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        let values = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|e| Error::PreconditionViolated(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CoeffVec16::try_from(values.as_slice())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivedSpectra {
    pub b: [i128; 4],
    pub c: [i128; 4],
    pub d: [i128; 8],
    pub alpha: [GaussInt; 4],
}

/// Computes `b`, `c`, `d` and `alpha` from the coefficients.
///
/// Entries are `i64` and every output is a signed sum of at most four of
/// them, so the `i128` results cannot overflow.
pub fn derive(a: &CoeffVec16) -> DerivedSpectra {
    let a: [i128; 16] = a.0.map(i128::from);
    let b = std::array::from_fn(|i| (a[i] + a[i + 8]) + (a[i + 4] + a[i + 12]));
    let c = std::array::from_fn(|i| (a[i] + a[i + 8]) - (a[i + 4] + a[i + 12]));
    let d: [i128; 8] = std::array::from_fn(|i| a[i] - a[i + 8]);
    let alpha = std::array::from_fn(|i| GaussInt::new(d[i], d[i + 4]));
    DerivedSpectra { b, c, d, alpha }
}

impl DerivedSpectra {
    /// `b0 b2 + b1 b3 + c0 c2 + c1 c3`, the cross term that recurs in the
    /// mod-16 congruences.
    pub fn cross_term(&self) -> Result<i128> {
        let (b, c) = (&self.b, &self.c);
        sum(&[mul(b[0], b[2])?, mul(b[1], b[3])?, mul(c[0], c[2])?, mul(c[1], c[3])?])
    }
}
