//! Checked `i128` helpers. Every formula in the crate goes through these so
//! that overflow is reported, never wrapped.

use crate::{Error, Result};

#[inline]
pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn sq(a: i128) -> Result<i128> {
    mul(a, a)
}

/// Sum of two squares.
#[inline]
pub(crate) fn sos(a: i128, b: i128) -> Result<i128> {
    add(sq(a)?, sq(b)?)
}

/// Difference of two squares.
#[inline]
pub(crate) fn dos(a: i128, b: i128) -> Result<i128> {
    sub(sq(a)?, sq(b)?)
}

/// Checked sum of a slice of terms.
pub(crate) fn sum(terms: &[i128]) -> Result<i128> {
    terms.iter().try_fold(0i128, |acc, &t| add(acc, t))
}

/// Checked product of a slice of factors.
pub(crate) fn product(factors: &[i128]) -> Result<i128> {
    factors.iter().try_fold(1i128, |acc, &f| mul(acc, f))
}

/// 2-adic valuation; `None` for zero.
pub(crate) fn v2(n: i128) -> Option<u32> {
    (n != 0).then(|| n.trailing_zeros())
}
