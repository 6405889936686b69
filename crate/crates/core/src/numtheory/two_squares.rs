use serde::{Deserialize, Serialize};

use super::primes::pow_mod;
use super::is_in_p;
use crate::{Error, Result};

/// `x^2 + y^2 = target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoSquaresRep {
    pub x: i128,
    pub y: i128,
    pub target: i128,
}

impl TwoSquaresRep {
    pub fn holds(&self) -> bool {
        self.x
            .checked_mul(self.x)
            .zip(self.y.checked_mul(self.y))
            .and_then(|(a, b)| a.checked_add(b))
            == Some(self.target)
    }
}

/// Reference search: the first `(x, y)` with `x, y >= 0`, `x^2 + y^2 = target`,
/// scanning `y = 0, 1, ..., floor(sqrt(target))`.
pub fn two_squares_brute(target: i128) -> Option<(i128, i128)> {
    if target < 0 {
        return None;
    }
    (0..=target.isqrt()).find_map(|y| {
        let rest = target - y * y;
        let x = rest.isqrt();
        (x * x == rest).then_some((x, y))
    })
}

/// Nonnegative `(u, v)` with `u^2 + v^2 = p` for a prime `p = 5 (mod 8)`,
/// by the Euclidean (Hermite-Serret / Cornacchia) reduction.
///
/// `2` is a quadratic non-residue modulo such `p`, so `2^((p-1)/4)` is a
/// square root of `-1`.
fn cornacchia_5mod8(p: u64) -> Option<(u64, u64)> {
    let z = pow_mod(2, (p - 1) / 4, p);
    if (u128::from(z) * u128::from(z)) % u128::from(p) != u128::from(p - 1) {
        return None;
    }
    let (mut a, mut b) = (p, z);
    while u128::from(b) * u128::from(b) > u128::from(p) {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    let v = rest.isqrt();
    (v * v == rest).then_some((b, v))
}

/// Some nonnegative `(u, v)` with `u^2 + v^2 = p`, for `p` in `P`.
pub fn sum_of_two_squares(p: i128) -> Result<(i128, i128)> {
    require_p(p)?;
    let (u, v) = cornacchia_5mod8(p as u64)
        .ok_or_else(|| Error::InternalMismatch(format!("no two-squares representation found for {p}")))?;
    Ok((i128::from(u), i128::from(v)))
}

fn require_p(p: i128) -> Result<()> {
    if is_in_p(p) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!("{p} is not a prime congruent to 5 mod 8")))
    }
}

/// Flips the sign of `v` if needed so that `v = residue (mod 8)`.
fn with_residue(v: i128, residue: i128) -> Option<i128> {
    if v.rem_euclid(8) == residue {
        Some(v)
    } else if (-v).rem_euclid(8) == residue {
        Some(-v)
    } else {
        None
    }
}

/// `p = x^2 + y^2` with `y = 2 (mod 8)`, and `x = 1 (mod 8)` when
/// `p = 5 (mod 16)`, `x = 3 (mod 8)` when `p = 13 (mod 16)`.
///
/// The representation of a prime as a sum of two squares is unique up to
/// order and signs, so the result is unique.
pub fn two_squares_prime_5mod8(p: i128) -> Result<TwoSquaresRep> {
    let (u, v) = sum_of_two_squares(p)?;
    let (odd, even) = if u % 2 == 1 { (u, v) } else { (v, u) };
    let x_residue = if p.rem_euclid(16) == 5 { 1 } else { 3 };
    let y = with_residue(even, 2);
    let x = with_residue(odd, x_residue);
    match (x, y) {
        (Some(x), Some(y)) => Ok(TwoSquaresRep { x, y, target: p }),
        _ => Err(Error::InternalMismatch(format!("residue normalization failed for {p} = {u}^2 + {v}^2"))),
    }
}

/// `2p = x^2 + y^2` with `x = 3 (mod 8)` and `y = 1 (mod 8)`, for `p` in `P`.
pub fn two_squares_2p(p: i128) -> Result<TwoSquaresRep> {
    let (u, v) = sum_of_two_squares(p)?;
    // (u + v)^2 + (u - v)^2 = 2 (u^2 + v^2); both terms are odd.
    let (s, t) = (u + v, u - v);
    let (three, one) = if matches!(s.rem_euclid(8), 3 | 5) { (s, t) } else { (t, s) };
    let y = with_residue(one, 1);
    let x = with_residue(three, 3);
    match (x, y) {
        (Some(x), Some(y)) => Ok(TwoSquaresRep { x, y, target: 2 * p }),
        _ => Err(Error::InternalMismatch(format!("residue normalization failed for 2*{p}"))),
    }
}
