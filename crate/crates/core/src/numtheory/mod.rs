//! Factorization, primality, the prime set `P = {p prime : p = 5 mod 8}`,
//! signed divisors, and the constrained two-squares representations used by
//! the witness constructions.

mod primes;
mod two_squares;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use primes::{is_prime, pollard_rho, pow_mod};
pub use two_squares::{
    sum_of_two_squares, two_squares_2p, two_squares_brute, two_squares_prime_5mod8, TwoSquaresRep,
};

use crate::{Error, Result};

/// Largest `|n|` accepted by [`factorize`] and the classifier.
pub const ENVELOPE: i128 = 1_000_000_000_000;

pub(crate) fn check_envelope(n: i128) -> Result<()> {
    if n.unsigned_abs() > ENVELOPE as u128 {
        Err(Error::EnvelopeExceeded(n))
    } else {
        Ok(())
    }
}

/// `sign * prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn zero() -> Self {
        Factorization { sign: 0, factors: Vec::new() }
    }

    pub fn one() -> Self {
        Factorization { sign: 1, factors: Vec::new() }
    }

    /// The reconstructed integer, or `None` if it does not fit in `i128`.
    pub fn value(&self) -> Option<i128> {
        let mut acc = i128::from(self.sign);
        for &(p, e) in &self.factors {
            acc = acc.checked_mul(i128::from(p).checked_pow(e)?)?;
        }
        Some(acc)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Product of two factorizations.
    pub fn multiply(&self, other: &Factorization) -> Factorization {
        let sign = self.sign * other.sign;
        if sign == 0 {
            return Factorization::zero();
        }
        let mut merged: BTreeMap<u64, u32> = self.factors.iter().copied().collect();
        for &(p, e) in &other.factors {
            *merged.entry(p).or_default() += e;
        }
        Factorization { sign, factors: merged.into_iter().collect() }
    }

    /// Sign, ordering, and primality invariants. Does not check the value.
    pub fn is_well_formed(&self) -> bool {
        let ordered = self.factors.windows(2).all(|w| w[0].0 < w[1].0);
        let primes = self.factors.iter().all(|&(p, e)| e > 0 && is_prime(p));
        let sign_ok = match self.sign {
            0 => self.factors.is_empty(),
            1 | -1 => true,
            _ => false,
        };
        ordered && primes && sign_ok
    }

    /// Checks that the factorization is well formed and reconstructs `n`.
    pub fn verify(&self, n: i128) -> Result<()> {
        if self.is_well_formed() && self.value() == Some(n) {
            Ok(())
        } else {
            Err(Error::FactorizationMismatch(n))
        }
    }

    /// Primes with multiplicity, ascending.
    pub fn primes_with_multiplicity(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
    }

    /// All positive divisors, unsorted.
    pub fn positive_divisors(&self) -> Vec<i128> {
        let mut divs = vec![1i128];
        for &(p, e) in &self.factors {
            let base = divs.len();
            let mut pk = 1i128;
            for _ in 0..e {
                pk *= i128::from(p);
                for i in 0..base {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs
    }

    /// Factorization of `self / p^k`; `None` if `p^k` does not divide.
    pub fn divide_prime_power(&self, p: u64, k: u32) -> Option<Factorization> {
        let mut out = self.clone();
        let i = out.factors.binary_search_by_key(&p, |&(q, _)| q).ok()?;
        let e = out.factors[i].1.checked_sub(k)?;
        if e == 0 {
            out.factors.remove(i);
        } else {
            out.factors[i].1 = e;
        }
        Some(out)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => return write!(f, "0"),
            -1 => write!(f, "-")?,
            _ => {}
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            match e {
                1 => write!(f, "{p}")?,
                _ => write!(f, "{p}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Complete factorization of `n` within the `10^12` envelope.
pub fn factorize(n: i128) -> Result<Factorization> {
    check_envelope(n)?;
    factorize_unbounded(n)
}

/// Complete factorization for any `|n| < 2^64`, with no envelope.
pub fn factorize_unbounded(n: i128) -> Result<Factorization> {
    if n == 0 {
        return Ok(Factorization::zero());
    }
    let magnitude = u64::try_from(n.unsigned_abs()).map_err(|_| Error::Overflow("factorization beyond 64 bits"))?;
    Ok(Factorization { sign: if n < 0 { -1 } else { 1 }, factors: primes::factor_u64(magnitude) })
}

/// Factorization of a product from its (small) factors.
pub fn factorize_product(factors: &[i128]) -> Result<Factorization> {
    factors
        .iter()
        .try_fold(Factorization::one(), |acc, &f| Ok(acc.multiply(&factorize_unbounded(f)?)))
}

/// `p` is a positive prime with `p = 5 (mod 8)`.
pub fn is_in_p(p: i128) -> bool {
    p > 0 && p.rem_euclid(8) == 5 && u64::try_from(p).is_ok_and(is_prime)
}

/// All `d` (of either sign) with `d | c` and `d = 1 (mod 8)`, ascending.
pub fn signed_divisors_1mod8(c: i128) -> Result<Vec<i128>> {
    if c == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(divisors_1mod8_from(&factorize(c)?))
}

pub(crate) fn divisors_1mod8_from(f: &Factorization) -> Vec<i128> {
    let mut out: Vec<i128> = f
        .positive_divisors()
        .into_iter()
        .flat_map(|d| [d, -d])
        .filter(|d| d.rem_euclid(8) == 1)
        .collect();
    out.sort_unstable();
    out
}
