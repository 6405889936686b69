//! Membership of an integer in the value set `S` of the `C4 x C4` group
//! determinant.
//!
//! `S` consists of
//!
//! * every `16m + 1`,
//! * every `2^15 * p * (2m + 1)` with `p` in `P`,
//! * every `2^16 * m`,
//! * the set `A` of products `(8j+1)(8k-3) p1 p2 p3` with `p1, p2, p3` in `P`
//!   (written `p_i = 8 l_i - 3`) and `j != k + l1 + l2 + l3 (mod 2)`.
//!
//! [`classify`] returns a certificate for members and a rejection reason
//! otherwise. Certificates are produced under a fixed enumeration order, so
//! repeated runs agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numtheory::{self, divisors_1mod8_from, is_in_p, is_prime, Factorization};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    /// Odd, but neither `1` nor `9` mod 16.
    OddBadResidue,
    /// `9` mod 16 but not in `A`.
    OddANoDecomposition,
    /// 2-adic valuation between 1 and 14.
    EvenBadValuation,
    /// Valuation exactly 15 and no prime factor in `P`.
    Even15NoPrimeInP,
    /// Outside the supported `10^12` envelope.
    EnvelopeExceeded,
}

impl Rejection {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rejection::OddBadResidue => "odd_bad_residue",
            Rejection::OddANoDecomposition => "odd_a_no_decomposition",
            Rejection::EvenBadValuation => "even_bad_valuation",
            Rejection::Even15NoPrimeInP => "even15_no_prime_in_p",
            Rejection::EnvelopeExceeded => "envelope_exceeded",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(8j+1)(8k-3) p1 p2 p3` with `p1 <= p2 <= p3` in `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ACertificate {
    pub j: i128,
    pub k: i128,
    pub primes: [u64; 3],
}

impl ACertificate {
    /// `(p + 3) / 8` for each prime.
    pub fn prime_indices(&self) -> [i128; 3] {
        self.primes.map(|p| (i128::from(p) + 3) / 8)
    }

    /// `j != k + l + m + n (mod 2)`.
    pub fn parity_ok(&self) -> bool {
        let [l, m, n] = self.prime_indices();
        (self.j - (self.k + l + m + n)).rem_euclid(2) == 1
    }

    pub fn value(&self) -> Option<i128> {
        let [p1, p2, p3] = self.primes.map(i128::from);
        self.j
            .checked_mul(8)?
            .checked_add(1)?
            .checked_mul(self.k.checked_mul(8)?.checked_sub(3)?)?
            .checked_mul(p1)?
            .checked_mul(p2)?
            .checked_mul(p3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SClassification {
    /// `16m + 1`.
    OddOne { m: i128 },
    /// An element of `A`.
    OddA(ACertificate),
    /// `2^15 * p * odd_cofactor`, `p` the smallest prime factor in `P`.
    Even15 { p: u64, odd_cofactor: i128 },
    /// `2^16 * m`.
    Even16 { m: i128 },
    NotInS { reason: Rejection },
}

impl SClassification {
    pub fn is_member(&self) -> bool {
        !matches!(self, SClassification::NotInS { .. })
    }

    /// The integer the certificate describes; `None` for rejections or on
    /// overflow.
    pub fn value(&self) -> Option<i128> {
        match *self {
            SClassification::OddOne { m } => m.checked_mul(16)?.checked_add(1),
            SClassification::OddA(cert) => cert.value(),
            SClassification::Even15 { p, odd_cofactor } => {
                (1i128 << 15).checked_mul(i128::from(p))?.checked_mul(odd_cofactor)
            }
            SClassification::Even16 { m } => m.checked_mul(1 << 16),
            SClassification::NotInS { .. } => None,
        }
    }

    /// Short class name used in documents: `odd_16m_plus_1`, `set_A`,
    /// `pow2_15`, `pow2_16`.
    pub fn class_name(&self) -> Option<&'static str> {
        match self {
            SClassification::OddOne { .. } => Some("odd_16m_plus_1"),
            SClassification::OddA(_) => Some("set_A"),
            SClassification::Even15 { .. } => Some("pow2_15"),
            SClassification::Even16 { .. } => Some("pow2_16"),
            SClassification::NotInS { .. } => None,
        }
    }

    /// Named parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, i128)> {
        match *self {
            SClassification::OddOne { m } | SClassification::Even16 { m } => vec![("m", m)],
            SClassification::OddA(ACertificate { j, k, primes: [p1, p2, p3] }) => vec![
                ("j", j),
                ("k", k),
                ("p1", i128::from(p1)),
                ("p2", i128::from(p2)),
                ("p3", i128::from(p3)),
            ],
            SClassification::Even15 { p, odd_cofactor } => {
                vec![("p", i128::from(p)), ("cofactor", odd_cofactor)]
            }
            SClassification::NotInS { .. } => Vec::new(),
        }
    }

    /// Checks every certificate invariant against `n`. Rejections are not
    /// validated here; they carry no evidence.
    pub fn validate(&self, n: i128) -> std::result::Result<(), String> {
        let reconstructs = |what: &str| {
            if self.value() == Some(n) {
                Ok(())
            } else {
                Err(format!("{what} certificate {self:?} does not reconstruct {n}"))
            }
        };
        match *self {
            SClassification::OddOne { .. } => reconstructs("16m+1"),
            SClassification::OddA(cert) => {
                if !cert.primes.windows(2).all(|w| w[0] <= w[1]) {
                    return Err(format!("primes {:?} not sorted", cert.primes));
                }
                if let Some(p) = cert.primes.iter().find(|&&p| !is_in_p(i128::from(p))) {
                    return Err(format!("{p} is not in P"));
                }
                if !cert.parity_ok() {
                    return Err(format!("parity constraint fails for {cert:?}"));
                }
                reconstructs("A")
            }
            SClassification::Even15 { p, odd_cofactor } => {
                if !is_in_p(i128::from(p)) {
                    return Err(format!("{p} is not in P"));
                }
                if odd_cofactor.rem_euclid(2) != 1 {
                    return Err(format!("cofactor {odd_cofactor} is even"));
                }
                reconstructs("2^15")
            }
            SClassification::Even16 { .. } => reconstructs("2^16"),
            SClassification::NotInS { .. } => Ok(()),
        }
    }
}

impl fmt::Display for SClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SClassification::OddOne { m } => write!(f, "16*({m}) + 1"),
            SClassification::OddA(ACertificate { j, k, primes: [p1, p2, p3] }) => {
                write!(f, "(8*({j})+1) * (8*({k})-3) * {p1} * {p2} * {p3}")
            }
            SClassification::Even15 { p, odd_cofactor } => write!(f, "2^15 * {p} * ({odd_cofactor})"),
            SClassification::Even16 { m } => write!(f, "2^16 * ({m})"),
            SClassification::NotInS { reason } => write!(f, "not in S ({reason})"),
        }
    }
}

/// Classifies `|n| <= 10^12`. Larger inputs yield
/// `NotInS { reason: EnvelopeExceeded }`.
pub fn classify(n: i128) -> SClassification {
    if n.unsigned_abs() > numtheory::ENVELOPE.unsigned_abs() {
        return SClassification::NotInS { reason: Rejection::EnvelopeExceeded };
    }
    if n.rem_euclid(16) == 1 {
        return SClassification::OddOne { m: (n - 1) / 16 };
    }
    match numtheory::factorize(n) {
        Ok(f) => classify_with(n, &f),
        Err(_) => SClassification::NotInS { reason: Rejection::EnvelopeExceeded },
    }
}

/// Classifies `n` given its complete factorization, with no envelope. The
/// factorization is checked against `n` first.
pub fn classify_factored(n: i128, factorization: &Factorization) -> Result<SClassification> {
    factorization.verify(n)?;
    Ok(classify_with(n, factorization))
}

fn classify_with(n: i128, f: &Factorization) -> SClassification {
    let reject = |reason| SClassification::NotInS { reason };
    if n == 0 {
        return SClassification::Even16 { m: 0 };
    }
    if n % 2 != 0 {
        return match n.rem_euclid(16) {
            1 => SClassification::OddOne { m: (n - 1) / 16 },
            9 => match decompose(n, f) {
                Some(cert) => SClassification::OddA(cert),
                None => reject(Rejection::OddANoDecomposition),
            },
            _ => reject(Rejection::OddBadResidue),
        };
    }
    match n.trailing_zeros() {
        1..=14 => reject(Rejection::EvenBadValuation),
        15 => {
            let p = f.factors.iter().map(|&(p, _)| p).find(|&p| is_in_p(i128::from(p)));
            match p {
                Some(p) => SClassification::Even15 { p, odd_cofactor: n / ((1i128 << 15) * i128::from(p)) },
                None => reject(Rejection::Even15NoPrimeInP),
            }
        }
        _ => SClassification::Even16 { m: n >> 16 },
    }
}

/// Searches for an `A`-certificate of `n`.
///
/// Enumerates nondecreasing triples of prime factors in `P` (with
/// multiplicity, lexicographic), and for each the divisors `d = 1 (mod 8)`
/// of the cofactor in ascending order; the first `(j, k)` satisfying the
/// parity constraint wins.
pub fn a_decompose(n: i128) -> Result<Option<ACertificate>> {
    if n.rem_euclid(16) != 9 {
        return Err(Error::PreconditionViolated(format!("{n} is not 9 mod 16")));
    }
    let f = numtheory::factorize(n)?;
    Ok(decompose(n, &f))
}

/// [`a_decompose`] with a caller-supplied factorization and no envelope.
pub fn a_decompose_factored(n: i128, factorization: &Factorization) -> Result<Option<ACertificate>> {
    if n.rem_euclid(16) != 9 {
        return Err(Error::PreconditionViolated(format!("{n} is not 9 mod 16")));
    }
    factorization.verify(n)?;
    Ok(decompose(n, factorization))
}

fn decompose(n: i128, f: &Factorization) -> Option<ACertificate> {
    let q: Vec<u64> = f.primes_with_multiplicity().filter(|&p| p % 8 == 5 && is_prime(p)).collect();
    let mut last: Option<[u64; 3]> = None;
    for x in 0..q.len() {
        for y in x + 1..q.len() {
            for z in y + 1..q.len() {
                let primes = [q[x], q[y], q[z]];
                // Equal primes repeat in `q`; skip duplicate triples.
                if last.is_some_and(|l| l >= primes) {
                    continue;
                }
                last = Some(primes);
                if let Some(cert) = try_triple(n, f, primes) {
                    return Some(cert);
                }
            }
        }
    }
    None
}

fn try_triple(n: i128, f: &Factorization, primes: [u64; 3]) -> Option<ACertificate> {
    let mut rest = f.clone();
    for p in primes {
        rest = rest.divide_prime_power(p, 1)?;
    }
    let triple: i128 = primes.iter().map(|&p| i128::from(p)).product();
    let c = n / triple;
    divisors_1mod8_from(&rest).into_iter().find_map(|d| {
        let cert = ACertificate { j: (d - 1) / 8, k: (c / d + 3) / 8, primes };
        cert.parity_ok().then_some(cert)
    })
}
