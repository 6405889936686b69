//! Explicit coefficient vectors realizing every member of `S`.
//!
//! [`plan`] turns a classification into a [`WitnessPlan`] holding the
//! parameters of one closed-form family; [`emit`] expands a plan into the 16
//! coefficients. [`witness`] does both and confirms the result against the
//! direct determinant.

use serde::Serialize;

use crate::classifier::{classify, ACertificate, Rejection, SClassification};
use crate::gdet::det16_direct;
use crate::numtheory::{two_squares_2p, two_squares_prime_5mod8, ENVELOPE};
use crate::spectra::CoeffVec16;
use crate::{Error, Result};

/// Which of the four `A` layouts applies, by the residues of the unit
/// factor and the `k` factor mod 16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ALayout {
    /// `(16J+1)(16K-3)`, distinguished prime `= 5 (mod 16)`.
    UnitPlusKMinus,
    /// `(16J+1)(16K+5)`, distinguished prime `= 13 (mod 16)`.
    UnitPlusKPlus,
    /// `(16J-7)(16K-3)`, distinguished prime `= 13 (mod 16)`.
    UnitMinusKMinus,
    /// `(16J-7)(16K+5)`, distinguished prime `= 5 (mod 16)`.
    UnitMinusKPlus,
}

impl ALayout {
    fn for_parities(j_odd: bool, k_odd: bool) -> ALayout {
        match (j_odd, k_odd) {
            (false, false) => ALayout::UnitPlusKMinus,
            (false, true) => ALayout::UnitPlusKPlus,
            (true, false) => ALayout::UnitMinusKMinus,
            (true, true) => ALayout::UnitMinusKPlus,
        }
    }

    fn distinguished_residue(self) -> u64 {
        match self {
            ALayout::UnitPlusKMinus | ALayout::UnitMinusKPlus => 5,
            ALayout::UnitPlusKPlus | ALayout::UnitMinusKMinus => 13,
        }
    }

    fn rs_sign(self) -> i128 {
        match self {
            ALayout::UnitPlusKMinus | ALayout::UnitMinusKPlus => 1,
            ALayout::UnitPlusKPlus | ALayout::UnitMinusKMinus => -1,
        }
    }

    fn offsets(self) -> [i128; 16] {
        match self {
            ALayout::UnitPlusKMinus => [0, 0, 0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0],
            ALayout::UnitPlusKPlus => [1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0],
            ALayout::UnitMinusKMinus => [0, 0, -1, -1, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, 0, 0],
            ALayout::UnitMinusKPlus => [0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, -1, -1, -1, -1],
        }
    }
}

/// Parameters of one explicit family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum WitnessPlan {
    /// `(m+1, m, ..., m)`, value `16m + 1`.
    OddUnit { m: i128 },
    /// Value `2^16 (4m + 1)`.
    Pow16Plus { m: i128 },
    /// Value `2^16 (4m - 1)`.
    Pow16Minus { m: i128 },
    /// Value `2^16 * 2m`.
    Pow16Even { m: i128 },
    /// Value `2^15 p (4m + 1)` where `2p = (8r+3)^2 + (8s+1)^2`.
    Pow15Plus { m: i128, r: i128, s: i128 },
    /// Value `2^15 p (4m - 1)` where `2p = (8r+3)^2 + (8s+1)^2`.
    Pow15Minus { m: i128, r: i128, s: i128 },
    /// An element of `A`. `r, s` encode the distinguished prime as
    /// `(8r+1)^2 + (8s+2)^2` or `(8r+3)^2 + (8s+2)^2`; `t, u` and `v, w` encode
    /// the remaining pair as `(8t+2e+1)^2 + (8u+2)^2`.
    SetA {
        layout: ALayout,
        j: i128,
        k: i128,
        r: i128,
        s: i128,
        t: i128,
        u: i128,
        v: i128,
        w: i128,
        e: i128,
    },
}

impl WitnessPlan {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessPlan::OddUnit { .. } => "odd_unit",
            WitnessPlan::Pow16Plus { .. } => "pow16_plus",
            WitnessPlan::Pow16Minus { .. } => "pow16_minus",
            WitnessPlan::Pow16Even { .. } => "pow16_even",
            WitnessPlan::Pow15Plus { .. } => "pow15_plus",
            WitnessPlan::Pow15Minus { .. } => "pow15_minus",
            WitnessPlan::SetA { .. } => "set_a",
        }
    }
}

fn not_attainable(n: i128, reason: Rejection) -> Error {
    match reason {
        Rejection::EnvelopeExceeded => Error::EnvelopeExceeded(n),
        reason => Error::NotAttainable { value: n, reason },
    }
}

/// Chooses the family and parameters for a member of `S`.
pub fn plan(class: &SClassification) -> Result<WitnessPlan> {
    match *class {
        SClassification::OddOne { m } => Ok(WitnessPlan::OddUnit { m }),
        SClassification::Even16 { m } => Ok(match m.rem_euclid(4) {
            1 => WitnessPlan::Pow16Plus { m: (m - 1) / 4 },
            3 => WitnessPlan::Pow16Minus { m: (m + 1) / 4 },
            _ => WitnessPlan::Pow16Even { m: m / 2 },
        }),
        SClassification::Even15 { p, odd_cofactor } => {
            let rep = two_squares_2p(i128::from(p))?;
            let (r, s) = ((rep.x - 3) / 8, (rep.y - 1) / 8);
            match odd_cofactor.rem_euclid(4) {
                1 => Ok(WitnessPlan::Pow15Plus { m: (odd_cofactor - 1) / 4, r, s }),
                3 => Ok(WitnessPlan::Pow15Minus { m: (odd_cofactor + 1) / 4, r, s }),
                _ => Err(Error::PreconditionViolated(format!("cofactor {odd_cofactor} is even"))),
            }
        }
        SClassification::OddA(cert) => plan_a(&cert),
        SClassification::NotInS { reason } => {
            Err(Error::PreconditionViolated(format!("no witness for a rejected value ({reason})")))
        }
    }
}

fn plan_a(cert: &ACertificate) -> Result<WitnessPlan> {
    let (j, k) = (cert.j, cert.k);
    let layout = ALayout::for_parities(j.rem_euclid(2) == 1, k.rem_euclid(2) == 1);
    let unit = if j.rem_euclid(2) == 0 { j / 2 } else { (j + 1) / 2 };
    let kk = if k.rem_euclid(2) == 0 { k / 2 } else { (k - 1) / 2 };

    let want = layout.distinguished_residue();
    let residues = cert.primes.map(|p| p % 16);
    let distinguished = (0..3)
        .find(|&i| residues.iter().filter(|&&x| x == residues[i]).count() == 1)
        .unwrap_or(0);
    let l = cert.primes[distinguished];
    let pair: Vec<u64> = (0..3).filter(|&i| i != distinguished).map(|i| cert.primes[i]).collect();
    if l % 16 != want || pair[0] % 16 != pair[1] % 16 {
        return Err(Error::PreconditionViolated(format!(
            "prime residues {:?} do not fit the {layout:?} layout",
            cert.primes
        )));
    }

    let rs = two_squares_prime_5mod8(i128::from(l))?;
    let offset = if l % 16 == 5 { 1 } else { 3 };
    let (r, s) = ((rs.x - offset) / 8, (rs.y - 2) / 8);

    let e = if pair[0] % 16 == 13 { 1 } else { 0 };
    let first = two_squares_prime_5mod8(i128::from(pair[0]))?;
    let second = two_squares_prime_5mod8(i128::from(pair[1]))?;
    let (t, u) = ((first.x - 2 * e - 1) / 8, (first.y - 2) / 8);
    let (v, w) = ((second.x - 2 * e - 1) / 8, (second.y - 2) / 8);

    Ok(WitnessPlan::SetA { layout, j: unit, k: kk, r, s, t, u, v, w, e })
}

fn uniform_plus(m: i128, offsets: [i128; 16]) -> Result<[i128; 16]> {
    let mut out = [0i128; 16];
    for (o, d) in out.iter_mut().zip(offsets) {
        *o = m.checked_add(d).ok_or(Error::Overflow("witness coefficient"))?;
    }
    Ok(out)
}

fn pow15(m: i128, r: i128, s: i128, plus: bool) -> Result<[i128; 16]> {
    let mr = m.checked_add(r).ok_or(Error::Overflow("witness coefficient"))?;
    let ms = m.checked_add(s).ok_or(Error::Overflow("witness coefficient"))?;
    let nr = m.checked_sub(r).ok_or(Error::Overflow("witness coefficient"))?;
    let ns = m.checked_sub(s).ok_or(Error::Overflow("witness coefficient"))?;
    let base = [mr, mr, mr, mr, ms, ms, ms, ms, nr, nr, nr, nr, ns, ns, ns, ns];
    let offsets: [i128; 16] = if plus {
        [1, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0, 0]
    } else {
        [0, 0, 1, 0, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, -1, -1]
    };
    let mut out = [0i128; 16];
    for i in 0..16 {
        out[i] = base[i].checked_add(offsets[i]).ok_or(Error::Overflow("witness coefficient"))?;
    }
    Ok(out)
}

// Coefficient patterns shared by all four `A` layouts, index order a0..a15.
const JK_SIGN: [i128; 16] = [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1];
const R_PATTERN: [i128; 16] = [-1, 0, 1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0];
const S_PATTERN: [i128; 16] = [0, -1, 0, 1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1];
const T_PATTERN: [i128; 16] = [1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0];
const U_PATTERN: [i128; 16] = [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1];
const V_PATTERN: [i128; 16] = [-1, 0, 1, 0, 0, 1, 0, -1, 1, 0, -1, 0, 0, -1, 0, 1];
const W_PATTERN: [i128; 16] = [0, 1, 0, -1, 1, 0, -1, 0, 0, -1, 0, 1, -1, 0, 1, 0];
const E_PATTERN: [i128; 16] = [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0];

#[allow(clippy::too_many_arguments)]
fn set_a(layout: ALayout, j: i128, k: i128, r: i128, s: i128, t: i128, u: i128, v: i128, w: i128, e: i128) -> Result<[i128; 16]> {
    let sign = layout.rs_sign();
    let offsets = layout.offsets();
    let mut out = [0i128; 16];
    for i in 0..16 {
        let terms = [
            Some(j),
            k.checked_mul(JK_SIGN[i]),
            r.checked_mul(sign * R_PATTERN[i]),
            s.checked_mul(sign * S_PATTERN[i]),
            t.checked_mul(T_PATTERN[i]),
            u.checked_mul(U_PATTERN[i]),
            v.checked_mul(V_PATTERN[i]),
            w.checked_mul(W_PATTERN[i]),
            e.checked_mul(E_PATTERN[i]),
            Some(offsets[i]),
        ];
        out[i] = terms
            .into_iter()
            .try_fold(0i128, |acc, x| acc.checked_add(x?))
            .ok_or(Error::Overflow("witness coefficient"))?;
    }
    Ok(out)
}

/// Expands a plan into coefficients.
pub fn emit(plan: &WitnessPlan) -> Result<CoeffVec16> {
    let wide = match *plan {
        WitnessPlan::OddUnit { m } => uniform_plus(m, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])?,
        WitnessPlan::Pow16Plus { m } => uniform_plus(m, [2, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0])?,
        WitnessPlan::Pow16Minus { m } => {
            uniform_plus(m, [1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0])?
        }
        WitnessPlan::Pow16Even { m } => uniform_plus(m, [1, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 0, 0])?,
        WitnessPlan::Pow15Plus { m, r, s } => pow15(m, r, s, true)?,
        WitnessPlan::Pow15Minus { m, r, s } => pow15(m, r, s, false)?,
        WitnessPlan::SetA { layout, j, k, r, s, t, u, v, w, e } => set_a(layout, j, k, r, s, t, u, v, w, e)?,
    };
    let mut a = [0i64; 16];
    for (dst, src) in a.iter_mut().zip(wide) {
        *dst = i64::try_from(src).map_err(|_| Error::Overflow("witness coefficient exceeds i64"))?;
    }
    Ok(CoeffVec16(a))
}

/// Classifies `n`, builds a witness, and checks `det16_direct(witness) == n`.
pub fn witness(n: i128) -> Result<(CoeffVec16, SClassification)> {
    let (a, class) = witness_unverified(n)?;
    let det = det16_direct(&a)?;
    if det != n {
        return Err(Error::InternalMismatch(format!(
            "witness {a} for {n} evaluates to {det} ({})",
            class
        )));
    }
    Ok((a, class))
}

/// [`witness`] without the final determinant evaluation.
pub fn witness_unverified(n: i128) -> Result<(CoeffVec16, SClassification)> {
    if n.unsigned_abs() > ENVELOPE.unsigned_abs() {
        return Err(Error::EnvelopeExceeded(n));
    }
    let class = classify(n);
    if let SClassification::NotInS { reason } = class {
        return Err(not_attainable(n, reason));
    }
    let a = emit(&plan(&class)?)?;
    Ok((a, class))
}
