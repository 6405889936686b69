//! The group determinant `D_{4x4}` and its building blocks.
//!
//! Three independent routes are provided:
//!
//! * [`det16_direct`]: fraction-free elimination on the explicit 16x16 group
//!   matrix `M[g][h] = a[g - h]`. This is the oracle.
//! * [`det16_factored`]: `D4(b) * D4(c) * |beta|^2 * |gamma|^2`.
//! * [`det16_spectral`]: the product over the four characters of the second
//!   `C4` factor of `D4` evaluated at Gaussian-integer arguments.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{add, dos, mul, product, sos, sub, sum};
use crate::gauss::GaussInt;
use crate::spectra::{derive, CoeffVec16, DerivedSpectra};
use crate::{Error, Result};

/// `x0^2 - x1^2`, the 2x2 circulant determinant.
pub fn det2(x0: i128, x1: i128) -> Result<i128> {
    dos(x0, x1)
}

/// The 4x4 circulant determinant
/// `{(x0+x2)^2 - (x1+x3)^2} * {(x0-x2)^2 + (x1-x3)^2}`.
pub fn det4(x: [i128; 4]) -> Result<i128> {
    let even = det2(add(x[0], x[2])?, add(x[1], x[3])?)?;
    let odd = sos(sub(x[0], x[2])?, sub(x[1], x[3])?)?;
    mul(even, odd)
}

/// [`det4`] over the Gaussian integers.
pub fn det4_gauss(x: [GaussInt; 4]) -> Result<GaussInt> {
    let s02 = x[0].checked_add(x[2])?;
    let s13 = x[1].checked_add(x[3])?;
    let d02 = x[0].checked_sub(x[2])?;
    let d13 = x[1].checked_sub(x[3])?;
    let even = s02.checked_square()?.checked_sub(s13.checked_square()?)?;
    let odd = d02.checked_square()?.checked_add(d13.checked_square()?)?;
    even.checked_mul(odd)
}

/// `beta * conj(beta)` and `gamma * conj(gamma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaGammaNorms {
    pub beta_norm: i128,
    pub gamma_norm: i128,
}

/// The four sums of two squares whose pairwise products are the two norms.
fn norm_factors(d: &[i128; 8]) -> Result<[i128; 4]> {
    let s = |t: &[i128]| sum(t);
    let beta_plus = sos(s(&[d[0], d[2], d[1], d[3]])?, s(&[d[4], d[6], d[5], d[7]])?)?;
    let beta_minus = sos(
        s(&[d[0], d[2], -d[1], -d[3]])?,
        s(&[d[4], d[6], -d[5], -d[7]])?,
    )?;
    let gamma_a = sos(
        s(&[d[0], -d[2], -d[5], d[7]])?,
        s(&[d[4], -d[6], d[1], -d[3]])?,
    )?;
    let gamma_b = sos(
        s(&[d[0], -d[2], d[5], -d[7]])?,
        s(&[d[4], -d[6], -d[1], d[3]])?,
    )?;
    Ok([beta_plus, beta_minus, gamma_a, gamma_b])
}

/// Norms as products of two sums of two squares.
pub fn beta_gamma_norms(d: &[i128; 8]) -> Result<BetaGammaNorms> {
    let [bp, bm, ga, gb] = norm_factors(d)?;
    Ok(BetaGammaNorms { beta_norm: mul(bp, bm)?, gamma_norm: mul(ga, gb)? })
}

/// Norms via the square-difference form `Q^2 - 4 X^2`. Kept only as an
/// independent cross-check of [`beta_gamma_norms`].
pub fn beta_gamma_norms_alt(d: &[i128; 8]) -> Result<BetaGammaNorms> {
    let p0 = add(d[0], d[2])?;
    let p1 = add(d[1], d[3])?;
    let p4 = add(d[4], d[6])?;
    let p5 = add(d[5], d[7])?;
    let m0 = sub(d[0], d[2])?;
    let m1 = sub(d[1], d[3])?;
    let m4 = sub(d[4], d[6])?;
    let m5 = sub(d[5], d[7])?;

    let q_beta = add(sos(p0, p4)?, sos(p1, p5)?)?;
    let x_beta = add(mul(p0, p1)?, mul(p4, p5)?)?;
    let q_gamma = add(sos(m0, m4)?, sos(m1, m5)?)?;
    let x_gamma = sub(mul(m0, m5)?, mul(m4, m1)?)?;

    Ok(BetaGammaNorms {
        beta_norm: sub(mul(q_beta, q_beta)?, mul(4, mul(x_beta, x_beta)?)?)?,
        gamma_norm: sub(mul(q_gamma, q_gamma)?, mul(4, mul(x_gamma, x_gamma)?)?)?,
    })
}

/// The ten integer factors whose product is the group determinant:
///
/// ```text
/// [b0+b1+b2+b3, b0-b1+b2-b3, (b0-b2)^2+(b1-b3)^2,
///  c0+c1+c2+c3, c0-c1+c2-c3, (c0-c2)^2+(c1-c3)^2,
///  beta+, beta-, gamma_a, gamma_b]
/// ```
///
/// The last four are sums of two squares. Each entry is small compared with
/// the determinant, which makes it cheap to factor the determinant exactly.
pub fn det16_pieces(a: &CoeffVec16) -> Result<[i128; 10]> {
    let s = derive(a);
    let lin = |x: &[i128; 4]| -> Result<[i128; 3]> {
        Ok([
            sum(x)?,
            sum(&[x[0], -x[1], x[2], -x[3]])?,
            sos(sub(x[0], x[2])?, sub(x[1], x[3])?)?,
        ])
    };
    let [b0, b1, b2] = lin(&s.b)?;
    let [c0, c1, c2] = lin(&s.c)?;
    let [n0, n1, n2, n3] = norm_factors(&s.d)?;
    Ok([b0, b1, b2, c0, c1, c2, n0, n1, n2, n3])
}

/// Per-factor breakdown of the factored form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    pub det4_b: i128,
    pub det4_c: i128,
    pub norms: BetaGammaNorms,
    /// `D4` at the character-twisted arguments, `k = 0..4`.
    pub spectral: [GaussInt; 4],
    pub value: i128,
}

pub fn breakdown(a: &CoeffVec16) -> Result<Breakdown> {
    let s = derive(a);
    let det4_b = det4(s.b)?;
    let det4_c = det4(s.c)?;
    let norms = beta_gamma_norms(&s.d)?;
    let value = product(&[det4_b, det4_c, norms.beta_norm, norms.gamma_norm])?;
    Ok(Breakdown { det4_b, det4_c, norms, spectral: spectral_factors(a)?, value })
}

/// `D4(b) * D4(c) * |beta|^2 * |gamma|^2`.
pub fn det16_factored(a: &CoeffVec16) -> Result<i128> {
    factored_from_spectra(&derive(a))
}

pub(crate) fn factored_from_spectra(s: &DerivedSpectra) -> Result<i128> {
    let norms = beta_gamma_norms(&s.d)?;
    product(&[det4(s.b)?, det4(s.c)?, norms.beta_norm, norms.gamma_norm])
}

/// `D4` evaluated at `(sum_s i^{ks} a_{j+4s})_{j=0..4}` for `k = 0..4`.
pub fn spectral_factors(a: &CoeffVec16) -> Result<[GaussInt; 4]> {
    let mut out = [GaussInt::ZERO; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut args = [GaussInt::ZERO; 4];
        for (j, arg) in args.iter_mut().enumerate() {
            for s in 0..4 {
                let coeff = GaussInt::real(i128::from(a.0[j + 4 * s]));
                *arg = arg.checked_add(coeff.mul_i_pow((k * s) as u32)?)?;
            }
        }
        *slot = det4_gauss(args)?;
    }
    Ok(out)
}

/// Product of the four character factors. A nonzero imaginary part in the
/// product is reported as [`Error::InternalMismatch`].
pub fn det16_spectral(a: &CoeffVec16) -> Result<i128> {
    let total = spectral_factors(a)?
        .into_iter()
        .try_fold(GaussInt::ONE, |acc, f| acc.checked_mul(f))?;
    if !total.is_real() {
        return Err(Error::InternalMismatch(format!(
            "spectral product {total} has nonzero imaginary part for {a}"
        )));
    }
    Ok(total.re)
}

/// The explicit group matrix `M[g][h] = a[g - h]` with group elements
/// `(r, s)` ordered by `r + 4 s` and subtraction taken componentwise mod 4.
pub fn group_matrix(a: &CoeffVec16) -> [[i64; 16]; 16] {
    std::array::from_fn(|g| {
        std::array::from_fn(|h| {
            let r = (g % 4 + 4 - h % 4) % 4;
            let s = (g / 4 + 4 - h / 4) % 4;
            a.0[r + 4 * s]
        })
    })
}

/// Determinant of the explicit group matrix by Bareiss elimination.
///
/// Runs in `i128` and restarts in arbitrary precision if an intermediate
/// product overflows, so only a final value outside `i128` is an error.
pub fn det16_direct(a: &CoeffVec16) -> Result<i128> {
    let m = group_matrix(a);
    if let Some(det) = bareiss_i128(m.map(|row| row.map(i128::from))) {
        return Ok(det);
    }
    let big = bareiss_big(m.map(|row| row.map(BigInt::from)));
    big.to_i128().ok_or(Error::Overflow("det16_direct result"))
}

/// Arbitrary-precision variant of [`det16_direct`].
pub fn det16_direct_big(a: &CoeffVec16) -> BigInt {
    bareiss_big(group_matrix(a).map(|row| row.map(BigInt::from)))
}

fn bareiss_i128<const N: usize>(mut m: [[i128; N]; N]) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..N {
        if m[k][k] == 0 {
            match (k + 1..N).find(|&i| m[i][k] != 0) {
                Some(pivot) => {
                    m.swap(k, pivot);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..N {
            for j in k + 1..N {
                let num = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = num / prev;
            }
        }
        prev = m[k][k];
    }
    sign.checked_mul(m[N - 1][N - 1])
}

fn bareiss_big<const N: usize>(mut m: [[BigInt; N]; N]) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..N {
        if m[k][k].is_zero() {
            match (k + 1..N).find(|&i| !m[i][k].is_zero()) {
                Some(pivot) => {
                    m.swap(k, pivot);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..N {
            for j in k + 1..N {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[N - 1][N - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeffs(bound: i64) -> impl Strategy<Value = CoeffVec16> {
        proptest::array::uniform16(-bound..=bound).prop_map(CoeffVec16)
    }

    fn d8(bound: i128) -> impl Strategy<Value = [i128; 8]> {
        proptest::array::uniform8(-bound..=bound)
    }

    fn g(re: i128, im: i128) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn unit_m1() -> CoeffVec16 {
        let mut a = [1i64; 16];
        a[0] = 2;
        CoeffVec16(a)
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(1, 0).unwrap(), 1);
        assert_eq!(det2(1, 1).unwrap(), 0);
        assert_eq!(det2(9, 8).unwrap(), 17);
    }

    #[test]
    fn det4_examples() {
        assert_eq!(det4([1, 0, 0, 0]).unwrap(), 1);
        assert_eq!(det4([5, 4, 4, 4]).unwrap(), 17);
        assert_eq!(det4([2, 1, 0, -1]).unwrap(), 32);
        assert_eq!(det4([0, 1, 2, 3]).unwrap(), -det4([1, 2, 3, 0]).unwrap());
        assert_eq!(det4([0, 1, 2, 3]).unwrap(), -96);
    }

    #[test]
    fn det4_gauss_examples() {
        let z = GaussInt::ZERO;
        assert_eq!(det4_gauss([g(1, 0), z, g(0, 1), z]).unwrap(), g(4, 0));
        assert_eq!(det4_gauss([g(1, 0), z, z, z]).unwrap(), g(1, 0));
        assert_eq!(det4_gauss([z, g(1, 1), z, z]).unwrap(), g(4, 0));
    }

    #[test]
    fn det4_overflow_detected() {
        assert_eq!(det4([i128::MAX, 0, 1, 0]), Err(Error::Overflow("addition")));
        assert!(det4([1 << 70, 0, 0, 0]).is_err());
    }

    #[test]
    fn direct_examples() {
        assert_eq!(det16_direct(&CoeffVec16::identity()).unwrap(), 1);
        assert_eq!(det16_direct(&CoeffVec16::constant(1)).unwrap(), 0);
        assert_eq!(det16_direct(&unit_m1()).unwrap(), 17);
    }

    // Frozen from an exact rational-arithmetic determinant of the explicit
    // group matrix, computed outside this crate.
    #[test]
    fn direct_matches_external_oracle() {
        let cases: [([i64; 16], i128); 3] = [
            ([-5, 9, -7, -1, -6, 6, 5, 6, 3, -3, -6, 6, -9, 3, 4, -9], 229905160585318400000),
            ([5, -1, -2, 9, -6, 1, -9, -9, -9, 8, -9, 3, -3, 4, -9, 7], -726271735954931712000),
            ([-2, 5, 6, 8, -2, 2, -2, -2, 5, 0, -9, 4, 8, -6, -4, 0], 32712186330152571825),
        ];
        for (a, expect) in cases {
            let a = CoeffVec16(a);
            assert_eq!(det16_direct(&a).unwrap(), expect);
            assert_eq!(det16_factored(&a).unwrap(), expect);
            assert_eq!(det16_spectral(&a).unwrap(), expect);
        }
    }

    #[test]
    fn factored_examples() {
        assert_eq!(det16_factored(&unit_m1()).unwrap(), 17);
        assert_eq!(det16_factored(&CoeffVec16::identity()).unwrap(), 1);
    }

    #[test]
    fn spectral_examples() {
        assert_eq!(det16_spectral(&CoeffVec16::identity()).unwrap(), 1);
        let a = CoeffVec16([3, 1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(det16_spectral(&a).unwrap(), 327_680);
        assert_eq!(327_680, (1 << 16) * 5);
    }

    #[test]
    fn big_path_agrees_with_i128_path() {
        let a = CoeffVec16([-5, 9, -7, -1, -6, 6, 5, 6, 3, -3, -6, 6, -9, 3, 4, -9]);
        assert_eq!(det16_direct_big(&a), BigInt::from(229905160585318400000i128));
        // Large entries force the fallback.
        let big = CoeffVec16(std::array::from_fn(|j| (j as i64 * 7919 + 13) % 1000 - 500));
        let via_big = det16_direct_big(&big);
        match via_big.to_i128() {
            Some(v) => assert_eq!(det16_direct(&big).unwrap(), v),
            None => assert_eq!(det16_direct(&big), Err(Error::Overflow("det16_direct result"))),
        }
    }

    #[test]
    fn direct_reports_unrepresentable_result() {
        let a = CoeffVec16(std::array::from_fn(|j| if j == 0 { 1 << 40 } else { 0 }));
        assert!(det16_direct(&a).is_err());
        assert!(det16_factored(&a).is_err());
        assert!(det16_spectral(&a).is_err());
    }

    #[test]
    fn singular_matrices() {
        let mut a = [0i64; 16];
        a[0] = 1;
        a[8] = 1;
        assert_eq!(det16_direct(&CoeffVec16(a)).unwrap(), 0);
        assert_eq!(det16_direct(&CoeffVec16::zero()).unwrap(), 0);
    }

    #[test]
    fn norms_examples() {
        let one = [1, 0, 0, 0, 0, 0, 0, 0];
        let unit = BetaGammaNorms { beta_norm: 1, gamma_norm: 1 };
        assert_eq!(beta_gamma_norms(&one).unwrap(), unit);
        assert_eq!(beta_gamma_norms_alt(&one).unwrap(), unit);
        let split = [0, 1, 0, 0, 1, 1, 0, 0];
        assert_eq!(beta_gamma_norms(&split).unwrap(), BetaGammaNorms { beta_norm: 5, gamma_norm: 5 });
        assert_eq!(beta_gamma_norms(&[1; 8]).unwrap().beta_norm, 0);
        assert_eq!(beta_gamma_norms_alt(&[0; 8]).unwrap(), BetaGammaNorms { beta_norm: 0, gamma_norm: 0 });
    }

    #[test]
    fn group_matrix_first_column_is_a() {
        let a = CoeffVec16(std::array::from_fn(|j| j as i64 + 1));
        let m = group_matrix(&a);
        for (g, row) in m.iter().enumerate() {
            assert_eq!(row[0], a.0[g]);
            assert_eq!(row[g], a.0[0]);
        }
    }

    proptest! {
        #[test]
        fn three_routes_agree(a in coeffs(9)) {
            let direct = det16_direct(&a).unwrap();
            prop_assert_eq!(det16_factored(&a).unwrap(), direct);
            prop_assert_eq!(det16_spectral(&a).unwrap(), direct);
        }

        #[test]
        fn pieces_multiply_to_determinant(a in coeffs(20)) {
            let pieces = det16_pieces(&a).unwrap();
            prop_assert_eq!(product(&pieces).unwrap(), det16_factored(&a).unwrap());
        }

        #[test]
        fn det4_rotation_flips_sign(x in proptest::array::uniform4(-10_000i128..10_000)) {
            prop_assert_eq!(det4(x).unwrap(), -det4([x[1], x[2], x[3], x[0]]).unwrap());
        }

        #[test]
        fn det4_gauss_agrees_on_reals(x in proptest::array::uniform4(-10_000i128..10_000)) {
            prop_assert_eq!(det4_gauss(x.map(GaussInt::real)).unwrap(), GaussInt::real(det4(x).unwrap()));
        }

        #[test]
        fn norm_forms_agree(d in d8(100_000)) {
            prop_assert_eq!(beta_gamma_norms(&d).unwrap(), beta_gamma_norms_alt(&d).unwrap());
        }

        #[test]
        fn norms_nonnegative_and_swap_invariant(d in d8(100_000)) {
            let n = beta_gamma_norms(&d).unwrap();
            prop_assert!(n.beta_norm >= 0 && n.gamma_norm >= 0);
            let swapped = [d[4], d[5], d[6], d[7], d[0], d[1], d[2], d[3]];
            prop_assert_eq!(beta_gamma_norms(&swapped).unwrap(), n);
        }

        #[test]
        fn all_factors_share_parity(a in coeffs(50)) {
            let s = derive(&a);
            let n = beta_gamma_norms(&s.d).unwrap();
            let p = det16_direct(&a).unwrap().rem_euclid(2);
            prop_assert_eq!(det4(s.b).unwrap().rem_euclid(2), p);
            prop_assert_eq!(det4(s.c).unwrap().rem_euclid(2), p);
            prop_assert_eq!(n.beta_norm.rem_euclid(2), p);
            prop_assert_eq!(n.gamma_norm.rem_euclid(2), p);
        }
    }
}
