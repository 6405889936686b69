use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith::v2;
use crate::gauss::GaussInt;
use crate::gdet::{beta_gamma_norms, beta_gamma_norms_alt, det16_direct, det16_spectral, det4, BetaGammaNorms};
use crate::spectra::{derive, CoeffVec16};
use crate::Result;

/// The formulas under test. Swapping one for a broken variant must make
/// some suite fail; that is how the suites themselves are tested.
#[derive(Clone, Copy)]
pub struct Kernels {
    pub det4: fn([i128; 4]) -> Result<i128>,
    pub norms: fn(&[i128; 8]) -> Result<BetaGammaNorms>,
}

/// Names accepted by [`Kernels::with_fault`].
pub const FAULTS: &[&str] = &["det4_sign", "det4_shift", "norms_swap_sign", "norms_drop_term"];

impl Kernels {
    pub fn standard() -> Self {
        Kernels { det4, norms: beta_gamma_norms }
    }

    /// Standard kernels with one formula deliberately broken.
    pub fn with_fault(name: &str) -> Option<Self> {
        let mut k = Kernels::standard();
        match name {
            "det4_sign" => k.det4 = |x| det4([x[0], x[3], x[2], x[1]]).map(|v| -v),
            "det4_shift" => k.det4 = |x| det4(x).map(|v| v + 16),
            "norms_swap_sign" => {
                k.norms = |d| {
                    let mut e = *d;
                    e[7] = -e[7];
                    beta_gamma_norms(&e)
                }
            }
            "norms_drop_term" => {
                k.norms = |d| {
                    let mut e = *d;
                    e[5] = 0;
                    beta_gamma_norms(&e)
                }
            }
            _ => return None,
        }
        Some(k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteFailure {
    pub input: Vec<i128>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub samples: u64,
    /// How often each case of a case analysis was sampled.
    pub branches: Vec<(&'static str, u64)>,
    /// Total failed checks; only the first few are kept in `failures`.
    pub failed: u64,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            out.push_str(&format!("{:<28} {:>7} samples  {:>5} failures  {status}\n", s.name, s.samples, s.failed));
        }
        out
    }

    /// One JSON object per failure.
    pub fn failure_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.suites {
            for f in &s.failures {
                let input: Vec<String> = f.input.iter().map(i128::to_string).collect();
                out.push(json!({"suite": s.name, "seed": self.seed, "input": input, "detail": f.detail}).to_string());
            }
        }
        out
    }
}

/// Keeps the first few failures and counts samples.
struct Recorder {
    result: SuiteResult,
}

const KEPT_FAILURES: usize = 20;

impl Recorder {
    fn new(name: &'static str) -> Self {
        Recorder { result: SuiteResult { name, samples: 0, branches: Vec::new(), failed: 0, failures: Vec::new() } }
    }

    fn branch(&mut self, name: &'static str) {
        match self.result.branches.iter_mut().find(|(n, _)| *n == name) {
            Some((_, c)) => *c += 1,
            None => self.result.branches.push((name, 1)),
        }
    }

    fn check(&mut self, ok: bool, input: &[i128], detail: impl FnOnce() -> String) {
        if ok {
            return;
        }
        self.result.failed += 1;
        if self.result.failures.len() < KEPT_FAILURES {
            self.result.failures.push(SuiteFailure { input: input.to_vec(), detail: detail() });
        }
    }

    /// Records an evaluation error as a failure; returns the value otherwise.
    fn eval<T>(&mut self, r: Result<T>, input: &[i128]) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, input, || e.to_string());
                None
            }
        }
    }
}

fn random_a(rng: &mut ChaCha8Rng, bound: i64) -> CoeffVec16 {
    CoeffVec16(std::array::from_fn(|_| rng.random_range(-bound..=bound)))
}

fn wide(a: &CoeffVec16) -> Vec<i128> {
    a.0.iter().map(|&x| i128::from(x)).collect()
}

/// `x` is `2^v` times an odd number.
fn exactly(x: i128, v: u32) -> bool {
    v2(x) == Some(v)
}

/// `x` is divisible by `2^v`.
fn divisible(x: i128, v: u32) -> bool {
    v2(x).is_none_or(|e| e >= v)
}

type Suite = fn(&Kernels, &mut ChaCha8Rng, u64) -> SuiteResult;

const SUITES: &[Suite] = &[
    determinant_parity,
    oracle_equivalence,
    norm_split_identity,
    cross_term_congruences,
    d4_residues_mod16,
    d4_two_adic_classes,
    bc_product_mod16,
    norm_difference_mod16,
    rotation_sign,
    spectra_congruences,
    norm_swap_invariance,
    norm_forms_agree,
    shifted_norm_identity,
];

/// Runs every suite with `samples` draws each. Suite `i` uses ChaCha8
/// stream `i` of `seed`, so suites are reproducible individually.
pub fn lemma_suites(samples: u64, seed: u64, kernels: &Kernels) -> LemmaReport {
    let suites = SUITES
        .iter()
        .enumerate()
        .map(|(i, suite)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            suite(kernels, &mut rng, samples)
        })
        .collect();
    LemmaReport { seed, suites }
}

/// The determinant, `D4(b)`, `D4(c)` and both norms share a parity.
fn determinant_parity(k: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("determinant_parity");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a(rng, 9);
        let input = wide(&a);
        let s = derive(&a);
        let (Some(d), Some(db), Some(dc), Some(n)) = (
            rec.eval(det16_direct(&a), &input),
            rec.eval((k.det4)(s.b), &input),
            rec.eval((k.det4)(s.c), &input),
            rec.eval((k.norms)(&s.d), &input),
        ) else {
            continue;
        };
        let parities = [d, db, dc, n.beta_norm, n.gamma_norm].map(|x| x.rem_euclid(2));
        rec.check(parities.iter().all(|&p| p == parities[0]), &input, || format!("parities {parities:?}"));
    }
    rec.result
}

/// Direct elimination, the factored product and the spectral product agree.
fn oracle_equivalence(k: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("oracle_equivalence");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a(rng, 9);
        let input = wide(&a);
        let s = derive(&a);
        let factored = (|| {
            let n = (k.norms)(&s.d)?;
            crate::arith::product(&[(k.det4)(s.b)?, (k.det4)(s.c)?, n.beta_norm, n.gamma_norm])
        })();
        let (Some(direct), Some(factored), Some(spectral)) = (
            rec.eval(det16_direct(&a), &input),
            rec.eval(factored, &input),
            rec.eval(det16_spectral(&a), &input),
        ) else {
            continue;
        };
        rec.check(direct == factored && factored == spectral, &input, || {
            format!("direct={direct} factored={factored} spectral={spectral}")
        });
    }
    rec.result
}

fn random_d(rng: &mut ChaCha8Rng, bound: i128) -> [i128; 8] {
    std::array::from_fn(|_| rng.random_range(-bound..=bound))
}

/// `Q+^2 - Q-^2 = 8 (sum d_i^2)(d0 d2 + d4 d6 + d1 d3 + d5 d7)` where `Q+-`
/// are the sums of squares of the pairwise sums and differences.
fn norm_split_identity(_: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("norm_split_identity");
    for _ in 0..samples {
        rec.result.samples += 1;
        let d = random_d(rng, 100);
        let q = |sign: i128| {
            (d[0] + sign * d[2]).pow(2)
                + (d[4] + sign * d[6]).pow(2)
                + (d[1] + sign * d[3]).pow(2)
                + (d[5] + sign * d[7]).pow(2)
        };
        let lhs = q(1).pow(2) - q(-1).pow(2);
        let squares: i128 = d.iter().map(|x| x * x).sum();
        let rhs = 8 * squares * (d[0] * d[2] + d[4] * d[6] + d[1] * d[3] + d[5] * d[7]);
        rec.check(lhs == rhs, &d, || format!("lhs={lhs} rhs={rhs}"));
    }
    rec.result
}

/// Five mod-4 congruences linking pair products of `d` with those of `b, c`.
fn cross_term_congruences(_: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("cross_term_congruences");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a(rng, 50);
        let s = derive(&a);
        let (b, c, d) = (s.b, s.c, s.d);
        let cases: [(&str, i128, i128); 5] = [
            (
                "02",
                2 * (d[0] * d[2] + d[4] * d[6] + d[1] * d[3] + d[5] * d[7]),
                b[0] * b[2] + b[1] * b[3] + c[0] * c[2] + c[1] * c[3],
            ),
            (
                "03-",
                2 * (d[0] * d[7] + d[2] * d[5] + d[4] * d[3] + d[6] * d[1]),
                b[0] * b[3] + b[2] * b[1] - c[0] * c[3] - c[2] * c[1],
            ),
            (
                "03+",
                2 * (d[0] * d[3] + d[2] * d[1] + d[4] * d[7] + d[6] * d[5]),
                b[0] * b[3] + b[2] * b[1] + c[0] * c[3] + c[2] * c[1],
            ),
            (
                "01-",
                2 * (d[0] * d[5] + d[2] * d[7] + d[4] * d[1] + d[6] * d[3]),
                b[0] * b[1] + b[2] * b[3] - c[0] * c[1] - c[2] * c[3],
            ),
            (
                "01+",
                2 * (d[0] * d[1] + d[2] * d[3] + d[4] * d[5] + d[6] * d[7]),
                b[0] * b[1] + b[2] * b[3] + c[0] * c[1] + c[2] * c[3],
            ),
        ];
        for (name, lhs, rhs) in cases {
            rec.check((lhs - rhs).rem_euclid(4) == 0, &wide(&a), || format!("case {name}: {lhs} vs {rhs} mod 4"));
        }
    }
    rec.result
}

fn params(rng: &mut ChaCha8Rng) -> [i128; 4] {
    std::array::from_fn(|_| rng.random_range(-1000..=1000))
}

/// `D4(2k+1, 2l, 2m, 2n) = 8m + 1` and `D4(2k, 2l+1, 2m+1, 2n+1) = 8(k+l+n) - 3`
/// mod 16.
fn d4_residues_mod16(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("d4_residues_mod16");
    for _ in 0..samples {
        rec.result.samples += 1;
        let [k, l, m, n] = params(rng);
        let input = [k, l, m, n];
        if let Some(v) = rec.eval((kern.det4)([2 * k + 1, 2 * l, 2 * m, 2 * n]), &input) {
            rec.check((v - (8 * m + 1)).rem_euclid(16) == 0, &input, || format!("odd-even-even-even: {v}"));
        }
        if let Some(v) = rec.eval((kern.det4)([2 * k, 2 * l + 1, 2 * m + 1, 2 * n + 1]), &input) {
            rec.check((v - (8 * (k + l + n) - 3)).rem_euclid(16) == 0, &input, || {
                format!("even-odd-odd-odd: {v}")
            });
        }
    }
    rec.result
}

/// Exact 2-adic valuation classes of `D4` on the remaining parity patterns.
fn d4_two_adic_classes(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("d4_two_adic_classes");
    for _ in 0..samples {
        rec.result.samples += 1;
        let [k, l, m, n] = params(rng);
        let input = [k, l, m, n];
        let odd = |x: i128| x.rem_euclid(2) == 1;

        // All even.
        if let Some(v) = rec.eval((kern.det4)([2 * k, 2 * l, 2 * m, 2 * n]), &input) {
            let (branch, ok) = if odd(k + m - l - n) {
                ("even4/mixed", exactly(v, 4))
            } else {
                ("even4/equal", divisible(v, 8))
            };
            rec.branch(branch);
            rec.check(ok, &input, || format!("{branch}: D4 = {v}"));
        }

        // All odd.
        if let Some(v) = rec.eval((kern.det4)([2 * k + 1, 2 * l + 1, 2 * m + 1, 2 * n + 1]), &input) {
            let (branch, ok) = if odd(k + m - l - n) {
                ("odd4/mixed", exactly(v, 4))
            } else if ((k + m) * (l + n)).rem_euclid(4) == 3 {
                ("odd4/product_minus_one", exactly(v, 7))
            } else {
                ("odd4/otherwise", divisible(v, 9))
            };
            rec.branch(branch);
            rec.check(ok, &input, || format!("{branch}: D4 = {v}"));
        }

        // Even, odd, even, odd.
        if let Some(v) = rec.eval((kern.det4)([2 * k, 2 * l + 1, 2 * m, 2 * n + 1]), &input) {
            let prod = ((2 * k + 2 * l + 1) * (2 * m + 2 * n + 1)).rem_euclid(8);
            let (branch, ok) = if odd(k - m) && odd(l - n) {
                ("alternating/both_differ", exactly(v, 5))
            } else if !odd(k - m) && (prod == 3 || prod == 5) {
                ("alternating/product_pm3", exactly(v, 6))
            } else {
                ("alternating/otherwise", divisible(v, 7))
            };
            rec.branch(branch);
            rec.check(ok, &input, || format!("{branch}: D4 = {v}"));
        }

        // Even, even, odd, odd.
        if let Some(v) = rec.eval((kern.det4)([2 * k, 2 * l, 2 * m + 1, 2 * n + 1]), &input) {
            let prod = ((2 * k + 2 * m + 1) * (2 * l + 2 * n + 1)).rem_euclid(8);
            let (branch, ok) = if prod == 3 || prod == 5 {
                ("paired/product_pm3", exactly(v, 4))
            } else {
                ("paired/product_pm1", divisible(v, 5))
            };
            rec.branch(branch);
            rec.check(ok, &input, || format!("{branch}: D4 = {v}"));
        }
    }
    rec.result
}

fn cross_term(b: &[i128; 4], c: &[i128; 4]) -> i128 {
    b[0] * b[2] + b[1] * b[3] + c[0] * c[2] + c[1] * c[3]
}

/// Draws `a` until `b0 + b2` and `b1 + b3` have different parity.
fn random_a_split_parity(rng: &mut ChaCha8Rng) -> CoeffVec16 {
    loop {
        let a = random_a(rng, 9);
        let b = derive(&a).b;
        if (b[0] + b[2] - b[1] - b[3]).rem_euclid(2) == 1 {
            return a;
        }
    }
}

/// `D4(b) D4(c) = 1 - 4X (mod 16)` when `b0 + b2` and `b1 + b3` differ in
/// parity, with `X = b0 b2 + b1 b3 + c0 c2 + c1 c3`.
fn bc_product_mod16(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("bc_product_mod16");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a_split_parity(rng);
        let input = wide(&a);
        let s = derive(&a);
        let (Some(db), Some(dc)) = (rec.eval((kern.det4)(s.b), &input), rec.eval((kern.det4)(s.c), &input)) else {
            continue;
        };
        let x = cross_term(&s.b, &s.c);
        rec.check((db * dc - (1 - 4 * x)).rem_euclid(16) == 0, &input, || {
            format!("D4(b) D4(c) = {}, X = {x}", db * dc)
        });
    }
    rec.result
}

/// `|beta|^2 - |gamma|^2 = 4X (mod 16)` under the same parity hypothesis.
fn norm_difference_mod16(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("norm_difference_mod16");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a_split_parity(rng);
        let input = wide(&a);
        let s = derive(&a);
        let Some(n) = rec.eval((kern.norms)(&s.d), &input) else { continue };
        let x = cross_term(&s.b, &s.c);
        rec.check((n.beta_norm - n.gamma_norm - 4 * x).rem_euclid(16) == 0, &input, || {
            format!("norms {n:?}, X = {x}")
        });
    }
    rec.result
}

/// Rotating the arguments of `D4` flips its sign.
fn rotation_sign(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("rotation_sign");
    for _ in 0..samples {
        rec.result.samples += 1;
        let x = params(rng);
        let (Some(v), Some(w)) = (
            rec.eval((kern.det4)(x), &x),
            rec.eval((kern.det4)([x[1], x[2], x[3], x[0]]), &x),
        ) else {
            continue;
        };
        rec.check(v == -w, &x, || format!("{v} vs rotated {w}"));
    }
    rec.result
}

/// `b_i = c_i = d_i + d_{i+4} (mod 2)`, `b_i + c_i = 2 d_i (mod 4)` and
/// `b_i - c_i = 2 d_{i+4} (mod 4)`.
fn spectra_congruences(_: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("spectra_congruences");
    for _ in 0..samples {
        rec.result.samples += 1;
        let a = random_a(rng, 1000);
        let s = derive(&a);
        for i in 0..4 {
            let (b, c, d0, d4) = (s.b[i], s.c[i], s.d[i], s.d[i + 4]);
            let ok = (b - c).rem_euclid(2) == 0
                && (b - d0 - d4).rem_euclid(2) == 0
                && (b + c - 2 * d0).rem_euclid(4) == 0
                && (b - c - 2 * d4).rem_euclid(4) == 0;
            rec.check(ok, &wide(&a), || format!("index {i}: b={b} c={c} d={d0},{d4}"));
        }
    }
    rec.result
}

/// Both norms are unchanged when the two halves of `d` are swapped.
fn norm_swap_invariance(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("norm_swap_invariance");
    for _ in 0..samples {
        rec.result.samples += 1;
        let d = random_d(rng, 1000);
        let swapped = [d[4], d[5], d[6], d[7], d[0], d[1], d[2], d[3]];
        let (Some(x), Some(y)) = (rec.eval((kern.norms)(&d), &d), rec.eval((kern.norms)(&swapped), &d)) else {
            continue;
        };
        rec.check(x == y, &d, || format!("{x:?} vs swapped {y:?}"));
    }
    rec.result
}

/// The product-of-sums form, the `Q^2 - 4X^2` form, and the norms of the
/// Gaussian integers `beta`, `gamma` built from `alpha` all agree.
fn norm_forms_agree(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("norm_forms_agree");
    for _ in 0..samples {
        rec.result.samples += 1;
        let d = random_d(rng, 1000);
        let alpha: [GaussInt; 4] = std::array::from_fn(|i| GaussInt::new(d[i], d[i + 4]));
        let gaussian = (|| {
            let s02 = alpha[0].checked_add(alpha[2])?;
            let s13 = alpha[1].checked_add(alpha[3])?;
            let d02 = alpha[0].checked_sub(alpha[2])?;
            let d13 = alpha[1].checked_sub(alpha[3])?;
            let beta = s02.checked_square()?.checked_sub(s13.checked_square()?)?;
            let gamma = d02.checked_square()?.checked_add(d13.checked_square()?)?;
            Ok(BetaGammaNorms { beta_norm: beta.norm()?, gamma_norm: gamma.norm()? })
        })();
        let (Some(x), Some(y), Some(z)) = (
            rec.eval((kern.norms)(&d), &d),
            rec.eval(beta_gamma_norms_alt(&d), &d),
            rec.eval(gaussian, &d),
        ) else {
            continue;
        };
        rec.check(x == y && y == z, &d, || format!("{x:?} / {y:?} / {z:?}"));
    }
    rec.result
}

/// The `d` assignment driven by `(t, u, v, w, e)` used for the odd witnesses
/// gives `|beta gamma|^2 = {(8t+2e+1)^2 + (8u+2)^2} {(8v+2e+1)^2 + (8w+2)^2}`.
fn shifted_norm_identity(kern: &Kernels, rng: &mut ChaCha8Rng, samples: u64) -> SuiteResult {
    let mut rec = Recorder::new("shifted_norm_identity");
    for _ in 0..samples {
        rec.result.samples += 1;
        let [t, u, v, w] = params(rng);
        let e = rng.random_range(0..=1);
        let input = [t, u, v, w, e];
        let d = [
            2 * t - 2 * v,
            2 * t + 2 * w + 1,
            2 * t + 2 * v + 2 * e,
            2 * t - 2 * w,
            2 * u + 2 * w + 1,
            2 * u + 2 * v + 1,
            2 * u - 2 * w,
            2 * u - 2 * v,
        ];
        let Some(n) = rec.eval((kern.norms)(&d), &input) else { continue };
        let expected = ((8 * t + 2 * e + 1).pow(2) + (8 * u + 2).pow(2)) * ((8 * v + 2 * e + 1).pow(2) + (8 * w + 2).pow(2));
        rec.check(n.beta_norm * n.gamma_norm == expected, &input, || {
            format!("{} vs {expected}", n.beta_norm * n.gamma_norm)
        });
    }
    rec.result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_kernels_pass() {
        let report = lemma_suites(300, 1, &Kernels::standard());
        assert!(report.passed(), "{}\n{:?}", report.summary(), report.failure_lines());
        assert_eq!(report.suites.len(), SUITES.len());
        assert!(report.suites.iter().all(|s| s.samples == 300));
    }

    #[test]
    fn every_case_is_sampled() {
        let report = lemma_suites(2000, 5, &Kernels::standard());
        let branches = &report.suite("d4_two_adic_classes").unwrap().branches;
        assert_eq!(branches.len(), 10, "{branches:?}");
    }

    #[test]
    fn each_fault_is_detected() {
        for name in FAULTS {
            let report = lemma_suites(200, 2, &Kernels::with_fault(name).unwrap());
            assert!(!report.passed(), "fault {name} went unnoticed");
            assert!(!report.failure_lines().is_empty());
        }
        assert!(Kernels::with_fault("nonsense").is_none());
    }

    #[test]
    fn deterministic_under_seed() {
        let a = lemma_suites(50, 9, &Kernels::with_fault("det4_shift").unwrap());
        let b = lemma_suites(50, 9, &Kernels::with_fault("det4_shift").unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn listed_examples() {
        assert_eq!(det4([3, 0, 2, 0]).unwrap().rem_euclid(16), 9);
        assert_eq!(det4([0, 1, 1, 1]).unwrap().rem_euclid(16), 13);
        let v = det4([2, 0, 0, 0]).unwrap();
        assert_eq!(v, 16);
        assert!(exactly(v, 4));
    }
}
