use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::classifier::{classify, classify_factored, SClassification};
use crate::gdet::{det16_direct, det16_factored, det16_pieces, det16_spectral};
use crate::numtheory::factorize_product;
use crate::spectra::CoeffVec16;
use crate::witness::witness;
use crate::{Error, Result};

/// Indices per work block. Blocks are the unit of parallelism and of RNG
/// stream selection, so results do not depend on the worker count.
pub const BLOCK: u64 = 4096;

/// Largest coefficient bound whose Hadamard bound fits in `i128`.
pub const MAX_RANDOM_BOUND: i64 = 61;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// A determinant value the classifier rejected.
    NotInS,
    /// The three determinant routes disagree.
    OracleMismatch { direct: i128, factored: i128, spectral: i128 },
    /// A certificate that does not check out.
    BadCertificate(String),
    /// An evaluation or classification returned an error.
    Evaluation(String),
    /// A member whose witness could not be produced or verified.
    WitnessFailed(String),
    /// A rejected value that some scan produced.
    RejectedButObserved,
}

impl ViolationKind {
    pub fn label(&self) -> &'static str {
        match self {
            ViolationKind::NotInS => "not_in_s",
            ViolationKind::OracleMismatch { .. } => "oracle_mismatch",
            ViolationKind::BadCertificate(_) => "bad_certificate",
            ViolationKind::Evaluation(_) => "evaluation_error",
            ViolationKind::WitnessFailed(_) => "witness_failed",
            ViolationKind::RejectedButObserved => "rejected_but_observed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Option<CoeffVec16>,
    pub value: Option<i128>,
    pub classification: Option<SClassification>,
    pub kind: ViolationKind,
}

impl Violation {
    pub fn to_json_line(&self) -> String {
        let mut obj = json!({
            "kind": self.kind.label(),
            "tuple": self.tuple.map(|a| a.0.iter().map(i64::to_string).collect::<Vec<_>>()),
            "value": self.value.map(|v| v.to_string()),
            "classification": self.classification.map(|c| c.to_string()),
        });
        let detail = match &self.kind {
            ViolationKind::OracleMismatch { direct, factored, spectral } => {
                Some(format!("direct={direct} factored={factored} spectral={spectral}"))
            }
            ViolationKind::BadCertificate(s) | ViolationKind::Evaluation(s) | ViolationKind::WitnessFailed(s) => {
                Some(s.clone())
            }
            ViolationKind::NotInS | ViolationKind::RejectedButObserved => None,
        };
        if let Some(detail) = detail {
            obj["detail"] = json!(detail);
        }
        obj.to_string()
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub tuples_checked: u64,
    pub violations: Vec<Violation>,
    /// Every determinant value seen (scans) or every value tried (windows).
    pub observed: BTreeSet<i128>,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn distinct_values(&self) -> usize {
        self.observed.len()
    }

    pub fn summary(&self) -> String {
        format!(
            "tuples checked: {}\ndistinct values: {}\nviolations: {}\nelapsed: {:.3}s",
            self.tuples_checked,
            self.distinct_values(),
            self.violations.len(),
            self.elapsed.as_secs_f64()
        )
    }

    fn merge(&mut self, other: ScanReport) {
        self.tuples_checked += other.tuples_checked;
        self.violations.extend(other.violations);
        self.observed.extend(other.observed);
    }
}

/// Determinant and classification of one tuple. The classifier receives the
/// factorization assembled from the ten small factors of the determinant, so
/// values far beyond the plain classifier's envelope are handled exactly.
pub fn classify_tuple(a: &CoeffVec16) -> Result<(i128, SClassification)> {
    let n = det16_factored(a)?;
    let f = factorize_product(&det16_pieces(a)?)?;
    Ok((n, classify_factored(n, &f)?))
}

fn check_tuple(a: &CoeffVec16, with_oracles: bool, report: &mut ScanReport) {
    report.tuples_checked += 1;
    let fail = |value, classification, kind| Violation { tuple: Some(*a), value, classification, kind };
    let (n, class) = match classify_tuple(a) {
        Ok(x) => x,
        Err(e) => {
            report.violations.push(fail(None, None, ViolationKind::Evaluation(e.to_string())));
            return;
        }
    };
    report.observed.insert(n);
    if with_oracles {
        match (det16_direct(a), det16_spectral(a)) {
            (Ok(direct), Ok(spectral)) if direct == n && spectral == n => {}
            (Ok(direct), Ok(spectral)) => report.violations.push(fail(
                Some(n),
                Some(class),
                ViolationKind::OracleMismatch { direct, factored: n, spectral },
            )),
            (Err(e), _) | (_, Err(e)) => {
                report.violations.push(fail(Some(n), Some(class), ViolationKind::Evaluation(e.to_string())))
            }
        }
    }
    if !class.is_member() {
        report.violations.push(fail(Some(n), Some(class), ViolationKind::NotInS));
    } else if let Err(msg) = class.validate(n) {
        report.violations.push(fail(Some(n), Some(class), ViolationKind::BadCertificate(msg)));
    }
}

fn run_blocks<F>(total: u64, jobs: usize, per_block: F) -> Result<ScanReport>
where
    F: Fn(u64, std::ops::Range<u64>) -> ScanReport + Sync,
{
    let start = Instant::now();
    let blocks = total.div_ceil(BLOCK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("worker pool: {e}")))?;
    let parts: Vec<ScanReport> = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| per_block(b, b * BLOCK..((b + 1) * BLOCK).min(total)))
            .collect()
    });
    let mut report = ScanReport::default();
    for part in parts {
        report.merge(part);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Enumerates `support^16` in lexicographic order (`a0` slowest), up to
/// `limit` tuples, classifying every determinant.
pub fn scan_exhaustive(support: &[i64], limit: Option<u64>, jobs: usize) -> Result<ScanReport> {
    let support: Vec<i64> = support.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if support.is_empty() {
        return Err(Error::PreconditionViolated("empty support".into()));
    }
    let base = support.len() as u64;
    let full = base.checked_pow(16);
    let total = match (full, limit) {
        (Some(f), Some(l)) => f.min(l),
        (Some(f), None) => f,
        (None, Some(l)) => l,
        (None, None) => {
            return Err(Error::PreconditionViolated(format!(
                "{base}^16 tuples cannot be enumerated; set a limit"
            )))
        }
    };
    run_blocks(total, jobs, |_, range| {
        let mut report = ScanReport::default();
        for idx in range {
            let mut a = [0i64; 16];
            let mut rest = idx;
            for slot in a.iter_mut().rev() {
                *slot = support[(rest % base) as usize];
                rest /= base;
            }
            check_tuple(&CoeffVec16(a), false, &mut report);
        }
        report
    })
}

/// `count` seeded samples from `[-bound, bound]^16`. Besides classification,
/// each sample is evaluated by all three determinant routes.
pub fn scan_random(count: u64, bound: i64, seed: u64, jobs: usize) -> Result<ScanReport> {
    if !(0..=MAX_RANDOM_BOUND).contains(&bound) {
        return Err(Error::PreconditionViolated(format!(
            "coefficient bound {bound} outside 0..={MAX_RANDOM_BOUND}"
        )));
    }
    run_blocks(count, jobs, |block, range| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(block);
        let mut report = ScanReport::default();
        for _ in range {
            let a = CoeffVec16(std::array::from_fn(|_| rng.random_range(-bound..=bound)));
            check_tuple(&a, true, &mut report);
        }
        report
    })
}

/// Every member in `values` must have a witness that reproduces it exactly.
/// Every rejected value must be absent from `observed`, the determinant
/// values of earlier scans.
pub fn window_roundtrip<I>(values: I, observed: &BTreeSet<i128>) -> ScanReport
where
    I: IntoIterator<Item = i128>,
{
    let start = Instant::now();
    let mut report = ScanReport::default();
    for n in values {
        report.tuples_checked += 1;
        report.observed.insert(n);
        let class = classify(n);
        let fail = |tuple, kind| Violation { tuple, value: Some(n), classification: Some(class), kind };
        if class.is_member() {
            match witness(n) {
                Ok((_, c)) if c == class => {}
                Ok((a, c)) => report.violations.push(fail(
                    Some(a),
                    ViolationKind::WitnessFailed(format!("classification changed to {c}")),
                )),
                Err(e) => report.violations.push(fail(None, ViolationKind::WitnessFailed(e.to_string()))),
            }
        } else if observed.contains(&n) {
            report.violations.push(fail(None, ViolationKind::RejectedButObserved));
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// `16m + 1` for `|m| <= bound`.
pub fn odd_one_window(bound: i128) -> impl Iterator<Item = i128> {
    (-bound..=bound).map(|m| 16 * m + 1)
}

/// `2^16 m` for `|m| <= bound`.
pub fn pow16_window(bound: i128) -> impl Iterator<Item = i128> {
    (-bound..=bound).map(|m| m << 16)
}

/// `2^15 p (2m + 1)` for each `p` and `|m| <= bound`.
pub fn pow15_window(primes: &[i128], bound: i128) -> impl Iterator<Item = i128> + '_ {
    primes.iter().flat_map(move |&p| (-bound..=bound).map(move |m| (1 << 15) * p * (2 * m + 1)))
}

/// `n = 9 (mod 16)` with `|n| <= bound`.
pub fn nine_mod16_window(bound: i128) -> impl Iterator<Item = i128> {
    (-bound..=bound).filter(|n| n.rem_euclid(16) == 9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_support() {
        let r = scan_exhaustive(&[0], None, 1).unwrap();
        assert_eq!(r.tuples_checked, 1);
        assert_eq!(r.observed.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert!(r.passed());
        assert_eq!(classify_tuple(&CoeffVec16::zero()).unwrap().1, SClassification::Even16 { m: 0 });
    }

    #[test]
    fn limit_and_order() {
        let r = scan_exhaustive(&[1, 0], Some(2), 1).unwrap();
        // Tuples (0,..,0) and (0,..,0,1): values 0 and 1.
        assert_eq!(r.tuples_checked, 2);
        assert_eq!(r.observed.iter().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert!(scan_exhaustive(&[], None, 1).is_err());
        assert!(scan_exhaustive(&(0..20).collect::<Vec<_>>(), None, 1).is_err());
    }

    #[test]
    fn random_scan_is_independent_of_jobs() {
        let a = scan_random(5000, 9, 3, 1).unwrap();
        let b = scan_random(5000, 9, 3, 3).unwrap();
        assert!(a.passed() && b.passed());
        assert_eq!(a.observed, b.observed);
        assert_eq!(a.tuples_checked, 5000);
    }

    #[test]
    fn random_scan_bounds() {
        let r = scan_random(1, 0, 99, 1).unwrap();
        assert_eq!(r.observed.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert!(scan_random(10, MAX_RANDOM_BOUND, 1, 1).unwrap().passed());
        assert!(scan_random(10, MAX_RANDOM_BOUND + 1, 1, 1).is_err());
    }

    #[test]
    fn windows() {
        let r = window_roundtrip(odd_one_window(20).chain(pow16_window(5)), &BTreeSet::new());
        assert!(r.passed());
        assert_eq!(r.tuples_checked, 41 + 11);
        let observed: BTreeSet<i128> = [9].into();
        let r = window_roundtrip([9, 7, 17], &observed);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::RejectedButObserved);
        assert!(r.violations[0].to_json_line().contains("\"value\":\"9\""));
    }

    #[test]
    fn window_contents() {
        assert_eq!(pow15_window(&[5], 1).collect::<Vec<_>>(), vec![-163840, 163840, 491520]);
        assert_eq!(nine_mod16_window(30).collect::<Vec<_>>(), vec![-23, -7, 9, 25]);
    }
}
