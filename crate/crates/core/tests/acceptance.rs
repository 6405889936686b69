//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Tolerances: every comparison is exact integer equality (zero tolerance);
//! every violation count must be exactly zero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use c4sq_core::classifier::a_decompose;
use c4sq_core::verification::{
    lemma_suites, nine_mod16_window, odd_one_window, pow15_window, pow16_window, scan_exhaustive,
    scan_random, window_roundtrip, Kernels, ScanReport, ViolationKind,
};
use c4sq_core::{classify, det16_direct, CoeffVec16, Rejection, SClassification};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn report(id: u32, name: &str, start: Instant, o: &Outcome) {
    let status = if o.passed { "PASS" } else { "FAIL" };
    println!("{status} [{id}] {name}: {} ({:.1}s)", o.detail, start.elapsed().as_secs_f64());
}

fn count(r: &ScanReport, pred: impl Fn(&ViolationKind) -> bool) -> usize {
    r.violations.iter().filter(|v| pred(&v.kind)).count()
}

fn is_prime(n: i128) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// All `(8j+1)(8k-3) p1 p2 p3` with `p_i = 5 (mod 8)` prime, the parity
/// constraint, and `|value| <= bound`, by direct enumeration.
fn brute_force_a(bound: i128) -> BTreeSet<i128> {
    let p: Vec<i128> = (5..=bound / 25).filter(|&x| x % 8 == 5 && is_prime(x)).collect();
    let l = |q: i128| (q + 3) / 8;
    let mut out = BTreeSet::new();
    for (x, &p1) in p.iter().enumerate() {
        for (y, &p2) in p.iter().enumerate().skip(x) {
            for &p3 in p.iter().skip(y) {
                let triple = p1 * p2 * p3;
                if triple > bound {
                    break;
                }
                let room = bound / triple;
                for j in -room..=room {
                    let unit = 8 * j + 1;
                    if unit.abs() > room {
                        continue;
                    }
                    for k in -room..=room {
                        let kf = 8 * k - 3;
                        if (unit * kf).abs() > room {
                            continue;
                        }
                        if (j - k - l(p1) - l(p2) - l(p3)).rem_euclid(2) == 1 {
                            out.insert(unit * kf * triple);
                        }
                    }
                }
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let mut all = true;
    let mut record = |id, name, start, o: Outcome| {
        report(id, name, start, &o);
        all &= o.passed;
    };

    // 1. Oracle equivalence on 10^5 random vectors in [-9, 9]^16.
    let start = Instant::now();
    let random = scan_random(100_000, 9, 42, 1).expect("bound 9 is admissible");
    let mismatches = count(&random, |k| {
        matches!(k, ViolationKind::OracleMismatch { .. } | ViolationKind::Evaluation(_))
    });
    record(
        1,
        "three determinant routes agree",
        start,
        outcome(
            random.tuples_checked == 100_000 && mismatches == 0,
            format!("{} samples, {mismatches} disagreements", random.tuples_checked),
        ),
    );

    // 2. No scanned determinant is rejected by the classifier.
    let start = Instant::now();
    let binary = scan_exhaustive(&[0, 1], None, 1).expect("binary support is enumerable");
    let rejected = count(&binary, |k| !matches!(k, ViolationKind::OracleMismatch { .. }))
        + count(&random, |k| matches!(k, ViolationKind::NotInS | ViolationKind::BadCertificate(_)));
    record(
        2,
        "scanned determinants are all in S",
        start,
        outcome(
            binary.tuples_checked == 65_536 && rejected == 0,
            format!(
                "{} binary tuples ({} values), {} random tuples ({} values), {rejected} rejected",
                binary.tuples_checked,
                binary.distinct_values(),
                random.tuples_checked,
                random.distinct_values()
            ),
        ),
    );

    // 3. Witness round-trips across the windows.
    let start = Instant::now();
    let mut observed = binary.observed.clone();
    observed.extend(random.observed.iter().copied());
    let a_members: Vec<i128> =
        nine_mod16_window(50_000).filter(|&n| matches!(classify(n), SClassification::OddA(_))).collect();
    let consistent = nine_mod16_window(50_000)
        .all(|n| a_decompose(n).unwrap().is_some() == a_members.binary_search(&n).is_ok());
    let windows: Vec<i128> = odd_one_window(500)
        .chain(pow16_window(100))
        .chain(pow15_window(&[5, 13, 29, 37, 53, 61], 20))
        .chain(a_members.iter().copied())
        .collect();
    let members = windows.iter().filter(|&&n| classify(n).is_member()).count();
    let trip = window_roundtrip(windows.iter().copied(), &observed);
    let spot = [-375, 1625, 5625].iter().all(|n| a_members.contains(n));
    record(
        3,
        "witnesses reproduce every member",
        start,
        outcome(
            trip.passed() && members == windows.len() && consistent && spot,
            format!(
                "{} values ({} from A), {} witnessed, {} failures",
                windows.len(),
                a_members.len(),
                members,
                trip.violations.len()
            ),
        ),
    );

    // 4. A-membership against a brute-force enumeration of the five factors.
    let start = Instant::now();
    let brute = brute_force_a(20_000);
    let mut disagreements = 0;
    let mut checked = 0;
    for n in nine_mod16_window(20_000) {
        checked += 1;
        let cert = a_decompose(n).unwrap();
        let sound = cert.is_none_or(|c| c.value() == Some(n) && c.parity_ok());
        if cert.is_some() != brute.contains(&n) || !sound {
            disagreements += 1;
        }
    }
    record(
        4,
        "A-membership matches brute force",
        start,
        outcome(
            disagreements == 0 && brute.iter().all(|n| n.rem_euclid(16) == 9),
            format!("{checked} values, {} in A, {disagreements} disagreements", brute.len()),
        ),
    );

    // 5. Concrete determinant values of the closed-form families.
    let start = Instant::now();
    let mut odd_unit = [1i64; 16];
    odd_unit[0] = 2;
    let mut pow16 = [1i64; 16];
    pow16[0] = 3;
    pow16[6] = 2;
    pow16[8] = 2;
    let pow15 = [1, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0, 0];
    let got = [odd_unit, pow16, pow15].map(|a| det16_direct(&CoeffVec16(a)).unwrap());
    record(
        5,
        "closed-form family values",
        start,
        outcome(got == [17, 327_680, 163_840], format!("{got:?}, expected [17, 327680, 163840]")),
    );

    // 6. Identity and congruence suites.
    let start = Instant::now();
    let lemmas = lemma_suites(10_000, 1, &Kernels::standard());
    let failing: Vec<&str> = lemmas.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect();
    let cases = lemmas.suite("d4_two_adic_classes").map_or(0, |s| s.branches.len());
    record(
        6,
        "identity and congruence suites",
        start,
        outcome(
            failing.is_empty() && cases == 10,
            format!("{} suites x 10000 samples, {cases}/10 valuation cases hit, failing: {failing:?}", lemmas.suites.len()),
        ),
    );
    for line in lemmas.failure_lines() {
        println!("    {line}");
    }

    // 7. Negative controls.
    let start = Instant::now();
    let mut controls = vec![9, -7, 1 << 14, 3 << 15];
    controls.extend((-1000i128..=1000).filter(|n| n % 2 != 0 && ![1, 9].contains(&n.rem_euclid(16))));
    let accepted: Vec<i128> = controls.iter().copied().filter(|&n| classify(n).is_member()).collect();
    let seen: Vec<i128> = controls.iter().copied().filter(|n| observed.contains(n)).collect();
    let reasons_ok = classify(9) == SClassification::NotInS { reason: Rejection::OddANoDecomposition }
        && classify(3 << 15) == SClassification::NotInS { reason: Rejection::Even15NoPrimeInP };
    record(
        7,
        "negative controls rejected and never observed",
        start,
        outcome(
            accepted.is_empty() && seen.is_empty() && reasons_ok,
            format!("{} controls, accepted {accepted:?}, observed in scans {seen:?}", controls.len()),
        ),
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
