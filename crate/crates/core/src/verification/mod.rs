//! Empirical checks: scans over coefficient space, witness round-trips over
//! integer windows, and seeded property suites for the algebraic identities
//! the classification rests on.

mod scan;
mod suites;

pub use scan::{
    classify_tuple, nine_mod16_window, odd_one_window, pow15_window, pow16_window, scan_exhaustive,
    scan_random, window_roundtrip, ScanReport, Violation, ViolationKind, BLOCK, MAX_RANDOM_BOUND,
};
pub use suites::{lemma_suites, Kernels, LemmaReport, SuiteFailure, SuiteResult, FAULTS};
