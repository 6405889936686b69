//! `c4sq`: evaluate, classify and synthesize integer group determinants of
//! `C4 x C4`.
//!
//! Exit codes: 0 success / member, 1 not a member or violations found,
//! 2 usage, parse or envelope error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use c4sq_core::gdet::breakdown;
use c4sq_core::verification::{lemma_suites, scan_exhaustive, scan_random, Kernels, ScanReport, FAULTS};
use c4sq_core::witness::witness_unverified;
use c4sq_core::{classify, det16_direct, witness, CertificateDocument, CoeffVec16, Error, Rejection, SClassification};

#[derive(Parser)]
#[command(name = "c4sq", version, about = "Integer group determinants of C4 x C4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the determinant of 16 coefficients a0..a15 (index r + 4s).
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(num_args = 16, required = true, value_name = "A")]
        coeffs: Vec<i64>,
        /// Print every factor of the factored form.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether n is a determinant value and print a certificate.
    #[command(allow_negative_numbers = true)]
    Classify {
        n: i128,
        #[arg(long)]
        json: bool,
    },
    /// Produce 16 coefficients whose determinant is n.
    #[command(allow_negative_numbers = true)]
    Witness {
        n: i128,
        #[arg(long)]
        json: bool,
        /// Skip re-evaluating the witness.
        #[arg(long)]
        no_verify: bool,
    },
    /// Classify the determinants of many coefficient vectors.
    Scan(ScanArgs),
    /// Run the identity and congruence suites.
    Selfcheck {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Replace one formula with a broken variant (the run must fail).
        #[arg(long, value_name = "NAME", value_parser = clap::builder::PossibleValuesParser::new(FAULTS))]
        inject_fault: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Enumerate every vector over these coefficients, e.g. 0,1 or -1,0,1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "random")]
    support: Option<Vec<i64>>,
    /// Number of random vectors to draw.
    #[arg(long, value_name = "N")]
    random: Option<u64>,
    /// Coefficient bound for random vectors.
    #[arg(long, default_value_t = 9)]
    bound: i64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Stop an exhaustive scan after this many vectors.
    #[arg(long)]
    limit: Option<u64>,
    #[arg(long)]
    json: bool,
}

const MEMBER: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { MEMBER });
        }
    };
    match cli.command {
        Command::Eval { coeffs, explain, json } => eval(&coeffs, explain, json),
        Command::Classify { n, json } => classify_cmd(n, json),
        Command::Witness { n, json, no_verify } => witness_cmd(n, json, no_verify),
        Command::Scan(args) => scan_cmd(args),
        Command::Selfcheck { samples, seed, inject_fault, json } => selfcheck(samples, seed, inject_fault, json),
    }
}

fn eval(coeffs: &[i64], explain: bool, json: bool) -> ExitCode {
    let a = match CoeffVec16::try_from(coeffs) {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let value = match det16_direct(&a) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    if !explain {
        if json {
            println!("{}", json!({ "value": value.to_string() }));
        } else {
            println!("{value}");
        }
        return ExitCode::from(MEMBER);
    }
    let b = match breakdown(&a) {
        Ok(b) => b,
        Err(e) => return fail(e),
    };
    if b.value != value {
        return fail(Error::InternalMismatch(format!("factored {} vs direct {value}", b.value)));
    }
    if json {
        let spectral: Vec<String> = b.spectral.iter().map(ToString::to_string).collect();
        println!(
            "{}",
            json!({
                "value": value.to_string(),
                "det4_b": b.det4_b.to_string(),
                "det4_c": b.det4_c.to_string(),
                "beta_norm": b.norms.beta_norm.to_string(),
                "gamma_norm": b.norms.gamma_norm.to_string(),
                "spectral": spectral,
            })
        );
    } else {
        println!("D4(b)      = {}", b.det4_b);
        println!("D4(c)      = {}", b.det4_c);
        println!("|beta|^2   = {}", b.norms.beta_norm);
        println!("|gamma|^2  = {}", b.norms.gamma_norm);
        for (k, f) in b.spectral.iter().enumerate() {
            println!("character {k}: {f}");
        }
        println!("value      = {value}");
    }
    ExitCode::from(MEMBER)
}

fn print_doc(doc: &CertificateDocument, json: bool) -> Result<(), Error> {
    if json {
        println!("{}", doc.to_json_line()?);
    } else {
        doc.check()?;
        println!("{}", doc.to_text());
    }
    Ok(())
}

fn classify_cmd(n: i128, json: bool) -> ExitCode {
    let class = classify(n);
    if class == (SClassification::NotInS { reason: Rejection::EnvelopeExceeded }) {
        return fail(Error::EnvelopeExceeded(n));
    }
    let doc = CertificateDocument::from_classification(n, &class);
    if let Err(e) = print_doc(&doc, json) {
        return fail(e);
    }
    ExitCode::from(if class.is_member() { MEMBER } else { NEGATIVE })
}

fn witness_cmd(n: i128, json: bool, no_verify: bool) -> ExitCode {
    let result = if no_verify { witness_unverified(n) } else { witness(n) };
    let doc = match result {
        Ok((a, class)) => match CertificateDocument::from_classification(n, &class).with_witness(&a, !no_verify) {
            Ok(doc) => doc,
            Err(e) => return fail(e),
        },
        Err(Error::NotAttainable { reason, .. }) => {
            CertificateDocument::from_classification(n, &SClassification::NotInS { reason })
        }
        Err(e) => return fail(e),
    };
    if let Err(e) = print_doc(&doc, json) {
        return fail(e);
    }
    ExitCode::from(if doc.is_member() { MEMBER } else { NEGATIVE })
}

fn scan_cmd(args: ScanArgs) -> ExitCode {
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let report: Result<ScanReport, Error> = match (&args.support, args.random) {
        (Some(support), _) => scan_exhaustive(support, args.limit, jobs),
        (None, Some(count)) => scan_random(count, args.bound, args.seed, jobs),
        (None, None) => return fail("scan needs --support or --random"),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if args.json {
        for v in &report.violations {
            println!("{}", v.to_json_line());
        }
        println!(
            "{}",
            json!({
                "tuples_checked": report.tuples_checked.to_string(),
                "distinct_values": report.distinct_values().to_string(),
                "violations": report.violations.len().to_string(),
            })
        );
    } else {
        println!("{}", report.summary());
        for v in report.violations.iter().take(20) {
            println!("violation: {}", v.to_json_line());
        }
    }
    ExitCode::from(if report.passed() { MEMBER } else { NEGATIVE })
}

fn selfcheck(samples: u64, seed: u64, fault: Option<String>, json: bool) -> ExitCode {
    let kernels = match fault.as_deref() {
        None => Kernels::standard(),
        Some(name) => match Kernels::with_fault(name) {
            Some(k) => k,
            None => return fail(format!("unknown fault {name}")),
        },
    };
    let report = lemma_suites(samples, seed, &kernels);
    if json {
        for line in report.failure_lines() {
            println!("{line}");
        }
        let suites: Vec<_> = report
            .suites
            .iter()
            .map(|s| json!({"suite": s.name, "samples": s.samples.to_string(), "failures": s.failed.to_string()}))
            .collect();
        println!("{}", json!({ "seed": seed.to_string(), "passed": report.passed(), "suites": suites }));
    } else {
        print!("{}", report.summary());
        for line in report.failure_lines().iter().take(20) {
            println!("failure: {line}");
        }
        println!("{}", if report.passed() { "all suites passed" } else { "FAILURES" });
    }
    ExitCode::from(if report.passed() { MEMBER } else { NEGATIVE })
}
