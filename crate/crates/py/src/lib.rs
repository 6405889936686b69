//! Python bindings: `import c4sq`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use c4sq_core::verification::{lemma_suites, scan_exhaustive, scan_random, Kernels, ScanReport};
use c4sq_core::witness::witness_unverified;
use c4sq_core::{gdet, CertificateDocument, CoeffVec16, Error, SClassification};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) | Error::EnvelopeExceeded(_) => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn coeffs(a: Vec<i64>) -> PyResult<CoeffVec16> {
    CoeffVec16::try_from(a.as_slice()).map_err(to_py)
}

/// Membership certificate for an integer, optionally with a witness.
#[pyclass(frozen, name = "Certificate")]
struct Certificate {
    doc: CertificateDocument,
}

#[pymethods]
impl Certificate {
    #[getter]
    fn value(&self) -> PyResult<i128> {
        self.doc.value_i128().map_err(to_py)
    }

    #[getter]
    fn in_s(&self) -> bool {
        self.doc.is_member()
    }

    #[getter]
    fn status(&self) -> &str {
        &self.doc.status
    }

    /// `odd_16m_plus_1`, `set_A`, `pow2_15`, `pow2_16`, or `None`.
    #[getter(class_name)]
    fn class_name(&self) -> Option<&str> {
        self.doc.class.as_deref()
    }

    #[getter]
    fn reason(&self) -> Option<&str> {
        self.doc.reason.as_deref()
    }

    #[getter]
    fn params(&self) -> PyResult<BTreeMap<String, i128>> {
        self.doc
            .params
            .iter()
            .map(|(k, v)| v.parse().map(|v| (k.clone(), v)).map_err(|_| PyValueError::new_err("malformed parameter")))
            .collect()
    }

    #[getter]
    fn witness(&self) -> PyResult<Option<Vec<i64>>> {
        Ok(self.doc.witness_vec().map_err(to_py)?.map(|a| a.0.to_vec()))
    }

    #[getter]
    fn verified(&self) -> bool {
        self.doc.verified
    }

    fn to_json(&self) -> PyResult<String> {
        self.doc.to_json_line().map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({})", self.doc.to_text().replace('\n', ";"))
    }
}

/// Determinant of the 16 coefficients by the chosen route: `direct`,
/// `factored` or `spectral`.
#[pyfunction]
#[pyo3(signature = (a, method = "direct"))]
fn det16(a: Vec<i64>, method: &str) -> PyResult<i128> {
    let a = coeffs(a)?;
    match method {
        "direct" => gdet::det16_direct(&a),
        "factored" => gdet::det16_factored(&a),
        "spectral" => gdet::det16_spectral(&a),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(to_py)
}

/// The 4x4 circulant determinant.
#[pyfunction]
fn det4(x: [i128; 4]) -> PyResult<i128> {
    gdet::det4(x).map_err(to_py)
}

#[pyfunction]
fn classify(n: i128) -> Certificate {
    Certificate { doc: CertificateDocument::from_classification(n, &c4sq_core::classify(n)) }
}

/// `(j, k, (p1, p2, p3))`.
type ADecomposition = (i128, i128, (u64, u64, u64));

/// `(j, k, (p1, p2, p3))` with `n = (8j+1)(8k-3) p1 p2 p3`, or `None`.
#[pyfunction]
fn a_decompose(n: i128) -> PyResult<Option<ADecomposition>> {
    let cert = c4sq_core::a_decompose(n).map_err(to_py)?;
    Ok(cert.map(|c| (c.j, c.k, (c.primes[0], c.primes[1], c.primes[2]))))
}

/// Certificate with a witness for a member; a rejection certificate
/// otherwise.
#[pyfunction]
#[pyo3(signature = (n, verify = true))]
fn witness(n: i128, verify: bool) -> PyResult<Certificate> {
    let result = if verify { c4sq_core::witness(n) } else { witness_unverified(n) };
    match result {
        Ok((a, class)) => {
            let doc = CertificateDocument::from_classification(n, &class).with_witness(&a, verify).map_err(to_py)?;
            Ok(Certificate { doc })
        }
        Err(Error::NotAttainable { reason, .. }) => Ok(Certificate {
            doc: CertificateDocument::from_classification(n, &SClassification::NotInS { reason }),
        }),
        Err(e) => Err(to_py(e)),
    }
}

fn summary(r: &ScanReport) -> BTreeMap<&'static str, u64> {
    BTreeMap::from([
        ("tuples_checked", r.tuples_checked),
        ("distinct_values", r.distinct_values() as u64),
        ("violations", r.violations.len() as u64),
    ])
}

#[pyfunction]
#[pyo3(signature = (count, bound = 9, seed = 42, jobs = 1))]
fn scan(py: Python<'_>, count: u64, bound: i64, seed: u64, jobs: usize) -> PyResult<BTreeMap<&'static str, u64>> {
    let r = py.detach(|| scan_random(count, bound, seed, jobs)).map_err(to_py)?;
    Ok(summary(&r))
}

#[pyfunction]
#[pyo3(signature = (support, limit = None, jobs = 1))]
fn scan_support(
    py: Python<'_>,
    support: Vec<i64>,
    limit: Option<u64>,
    jobs: usize,
) -> PyResult<BTreeMap<&'static str, u64>> {
    let r = py.detach(|| scan_exhaustive(&support, limit, jobs)).map_err(to_py)?;
    Ok(summary(&r))
}

/// Runs the identity and congruence suites; returns `{suite: failures}`.
#[pyfunction]
#[pyo3(signature = (samples = 1000, seed = 1))]
fn selfcheck(py: Python<'_>, samples: u64, seed: u64) -> BTreeMap<&'static str, u64> {
    let report = py.detach(|| lemma_suites(samples, seed, &Kernels::standard()));
    report.suites.iter().map(|s| (s.name, s.failed)).collect()
}

#[pymodule]
fn c4sq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Certificate>()?;
    m.add_function(wrap_pyfunction!(det16, m)?)?;
    m.add_function(wrap_pyfunction!(det4, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(a_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(scan_support, m)?)?;
    m.add_function(wrap_pyfunction!(selfcheck, m)?)?;
    m.add("ENVELOPE", c4sq_core::ENVELOPE)?;
    Ok(())
}
