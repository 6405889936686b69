//! The machine-readable record printed by the CLI and returned to Python.
//!
//! Integers are carried as decimal strings so consumers with 53-bit floats
//! do not silently round them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classifier::SClassification;
use crate::gdet::det16_direct;
use crate::spectra::CoeffVec16;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub value: String,
    /// `in_S` or `not_in_S`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub verified: bool,
}

impl CertificateDocument {
    pub fn from_classification(n: i128, class: &SClassification) -> Self {
        let reason = match class {
            SClassification::NotInS { reason } => Some(reason.to_string()),
            _ => None,
        };
        CertificateDocument {
            value: n.to_string(),
            status: if class.is_member() { "in_S" } else { "not_in_S" }.to_string(),
            class: class.class_name().map(str::to_string),
            params: class.params().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            reason,
            witness: None,
            verified: false,
        }
    }

    /// Attaches a witness. With `verify`, the determinant is recomputed and
    /// must equal the value.
    pub fn with_witness(mut self, a: &CoeffVec16, verify: bool) -> Result<Self> {
        if verify {
            let n = self.value_i128()?;
            let det = det16_direct(a)?;
            if det != n {
                return Err(Error::InternalMismatch(format!("witness {a} evaluates to {det}, not {n}")));
            }
        }
        self.witness = Some(a.0.iter().map(i64::to_string).collect());
        self.verified = verify;
        Ok(self)
    }

    pub fn is_member(&self) -> bool {
        self.status == "in_S"
    }

    pub fn value_i128(&self) -> Result<i128> {
        self.value
            .parse()
            .map_err(|_| Error::PreconditionViolated(format!("malformed value {:?}", self.value)))
    }

    pub fn witness_vec(&self) -> Result<Option<CoeffVec16>> {
        let Some(w) = &self.witness else { return Ok(None) };
        let parsed: std::result::Result<Vec<i64>, _> = w.iter().map(|x| x.parse::<i64>()).collect();
        let parsed = parsed.map_err(|_| Error::PreconditionViolated(format!("malformed witness {w:?}")))?;
        CoeffVec16::try_from(parsed.as_slice()).map(Some)
    }

    /// Re-checks the document: a verified witness must reproduce the value.
    pub fn check(&self) -> Result<()> {
        if let Some(a) = self.witness_vec()? {
            if self.verified && det16_direct(&a)? != self.value_i128()? {
                return Err(Error::InternalMismatch(format!("witness does not reproduce {}", self.value)));
            }
        }
        Ok(())
    }

    /// One JSON object, no trailing newline. Re-checks the witness first.
    pub fn to_json_line(&self) -> Result<String> {
        self.check()?;
        serde_json::to_string(self).map_err(|e| Error::InternalMismatch(e.to_string()))
    }

    /// Multi-line human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}", self.value, self.status);
        if let Some(class) = &self.class {
            out.push_str(&format!(" ({class})"));
        }
        if let Some(reason) = &self.reason {
            out.push_str(&format!(" [{reason}]"));
        }
        for (k, v) in &self.params {
            out.push_str(&format!("\n  {k} = {v}"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("\n  witness = ({})", w.join(", ")));
            out.push_str(if self.verified { "\n  verified" } else { "\n  not verified" });
        }
        out
    }
}
