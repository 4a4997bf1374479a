//! Machine-readable run reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};

pub const SCHEMA: &str = "workbench-report/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// `verdicts` are computed facts; `checks` are assertions whose failure
/// makes the run exit with status 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub version: String,
    pub command: Vec<String>,
    pub verdicts: BTreeMap<String, bool>,
    pub checks: BTreeMap<String, bool>,
    pub certificates: BTreeMap<String, Certificate>,
    pub details: serde_json::Value,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            verdicts: BTreeMap::new(),
            checks: BTreeMap::new(),
            certificates: BTreeMap::new(),
            details: serde_json::Value::Null,
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, value: bool) {
        self.verdicts.insert(name.into(), value);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.insert(name.into(), passed);
    }

    pub fn certificate(&mut self, name: impl Into<String>, c: Certificate) {
        self.certificates.insert(name.into(), c);
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let r: RunReport = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if r.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported report schema {:?}", r.schema)));
        }
        Ok(r)
    }
}

/// The report text with the timing field zeroed, for comparing runs.
pub fn mask_timing(text: &str) -> Result<String> {
    let mut v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(t) = v.get_mut("timing") {
        *t = serde_json::json!({ "elapsed_ms": 0.0 });
    }
    Ok(serde_json::to_string_pretty(&v).expect("values serialize"))
}
