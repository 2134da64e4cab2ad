//! Machine-readable verification outcomes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Only produced by checks whose result depends on a truncation order.
    InconclusiveAtTruncation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::InconclusiveAtTruncation => "inconclusive-at-truncation",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// First failing identity or coefficient; always present on failure.
    pub witness: Option<String>,
    /// Free-form observations (ranks, counts, which convention held).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub millis: Option<u64>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            witness: None,
            notes: Vec::new(),
            millis: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Record a failure; the first witness wins.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.verdict = Verdict::Fail;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    pub fn inconclusive(&mut self, witness: impl Into<String>) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::InconclusiveAtTruncation;
            self.witness = Some(witness.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.verdict, self.check)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " ({})", p.join(", "))?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        if let Some(ms) = self.millis {
            write!(f, "\n  millis: {ms}")?;
        }
        Ok(())
    }
}
