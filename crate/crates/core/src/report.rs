//! Verification reports: ordered check lists with JSON and CSV emitters.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One verified claim with what was expected and what was measured.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Short label of the claim being checked.
    pub reference: String,
    pub status: CheckStatus,
    pub expected: String,
    pub measured: String,
    /// Informational checks never affect the exit code.
    pub informational: bool,
}

impl Check {
    pub fn new(
        name: &str,
        reference: &str,
        status: CheckStatus,
        expected: impl ToString,
        measured: impl ToString,
    ) -> Self {
        Check {
            name: name.to_string(),
            reference: reference.to_string(),
            status,
            expected: expected.to_string(),
            measured: measured.to_string(),
            informational: false,
        }
    }

    /// Pass iff `ok`.
    pub fn verdict(name: &str, reference: &str, ok: bool, expected: impl ToString, measured: impl ToString) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Check::new(name, reference, status, expected, measured)
    }

    /// A failed check carrying the error that prevented it from running.
    pub fn error(name: &str, reference: &str, err: &Error) -> Self {
        Check::new(name, reference, CheckStatus::Fail, "no error", format!("error: {err}"))
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    /// The fully resolved run configuration.
    pub config: serde_json::Value,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, config: serde_json::Value) -> Self {
        VerificationReport { schema_version: SCHEMA_VERSION, suite: suite.to_string(), config, checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// True iff no non-informational check failed.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.status == CheckStatus::Fail && !c.informational)
    }

    /// 0 when [`VerificationReport::passed`], 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Io(e.to_string()))
    }

    /// One row per check with columns `suite,name,reference,status,expected,measured,informational`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["suite", "name", "reference", "status", "expected", "measured", "informational"])
            .map_err(io)?;
        for c in &self.checks {
            let info = c.informational.to_string();
            w.write_record([&self.suite, &c.name, &c.reference, c.status.as_str(), &c.expected, &c.measured, &info])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.informational { " (informational)" } else { "" };
            out.push_str(&format!(
                "[{}] {}{}: expected {}, measured {}\n",
                c.status.as_str(),
                c.name,
                tag,
                c.expected,
                c.measured
            ));
        }
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} inconclusive, {} skipped\n",
            self.suite,
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Inconclusive),
            self.count(CheckStatus::Skipped)
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("demo", serde_json::json!({"p": 2, "modulus": [1, 1, 0, 0, 1]}));
        r.push(Check::verdict("weights", "worked example", true, "4,8,11", "4,8,11"));
        r.push(
            Check::new("scan", "open conjecture", CheckStatus::Inconclusive, "> tol", "1e-9, \"quoted\"")
                .informational(),
        );
        r
    }

    #[test]
    fn empty_report_is_valid() {
        let r = VerificationReport::new("empty", serde_json::Value::Null);
        assert!(r.passed());
        assert_eq!(r.exit_code(), 0);
        let back = VerificationReport::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.to_csv().unwrap().lines().count(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let s = r.to_json().unwrap();
        assert!(s.contains("\"schema_version\": 1"));
        assert_eq!(VerificationReport::from_json(&s).unwrap(), r);
        assert_eq!(sample().to_json().unwrap(), s);
    }

    #[test]
    fn csv_quotes_fields() {
        let csv = sample().to_csv().unwrap();
        let mut rd = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 2);
        assert_eq!(&rows[1][5], "1e-9, \"quoted\"");
        assert!(csv.contains("\"1e-9, \"\"quoted\"\"\""));
    }

    #[test]
    fn exit_code_tracks_failures() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 0);
        r.push(Check::new("info", "x", CheckStatus::Fail, "a", "b").informational());
        assert_eq!(r.exit_code(), 0);
        r.push(Check::verdict("real", "x", false, "a", "b"));
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_text().contains("2 fail"));
    }

    proptest! {
        #[test]
        fn round_trip_any(names in proptest::collection::vec("[ -~]{0,12}", 0..6), bits in any::<u8>()) {
            let mut r = VerificationReport::new("prop", serde_json::json!({"bits": bits}));
            for (i, n) in names.iter().enumerate() {
                let status = [CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Inconclusive, CheckStatus::Skipped][i % 4];
                r.push(Check::new(n, n, status, i, n));
            }
            let back = VerificationReport::from_json(&r.to_json().unwrap()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
