//! Check reports shared by the library and the command-line tool.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::clifford::Signature;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signature: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, sig: Option<Signature>, ok: bool) -> Self {
        CheckReport {
            check_name: name.into(),
            signature: sig.map(|s| s.to_string()),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            counterexample: None,
        }
    }

    pub fn pass(name: impl Into<String>, sig: Option<Signature>) -> Self {
        CheckReport::new(name, sig, true)
    }

    pub fn fail(name: impl Into<String>, sig: Option<Signature>, counterexample: Value) -> Self {
        CheckReport::new(name, sig, false).with_counterexample(counterexample)
    }

    /// Pass when `bad` is `None`, otherwise fail with it as counterexample.
    pub fn from_counterexample(name: impl Into<String>, sig: Option<Signature>, bad: Option<Value>) -> Self {
        match bad {
            None => CheckReport::pass(name, sig),
            Some(v) => CheckReport::fail(name, sig, v),
        }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_counterexample(mut self, c: Value) -> Self {
        self.counterexample = Some(c);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub schema: u32,
    pub command: String,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<CheckReport>,
}

impl Aggregate {
    pub fn new(command: impl Into<String>, reports: Vec<CheckReport>) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        Aggregate { schema: SCHEMA_VERSION, command: command.into(), passed, failed: reports.len() - passed, reports }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let s = Signature::new(2, 0).unwrap();
        let r = CheckReport::pass("frame-group-order", Some(s)).with_witness(Value::from(8));
        let js = serde_json::to_value(&r).unwrap();
        assert_eq!(js["status"], "pass");
        assert_eq!(js["signature"], "2,0");
        assert!(js.get("counterexample").is_none());
        let agg = Aggregate::new("verify", vec![r, CheckReport::fail("x", None, Value::Null)]);
        assert_eq!((agg.passed, agg.failed, agg.schema), (1, 1, 1));
        assert!(!agg.all_passed());
    }
}
