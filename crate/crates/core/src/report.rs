//! JSON reports shared by the command line and the verification suite.

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Computed data for commands that produce output beyond a verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, params: Value, ok: bool) -> Self {
        Check { name: name.into(), params, status: Status::from_bool(ok), witness: None, result: None }
    }

    pub fn with_witness(mut self, w: Option<Value>) -> Self {
        self.witness = w;
        self
    }

    pub fn with_result(mut self, r: Value) -> Self {
        self.result = Some(r);
        self
    }

    /// A failed check carrying a machine-readable error object.
    pub fn error(name: impl Into<String>, params: Value, e: &Error) -> Self {
        let kind = format!("{e:?}");
        let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
        Check::new(name, params, false)
            .with_witness(Some(serde_json::json!({"error": kind, "message": e.to_string()})))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(config: Value) -> Self {
        Report { version: VERSION.to_string(), config, checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_shape() {
        let mut r = Report::new(json!({"b": 1, "a": 2}));
        r.push(Check::new("x", json!({}), true));
        assert!(r.passed());
        r.push(Check::error("y", json!({"q": "6"}), &Error::NotPrime(6)));
        assert!(!r.passed());
        let v: Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(v["checks"][1]["witness"]["error"], "NotPrime");
        // object keys are sorted
        assert!(r.to_json_string().find("\"a\"").unwrap() < r.to_json_string().find("\"b\"").unwrap());
    }
}
