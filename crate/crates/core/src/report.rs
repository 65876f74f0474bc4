//! Machine-readable report envelope shared by every command.

use serde::Serialize;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportVerdict {
    Pass,
    Fail,
    ContradictionConfirmed,
}

impl ReportVerdict {
    pub fn from_pass(ok: bool) -> Self {
        if ok {
            ReportVerdict::Pass
        } else {
            ReportVerdict::Fail
        }
    }

    pub fn from_contradiction(ok: bool) -> Self {
        if ok {
            ReportVerdict::ContradictionConfirmed
        } else {
            ReportVerdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ReportVerdict::Pass | ReportVerdict::ContradictionConfirmed => 0,
            ReportVerdict::Fail => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ReportVerdict::Pass => "pass",
            ReportVerdict::Fail => "fail",
            ReportVerdict::ContradictionConfirmed => "contradiction-confirmed",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub code: Option<String>,
    pub verdict: ReportVerdict,
    pub details: T,
    pub version: &'static str,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, code: Option<&str>, verdict: ReportVerdict, details: T) -> Self {
        Self { command: command.into(), code: code.map(Into::into), verdict, details, version: ARTIFACT_VERSION }
    }

    /// Pretty JSON with a trailing newline. Field order follows the struct
    /// definitions and every list is built in a canonical order, so the
    /// output is byte-stable for fixed inputs.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_shape() {
        let r = Report::new("array", None, ReportVerdict::ContradictionConfirmed, vec![1, 2]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "contradiction-confirmed");
        assert_eq!(v["code"], serde_json::Value::Null);
        assert_eq!(v["details"][1], 2);
        assert_eq!(r.verdict.exit_code(), 0);
        assert_eq!(ReportVerdict::Fail.exit_code(), 1);
    }
}
