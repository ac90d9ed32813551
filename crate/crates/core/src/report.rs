//! Structured outcome of a single verification.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    /// Short statement of the identity being checked.
    pub anchor: String,
    pub details: Value,
    /// Wall-clock time, only recorded on request since it breaks byte-identical reruns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, anchor: impl Into<String>, pass: bool, details: Value) -> Self {
        CheckReport {
            check_id: check_id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            details,
            duration_ms: None,
        }
    }

    pub fn skipped(check_id: impl Into<String>, anchor: impl Into<String>, reason: &str) -> Self {
        CheckReport {
            check_id: check_id.into(),
            status: Status::Skipped,
            anchor: anchor.into(),
            details: serde_json::json!({ "reason": reason }),
            duration_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
