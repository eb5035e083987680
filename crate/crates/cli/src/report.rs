use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub cases_checked: u64,
    pub counterexamples: Vec<Value>,
    pub timing_ms: u64,
    #[serde(flatten)]
    pub result: Map<String, Value>,
}

/// An input or usage error.
#[derive(Debug, Clone)]
pub struct InputError {
    pub message: String,
    pub detail: Option<Value>,
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError { message: message.into(), detail: None }
    }

    pub fn with_detail(message: impl Into<String>, detail: Value) -> Self {
        InputError { message: message.into(), detail: Some(detail) }
    }
}

/// Outcome of a command before timing is attached.
pub struct Outcome {
    pub cases_checked: u64,
    pub counterexamples: Vec<Value>,
    pub result: Map<String, Value>,
}

impl Outcome {
    /// A single successful evaluation.
    pub fn value(result: Value) -> Self {
        let result = match result {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        Outcome { cases_checked: 1, counterexamples: Vec::new(), result }
    }

    pub fn sweep(cases_checked: u64, counterexamples: Vec<Value>, result: Map<String, Value>) -> Self {
        Outcome { cases_checked, counterexamples, result }
    }
}

impl Report {
    pub fn finish(command: &str, start: Instant, outcome: Result<Outcome, InputError>) -> Self {
        let timing_ms = start.elapsed().as_millis() as u64;
        match outcome {
            Ok(o) => Report {
                command: command.to_string(),
                status: if o.counterexamples.is_empty() { Status::Pass } else { Status::Fail },
                cases_checked: o.cases_checked,
                counterexamples: o.counterexamples,
                timing_ms,
                result: o.result,
            },
            Err(e) => {
                let mut result = Map::from_iter([("error".to_string(), Value::String(e.message))]);
                if let Some(d) = e.detail {
                    result.insert("detail".to_string(), d);
                }
                Report {
                    command: command.to_string(),
                    status: Status::Error,
                    cases_checked: 0,
                    counterexamples: Vec::new(),
                    timing_ms,
                    result,
                }
            }
        }
    }

    pub fn render(&self, compact: bool) -> String {
        if compact {
            serde_json::to_string(self)
        } else {
            serde_json::to_string_pretty(self)
        }
        .expect("report serializes")
    }
}
