use serde::Serialize;
use serde_json::{Map, Value};

/// Exit codes.
pub const OK: i32 = 0;
pub const NEGATIVE: i32 = 1;
pub const INPUT_ERROR: i32 = 2;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 over the bytes of every input, in argument order.
    pub input_digest: String,
    pub outcome: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub diagnostics: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, input_digest: String) -> RunReport {
        RunReport {
            command: command.to_owned(),
            input_digest,
            outcome: Map::new(),
            timing_ms: None,
            diagnostics: Vec::new(),
        }
    }

    pub fn verdict(&mut self, v: &str) -> &mut Self {
        self.outcome.insert("verdict".into(), Value::String(v.into()));
        self
    }

    pub fn put(&mut self, key: &str, v: Value) -> &mut Self {
        self.outcome.insert(key.into(), v);
        self
    }

    pub fn note(&mut self, d: impl Into<String>) -> &mut Self {
        self.diagnostics.push(d.into());
        self
    }
}

/// A failure that ends the command with an exit code and a message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl std::fmt::Display) -> Failure {
        Failure {
            code: INPUT_ERROR,
            message: message.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;
