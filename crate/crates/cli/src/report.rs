use std::fmt;
use std::process::ExitCode;

use euclid_core::euclidean::EuclideanError;
use euclid_core::models::{ModelError, SpecError};
use euclid_core::poset::PosetError;
use euclid_core::ring::RingError;
use euclid_core::syntax::ParseError;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    NotEuclidean,
    CheckFailed,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The mathematical statement the check exercises.
    pub claim: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, claim: &str) -> Self {
        Check {
            name: name.to_string(),
            passed,
            claim: claim.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub input: Value,
    pub status: Status,
    pub result: Value,
    pub checks: Vec<Check>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, input: Value) -> Self {
        Report {
            command,
            input,
            status: Status::Ok,
            result: Value::Null,
            checks: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, claim: &str) {
        self.checks.push(Check::new(name, passed, claim));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn final_status(&self) -> Status {
        if self.status == Status::Ok && self.checks.iter().any(|c| !c.passed) {
            Status::CheckFailed
        } else {
            self.status
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "input": self.input,
            "status": self.final_status(),
            "result": self.result,
            "checks": self.checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            out.push_str(&format!("[{}] {}\n", if c.passed { "ok" } else { "FAILED" }, c.name));
        }
        out
    }

    pub fn exit_code(&self) -> ExitCode {
        match self.final_status() {
            Status::Ok => ExitCode::SUCCESS,
            Status::NotEuclidean => ExitCode::from(3),
            Status::CheckFailed => ExitCode::from(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Domain,
    Resource,
    Syntax,
}

impl ErrorKind {
    pub fn code(self) -> u8 {
        match self {
            ErrorKind::Domain => 2,
            ErrorKind::Resource => 4,
            ErrorKind::Syntax => 5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn domain(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Domain,
            message: message.into(),
        }
    }

    pub fn syntax(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Syntax,
            message: message.into(),
        }
    }

    pub fn to_json(&self, command: &str) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "status": "error",
            "error": { "kind": self.kind, "message": self.message },
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn ring_kind(e: &RingError) -> ErrorKind {
    match e {
        RingError::TooLarge { .. } => ErrorKind::Resource,
        RingError::ElementSyntax { .. } => ErrorKind::Syntax,
        _ => ErrorKind::Domain,
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError {
            kind: ring_kind(&e),
            message: e.to_string(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        let kind = match &e {
            ParseError::Syntax { .. } => ErrorKind::Syntax,
            ParseError::TooDeep(_) => ErrorKind::Resource,
            ParseError::Ring(r) => ring_kind(r),
            _ => ErrorKind::Domain,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<EuclideanError> for CliError {
    fn from(e: EuclideanError) -> Self {
        let kind = match &e {
            EuclideanError::Ring(r) => ring_kind(r),
            _ => ErrorKind::Domain,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        let kind = match &e {
            ModelError::NoStabilization { .. } => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::domain(e.to_string())
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        match e {
            PosetError::EdgeSyntax { .. } => CliError::syntax(e.to_string()),
            _ => CliError::domain(e.to_string()),
        }
    }
}
