use std::process::ExitCode;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Failure {
    #[error(transparent)]
    Lib(#[from] ampdist::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub const EXIT_INVALID: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

impl Failure {
    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.kind(),
            Failure::Usage(_) => "usage",
            Failure::Io { .. } => "io",
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Lib(e) if e.is_numerical() => ExitCode::from(EXIT_NUMERICAL),
            _ => ExitCode::from(EXIT_INVALID),
        }
    }
}

#[derive(Serialize)]
struct Record<'a> {
    kind: &'a str,
    message: String,
}

/// One-line JSON error record for stderr.
pub fn error_record(kind: &str, message: &str) -> String {
    let inner = Record { kind, message: message.trim_end().to_string() };
    serde_json::json!({ "error": inner }).to_string()
}
