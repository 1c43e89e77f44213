//! Batch front end: problem-file parsing and the solve, evolve and verify
//! pipelines behind the `vnlw` binary.

use std::path::PathBuf;

pub mod problem;
mod run;

pub use problem::{parse_problem, Builtin, Data, FileKind, Mode, ProblemSpec, Tolerances};
pub use run::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error in {}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("{stage} failed: {message}")]
    Numerical {
        stage: &'static str,
        message: String,
    },
    #[error("check failed: {}", .0.join(", "))]
    Checks(Vec<String>),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for unusable input, 2 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Validation(_) => 1,
            CliError::Numerical { .. } | CliError::Checks(_) | CliError::Io(_) => 2,
        }
    }
}
