use pcseg::{InputError, SegError};
use serde::Serialize;

/// Everything that can stop a CLI command, grouped by exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    /// Generator parameters or other malformed input descriptions.
    #[error("{0}")]
    BadInput(String),
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Solver(SegError),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Machine-readable form, emitted as `{"error": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ErrorReport {
    pub kind: String,
    pub code: String,
    pub message: String,
}

/// Top-level document written when a command fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ErrorEnvelope {
    pub error: ErrorReport,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::BadInput(_) | CliError::Output { .. } => 2,
            CliError::Config(_) => 3,
            CliError::Solver(_) => 4,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ErrorEnvelope {
            error: self.report(),
        })
        .expect("serializable")
    }

    pub fn report(&self) -> ErrorReport {
        let (kind, code) = match self {
            CliError::Input(e) => ("input", e.code()),
            CliError::BadInput(_) => ("input", "bad_generator"),
            CliError::Output { .. } => ("input", "unwritable"),
            CliError::Config(_) => ("config", "invalid_config"),
            CliError::Solver(e) => ("solver", solver_code(e)),
        };
        ErrorReport {
            kind: kind.into(),
            code: code.into(),
            message: self.to_string(),
        }
    }
}

fn solver_code(e: &SegError) -> &'static str {
    match e {
        SegError::PenaltyNotPositive => "penalty_not_positive",
        SegError::TooLarge { .. } => "too_large",
        SegError::EmptySignal => "empty_signal",
        _ => "precondition",
    }
}

impl From<SegError> for CliError {
    fn from(e: SegError) -> Self {
        match e {
            SegError::InvalidPenalty | SegError::InvalidEpsilon | SegError::InvalidValueCap => {
                CliError::Config(e.to_string())
            }
            SegError::InvalidGenerator(msg) => CliError::BadInput(msg),
            other => CliError::Solver(other),
        }
    }
}
