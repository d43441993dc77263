use thiserror::Error;

/// Errors with a distinct process exit status each.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("resource ceiling: {0}")]
    Ceiling(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal: {0}")]
    Internal(String),
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const HYPOTHESIS: i32 = 3;
    pub const CEILING: i32 = 4;
    pub const MISMATCH: i32 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Hypothesis(_) => exit::HYPOTHESIS,
            CliError::Ceiling(_) => exit::CEILING,
            CliError::Mismatch(_) => exit::MISMATCH,
            CliError::Io(_) | CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl From<chebflag::Error> for CliError {
    fn from(e: chebflag::Error) -> Self {
        use chebflag::Error as E;
        let msg = e.to_string();
        match e {
            E::InvalidPartition(_) => CliError::Usage(msg),
            E::OracleLimit { .. } => CliError::Ceiling(msg),
            E::RouteMismatch { .. } => CliError::Mismatch(msg),
            E::NonUnitConstantTerm { .. } | E::IndexBeyondOrder { .. } => CliError::Internal(msg),
            _ => CliError::Hypothesis(msg),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(format!("csv: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("json: {e}"))
    }
}
