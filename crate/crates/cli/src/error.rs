use thiserror::Error;

/// Failures of a subcommand, each mapped to a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input data or arguments.
    #[error("{0}")]
    Input(String),

    #[error("invalid orders: {0}")]
    Orders(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("support violation at label {0:?}: p > 0 where q = 0")]
    Support(String),

    #[error("{0}")]
    TargetOutOfRange(String),

    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Write { .. } => 1,
            CliError::Orders(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Support(_) => 4,
            CliError::TargetOutOfRange(_) => 5,
        }
    }
}

impl From<renyi_core::Error> for CliError {
    fn from(e: renyi_core::Error) -> Self {
        use renyi_core::Error as E;
        match e {
            E::SupportViolation { label } => CliError::Support(label),
            E::TargetOutOfRange { .. } => CliError::TargetOutOfRange(e.to_string()),
            E::InvalidOrder(_) | E::InvalidGrid(_) => CliError::Orders(e.to_string()),
            E::Empty
            | E::InvalidValue { .. }
            | E::NonFiniteWeight { .. }
            | E::DuplicateLabel(_)
            | E::AllZero
            | E::LabelMismatch(_)
            | E::InvalidBase(_)
            | E::InvalidTolerance(_) => CliError::Input(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
