use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Library(#[from] relprime::Error),

    #[error("check failed at n = {n}: {message}")]
    CheckFailed { n: u64, message: String },

    #[error("formula and oracle disagree: formula = {formula}, oracle = {oracle}")]
    Mismatch { formula: String, oracle: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        use relprime::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(E::Parse { .. } | E::Domain(_) | E::Overflow(_)) => 2,
            CliError::Library(E::Overlap { .. }) => 3,
            CliError::Library(E::Resource(_)) => 4,
            CliError::CheckFailed { .. } => 5,
            CliError::Mismatch { .. } => 6,
            CliError::Io(_) => 1,
        }
    }
}
