use thiserror::Error;

/// Errors raised by the calculus and the session layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Lexical or syntactic error in a session file, with 1-based position.
    #[error("parse error at {line}:{col}: {message}")]
    Parse { line: u32, col: u32, message: String },

    /// Structural validation failure of a session (dual wiring, duplicate labels, ...).
    #[error("invalid session: {0}")]
    Invalid(String),

    /// Malformed oracle table.
    #[error("oracle table, line {line}: {message}")]
    Oracle { line: u32, message: String },

    /// An operation was called outside its contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The quadratic extension does not embed: the relevant group size times d is odd.
    #[error("E does not embed: n*d is odd (n = {n}, d = {d})")]
    NoEmbedding { n: u64, d: u32 },

    /// Jacquet-Langlands transfer is undefined for a line whose torsion number
    /// does not divide k*d.
    #[error("line {label}: Jacquet-Langlands transfer undefined, l = {l} does not divide k*d = {kd}")]
    InvalidLine { label: String, l: u32, kd: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code class: 2 for parse/session errors, 3 for precondition errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Invalid(_) | Error::Oracle { .. } => 2,
            Error::Precondition(_) | Error::NoEmbedding { .. } | Error::InvalidLine { .. } => 3,
        }
    }
}
