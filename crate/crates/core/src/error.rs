use thiserror::Error;

use crate::algebra::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that cannot even be interpreted as operation tables.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Well-formed tables that violate one or more NM-algebra axioms.
    #[error("not an NM-algebra: {0}")]
    NotNm(ValidationReport),

    #[error("not a universal quantifier: fails {0}")]
    NotQuantifier(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size {size} exceeds the limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A guarantee of the theory did not hold on a finite instance. Either the
    /// input bypassed validation or there is a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
