use thiserror::Error;

use crate::axioms::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The tables do not form a quandle; the report names the first failed axiom.
    #[error("not a quandle: {}", .0.first_failure().map(|f| f.to_string()).unwrap_or_default())]
    NotQuandle(Box<AxiomReport>),

    /// The tables do not form an oriented singquandle.
    #[error("not an oriented singquandle: {}", .0.first_failure().map(|f| f.to_string()).unwrap_or_default())]
    NotSingquandle(Box<AxiomReport>),

    /// A search was refused because its input exceeds the configured size guard.
    #[error("too large: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structural violations of a diagram (closure, label range).
    #[error("invalid diagram: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
