use thiserror::Error;

/// Errors surfaced by parsing, generation, and the capped solvers.
///
/// Contract violations (malformed arguments such as a non-module class or an
/// out-of-range vertex set) are programming errors and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what}: graph has {n} vertices, limit is {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid family spec: {0}")]
    FamilySpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
