use std::fmt;

use crate::semigroup::Violation;

/// Errors raised by the library. Undefined cosets and undefined runs are
/// values (`Option`), never errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("not an inverse semigroup: {}", Violations(.0))]
    Invalid(Vec<Violation>),
    #[error("construction error: {0}")]
    Construction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

struct Violations<'a>(&'a [Violation]);

impl fmt::Display for Violations<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
