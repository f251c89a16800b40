use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] emspace_core::Error),
    #[error("unknown monoid spec {0:?} (expected nat, int, cyclic:m, trivial, bool or table:<path>)")]
    MonoidSpec(String),
    #[error("{path}: {message}")]
    Table { path: PathBuf, message: String },
    #[error("bad literal {input:?}: {message}")]
    Literal { input: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn literal(input: &str, message: impl Into<String>) -> Self {
        Error::Literal { input: input.to_string(), message: message.into() }
    }
}
