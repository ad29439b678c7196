use std::io;
use std::path::PathBuf;

use thiserror::Error;
use wfst::FstError;

#[derive(Debug, Error)]
pub enum ItnError {
    #[error(transparent)]
    Fst(#[from] FstError),

    #[error("invalid class name {0:?}")]
    InvalidClassName(String),

    #[error("invalid weight policy: {0}")]
    Policy(String),

    #[error("{}: {message}", path.display())]
    Data { path: PathBuf, message: String },

    #[error("archive has no grammar named {0:?}")]
    MissingGrammar(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The tagged string does not follow the token serialization grammar.
    /// This is a grammar bug, never a user error.
    #[error("tagged string syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("none of {tried} field orderings could be verbalized: {tagged}")]
    NoVerbalization { tagged: String, tried: usize },

    #[error("{}:{line}: {message}", path.display())]
    Corpus {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("empty reference with non-empty hypothesis")]
    EmptyReference,
}

pub type Result<T, E = ItnError> = std::result::Result<T, E>;
