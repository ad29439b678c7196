use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FstError {
    /// The machine has no accepting path (for a rewrite: the input is not
    /// covered by the grammar).
    #[error("no accepting path")]
    NoPath,

    #[error("negative-weight cycle reachable from the start state")]
    NegativeCycle,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{}:{line}: {message}", path.display())]
    Tsv {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("not a grammar archive (bad magic)")]
    BadMagic,

    #[error("unsupported archive version {0}")]
    UnsupportedVersion(u32),

    #[error("archive is truncated")]
    Truncated,

    #[error("corrupt archive: {0}")]
    Corrupt(String),

    #[error("transducer output is not valid UTF-8")]
    InvalidUtf8,
}

pub type Result<T, E = FstError> = std::result::Result<T, E>;
