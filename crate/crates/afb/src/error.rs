//! Crate-wide error type and exit-code classification.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on an operation's inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Array dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed RIFF/WAV file: {0}")]
    MalformedRiff(String),

    #[error("unsupported audio codec: {0}")]
    UnsupportedCodec(String),

    #[error("audio file contains no samples")]
    ZeroLengthAudio,

    #[error("malformed archive: {0}")]
    ArchiveFormat(String),

    #[error("checksum mismatch in archive section `{section}`")]
    ChecksumMismatch { section: String },

    #[error("archive version {found} not supported (this build reads version {supported})")]
    VersionMismatch { found: u32, supported: u32 },

    #[error("filterbank variant mismatch: {0}")]
    VariantMismatch(String),

    #[error("numeric failure: {0}")]
    NonFinite(String),

    #[error("training diverged (non-finite loss) at step {step}")]
    Divergence { step: usize },
}

/// Process exit classes used by the command-line driver.
///
/// 0 ok, 2 usage, 3 io, 4 format, 5 numeric failure.
impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::ShapeMismatch(_) => 2,
            Error::Io { .. } => 3,
            Error::MalformedRiff(_)
            | Error::UnsupportedCodec(_)
            | Error::ZeroLengthAudio
            | Error::ArchiveFormat(_)
            | Error::ChecksumMismatch { .. }
            | Error::VersionMismatch { .. }
            | Error::VariantMismatch(_) => 4,
            Error::NonFinite(_) | Error::Divergence { .. } => 5,
        }
    }
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
