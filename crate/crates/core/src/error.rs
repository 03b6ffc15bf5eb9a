use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dataset root {} contains no class folders", .0.display())]
    EmptyDataset(PathBuf),

    #[error("class folder `{0}` contains no sample files")]
    EmptyClass(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{}: not a valid patch file: {reason}", path.display())]
    Format { path: PathBuf, reason: String },

    #[error(transparent)]
    Shapefile(#[from] ShapefileError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

/// Failures while decoding an ESRI `.shp` main file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapefileError {
    #[error("not a shapefile: file code {found} (expected 9994)")]
    NotAShapefile { found: i32 },

    #[error("unsupported geometry: shape type {shape_type} (only Point=1 and PointZ=11 are read)")]
    UnsupportedGeometry { shape_type: i32 },

    #[error("truncated shapefile at byte offset {offset}: needed {needed} bytes, {available} available")]
    Truncated {
        offset: usize,
        needed: usize,
        available: usize,
    },

    #[error("malformed shapefile at byte offset {offset}: {reason}")]
    Malformed { offset: usize, reason: String },
}
