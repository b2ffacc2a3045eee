use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group order {order} exceeds enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },

    #[error("graph has {n} vertices, solver bound is {bound}")]
    GraphTooLarge { n: usize, bound: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("invalid bi-Cayley data: {0}")]
    InvalidBiCayley(String),

    #[error("not a group automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    NotCubic(String),

    #[error("s-regularity search reached the cap s = {0}")]
    ArcTransitivityCap(u32),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("bundled data for {name} failed validation: {reason}")]
    InvalidData { name: String, reason: String },

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
