use std::path::PathBuf;

use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::linalg::LinalgError;
use crate::perm::PermError;
use crate::text::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("graph has {vertices} vertices; brute-force orbits allow at most {limit}")]
    TooManyVertices { vertices: usize, limit: usize },
    #[error("unknown orientation homomorphism {0:?}")]
    UnknownTheta(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
