use crate::graph::{Graph, GraphError};

pub const DEFAULT_MAX_HALF_EDGES: usize = 14;

/// Environment variable overriding [`DEFAULT_MAX_HALF_EDGES`].
pub const MAX_HALF_EDGES_ENV: &str = "ORIENTKIT_MAX_HALFEDGES";

/// Size cap for the exhaustive searches (automorphisms, canonical form).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_half_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_half_edges: DEFAULT_MAX_HALF_EDGES,
        }
    }
}

impl Limits {
    pub fn new(max_half_edges: usize) -> Self {
        Limits { max_half_edges }
    }

    /// The default cap, unless the environment overrides it with a valid integer.
    pub fn from_env() -> Self {
        std::env::var(MAX_HALF_EDGES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::new)
            .unwrap_or_default()
    }

    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if g.half_edge_count() > self.max_half_edges {
            return Err(GraphError::SizeLimitExceeded {
                half_edges: g.half_edge_count(),
                limit: self.max_half_edges,
            });
        }
        Ok(())
    }
}
