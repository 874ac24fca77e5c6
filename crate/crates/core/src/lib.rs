//! Exact computation of orientation homomorphisms on automorphism groups of
//! half-edge graphs.
//!
//! The crate covers the graph model ([`graph`], [`text`], [`canon`]),
//! permutations ([`perm`]), automorphism groups ([`aut`]), the orientation
//! homomorphisms and orientability ([`orientation`]), the cyclic families of
//! edge-transitive pairs ([`families`]), and corpus sweeps with reports and
//! the command line ([`corpus`], [`report`], [`cli`]).

pub mod aut;
pub mod canon;
pub mod catalog;
pub mod cli;
pub mod corpus;
mod error;
pub mod families;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod orientation;
pub mod perm;
pub mod report;
pub mod sign;
pub mod text;

pub use aut::{enumerate_automorphisms, induced_actions, Automorphism, InducedActions};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, GraphError, HalfEdgeId, RawGraph, VertexId};
pub use limits::Limits;
pub use orientation::{theta_k, theta_parity, theta_s, OrientationHom, ThetaKind, ThetaRegistry};
pub use perm::Permutation;
pub use sign::Sign;
pub use text::{format_graph, parse_graph, parse_graphs};
