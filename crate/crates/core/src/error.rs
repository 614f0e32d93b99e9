use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("bad attachment: {0}")]
    BadAttachment(String),
    #[error("bad rotation: {0}")]
    BadRotation(String),
    #[error("rotation system is not spherical")]
    NotSpherical,
    #[error("primal graph is disconnected")]
    DisconnectedPrimal,
    #[error("input has {edges} edges, limit is {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("edge map is not a bijection: {0}")]
    BadBijection(String),
    #[error("map is not a 2-isomorphism")]
    NotA2Isomorphism,
    #[error("map is not an abstract duality")]
    NotAnAbstractDuality,
    #[error("no spherical embedding found: {0}")]
    NonPlanar(String),
    #[error("primal has fewer than two cut-vertices")]
    NothingToReduce,
    #[error("not a one-point union: {0}")]
    NotAJoin(String),
    #[error("bad PD code: {0}")]
    BadPdCode(String),
    #[error("a checkerboard graph is disconnected")]
    DisconnectedCheckerboard,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
