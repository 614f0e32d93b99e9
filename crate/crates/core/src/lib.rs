//! Duality toolkit for planar multigraphs: sphere embeddings and geometric
//! duals, graphic-matroid maps (2-isomorphisms and abstract dualities),
//! constructive duality chains, and checkerboard graphs of link diagrams.

pub mod chains;
pub mod corpus;
pub mod embed;
pub mod error;
pub mod graph;
pub mod io;
pub mod knot;
pub mod maps;
pub mod matroid;

pub use embed::{Dart, Embedding, End, Face};
pub use error::{Error, Result};
pub use graph::{EdgeId, MultiGraph, Sign, SignedGraph, VertexId};
pub use maps::{EdgeBijection, GraphIso};
