//! Rewriting systems on the faces and vertices of nestohedra.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergraph`]: ordered atomic hypergraphs, restrictions, saturation;
//! * [`construct`]: constructs (faces), enumeration and the face lattice;
//! * [`terms`]: many-sorted terms over the hypergraph signatures and their
//!   bijections with constructs;
//! * [`rewrite`]: flips, normal forms, facial steps, local confluence;
//! * [`geometry`]: integer vertex coordinates and orientation vectors;
//! * [`families`]: polytope families, graph classes, contextuality.

pub mod construct;
pub mod error;
pub mod families;
pub mod geometry;
pub mod hypergraph;
pub mod rewrite;
pub mod terms;
pub mod vertex_set;

pub use construct::{Construct, FaceLattice, Node};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
