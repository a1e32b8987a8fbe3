//! Small universal targets for homomorphisms of `k`-edge-colored graphs.
//!
//! The constructive pipeline runs
//! density → orientation → star coloring → out-coloring → universal target →
//! explicit homomorphism, and every stage has a verifier. Brute-force
//! searches (subset density, homomorphism existence, smallest universal
//! target) cross-check the constructions on small inputs.

pub mod bounds;
pub mod coloring;
pub mod density;
pub mod error;
mod flow;
pub mod generate;
pub mod graph;
pub mod io;
pub mod limits;
pub mod out_coloring;
pub mod universal;

pub use error::{Error, Result};
pub use graph::{EdgeColoredGraph, Graph, Homomorphism, OrientedGraph, VertexColoring};
pub use limits::Limits;
