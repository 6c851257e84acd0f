//! Bakry-Emery curvature of graphs, with the tools to enumerate quartic
//! incomplete 2-balls, single out the curvature-sharp ones, and search for
//! every connected quartic graph that is curvature sharp at all vertices.

pub mod ball;
pub mod canon;
pub mod catalog;
pub mod cli;
pub mod curvature;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod named;
pub mod search;

pub use ball::{BallTypeId, IncompleteTwoBall};
pub use curvature::{k_infinity, CurvatureReport};
pub use error::{Error, Result};
pub use graph::Graph;
pub use named::NamedGraph;
