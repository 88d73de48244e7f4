//! Positive bases for type-A cluster algebras from laminations of a polygon.

pub mod canonical_basis;
pub mod cluster_atlas;
pub mod error;
pub mod exact_algebra;
pub mod fourier_motzkin;
pub mod json;
pub mod number;
pub mod polygon;
pub mod polytope;
pub mod tropical_points;
pub mod weighted_graph;

pub use error::{Error, Result};
pub use number::Number;
pub use polygon::{Polygon, Segment, Triangulation};
pub use weighted_graph::WeightedGraph;
