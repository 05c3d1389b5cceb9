pub mod analysis;
pub mod classifier;
pub mod error;
pub mod exact_algebra;
pub mod graph_core;
pub mod interpolation;
pub mod partition;
pub mod poly_solvers;

pub use error::{Error, Result};
pub use exact_algebra::Rational;
pub use graph_core::{EmbeddedGraph, Multigraph, RotationSystem};
pub use partition::SymMatrix;
