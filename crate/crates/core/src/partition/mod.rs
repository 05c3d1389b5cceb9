//! Reference evaluators: exhaustive Z_M(G), vertex elimination for
//! low-treewidth graphs, degree-weighted sums and occurrence spectra.

pub mod brute;
pub mod elimination;
pub mod matrix;
pub mod spectrum;

pub use brute::{brute_force_z, brute_force_z_weighted, spectrum, BruteForce, DEFAULT_STATE_CAP};
pub use elimination::Elimination;
pub use matrix::{parse_matrix_json, SymMatrix};
pub use spectrum::{DegreeWeightFamily, Spectrum};
