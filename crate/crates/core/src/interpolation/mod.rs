//! Generating sets, lattice conditions and the thickening and stretching
//! interpolation reductions.

pub mod exponents;
pub mod generating;
pub mod lattice_cond;
pub mod stretching;
pub mod thickening;

pub use exponents::{decomposition_det, nonvanishing_sup, univariate_exponents, MultiPoly};
pub use generating::{
    decompose_matrix, generating_set, monomialize, substitute, t2_vcq_reduction, GeneratingDecomposition, GeneratingSet,
    MonomialMatrix,
};
pub use lattice_cond::{
    default_tolerance, lattice_check, lattice_check_numeric, LatticeStatus, LatticeVerdict, DEFAULT_LATTICE_BOUND,
};
pub use stretching::{compositions, stretch_interpolate, stretch_interpolate_with, StretchingReport};
pub use thickening::{thicken_interpolate, thicken_interpolate_with, ThickeningReport};
