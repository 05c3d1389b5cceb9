//! Exact analysis of M(p) = (p^{x_ij}) for a 3x3 exponent pattern X: Taylor
//! data of det M(e^δ), the eigenvalue exponent t(p), the symmetric-function
//! polynomials behind it, and the edge-gadget matrix algebra for twinned pairs.

pub mod edge_algebra;
pub mod spectral;
pub mod taylor;
pub mod witness;

pub use edge_algebra::{c_sequence, l_matrix, twinned_weights, LMatrix};
pub use spectral::{det_poly, f_poly, in_unit_interval, order_at_one, s_laurent_order, symmetric_functions, t_of, SymmetricFunctions};
pub use taylor::{
    degenerate_rows_force_zero_det, exponential_det_terms, g_of, g_product_identity_holds, rank_one_shift, taylor_coeffs,
    taylor_coeffs_rational, TaylorReport,
};
pub use witness::{default_grid, default_tolerance, witness_report, Route, TSample, WitnessReport};
