//! Exact arithmetic: rationals, factorization, integer lattices, polynomials,
//! matrices, real-root isolation and certified real enclosures.

pub mod factor;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod real;
pub mod roots;

pub use factor::{factor, FactoredRational};
pub use lattice::{integer_kernel, lattice_basis, IntVec, LatticeBasis};
pub use linalg::{char_poly, det, pfaffian, rank, vandermonde_solve, RatMatrix};
pub use poly::{IntPoly, Poly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use real::HighPrecisionReal;
pub use roots::{isolate_real_roots, numeric_eigenvalues, rational_eigenvalues, refine, RootInterval};
