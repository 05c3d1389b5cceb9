//! Exact polynomial-time evaluators for the tractable classes and the
//! dispatcher that runs the one named by a classification certificate.

mod closed;
mod fkt;
mod gauss;
mod ising;

use num_traits::Zero;

pub use closed::{solve_bipartite3, solve_rank_one, solve_swap};
pub use fkt::{count_weighted_matchings, even_subgraph_sum, fisher_graph, kasteleyn_orient, FisherGraph, KasteleynOrientation};
pub use gauss::{solve_affine_gauss, QuadraticForm};
pub use ising::solve_ising;

use crate::classifier::{BlockCertificate, Certificate, Classification, Verdict};
use crate::error::{input, Error, Result};
use crate::exact_algebra::rational::Rational;
use crate::graph_core::{EmbeddedGraph, Multigraph};
use crate::partition::SymMatrix;

/// Z = Π over connected components C of Σ over blocks B of Z_B(C): a
/// connected graph maps entirely into one block of a direct sum.
pub fn solve_components(blocks: &[BlockCertificate], g: &Multigraph, embedding: Option<&EmbeddedGraph>) -> Result<Rational> {
    let parts: Vec<(Multigraph, Option<EmbeddedGraph>)> = match embedding {
        Some(e) => e.component_subgraphs().into_iter().map(|(eg, s)| (s.graph, Some(eg))).collect(),
        None => g.component_subgraphs().into_iter().map(|s| (s.graph, None)).collect(),
    };
    let mut z = Rational::from_integer(1.into());
    for (c, ce) in &parts {
        let mut sum = Rational::zero();
        for b in blocks {
            sum += solve_certificate(&b.certificate, c, ce.as_ref())?;
        }
        z *= sum;
        if z.is_zero() {
            break;
        }
    }
    Ok(z)
}

/// Z_X·Z_Y for M = X ⊗ Y with X = [[0,1],[1,0]] and Y = [[a,b],[b,a]].
pub fn solve_tensor4(a: &Rational, b: &Rational, g: &Multigraph, embedding: Option<&EmbeddedGraph>) -> Result<Rational> {
    let zx = solve_swap(g);
    if zx.is_zero() {
        return Ok(zx);
    }
    Ok(zx * solve_ising(a, b, g, embedding)?)
}

/// Runs the solver a certificate names. The embedding, when given, must be
/// of `g` itself.
pub fn solve_certificate(cert: &Certificate, g: &Multigraph, embedding: Option<&EmbeddedGraph>) -> Result<Rational> {
    match cert {
        Certificate::RankOne { scale, vector } => {
            let w: Vec<Rational> = vector.iter().map(|v| v.0.clone()).collect();
            Ok(solve_rank_one(&scale.0, &w, g))
        }
        Certificate::Ising { x, y } => solve_ising(&x.0, &y.0, g, embedding),
        Certificate::GaussSum { scale, quadratic, linear } => Ok(solve_affine_gauss(&scale.0, *quadratic == 1, *linear == 1, g)),
        Certificate::Components { blocks } => solve_components(blocks, g, embedding),
        Certificate::Bipartite3 { x, y, .. } => Ok(solve_bipartite3(&x.0, &y.0, g)),
        Certificate::Tensor4 { a, b, .. } => solve_tensor4(&a.0, &b.0, g, embedding),
    }
}

/// Evaluates Z_M(g) with the polynomial algorithm certified by `cls`, after
/// checking that the certificate really describes M.
pub fn dispatch_solve(m: &SymMatrix, g: &Multigraph, embedding: Option<&EmbeddedGraph>, cls: &Classification) -> Result<Rational> {
    if cls.verdict != Verdict::Tractable {
        return Err(Error::NoPolynomialAlgorithm);
    }
    let Some(cert) = &cls.certificate else { return input("tractable classification without a certificate") };
    if cert.matrix(m.q()).as_ref() != Some(m) {
        return input("the classification certificate does not describe this matrix");
    }
    if let Some(e) = embedding {
        if e.graph() != g {
            return input("the embedding belongs to a different graph");
        }
    }
    solve_certificate(cert, g, embedding)
}
