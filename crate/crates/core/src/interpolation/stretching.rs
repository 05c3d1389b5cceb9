use num_traits::Zero;
use serde::Serialize;

use super::lattice_cond::lattice_check;
use crate::error::{precondition, Result};
use crate::exact_algebra::linalg::vandermonde_solve;
use crate::exact_algebra::rational::{pow_u, RatStr, Rational};
use crate::exact_algebra::roots::rational_eigenvalues;
use crate::graph_core::Multigraph;
use crate::partition::{BruteForce, SymMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct StretchingReport {
    pub value: RatStr,
    /// Distinct eigenvalues, ascending.
    pub eigenvalues: Vec<RatStr>,
    /// Compositions of |E| over the distinct eigenvalues, lexicographic.
    pub compositions: Vec<Vec<usize>>,
    pub coefficients: Vec<RatStr>,
}

/// All x ∈ N^parts with Σ x = total, in lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut vec![0; parts], &mut out);
    out
}

/// Z_{H·alpha(D)·Hᵀ}(g) where M = H·D·Hᵀ, from oracle values Z_{M^k}(g) only.
/// Requires a rational, nonsingular spectrum whose distinct eigenvalues satisfy
/// the lattice condition, so distinct compositions give distinct products.
pub fn stretch_interpolate(m: &SymMatrix, g: &Multigraph, alpha: &dyn Fn(&Rational) -> Rational) -> Result<StretchingReport> {
    stretch_interpolate_with(m, g, alpha, &BruteForce::default())
}

pub fn stretch_interpolate_with(
    m: &SymMatrix,
    g: &Multigraph,
    alpha: &dyn Fn(&Rational) -> Rational,
    oracle: &BruteForce,
) -> Result<StretchingReport> {
    let (roots, leftover) = rational_eigenvalues(m.entries());
    if leftover.is_some() {
        return precondition("irrational spectrum: exact mode unavailable");
    }
    let mut mu = roots;
    mu.dedup();
    if mu.iter().any(Zero::is_zero) {
        return precondition("stretching interpolation needs a nonsingular matrix");
    }
    let verdict = lattice_check(&mu)?;
    if let Some(w) = verdict.witness {
        return precondition(format!("eigenvalues violate the lattice condition, witness {w:?}"));
    }
    let comps = compositions(g.edge_count(), mu.len());
    let product = |x: &[usize], vals: &[Rational]| -> Rational { vals.iter().zip(x).map(|(v, &e)| pow_u(v, e)).product() };
    let nodes: Vec<Rational> = comps.iter().map(|x| product(x, &mu)).collect();
    let mut values = Vec::with_capacity(nodes.len());
    for k in 1..=nodes.len() {
        values.push(oracle.z(&m.power(k), g)?);
    }
    let coeffs = vandermonde_solve(&nodes, &values)?;
    let shifted: Vec<Rational> = mu.iter().map(alpha).collect();
    let value: Rational = comps.iter().zip(&coeffs).map(|(x, c)| c * product(x, &shifted)).sum();
    Ok(StretchingReport {
        value: RatStr(value),
        eigenvalues: mu.into_iter().map(RatStr).collect(),
        compositions: comps,
        coefficients: coeffs.into_iter().map(RatStr).collect(),
    })
}
