use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{input, Result};
use crate::exact_algebra::linalg::{det, mat_mul};
use crate::exact_algebra::rational::{pow_u, serde_rational_mat, Rational};
use crate::exact_algebra::RatMatrix;
use crate::partition::SymMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LMatrix {
    #[serde(with = "serde_rational_mat")]
    pub l: RatMatrix,
    #[serde(with = "serde_rational_mat")]
    pub b: RatMatrix,
    pub b_nondegenerate: bool,
}

/// D^[k] = diag(1 + c^k, 1).
pub fn twinned_weights(c: &Rational, k: usize) -> RatMatrix {
    vec![vec![Rational::one() + pow_u(c, k), Rational::zero()], vec![Rational::zero(), Rational::one()]]
}

/// L^(n) = B·(D^[2p]·B)^{n−1} with B = T_p(M′·D^[2]·M′), the 2x2 matrix an
/// edge gadget contributes between two cycle vertices.
pub fn l_matrix(m2: &SymMatrix, c: &Rational, n: usize, p: usize) -> Result<LMatrix> {
    if m2.q() != 2 {
        return input("the edge-gadget algebra needs a 2x2 matrix");
    }
    if n == 0 || p == 0 {
        return input("n and p must be positive");
    }
    let mdm = mat_mul(&mat_mul(m2.entries(), &twinned_weights(c, 2)), m2.entries());
    let b: RatMatrix = mdm.iter().map(|r| r.iter().map(|v| pow_u(v, p)).collect()).collect();
    let step = mat_mul(&twinned_weights(c, 2 * p), &b);
    let mut l = b.clone();
    for _ in 1..n {
        l = mat_mul(&l, &step);
    }
    let b_nondegenerate = !det(&b).is_zero();
    Ok(LMatrix { l, b, b_nondegenerate })
}

/// c_p = (1 + c^{2p+1})/(1 + c^{2p}).
pub fn c_sequence(c: &Rational, p: usize) -> Result<Rational> {
    let denom = Rational::one() + pow_u(c, 2 * p);
    if denom.is_zero() {
        return input("1 + c^(2p) vanishes");
    }
    Ok((Rational::one() + pow_u(c, 2 * p + 1)) / denom)
}
