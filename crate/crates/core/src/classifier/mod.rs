//! Complexity dichotomy decisions for planar Z_M(G): a verdict, the form that
//! made it tractable and the certificate the polynomial solvers dispatch on.

mod binary;
mod general;
mod structure;
mod ternary;

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use crate::exact_algebra::rational::{RatStr, Rational};
use crate::partition::SymMatrix;

pub use binary::classify2;
pub use general::{
    classify, classify_bipartite4, classify_with, lattice_hardness_certificate, lattice_hardness_certificate_with, ClassifyOptions,
};
pub use structure::{detect_reducible, detect_twinned, rank_one_certificate, support_bipartition, Twinned};
pub use ternary::classify3;

/// Default significant digits for numeric eigenvalue work.
pub const DEFAULT_DIGITS: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Tractable,
    Hard,
    Unknown,
}

/// Which tractable shape matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Form {
    /// M = ε·uuᵀ for a real vector u.
    RankOne { sign: i8 },
    /// One of the four tractable 2×2 cases.
    TwoByTwoCase { case: u8, planar_only: bool },
    /// 3×3 with index `decoupled` split off and a tractable 2×2 block.
    Form2 { decoupled: usize, block_case: u8 },
    /// Zero diagonal and one zero off-diagonal pair: [[0,0,x],[0,0,y],[x,y,0]].
    #[serde(rename = "bipartite3")]
    Form3 { x: RatStr, y: RatStr },
    /// Direct sum of tractable blocks.
    Reducible { blocks: usize },
    /// 4×4 bipartite M = X ⊗ Y.
    Tensor4 { x_block: SymMatrix, y_block: SymMatrix },
}

/// Enough data for a solver to run without re-deriving structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "solver", rename_all = "snake_case")]
pub enum Certificate {
    /// M = scale·wwᵀ.
    RankOne { scale: RatStr, vector: Vec<RatStr> },
    /// M = [[x,y],[y,x]].
    Ising { x: RatStr, y: RatStr },
    /// M_ab = scale·(−1)^{quadratic·ab + linear·(a+b)}.
    GaussSum { scale: RatStr, quadratic: u8, linear: u8 },
    /// M is the direct sum of the listed principal blocks.
    Components { blocks: Vec<BlockCertificate> },
    /// M_{center,a} = x, M_{center,b} = y with a < b the other indices, all else zero.
    Bipartite3 { center: usize, x: RatStr, y: RatStr },
    /// M_{left[i], right[j]} = a when i = j and b otherwise; all else zero.
    Tensor4 { a: RatStr, b: RatStr, left: [usize; 2], right: [usize; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCertificate {
    pub indices: Vec<usize>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub form: Option<Form>,
    pub certificate: Option<Certificate>,
    /// Human-readable reasoning steps, in the order applied.
    pub trace: Vec<String>,
    /// Set when a hardness verdict rests on a bounded numeric search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

impl Classification {
    pub fn tractable(form: Form, certificate: Certificate, trace: Vec<String>) -> Self {
        Classification { verdict: Verdict::Tractable, form: Some(form), certificate: Some(certificate), trace, caveat: None }
    }

    pub fn hard(trace: Vec<String>) -> Self {
        Classification { verdict: Verdict::Hard, form: None, certificate: None, trace, caveat: None }
    }

    pub fn unknown(trace: Vec<String>) -> Self {
        Classification { verdict: Verdict::Unknown, form: None, certificate: None, trace, caveat: None }
    }

    pub fn is_tractable(&self) -> bool {
        self.verdict == Verdict::Tractable
    }

    /// Case number when the form is a 2×2 case.
    pub fn two_by_two_case(&self) -> Option<u8> {
        match self.form {
            Some(Form::TwoByTwoCase { case, .. }) => Some(case),
            _ => None,
        }
    }
}

impl Certificate {
    /// The q×q matrix this certificate describes, or `None` if it does not fit q.
    pub fn matrix(&self, q: usize) -> Option<SymMatrix> {
        let mut e = vec![vec![Rational::zero(); q]; q];
        match self {
            Certificate::RankOne { scale, vector } if vector.len() == q => {
                for i in 0..q {
                    for j in 0..q {
                        e[i][j] = &scale.0 * &vector[i].0 * &vector[j].0;
                    }
                }
            }
            Certificate::Ising { x, y } if q == 2 => {
                e = vec![vec![x.0.clone(), y.0.clone()], vec![y.0.clone(), x.0.clone()]];
            }
            Certificate::GaussSum { scale, quadratic, linear } if q == 2 => {
                for (a, row) in e.iter_mut().enumerate() {
                    for (b, v) in row.iter_mut().enumerate() {
                        let odd = (*quadratic as usize * a * b + *linear as usize * (a + b)) % 2 == 1;
                        *v = if odd { -scale.0.clone() } else { scale.0.clone() };
                    }
                }
            }
            Certificate::Components { blocks } => {
                for b in blocks {
                    let sub = b.certificate.matrix(b.indices.len())?;
                    if b.indices.iter().any(|&i| i >= q) {
                        return None;
                    }
                    for (i, &gi) in b.indices.iter().enumerate() {
                        for (j, &gj) in b.indices.iter().enumerate() {
                            e[gi][gj] = sub.get(i, j).clone();
                        }
                    }
                }
            }
            Certificate::Bipartite3 { center, x, y } if q == 3 && *center < 3 => {
                let rest: Vec<usize> = (0..3).filter(|i| i != center).collect();
                for (k, v) in rest.iter().zip([x, y]) {
                    e[*center][*k] = v.0.clone();
                    e[*k][*center] = v.0.clone();
                }
            }
            Certificate::Tensor4 { a, b, left, right } if left.iter().chain(right).all(|&i| i < q) => {
                for (i, &l) in left.iter().enumerate() {
                    for (j, &r) in right.iter().enumerate() {
                        let v = if i == j { a.0.clone() } else { b.0.clone() };
                        e[l][r] = v.clone();
                        e[r][l] = v;
                    }
                }
            }
            _ => return None,
        }
        SymMatrix::new(e).ok()
    }
}
