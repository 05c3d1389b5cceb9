use std::collections::BTreeSet;

use num_traits::Zero;

use super::closed::two_pow;
use crate::exact_algebra::rational::{pow_u, Rational};
use crate::graph_core::Multigraph;

/// A quadratic form over GF(2): constant + Σ linear_i s_i + Σ_{i<j} s_i s_j
/// over the symmetric, loop-free `quadratic` adjacency.
#[derive(Clone, Debug, Default)]
pub struct QuadraticForm {
    pub constant: bool,
    pub linear: Vec<bool>,
    pub quadratic: Vec<BTreeSet<usize>>,
}

impl QuadraticForm {
    pub fn new(n: usize) -> Self {
        QuadraticForm { constant: false, linear: vec![false; n], quadratic: vec![BTreeSet::new(); n] }
    }

    /// Adds s_i·s_j; s_i² = s_i folds into the linear part.
    pub fn toggle_product(&mut self, i: usize, j: usize) {
        if i == j {
            self.linear[i] ^= true;
        } else if !self.quadratic[i].remove(&j) {
            self.quadratic[i].insert(j);
            self.quadratic[j].insert(i);
        } else {
            self.quadratic[j].remove(&i);
        }
    }

    pub fn eval(&self, s: &[bool]) -> bool {
        let mut v = self.constant;
        for (i, nb) in self.quadratic.iter().enumerate() {
            v ^= self.linear[i] & s[i];
            v ^= nb.iter().filter(|&&j| j > i).fold(false, |acc, &j| acc ^ (s[i] & s[j]));
        }
        v
    }

    /// Σ_s (−1)^{Q(s)} as `None` (zero) or `Some((negative, m))` for ±2^m.
    /// Each step sums out one variable; when it occurs in a product s_i·s_j the
    /// sum forces an affine equation that eliminates s_j as well.
    pub fn exponential_sum(mut self) -> Option<(bool, usize)> {
        let n = self.linear.len();
        let mut alive: BTreeSet<usize> = (0..n).collect();
        let mut power = 0usize;
        while let Some(i) = alive.pop_first() {
            let Some(&j) = self.quadratic[i].iter().next() else {
                if self.linear[i] {
                    return None;
                }
                power += 1;
                continue;
            };
            // Summing s_i forces s_j = Σ_{k ∈ rest} s_k + linear_i.
            let rest: Vec<usize> = self.quadratic[i].iter().copied().filter(|&k| k != j).collect();
            let c = self.linear[i];
            for k in std::mem::take(&mut self.quadratic[i]) {
                self.quadratic[k].remove(&i);
            }
            let j_nbrs: Vec<usize> = std::mem::take(&mut self.quadratic[j]).into_iter().collect();
            for &m in &j_nbrs {
                self.quadratic[m].remove(&j);
            }
            if self.linear[j] {
                self.constant ^= c;
                for &k in &rest {
                    self.linear[k] ^= true;
                }
            }
            for &m in &j_nbrs {
                if c {
                    self.linear[m] ^= true;
                }
                for &k in &rest {
                    self.toggle_product(m, k);
                }
            }
            self.linear[j] = false;
            alive.remove(&j);
            power += 1;
        }
        Some((self.constant, power))
    }
}

/// Z for M_ab = scale·(−1)^{quadratic·ab + linear·(a+b)} on {0,1}: the
/// exponential sum of the form Σ_edges (quadratic·s_u s_v + linear·(s_u + s_v)).
/// A loop contributes quadratic·s_v, since s_v² = s_v and 2·linear·s_v vanishes.
pub fn solve_affine_gauss(scale: &Rational, quadratic: bool, linear: bool, g: &Multigraph) -> Rational {
    let mut form = QuadraticForm::new(g.vertex_count());
    for &(u, v) in g.edges() {
        if quadratic {
            form.toggle_product(u, v);
        }
        if linear && u != v {
            form.linear[u] ^= true;
            form.linear[v] ^= true;
        }
    }
    match form.exponential_sum() {
        None => Rational::zero(),
        Some((neg, m)) => {
            let s = two_pow(m) * pow_u(scale, g.edge_count());
            if neg {
                -s
            } else {
                s
            }
        }
    }
}
