use num_traits::{One, Zero};

use super::matrix::SymMatrix;
use super::spectrum::DegreeWeightFamily;
use crate::error::{Error, Result};
use crate::exact_algebra::rational::Rational;
use crate::graph_core::Multigraph;

/// A table over the assignments of `scope`, the first scope variable varying
/// slowest.
#[derive(Clone, Debug)]
struct Factor {
    scope: Vec<usize>,
    table: Vec<Rational>,
}

impl Factor {
    fn constant(c: Rational) -> Self {
        Factor { scope: Vec::new(), table: vec![c] }
    }
}

/// Exact Z_M(G) by summing out one vertex at a time, always the one whose
/// merged factor is smallest. Cost is q^(width + 1) per step, so long paths
/// and other low-treewidth graphs far beyond brute force are cheap.
#[derive(Clone, Copy, Debug)]
pub struct Elimination {
    /// Largest factor table allowed.
    pub cap: u64,
}

impl Default for Elimination {
    fn default() -> Self {
        Elimination { cap: 1 << 22 }
    }
}

impl Elimination {
    pub fn z(&self, m: &SymMatrix, g: &Multigraph) -> Result<Rational> {
        self.run(m, g, None)
    }

    pub fn z_weighted(&self, m: &SymMatrix, d: &DegreeWeightFamily, g: &Multigraph) -> Result<Rational> {
        self.run(m, g, Some(d))
    }

    fn run(&self, m: &SymMatrix, g: &Multigraph, d: Option<&DegreeWeightFamily>) -> Result<Rational> {
        let q = m.q();
        let n = g.vertex_count();
        let mut factors: Vec<Factor> = Vec::new();
        for &(u, v) in g.edges() {
            if u == v {
                factors.push(Factor { scope: vec![u], table: (0..q).map(|a| m.get(a, a).clone()).collect() });
            } else {
                let (a, b) = (u.min(v), u.max(v));
                let table = (0..q * q).map(|i| m.get(i / q, i % q).clone()).collect();
                factors.push(Factor { scope: vec![a, b], table });
            }
        }
        if let Some(d) = d {
            for (v, deg) in g.degrees().into_iter().enumerate() {
                let w = d.weights(deg)?;
                if w.len() != q {
                    return crate::error::input(format!("degree weights have length {} for q = {q}", w.len()));
                }
                factors.push(Factor { scope: vec![v], table: w });
            }
        }
        let mut remaining: Vec<usize> = (0..n).collect();
        while !remaining.is_empty() {
            let (pos, width) = remaining
                .iter()
                .enumerate()
                .map(|(i, &v)| (i, merged_scope(&factors, v).len()))
                .min_by_key(|&(_, w)| w)
                .expect("nonempty");
            let table_size = (q as u64).checked_pow(width as u32).unwrap_or(u64::MAX);
            if table_size > self.cap {
                return Err(Error::TooLarge { states: table_size.to_string(), cap: self.cap });
            }
            let v = remaining.swap_remove(pos);
            let (touching, rest): (Vec<Factor>, Vec<Factor>) = factors.into_iter().partition(|f| f.scope.contains(&v));
            factors = rest;
            factors.push(sum_out(&touching, v, q));
        }
        Ok(factors.iter().map(|f| f.table[0].clone()).product())
    }
}

fn merged_scope(factors: &[Factor], v: usize) -> Vec<usize> {
    let mut scope: Vec<usize> = factors.iter().filter(|f| f.scope.contains(&v)).flat_map(|f| f.scope.iter().copied()).collect();
    scope.push(v);
    scope.sort_unstable();
    scope.dedup();
    scope
}

/// Σ_{x_v} Π touching, as a factor over the other variables.
fn sum_out(touching: &[Factor], v: usize, q: usize) -> Factor {
    if touching.is_empty() {
        // An isolated vertex: every state contributes 1.
        return Factor::constant(Rational::from_integer((q as i64).into()));
    }
    let mut scope: Vec<usize> = touching.iter().flat_map(|f| f.scope.iter().copied()).filter(|&u| u != v).collect();
    scope.sort_unstable();
    scope.dedup();
    let full: Vec<usize> = scope.iter().copied().chain(std::iter::once(v)).collect();
    // Position in `full` of each factor variable.
    let maps: Vec<Vec<usize>> = touching
        .iter()
        .map(|f| f.scope.iter().map(|u| full.iter().position(|w| w == u).expect("in scope")).collect())
        .collect();
    let mut table = vec![Rational::zero(); q.pow(scope.len() as u32)];
    let mut digits = vec![0usize; full.len()];
    for (out_idx, slot) in table.iter_mut().enumerate() {
        let mut rem = out_idx;
        for i in (0..scope.len()).rev() {
            digits[i] = rem % q;
            rem /= q;
        }
        let mut acc = Rational::zero();
        for x in 0..q {
            digits[full.len() - 1] = x;
            let mut prod = Rational::one();
            for (f, map) in touching.iter().zip(&maps) {
                let idx = map.iter().fold(0, |a, &p| a * q + digits[p]);
                let val = &f.table[idx];
                if val.is_zero() {
                    prod = Rational::zero();
                    break;
                }
                prod *= val;
            }
            acc += prod;
        }
        *slot = acc;
    }
    Factor { scope, table }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::{int, rat};
    use crate::graph_core::{corpus::planar_corpus, stretch};
    use crate::partition::brute::{brute_force_z, brute_force_z_weighted, naive_z};
    use proptest::prelude::*;

    #[test]
    fn long_paths_and_corpus() {
        let m = SymMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]).unwrap();
        let e = Elimination::default();
        for (_, g) in planar_corpus() {
            assert_eq!(e.z(&m, g.graph()).unwrap(), brute_force_z(&m, g.graph()).unwrap());
        }
        // 61 vertices on a stretched triangle; brute force could never do this.
        let g = stretch(&Multigraph::cycle(3), 20).unwrap();
        assert_eq!(e.z(&m, &g).unwrap(), e.z(&m.power(20), &Multigraph::cycle(3)).unwrap());
        assert_eq!(e.z(&m, &Multigraph::edgeless(3)).unwrap(), int(27));
        assert!(Elimination { cap: 8 }.z(&m, &Multigraph::complete(4)).is_err());
    }

    #[test]
    fn weighted_matches_brute() {
        let m = SymMatrix::from_ints(&[&[2, 1], &[1, -1]]).unwrap();
        let d = DegreeWeightFamily::twinned(rat(1, 2));
        for (_, g) in planar_corpus().into_iter().take(15) {
            assert_eq!(Elimination::default().z_weighted(&m, &d, g.graph()).unwrap(), brute_force_z_weighted(&m, &d, g.graph()).unwrap());
        }
    }

    proptest! {
        #[test]
        fn agrees_with_naive(q in 1usize..=3, v in proptest::collection::vec(-3i64..=3, 6), n in 1usize..=5, edges in proptest::collection::vec((0usize..5, 0usize..5), 0..=7)) {
            let m = SymMatrix::from_upper(q, &v[..q * (q + 1) / 2].iter().map(|&x| int(x)).collect::<Vec<_>>());
            let g = Multigraph::new(n, edges.into_iter().map(|(a, b)| (a % n, b % n)).collect()).unwrap();
            prop_assert_eq!(Elimination::default().z(&m, &g).unwrap(), naive_z(&m, &g));
        }
    }
}
