use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_algebra::rational::{pow_u, Rational};
use crate::graph_core::Multigraph;

pub(crate) fn two_pow(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

/// Z for M = scale·wwᵀ: scale^{|E|}·Π_v Σ_i w_i^{deg v}.
pub fn solve_rank_one(scale: &Rational, w: &[Rational], g: &Multigraph) -> Rational {
    let mut z = pow_u(scale, g.edge_count());
    if z.is_zero() {
        return z;
    }
    for d in g.degrees() {
        z *= w.iter().map(|x| pow_u(x, d)).sum::<Rational>();
        if z.is_zero() {
            break;
        }
    }
    z
}

/// Z for the star [[0,0,x],[0,0,y],[x,y,0]]: per component, one side takes
/// the center and every vertex of the other side picks x or y.
pub fn solve_bipartite3(x: &Rational, y: &Rational, g: &Multigraph) -> Rational {
    let Some(sides) = g.bipartition() else { return Rational::zero() };
    let deg = g.degrees();
    let free = |side: &[usize]| side.iter().map(|&v| pow_u(x, deg[v]) + pow_u(y, deg[v])).product::<Rational>();
    let mut z = Rational::one();
    for (a, b) in &sides {
        if b.is_empty() {
            z *= Rational::from_integer(BigInt::from(3));
        } else {
            z *= free(a) + free(b);
        }
    }
    z
}

/// Z for X = [[0,1],[1,0]]: two proper 2-colourings per component.
pub fn solve_swap(g: &Multigraph) -> Rational {
    match g.bipartition() {
        Some(sides) => two_pow(sides.len()),
        None => Rational::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::int;

    #[test]
    fn closed_forms() {
        assert_eq!(solve_rank_one(&int(1), &[int(1), int(2)], &Multigraph::path(1)), int(9));
        assert_eq!(solve_rank_one(&int(1), &[int(1), int(2), int(3)], &Multigraph::cycle(3)), int(2744));
        assert_eq!(solve_rank_one(&int(4), &[int(1), int(1), int(1)], &Multigraph::edgeless(2)), int(9));
        assert_eq!(solve_bipartite3(&int(2), &int(3), &Multigraph::path(1)), int(10));
        assert_eq!(solve_bipartite3(&int(2), &int(3), &Multigraph::cycle(3)), int(0));
        assert_eq!(solve_bipartite3(&int(2), &int(3), &Multigraph::edgeless(1)), int(3));
    }
}
