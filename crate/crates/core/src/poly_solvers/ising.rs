use num_traits::Zero;

use super::closed::two_pow;
use super::fkt::even_subgraph_sum;
use crate::error::{Error, Result};
use crate::exact_algebra::rational::{pow_u, Rational};
use crate::graph_core::{EmbeddedGraph, Multigraph};

/// Z for [[x,y],[y,x]]. Degenerate parameters use closed forms; otherwise
/// Z = ((x+y)/2)^{|E|}·2^{|V|}·Σ_{F even} t^{|F|} with t = (x−y)/(x+y), where
/// the even-subgraph sum comes from Pfaffians and needs a planar embedding
/// unless the graph is a forest. Loops only contribute a factor x each.
pub fn solve_ising(x: &Rational, y: &Rational, g: &Multigraph, embedding: Option<&EmbeddedGraph>) -> Result<Rational> {
    let loop_factor = pow_u(x, g.loop_count());
    let edges = g.edges();
    let (plain, _) = g.filter_edges(|e| edges[e].0 != edges[e].1);
    let m = plain.edge_count();
    let n = plain.vertex_count();
    let comps = plain.components().len();
    let value = if y.is_zero() {
        pow_u(x, m) * two_pow(comps)
    } else if x.is_zero() {
        if plain.bipartition().is_some() {
            pow_u(y, m) * two_pow(comps)
        } else {
            Rational::zero()
        }
    } else if x == &-y {
        if plain.degrees().iter().all(|d| d % 2 == 0) {
            pow_u(x, m) * two_pow(n)
        } else {
            Rational::zero()
        }
    } else if x == y {
        pow_u(x, m) * two_pow(n)
    } else {
        let half_sum = (x + y) / Rational::from_integer(2.into());
        let prefactor = pow_u(&half_sum, m) * two_pow(n);
        if plain.is_forest() {
            prefactor
        } else {
            let emb = embedding.ok_or_else(|| Error::MissingEmbedding("the Ising solver needs rotations for graphs with cycles".into()))?;
            let t = (x - y) / (x + y);
            prefactor * even_subgraph_sum(&emb.without_loops(), &t)?
        }
    };
    Ok(loop_factor * value)
}
