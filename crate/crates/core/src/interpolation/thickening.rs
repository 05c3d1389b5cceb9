use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::generating::{decompose_matrix, monomial_value, substitute, GeneratingDecomposition};
use crate::error::{precondition, Result};
use crate::exact_algebra::linalg::vandermonde_solve;
use crate::exact_algebra::rational::{RatStr, Rational};
use crate::graph_core::Multigraph;
use crate::partition::{BruteForce, SymMatrix};

/// What thickening interpolation recovered along the way.
#[derive(Clone, Debug, Serialize)]
pub struct ThickeningReport {
    /// Z of the substituted matrix.
    pub value: RatStr,
    /// Candidate edge products of the normalized matrix and their recovered counts.
    pub spectrum: Vec<(RatStr, RatStr)>,
    /// Number of thickened oracle evaluations used.
    pub oracle_calls: usize,
}

type Monomial = (u8, Vec<u64>);

/// Every (sign, exponent) product of |E| entries: a superset of the values an
/// assignment can produce.
pub(crate) fn candidate_products(dec: &GeneratingDecomposition, edges: usize) -> Vec<Monomial> {
    let q = dec.q();
    let entries: BTreeSet<Monomial> =
        (0..q).flat_map(|i| (i..q).map(move |j| (i, j))).map(|(i, j)| (dec.signs[i][j], dec.exponents[i][j].clone())).collect();
    let mut set: BTreeSet<Monomial> = BTreeSet::from([(0, vec![0; dec.dimension()])]);
    for _ in 0..edges {
        let mut next = BTreeSet::new();
        for (s, e) in &set {
            for (s2, e2) in &entries {
                next.insert((s ^ s2, e.iter().zip(e2).map(|(a, b)| a + b).collect()));
            }
        }
        set = next;
    }
    set.into_iter().collect()
}

/// Z_{𝓜(point)}(g) computed only from oracle values Z_{T_k N}(g) of the
/// normalized matrix N = scalar·M: the occurrence counts are recovered by a
/// Vandermonde solve and then re-weighted at the point.
pub fn thicken_interpolate(m: &SymMatrix, g: &Multigraph, point: &[Rational]) -> Result<ThickeningReport> {
    thicken_interpolate_with(m, g, point, &BruteForce::default())
}

pub fn thicken_interpolate_with(m: &SymMatrix, g: &Multigraph, point: &[Rational], oracle: &BruteForce) -> Result<ThickeningReport> {
    let dec = decompose_matrix(m)?;
    // Validates the point length before any oracle work.
    substitute(&dec, point)?;
    let normalized = substitute(&dec, &dec.generator_values())?;
    let gens = dec.generator_values();
    // Node set: the support of the occurrence spectrum. Each support value is
    // mapped back to its monomial through the candidate products.
    let by_value: BTreeMap<Rational, Monomial> =
        candidate_products(&dec, g.edge_count()).into_iter().map(|(s, e)| (monomial_value(s, &e, &gens), (s, e))).collect();
    let support = oracle.spectrum(&normalized, g)?;
    let mut nodes = Vec::with_capacity(support.pairs.len());
    let mut mons = Vec::with_capacity(support.pairs.len());
    for x in support.pairs.keys() {
        match by_value.get(x) {
            Some(mon) => {
                nodes.push(x.clone());
                mons.push(mon.clone());
            }
            None => return precondition(format!("edge product {x} is not a product of matrix entries")),
        }
    }
    let mut values = Vec::with_capacity(nodes.len());
    for k in 1..=nodes.len() {
        values.push(oracle.z(&normalized.thickened(k), g)?);
    }
    let counts = vandermonde_solve(&nodes, &values)?;
    if counts.iter().any(|c| !c.is_integer() || c.is_negative()) {
        return precondition("recovered occurrence counts are not nonnegative integers");
    }
    let value: Rational = mons.iter().zip(&counts).map(|((s, e), c)| c * monomial_value(*s, e, point)).sum();
    let spectrum = nodes
        .into_iter()
        .zip(counts)
        .filter(|(_, c)| !c.is_zero())
        .map(|(x, c)| (RatStr(x), RatStr(c)))
        .collect();
    Ok(ThickeningReport { value: RatStr(value), spectrum, oracle_calls: values.len() })
}

/// Number of assignments as a Rational, for comparisons in tests.
pub fn assignment_count(q: usize, n: usize) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(q), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::{int, rat};
    use crate::partition::brute_force_z;
    use proptest::prelude::*;

    fn sm(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn worked_values() {
        let m = sm(&[&[2, 1], &[1, 2]]);
        let e = Multigraph::path(1);
        assert_eq!(thicken_interpolate(&m, &e, &[int(3)]).unwrap().value.0, int(8));
        assert_eq!(thicken_interpolate(&m, &e, &[int(0)]).unwrap().value.0, int(2));
        assert_eq!(thicken_interpolate(&m, &e, &[int(2)]).unwrap().value.0, int(6));
        assert!(thicken_interpolate(&SymMatrix::vertex_colouring(2), &e, &[]).is_err());
        let r = thicken_interpolate(&m, &Multigraph::edgeless(3), &[int(5)]).unwrap();
        assert_eq!(r.value.0, assignment_count(2, 3));
    }

    #[test]
    fn identity_point_unscales() {
        let m = SymMatrix::new(vec![vec![rat(1, 2), int(3)], vec![int(3), rat(-2, 3)]]).unwrap();
        let g = Multigraph::cycle(3);
        let dec = decompose_matrix(&m).unwrap();
        let v = thicken_interpolate(&m, &g, &dec.generator_values()).unwrap().value.0;
        let scale = num_traits::pow(dec.scalar().clone(), g.edge_count());
        assert_eq!(v / scale, brute_force_z(&m, &g).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn matches_substituted_brute_force(
            vals in proptest::collection::vec((-6i64..=6, 1i64..=4).prop_filter("nonzero", |(a, _)| *a != 0), 3),
            edges in proptest::collection::vec((0usize..3, 0usize..3), 0..=4),
            pt in (-3i64..=3, 1i64..=3),
        ) {
            let m = SymMatrix::from_upper(2, &vals.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<_>>());
            let g = Multigraph::new(3, edges).unwrap();
            let dec = decompose_matrix(&m).unwrap();
            let point: Vec<Rational> = (0..dec.dimension()).map(|t| rat(pt.0 + t as i64, pt.1)).collect();
            let got = thicken_interpolate(&m, &g, &point).unwrap().value.0;
            prop_assert_eq!(got, brute_force_z(&substitute(&dec, &point).unwrap(), &g).unwrap());
        }
    }
}
