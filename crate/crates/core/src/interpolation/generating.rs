use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::exact_algebra::factor::factor;
use crate::exact_algebra::lattice::{lattice_basis, IntVec};
use crate::exact_algebra::rational::{int, pow_i, pow_u, RatStr, Rational};
use crate::partition::SymMatrix;

/// Positive generators with, for every input value, a sign bit and exponents:
/// value = (−1)^sign · Π generators[t]^exponents[t].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    pub generators: Vec<Rational>,
    pub signs: Vec<u8>,
    pub exponents: Vec<Vec<i64>>,
}

/// |values| expressed over the HNF basis of their prime-exponent lattice.
pub fn generating_set(values: &[Rational]) -> Result<GeneratingSet> {
    if values.iter().any(Zero::is_zero) {
        return input("generating sets are defined for nonzero values only");
    }
    let factored: Vec<_> = values.iter().map(factor).collect();
    let primes: Vec<BigUint> =
        factored.iter().flat_map(|f| f.exponents.keys().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let vectors: Vec<IntVec> = factored
        .iter()
        .map(|f| primes.iter().map(|p| BigInt::from(*f.exponents.get(p).unwrap_or(&0))).collect())
        .collect();
    let signs = factored.iter().map(|f| (f.sign < 0) as u8).collect();
    if primes.is_empty() {
        return Ok(GeneratingSet { generators: Vec::new(), signs, exponents: vec![Vec::new(); values.len()] });
    }
    let lb = lattice_basis(&vectors);
    let generators = lb
        .basis
        .iter()
        .map(|b| {
            primes.iter().zip(b).fold(Rational::one(), |acc, (p, e)| {
                acc * pow_i(&Rational::from_integer(BigInt::from(p.clone())), e.to_i64().expect("exponent fits"))
            })
        })
        .collect();
    let exponents = lb.coordinates.iter().map(|c| c.iter().map(|x| x.to_i64().expect("exponent fits")).collect()).collect();
    Ok(GeneratingSet { generators, signs, exponents })
}

/// Every entry of `scalar · M` written as (−1)^sign · Π g_t^e with all e ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingDecomposition {
    pub generators: Vec<RatStr>,
    pub scalar: RatStr,
    pub signs: Vec<Vec<u8>>,
    pub exponents: Vec<Vec<Vec<u64>>>,
}

impl GeneratingDecomposition {
    pub fn q(&self) -> usize {
        self.signs.len()
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_values(&self) -> Vec<Rational> {
        self.generators.iter().map(|g| g.0.clone()).collect()
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar.0
    }

    pub fn is_positive(&self) -> bool {
        self.signs.iter().flatten().all(|&s| s == 0)
    }
}

pub fn decompose_matrix(m: &SymMatrix) -> Result<GeneratingDecomposition> {
    if m.has_zero_entry() {
        return input("decomposition needs a matrix without zero entries");
    }
    let q = m.q();
    let upper = m.upper();
    let gs = generating_set(&upper)?;
    let d = gs.generators.len();
    // Shift each generator's exponents so the smallest is zero.
    let shift: Vec<i64> = (0..d).map(|t| gs.exponents.iter().map(|e| e[t]).min().unwrap_or(0).min(0)).collect();
    let scalar = gs.generators.iter().zip(&shift).fold(Rational::one(), |acc, (g, &s)| acc * pow_i(g, -s));
    let mut signs = vec![vec![0u8; q]; q];
    let mut exponents = vec![vec![Vec::new(); q]; q];
    let mut k = 0;
    for i in 0..q {
        for j in i..q {
            let e: Vec<u64> = (0..d).map(|t| (gs.exponents[k][t] - shift[t]) as u64).collect();
            signs[i][j] = gs.signs[k];
            signs[j][i] = gs.signs[k];
            exponents[i][j] = e.clone();
            exponents[j][i] = e;
            k += 1;
        }
    }
    Ok(GeneratingDecomposition {
        generators: gs.generators.into_iter().map(RatStr).collect(),
        scalar: RatStr(scalar),
        signs,
        exponents,
    })
}

/// (−1)^sign · Π point[t]^e[t]
pub(crate) fn monomial_value(sign: u8, exps: &[u64], point: &[Rational]) -> Rational {
    let mut v = if sign == 1 { -Rational::one() } else { Rational::one() };
    for (p, &e) in point.iter().zip(exps) {
        if e > 0 {
            v *= pow_u(p, e as usize);
        }
    }
    v
}

/// The matrix with every generator replaced by the given point coordinate.
pub fn substitute(dec: &GeneratingDecomposition, point: &[Rational]) -> Result<SymMatrix> {
    if point.len() != dec.dimension() {
        return input(format!("point has {} coordinates, decomposition has {} generators", point.len(), dec.dimension()));
    }
    let q = dec.q();
    let e = (0..q).map(|i| (0..q).map(|j| monomial_value(dec.signs[i][j], &dec.exponents[i][j], point)).collect()).collect();
    SymMatrix::new(e)
}

/// A 0/1 point at which the squared substituted matrix is VC_q, if one exists:
/// each diagonal entry must own a generator that no off-diagonal entry uses.
pub fn t2_vcq_reduction(dec: &GeneratingDecomposition) -> Option<Vec<Rational>> {
    let q = dec.q();
    let d = dec.dimension();
    let off_uses = |t: usize| (0..q).any(|j| (0..q).any(|k| j != k && dec.exponents[j][k][t] > 0));
    let mut point = vec![Rational::one(); d];
    for i in 0..q {
        let t = (0..d).find(|&t| dec.exponents[i][i][t] > 0 && !off_uses(t))?;
        point[t] = Rational::zero();
    }
    let m = substitute(dec, &point).ok()?;
    (m.thickened(2) == SymMatrix::vertex_colouring(q)).then_some(point)
}

/// A symmetric matrix of nonnegative exponents standing for M(p) = (p^{x_ij}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialMatrix {
    x: Vec<Vec<u64>>,
}

impl MonomialMatrix {
    pub fn new(x: Vec<Vec<u64>>) -> Result<Self> {
        let n = x.len();
        if x.iter().any(|r| r.len() != n) {
            return input("exponent matrix must be square");
        }
        for i in 0..n {
            for j in 0..i {
                if x[i][j] != x[j][i] {
                    return input(format!("exponent matrix is not symmetric at ({i},{j})"));
                }
            }
        }
        Ok(MonomialMatrix { x })
    }

    pub fn from_rows(rows: &[&[u64]]) -> Result<Self> {
        MonomialMatrix::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    pub fn size(&self) -> usize {
        self.x.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.x[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.x
    }

    /// M(p) with entries p^{x_ij}.
    pub fn eval(&self, p: &Rational) -> SymMatrix {
        SymMatrix::new(self.x.iter().map(|r| r.iter().map(|&e| pow_u(p, e as usize)).collect()).collect())
            .expect("exponent matrix is symmetric")
    }

    pub fn as_rational(&self) -> Vec<Vec<Rational>> {
        self.x.iter().map(|r| r.iter().map(|&e| int(e as i64)).collect()).collect()
    }
}

/// X with x_ij = Σ_t e_t · (exponent of generator t in entry ij).
pub fn monomialize(dec: &GeneratingDecomposition, e: &[u64]) -> Result<MonomialMatrix> {
    if !dec.is_positive() {
        return input("monomial matrices are defined for positive matrices only");
    }
    if e.len() != dec.dimension() {
        return input(format!("{} exponents for {} generators", e.len(), dec.dimension()));
    }
    let q = dec.q();
    let x = (0..q).map(|i| (0..q).map(|j| dec.exponents[i][j].iter().zip(e).map(|(a, b)| a * b).sum()).collect()).collect();
    MonomialMatrix::new(x)
}
