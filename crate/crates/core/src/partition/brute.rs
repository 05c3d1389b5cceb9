use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::matrix::SymMatrix;
use super::spectrum::{DegreeWeightFamily, Spectrum};
use crate::error::{input, Error, Result};
use crate::exact_algebra::rational::{pow_u, Rational};
use crate::graph_core::Multigraph;

pub const DEFAULT_STATE_CAP: u64 = 1 << 27;

/// Exhaustive evaluator over all q^|V| assignments, guarded by a state cap.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    pub cap: u64,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { cap: DEFAULT_STATE_CAP }
    }
}

/// Σ_σ Π_e m_{σ(u)σ(v)} with the default state cap.
pub fn brute_force_z(m: &SymMatrix, g: &Multigraph) -> Result<Rational> {
    BruteForce::default().z(m, g)
}

pub fn spectrum(m: &SymMatrix, g: &Multigraph) -> Result<Spectrum> {
    BruteForce::default().spectrum(m, g)
}

/// Σ_σ Π_e m_{σ(u)σ(v)} · Π_v D^[deg v]_{σ(v)} with the default state cap.
pub fn brute_force_z_weighted(m: &SymMatrix, d: &DegreeWeightFamily, g: &Multigraph) -> Result<Rational> {
    BruteForce::default().z_weighted(m, d, g)
}

impl BruteForce {
    pub fn z(&self, m: &SymMatrix, g: &Multigraph) -> Result<Rational> {
        Ok(Enumeration::new(m, None, g, self.cap)?.run().total())
    }

    pub fn spectrum(&self, m: &SymMatrix, g: &Multigraph) -> Result<Spectrum> {
        let tally = Enumeration::new(m, None, g, self.cap)?.run();
        let mut pairs: BTreeMap<Rational, u64> = BTreeMap::new();
        if tally.zeros > 0 {
            pairs.insert(Rational::zero(), tally.zeros);
        }
        for (value, count) in tally.products() {
            *pairs.entry(value).or_insert(0) += count;
        }
        pairs.retain(|_, c| *c > 0);
        Ok(Spectrum { pairs, edges: g.edge_count(), q: m.q() })
    }

    pub fn z_weighted(&self, m: &SymMatrix, d: &DegreeWeightFamily, g: &Multigraph) -> Result<Rational> {
        let degrees = g.degrees();
        let mut weights = Vec::with_capacity(degrees.len());
        for &deg in &degrees {
            let w = d.weights(deg)?;
            if w.len() != m.q() {
                return input(format!("degree weight vector has length {}, matrix has q = {}", w.len(), m.q()));
            }
            weights.push(w);
        }
        Ok(Enumeration::new(m, Some(weights), g, self.cap)?.run().total())
    }
}

/// Factor values are interned into classes; an assignment is summarized by
/// how many times each class occurs, and exact products are formed once per
/// distinct summary.
struct Enumeration {
    n: usize,
    q: usize,
    values: Vec<Rational>,
    zero: Option<usize>,
    edge_class: Vec<Vec<usize>>,
    /// back[v]: earlier endpoints (or v itself for loops), one per edge.
    back: Vec<Vec<usize>>,
    vertex_class: Vec<Option<Vec<usize>>>,
    bits: u32,
    packed: bool,
}

#[derive(Default)]
struct Tally {
    packed: HashMap<u128, u64>,
    wide: HashMap<Vec<u32>, u64>,
    zeros: u64,
    bits: u32,
    values: Vec<Rational>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, c) in other.packed {
            *self.packed.entry(k).or_insert(0) += c;
        }
        for (k, c) in other.wide {
            *self.wide.entry(k).or_insert(0) += c;
        }
        self.zeros += other.zeros;
        self
    }

    fn product(&self, counts: impl Iterator<Item = u32>) -> Rational {
        let mut p = Rational::one();
        for (c, k) in counts.enumerate() {
            if k > 0 {
                p *= pow_u(&self.values[c], k as usize);
            }
        }
        p
    }

    fn products(&self) -> Vec<(Rational, u64)> {
        let mask = (1u128 << self.bits) - 1;
        let k = self.values.len();
        let mut out: Vec<(Rational, u64)> = self
            .packed
            .iter()
            .map(|(&key, &c)| (self.product((0..k).map(|i| ((key >> (i as u32 * self.bits)) & mask) as u32)), c))
            .collect();
        out.extend(self.wide.iter().map(|(key, &c)| (self.product(key.iter().copied()), c)));
        out
    }

    fn total(&self) -> Rational {
        self.products().into_iter().map(|(v, c)| v * Rational::from_integer(BigInt::from(c))).sum()
    }
}

fn intern(values: &mut Vec<Rational>, x: &Rational) -> usize {
    match values.iter().position(|v| v == x) {
        Some(i) => i,
        None => {
            values.push(x.clone());
            values.len() - 1
        }
    }
}

impl Enumeration {
    fn new(m: &SymMatrix, weights: Option<Vec<Vec<Rational>>>, g: &Multigraph, cap: u64) -> Result<Self> {
        let (n, q) = (g.vertex_count(), m.q());
        let states = (q as u64).checked_pow(n as u32);
        if states.is_none_or(|s| s > cap) {
            let exact = num_traits::pow(BigInt::from(q), n);
            return Err(Error::TooLarge { states: exact.to_string(), cap });
        }
        let mut values = Vec::new();
        let edge_class: Vec<Vec<usize>> =
            (0..q).map(|i| (0..q).map(|j| intern(&mut values, m.get(i, j))).collect()).collect();
        let vertex_class = match weights {
            None => vec![None; n],
            Some(ws) => ws
                .iter()
                .map(|w| if w.iter().all(One::is_one) { None } else { Some(w.iter().map(|x| intern(&mut values, x)).collect()) })
                .collect(),
        };
        let zero = values.iter().position(Zero::is_zero);
        let mut back = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            back[b].push(a);
        }
        let max_count = (g.edge_count() + n).max(1) as u64;
        let bits = 64 - max_count.leading_zeros();
        let packed = bits as usize * values.len() <= 128;
        Ok(Enumeration { n, q, values, zero, edge_class, back, vertex_class, bits, packed })
    }

    fn leaves_below(&self, depth: usize) -> u64 {
        (self.q as u64).pow((self.n - depth) as u32)
    }

    fn record(&self, counts: &[u32], tally: &mut Tally) {
        if self.packed {
            let mut key = 0u128;
            for (i, &c) in counts.iter().enumerate() {
                key |= (c as u128) << (i as u32 * self.bits);
            }
            *tally.packed.entry(key).or_insert(0) += 1;
        } else {
            *tally.wide.entry(counts.to_vec()).or_insert(0) += 1;
        }
    }

    /// Applies the factors of vertex v in state s; returns false when a zero factor appeared.
    fn apply(&self, v: usize, sigma: &[usize], counts: &mut [u32], touched: &mut Vec<usize>) -> bool {
        let s = sigma[v];
        if let Some(vc) = &self.vertex_class[v] {
            counts[vc[s]] += 1;
            touched.push(vc[s]);
        }
        for &u in &self.back[v] {
            let c = self.edge_class[sigma[u]][s];
            counts[c] += 1;
            touched.push(c);
        }
        self.zero.is_none_or(|z| counts[z] == 0)
    }

    fn dfs(&self, v: usize, sigma: &mut [usize], counts: &mut [u32], tally: &mut Tally) {
        if v == self.n {
            self.record(counts, tally);
            return;
        }
        let mut touched = Vec::with_capacity(self.back[v].len() + 1);
        for s in 0..self.q {
            sigma[v] = s;
            touched.clear();
            if self.apply(v, sigma, counts, &mut touched) {
                self.dfs(v + 1, sigma, counts, tally);
            } else {
                tally.zeros += self.leaves_below(v + 1);
            }
            for &c in &touched {
                counts[c] -= 1;
            }
        }
    }

    fn empty_tally(&self) -> Tally {
        Tally { bits: self.bits, values: self.values.clone(), ..Tally::default() }
    }

    fn run(&self) -> Tally {
        let states = self.leaves_below(0);
        let split = (0..=self.n).find(|&d| (self.q as u64).pow(d as u32) >= 512).unwrap_or(self.n);
        if states < 1 << 14 || split == 0 || self.q < 2 {
            let mut tally = self.empty_tally();
            let mut sigma = vec![0; self.n];
            let mut counts = vec![0u32; self.values.len()];
            self.dfs(0, &mut sigma, &mut counts, &mut tally);
            return tally;
        }
        let prefixes = (self.q as u64).pow(split as u32);
        (0..prefixes)
            .into_par_iter()
            .fold(
                || self.empty_tally(),
                |mut tally, idx| {
                    let mut sigma = vec![0; self.n];
                    let mut rest = idx;
                    for s in sigma.iter_mut().take(split) {
                        *s = (rest % self.q as u64) as usize;
                        rest /= self.q as u64;
                    }
                    let mut counts = vec![0u32; self.values.len()];
                    let mut touched = Vec::new();
                    for v in 0..split {
                        if !self.apply(v, &sigma, &mut counts, &mut touched) {
                            tally.zeros += self.leaves_below(split);
                            return tally;
                        }
                    }
                    self.dfs(split, &mut sigma, &mut counts, &mut tally);
                    tally
                },
            )
            .reduce(|| self.empty_tally(), Tally::merge)
    }
}

/// Direct Σ_σ Π_e m evaluation with no shared machinery, for cross-checking.
#[cfg(test)]
pub(crate) fn naive_z(m: &SymMatrix, g: &Multigraph) -> Rational {
    let (n, q) = (g.vertex_count(), m.q());
    let mut total = Rational::zero();
    for idx in 0..q.pow(n as u32) {
        let sigma: Vec<usize> = (0..n).map(|v| (idx / q.pow(v as u32)) % q).collect();
        let mut p = Rational::one();
        for &(u, v) in g.edges() {
            p *= m.get(sigma[u], sigma[v]);
        }
        total += p;
    }
    total
}
