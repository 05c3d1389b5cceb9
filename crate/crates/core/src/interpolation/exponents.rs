use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::generating::GeneratingDecomposition;
use crate::error::{input, Result};
use crate::exact_algebra::poly::Poly;
use crate::exact_algebra::rational::{format_rational, pow_u, Rational};
use crate::exact_algebra::roots::{count_roots, isolate_real_roots, refine, squarefree_part, sturm_sequence, RootInterval};

/// Sparse multivariate polynomial with rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u64>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<u64>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, exps: Vec<u64>, c: Rational) {
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * point.iter().zip(e).map(|(p, &k)| pow_u(p, k as usize)).product::<Rational>())
            .sum()
    }

    /// f(x^{e_1}, ..., x^{e_d}) as a univariate polynomial.
    pub fn specialize(&self, e: &[u64]) -> Poly {
        let mut coeffs: BTreeMap<u64, Rational> = BTreeMap::new();
        for (a, c) in &self.terms {
            let deg: u64 = a.iter().zip(e).map(|(x, y)| x * y).sum();
            *coeffs.entry(deg).or_insert_with(Rational::zero) += c;
        }
        let top = coeffs.keys().next_back().copied().unwrap_or(0) as usize;
        let mut v = vec![Rational::zero(); top + 1];
        for (d, c) in coeffs {
            v[d as usize] = c;
        }
        Poly::new(v)
    }

    /// Substitutes x^{e_t} for the first `e.len()` variables, keeping the rest
    /// symbolic; the result has the univariate degree as its first exponent.
    fn partial_specialize(&self, e: &[u64]) -> MultiPoly {
        let k = e.len();
        let mut out = MultiPoly::zero(1 + self.nvars - k);
        for (a, c) in &self.terms {
            let mut exps = Vec::with_capacity(out.nvars);
            exps.push(a[..k].iter().zip(e).map(|(x, y)| x * y).sum());
            exps.extend_from_slice(&a[k..]);
            out.accumulate(exps, c.clone());
        }
        out
    }

    /// Leibniz expansion; fine for the small matrices used here.
    pub fn det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
        fn rec(m: &[Vec<MultiPoly>], row: usize, used: &mut Vec<bool>, nvars: usize) -> MultiPoly {
            if row == m.len() {
                return MultiPoly::constant(nvars, Rational::one());
            }
            let mut acc = MultiPoly::zero(nvars);
            let mut sign_flip = false;
            for col in 0..m.len() {
                if used[col] {
                    continue;
                }
                // Sign of the column choice: parity of the unused columns to its left.
                if !m[row][col].is_zero() {
                    used[col] = true;
                    let minor = rec(m, row + 1, used, nvars);
                    used[col] = false;
                    let term = &m[row][col] * &minor;
                    acc = if sign_flip { acc - term } else { acc + term };
                }
                sign_flip = !sign_flip;
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.len()], nvars)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (e, c) in rhs.terms {
            self.accumulate(e, c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.accumulate(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                if vars.is_empty() {
                    format_rational(c)
                } else if c.is_one() {
                    vars.join("*")
                } else {
                    format!("{}*{}", format_rational(c), vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// det 𝓜(p_1, ..., p_d) as a polynomial in the generator variables.
pub fn decomposition_det(dec: &GeneratingDecomposition) -> MultiPoly {
    let d = dec.dimension();
    let q = dec.q();
    let m: Vec<Vec<MultiPoly>> = (0..q)
        .map(|i| {
            (0..q)
                .map(|j| {
                    let c = if dec.signs[i][j] == 1 { -Rational::one() } else { Rational::one() };
                    MultiPoly::monomial(dec.exponents[i][j].clone(), c)
                })
                .collect()
        })
        .collect();
    MultiPoly::det(&m, d)
}

/// Nonnegative (e_1..e_d) with f(x^{e_1}, ..., x^{e_d}) ≢ 0. Variables are
/// settled left to right, each with the smallest exponent that keeps the
/// partial substitution nonzero; such an exponent always exists because a
/// large enough one separates every pair of degrees.
pub fn univariate_exponents(f: &MultiPoly) -> Result<Vec<u64>> {
    if f.is_zero() {
        return input("univariate_exponents needs a nonzero polynomial");
    }
    let mut e: Vec<u64> = Vec::with_capacity(f.nvars);
    for _ in 0..f.nvars {
        let mut k = 0u64;
        loop {
            e.push(k);
            if !f.partial_specialize(&e).is_zero() {
                break;
            }
            e.pop();
            k += 1;
        }
    }
    debug_assert!(!f.specialize(&e).is_zero());
    Ok(e)
}

/// A rational r★ > 1 such that f has no root in (1, r★], or `None` when f has
/// no real root above 1 at all.
pub fn nonvanishing_sup(f: &Poly) -> Result<Option<Rational>> {
    if f.is_zero() {
        return input("nonvanishing_sup needs a nonzero polynomial");
    }
    let one = Rational::one();
    let g = squarefree_part(f);
    let g = if g.eval(&one).is_zero() { g.div_rem(&Poly::linear_root(&one)).0 } else { g };
    if g.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let seq = sturm_sequence(&g);
    for iv in isolate_real_roots(&g)? {
        if iv.hi <= one {
            continue;
        }
        let iv = if iv.lo < one {
            // The interval straddles 1, which is not a root of g.
            if count_roots(&seq, &one, &iv.hi) == 0 {
                continue;
            }
            RootInterval { lo: one.clone(), hi: iv.hi }
        } else {
            iv
        };
        if iv.is_exact() {
            return Ok(Some((&one + &iv.lo) / Rational::from_integer(BigInt::from(2))));
        }
        let mut width = (&iv.hi - &one) / Rational::from_integer(BigInt::from(64));
        loop {
            let r = refine(&g, &iv, &width);
            if r.is_exact() {
                return Ok(Some((&one + &r.lo) / Rational::from_integer(BigInt::from(2))));
            }
            if r.lo > one {
                return Ok(Some(r.lo));
            }
            width /= Rational::from_integer(BigInt::from(2));
        }
    }
    Ok(None)
}
