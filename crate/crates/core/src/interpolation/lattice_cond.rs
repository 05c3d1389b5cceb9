use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{input, Result};
use crate::exact_algebra::factor::factor;
use crate::exact_algebra::lattice::{integer_kernel, IntVec};
use crate::exact_algebra::rational::{pow_i, to_f64, Rational};
use crate::exact_algebra::real::HighPrecisionReal;

pub const DEFAULT_LATTICE_BOUND: u32 = 6;

/// 10^−20, the default numeric relation tolerance.
pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 20))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeStatus {
    Satisfied,
    Violated,
    /// No relation with max |n_i| ≤ bound; says nothing about larger ones.
    SatisfiedUpToBound(u32),
    Unknown,
}

/// Outcome of the lattice condition: whether Π r_i^{n_i} = 1 with Σ n_i = 0
/// forces n = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeVerdict {
    pub status: LatticeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    /// True when the verdict came from floating-point search rather than exact algebra.
    pub numeric: bool,
}

impl LatticeVerdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self.status, LatticeStatus::Satisfied)
    }
}

/// Σ n_i = 0, n ≠ 0 and Π r_i^{n_i} = 1 exactly.
pub fn is_relation(values: &[Rational], n: &[i64]) -> bool {
    n.iter().any(|&x| x != 0)
        && n.iter().sum::<i64>() == 0
        && values.iter().zip(n).fold(Rational::one(), |acc, (r, &e)| acc * pow_i(r, e)).is_one()
}

fn normalize_sign(mut w: Vec<i64>) -> Vec<i64> {
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    w
}

/// Exact check via the integer kernel of [prime-exponent rows; all-ones row].
pub fn lattice_check(values: &[Rational]) -> Result<LatticeVerdict> {
    if values.iter().any(Zero::is_zero) {
        return input("lattice condition needs nonzero values");
    }
    let n = values.len();
    let factored: Vec<_> = values.iter().map(factor).collect();
    let primes: BTreeSet<BigUint> = factored.iter().flat_map(|f| f.exponents.keys().cloned()).collect();
    let mut rows: Vec<IntVec> =
        primes.iter().map(|p| factored.iter().map(|f| BigInt::from(*f.exponents.get(p).unwrap_or(&0))).collect()).collect();
    rows.push(vec![BigInt::one(); n]);
    let kernel = integer_kernel(&rows, n);
    if kernel.is_empty() {
        return Ok(LatticeVerdict { status: LatticeStatus::Satisfied, witness: None, numeric: false });
    }
    let to_i64 = |v: &IntVec| v.iter().map(|x| x.to_i64().expect("kernel entry fits in i64")).collect::<Vec<_>>();
    // The kernel only sees |r_i|; a relation must also have an even number of negative factors.
    let sign_ok = |v: &[i64]| values.iter().zip(v).filter(|(r, _)| r.is_negative()).map(|(_, &e)| e).sum::<i64>() % 2 == 0;
    let witness = kernel
        .iter()
        .map(to_i64)
        .find(|v| sign_ok(v))
        .unwrap_or_else(|| to_i64(&kernel[0]).iter().map(|x| 2 * x).collect());
    let witness = normalize_sign(witness);
    debug_assert!(is_relation(values, &witness));
    Ok(LatticeVerdict { status: LatticeStatus::Violated, witness: Some(witness), numeric: false })
}

/// Bounded search for a relation among real values known only as enclosures:
/// every n with Σ n_i = 0 and 0 < max|n_i| ≤ bound is tried, by increasing
/// max-norm then lexicographically; |Σ n_i ln|r_i|| < tol counts as a relation.
pub fn lattice_check_numeric(values: &[HighPrecisionReal], bound: u32, tol: &Rational, bits: u64) -> Result<LatticeVerdict> {
    if values.iter().any(HighPrecisionReal::contains_zero) {
        return input("lattice condition needs values bounded away from zero");
    }
    let n = values.len();
    let mut logs = Vec::with_capacity(n);
    for v in values {
        logs.push(v.abs().ln(bits)?.mid());
    }
    let scale = Rational::from_integer(BigInt::one() << bits as usize);
    let fixed: Vec<BigInt> = logs.iter().map(|l| (l * &scale).round().to_integer()).collect();
    let approx: Vec<f64> = logs.iter().map(to_f64).collect();
    let threshold = (tol * &scale).round().to_integer();
    let negative: Vec<bool> = values.iter().map(|v| v.hi().is_negative()).collect();
    let mut found = None;
    'outer: for m in 1..=bound as i64 {
        let mut cand = vec![0i64; n];
        if search(0, m, &mut cand, &mut |w| {
            let quick: f64 = w.iter().zip(&approx).map(|(&a, l)| a as f64 * l).sum();
            if quick.abs() > 1e-6 {
                return false;
            }
            let parity: i64 = w.iter().zip(&negative).filter(|(_, &neg)| neg).map(|(&a, _)| a).sum();
            if parity % 2 != 0 {
                return false;
            }
            let s: BigInt = w.iter().zip(&fixed).map(|(&a, l)| BigInt::from(a) * l).sum();
            s.abs() < threshold
        }) {
            found = Some(cand);
            break 'outer;
        }
    }
    Ok(match found {
        Some(w) => LatticeVerdict { status: LatticeStatus::Violated, witness: Some(w), numeric: true },
        None => LatticeVerdict { status: LatticeStatus::SatisfiedUpToBound(bound), witness: None, numeric: true },
    })
}

/// Lexicographic walk over vectors in [−m, m]^n with zero sum, max-norm exactly m
/// and positive leading entry; the last coordinate is forced by the sum.
fn search(i: usize, m: i64, cand: &mut Vec<i64>, accept: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    let n = cand.len();
    if i + 1 == n {
        let last = -cand[..i].iter().sum::<i64>();
        if last.abs() > m {
            return false;
        }
        cand[i] = last;
        let leading_ok = cand.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
        let norm_ok = cand.iter().any(|x| x.abs() == m);
        return leading_ok && norm_ok && accept(cand);
    }
    let leading_zero = cand[..i].iter().all(|&x| x == 0);
    let lo = if leading_zero { 0 } else { -m };
    for x in lo..=m {
        cand[i] = x;
        if search(i + 1, m, cand, accept) {
            return true;
        }
    }
    cand[i] = 0;
    false
}

/// Independent brute-force search, for verification: any relation with |n_i| ≤ bound?
pub fn bounded_relation_exists(values: &[Rational], bound: i64) -> bool {
    let n = values.len();
    if n == 0 {
        return false;
    }
    let mut cand = vec![0i64; n];
    (1..=bound).any(|m| search(0, m, &mut cand, &mut |w| is_relation(values, w)))
}
