use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{input, Result};
use crate::exact_algebra::linalg::{det, rank};
use crate::exact_algebra::rational::{int, pow_u, RatStr, Rational};
use crate::interpolation::MonomialMatrix;

/// The six permutations of {0,1,2} with their signs.
pub(crate) const PERMS3: [([usize; 3], i64); 6] =
    [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];

/// Coefficients of δ^0..δ^3 in f(δ) = det M(e^δ), with the closed forms they
/// are expected to match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaylorReport {
    pub a0: RatStr,
    pub a1: RatStr,
    pub a2: RatStr,
    pub a3: RatStr,
    pub det_x: RatStr,
    pub g_x: RatStr,
    /// det(r1 − r3, r2 − r3, 1) with r_i the rows of X.
    pub f2_row_reduced: RatStr,
    /// det(r1, r2, 1) + det(r1, 1, r3) + det(1, r2, r3).
    pub f2_three_dets: RatStr,
    /// a0 = a1 = 0, a2 equals both closed forms and a3 = (3g + 6 det X)/6.
    pub consistent: bool,
}

fn check3(x: &[Vec<Rational>]) -> Result<()> {
    if x.len() != 3 || x.iter().any(|r| r.len() != 3) {
        return input("a 3x3 matrix is required");
    }
    for i in 0..3 {
        for j in 0..i {
            if x[i][j] != x[j][i] {
                return input(format!("matrix is not symmetric at ({i},{j})"));
            }
        }
    }
    Ok(())
}

fn det_rows(rows: [&[Rational]; 3]) -> Rational {
    det(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).map(int).product()
}

pub fn taylor_coeffs(x: &MonomialMatrix) -> Result<TaylorReport> {
    taylor_coeffs_rational(&x.as_rational())
}

/// Exact Taylor data by the permutation expansion
/// det M(e^δ) = Σ_π sgn π · e^{δ·Σ_i x_{iπ(i)}}, so a_k = Σ_π sgn π (Σ_i x_{iπ(i)})^k / k!.
pub fn taylor_coeffs_rational(x: &[Vec<Rational>]) -> Result<TaylorReport> {
    check3(x)?;
    let sums: Vec<(Rational, i64)> = PERMS3.iter().map(|(p, s)| ((0..3).map(|i| x[i][p[i]].clone()).sum(), *s)).collect();
    let a: Vec<Rational> = (0..4)
        .map(|k| sums.iter().map(|(v, s)| int(*s) * pow_u(v, k)).sum::<Rational>() / factorial(k))
        .collect();
    let det_x = det(&x.to_vec());
    let g_x = g_of(x)?;
    let ones = vec![Rational::one(); 3];
    let rows: Vec<&[Rational]> = x.iter().map(|r| r.as_slice()).collect();
    let d13: Vec<Rational> = (0..3).map(|j| &x[0][j] - &x[2][j]).collect();
    let d23: Vec<Rational> = (0..3).map(|j| &x[1][j] - &x[2][j]).collect();
    let f2_row_reduced = det_rows([&d13, &d23, &ones]);
    let f2_three_dets = det_rows([rows[0], rows[1], &ones]) + det_rows([rows[0], &ones, rows[2]]) + det_rows([&ones, rows[1], rows[2]]);
    let a3_formula = (int(3) * &g_x + int(6) * &det_x) / int(6);
    let consistent = a[0].is_zero() && a[1].is_zero() && a[2] == f2_row_reduced && a[2] == f2_three_dets && a[3] == a3_formula;
    let [a0, a1, a2, a3]: [Rational; 4] = a.try_into().expect("four coefficients");
    Ok(TaylorReport {
        a0: RatStr(a0),
        a1: RatStr(a1),
        a2: RatStr(a2),
        a3: RatStr(a3),
        det_x: RatStr(det_x),
        g_x: RatStr(g_x),
        f2_row_reduced: RatStr(f2_row_reduced),
        f2_three_dets: RatStr(f2_three_dets),
        consistent,
    })
}

/// The six-determinant sum g(X) over the rows r_i, their entrywise squares
/// r_i² and the all-ones row.
pub fn g_of(x: &[Vec<Rational>]) -> Result<Rational> {
    check3(x)?;
    let sq: Vec<Vec<Rational>> = x.iter().map(|r| r.iter().map(|v| v * v).collect()).collect();
    let ones = vec![Rational::one(); 3];
    let (r1, r2, r3) = (x[0].as_slice(), x[1].as_slice(), x[2].as_slice());
    let (s1, s2, s3) = (sq[0].as_slice(), sq[1].as_slice(), sq[2].as_slice());
    let o = ones.as_slice();
    Ok(det_rows([s1, r2, o])
        + det_rows([o, s2, r3])
        + det_rows([r1, o, s3])
        + det_rows([r1, s2, o])
        + det_rows([o, r2, s3])
        + det_rows([s1, o, r3]))
}

/// For X = uuᵀ: g(X) = ((u2 − u1)(u3 − u1)(u3 − u2))².
pub fn g_product_identity_holds(u: [i64; 3]) -> bool {
    let uu: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| int(u[i] * u[j])).collect()).collect();
    let v = int((u[1] - u[0]) * (u[2] - u[0]) * (u[2] - u[1]));
    g_of(&uu).expect("3x3 symmetric") == &v * &v
}

/// With S = [[x11,x12],[x12,x22]], N = [[1,0,α],[0,1,1−α]] and A = NᵀSN,
/// returns k = (x11·x22 − x12²)/(x11 + x22 − 2x12) and rank(A − kJ).
pub fn rank_one_shift(x11: &Rational, x12: &Rational, x22: &Rational, alpha: &Rational) -> Result<(Rational, usize)> {
    let denom = x11 + x22 - int(2) * x12;
    if denom.is_zero() {
        return input("x11 + x22 = 2·x12: no shift works here, the determinant vanishes identically instead");
    }
    let k = (x11 * x22 - x12 * x12) / denom;
    let n = [[Rational::one(), Rational::zero(), alpha.clone()], [Rational::zero(), Rational::one(), Rational::one() - alpha]];
    let s = [[x11.clone(), x12.clone()], [x12.clone(), x22.clone()]];
    let a: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let v: Rational = (0..2).flat_map(|r| (0..2).map(move |c| (r, c))).map(|(r, c)| &n[r][i] * &s[r][c] * &n[c][j]).sum();
                    v - &k
                })
                .collect()
        })
        .collect();
    Ok((k, rank(&a)))
}

/// Completes [[x11,x12],[x12,x22]] to a symmetric 3×3 X whose third row is
/// α·r1 + (1−α)·r2 + β·1, and checks that det M(e^δ) vanishes identically,
/// i.e. every exponent in the permutation expansion cancels.
pub fn degenerate_rows_force_zero_det(x11: &Rational, x12: &Rational, x22: &Rational, alpha: &Rational, beta: &Rational) -> Result<bool> {
    if x11 + x22 != int(2) * x12 {
        return input("needs x11 + x22 = 2·x12");
    }
    let beta_ = Rational::one() - alpha;
    let x13 = alpha * x11 + &beta_ * x12 + beta;
    let x23 = alpha * x12 + &beta_ * x22 + beta;
    let x33 = alpha * &x13 + &beta_ * &x23 + beta;
    let x = vec![
        vec![x11.clone(), x12.clone(), x13.clone()],
        vec![x12.clone(), x22.clone(), x23.clone()],
        vec![x13, x23, x33],
    ];
    Ok(exponential_det_terms(&x).is_empty())
}

/// det M(e^δ) as Σ_s c_s e^{δ s}: the nonzero coefficients keyed by exponent.
pub fn exponential_det_terms(x: &[Vec<Rational>]) -> BTreeMap<Rational, i64> {
    let mut terms: BTreeMap<Rational, i64> = BTreeMap::new();
    for (p, s) in PERMS3 {
        *terms.entry((0..3).map(|i| x[i][p[i]].clone()).sum()).or_insert(0) += s;
    }
    terms.retain(|_, c| *c != 0);
    terms
}
