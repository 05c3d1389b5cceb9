use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{input, Error, Result};

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
    }
    out
}

pub fn mat_pow(a: &RatMatrix, k: usize) -> RatMatrix {
    let mut acc = identity(a.len());
    for _ in 0..k {
        acc = mat_mul(&acc, a);
    }
    acc
}

pub fn trace(a: &RatMatrix) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Row echelon form in place; returns (rank, determinant sign/scale factor product).
fn eliminate(m: &mut RatMatrix) -> (usize, Rational) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            det = Rational::zero();
            continue;
        };
        if p != r {
            m.swap(p, r);
            det = -det;
        }
        det *= &m[r][c];
        let inv = m[r][c].recip();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (head, tail) = m.split_at_mut(i);
            for (x, y) in tail[0][c..].iter_mut().zip(&head[r][c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, det)
}

pub fn det(a: &RatMatrix) -> Rational {
    assert!(a.iter().all(|r| r.len() == a.len()), "det of a non-square matrix");
    if a.is_empty() {
        return Rational::one();
    }
    let mut m = a.clone();
    let (rank, d) = eliminate(&mut m);
    if rank < a.len() {
        Rational::zero()
    } else {
        d
    }
}

pub fn rank(a: &RatMatrix) -> usize {
    let mut m = a.clone();
    eliminate(&mut m).0
}

/// det(xI − A) by the Faddeev–LeVerrier recurrence.
pub fn char_poly(a: &RatMatrix) -> Poly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mat_mul(a, &mk);
        coeffs[n - k] = -trace(&am) / Rational::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

/// Solves Σ_j c_j · x_j^k = v_k for k = 1..n.
///
/// A zero node contributes nothing to any power k ≥ 1, so its coefficient is
/// not identifiable; it is reported as 0 after the other n − 1 coefficients are
/// solved from the first n − 1 equations and checked against the last.
pub fn vandermonde_solve(nodes: &[Rational], values: &[Rational]) -> Result<Vec<Rational>> {
    if nodes.len() != values.len() {
        return input(format!("{} nodes but {} values", nodes.len(), values.len()));
    }
    let mut sorted: Vec<&Rational> = nodes.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateNodes);
    }
    if let Some(z) = nodes.iter().position(Zero::is_zero) {
        let rest: Vec<Rational> = nodes.iter().enumerate().filter(|&(i, _)| i != z).map(|(_, x)| x.clone()).collect();
        let n1 = rest.len();
        let sol = transposed_solve(&rest, &values[..n1]);
        let last: Rational = rest.iter().zip(&sol).map(|(x, c)| c * num_traits::pow(x.clone(), n1 + 1)).sum();
        if last != values[n1] {
            return Err(Error::Precondition(
                "inconsistent Vandermonde system: the zero node cannot absorb the residual".into(),
            ));
        }
        let mut out = sol;
        out.insert(z, Rational::zero());
        return Ok(out);
    }
    Ok(transposed_solve(nodes, values))
}

/// Distinct nonzero nodes: with d_j = c_j x_j the system is Σ_j d_j x_j^{k−1} = v_k,
/// whose inverse is read off the Lagrange basis of the master polynomial.
fn transposed_solve(nodes: &[Rational], values: &[Rational]) -> Vec<Rational> {
    let n = nodes.len();
    // master = Π (z − x_i)
    let mut master = vec![Rational::one()];
    for x in nodes {
        let mut next = vec![Rational::zero(); master.len() + 1];
        for (k, c) in master.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * x;
        }
        master = next;
    }
    (0..n)
        .map(|j| {
            let xj = &nodes[j];
            // q = master / (z − x_j) by synthetic division, highest degree first.
            let mut q = vec![Rational::zero(); n];
            let mut carry = Rational::zero();
            for k in (1..=n).rev() {
                carry = &master[k] + carry * xj;
                q[k - 1] = carry.clone();
            }
            let mut denom = Rational::zero();
            for c in q.iter().rev() {
                denom = denom * xj + c;
            }
            let dj: Rational = q.iter().zip(values).map(|(l, v)| l * v).sum::<Rational>() / denom;
            dj / xj
        })
        .collect()
}

fn check_skew(a: &RatMatrix) -> Result<()> {
    let n = a.len();
    for i in 0..n {
        if a[i].len() != n {
            return input("Pfaffian of a non-square matrix");
        }
        if !a[i][i].is_zero() {
            return input("Pfaffian input is not skew-symmetric (nonzero diagonal)");
        }
        for j in 0..i {
            if a[i][j] != -a[j][i].clone() {
                return input("Pfaffian input is not skew-symmetric");
            }
        }
    }
    Ok(())
}

/// Exact Pfaffian: denominators are cleared, the integer Pfaffian is computed
/// modulo enough word-size primes to beat the Hadamard bound, and recombined
/// by CRT. No fractions ever arise during elimination.
pub fn pfaffian(a: &RatMatrix) -> Result<Rational> {
    check_skew(a)?;
    let n = a.len();
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let l = a.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let lr = Rational::from_integer(l.clone());
    let ints: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|x| (x * &lr).to_integer()).collect()).collect();
    let pf = pfaffian_integer(&ints);
    Ok(Rational::new(pf, num_traits::pow(l, n / 2)))
}

/// Pfaffian of an integer skew-symmetric matrix (assumed valid).
pub fn pfaffian_integer(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n % 2 == 1 {
        return BigInt::zero();
    }
    // |Pf|² = |det| ≤ Π ||row||, so log2|Pf| ≤ ½ Σ log2 ||row||.
    let mut bound_bits = 2.0f64;
    for row in a {
        let sq: BigInt = row.iter().map(|x| x * x).sum();
        if sq.is_zero() {
            return BigInt::zero();
        }
        bound_bits += 0.25 * (sq.bits() as f64);
    }
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    let mut candidate: u64 = (1u64 << 62) - 1;
    while (modulus.bits() as f64) < bound_bits + 2.0 {
        while !num_prime::nt_funcs::is_prime64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        let residues: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
        let r = pfaffian_mod(residues, p);
        // Garner step: value ≡ r (mod p), value ≡ value (mod modulus).
        let cur = reduce(&value, p);
        let m_mod = reduce(&modulus, p);
        let diff = (r + p - cur) % p;
        let t = mul_mod(diff, inv_mod(m_mod, p), p);
        value += &modulus * BigInt::from(t);
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1usize;
    if value > half {
        value - modulus
    } else {
        value
    }
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pfaffian_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut pf = 1u64;
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    let mut k = 0;
    while k < n {
        let Some(j) = (k + 1..n).find(|&j| a[k][j] != 0) else { return 0 };
        if j != k + 1 {
            a.swap(j, k + 1);
            for row in a.iter_mut() {
                row.swap(j, k + 1);
            }
            pf = (p - pf) % p;
        }
        let piv = a[k][k + 1];
        pf = mul_mod(pf, piv, p);
        let inv = inv_mod(piv, p);
        let inv_back = inv_mod(a[k + 1][k], p);
        for i in k + 2..n {
            let f = mul_mod(a[k][i], inv, p);
            if f != 0 {
                for r in k..n {
                    let v = mul_mod(f, a[r][k + 1], p);
                    a[r][i] = sub(a[r][i], v);
                }
                for c in k..n {
                    let v = mul_mod(f, a[k + 1][c], p);
                    a[i][c] = sub(a[i][c], v);
                }
            }
            let g = mul_mod(a[k + 1][i], inv_back, p);
            if g != 0 {
                for r in k..n {
                    let v = mul_mod(g, a[r][k], p);
                    a[r][i] = sub(a[r][i], v);
                }
                for c in k..n {
                    let v = mul_mod(g, a[k][c], p);
                    a[i][c] = sub(a[i][c], v);
                }
            }
        }
        k += 2;
    }
    pf
}

/// Reference Pfaffian by the perfect-matching expansion along the first row;
/// exponential, used to cross-check the elimination in tests.
pub fn pfaffian_expansion(a: &RatMatrix) -> Rational {
    fn rec(a: &RatMatrix, idx: &[usize]) -> Rational {
        if idx.is_empty() {
            return Rational::one();
        }
        let first = idx[0];
        let mut acc = Rational::zero();
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            if a[first][j].is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
            let term = &a[first][j] * rec(a, &rest);
            if pos % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    if a.len() % 2 == 1 {
        return Rational::zero();
    }
    let idx: Vec<usize> = (0..a.len()).collect();
    rec(a, &idx)
}
