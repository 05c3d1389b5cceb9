use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{input, precondition, Result};
use crate::exact_algebra::real::bits_for_digits;
use crate::exact_algebra::{numeric_eigenvalues, HighPrecisionReal, Poly, Rational};
use crate::interpolation::MonomialMatrix;

use super::taylor::PERMS3;

type PolyMatrix = Vec<Vec<Poly>>;

fn check3(x: &MonomialMatrix) -> Result<()> {
    if x.size() != 3 {
        return input(format!("a 3x3 exponent matrix is required, got {0}x{0}", x.size()));
    }
    Ok(())
}

/// M(p) = (p^{x_ij}) as a matrix of polynomials in p.
fn power_matrix(x: &MonomialMatrix) -> PolyMatrix {
    x.rows().iter().map(|r| r.iter().map(|&e| Poly::monomial(Rational::one(), e as usize)).collect()).collect()
}

fn square(m: &PolyMatrix) -> PolyMatrix {
    (0..3)
        .map(|i| (0..3).map(|j| (0..3).fold(Poly::zero(), |acc, k| &acc + &(&m[i][k] * &m[k][j]))).collect())
        .collect()
}

fn det3(m: &PolyMatrix) -> Poly {
    PERMS3.iter().fold(Poly::zero(), |acc, (p, s)| {
        let term = &(&m[0][p[0]] * &m[1][p[1]]) * &m[2][p[2]];
        if *s > 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

/// Elementary symmetric functions (trace, sum of principal 2x2 minors, det).
fn elementary(m: &PolyMatrix) -> [Poly; 3] {
    let s1 = (0..3).fold(Poly::zero(), |acc, i| &acc + &m[i][i]);
    let s2 = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .fold(Poly::zero(), |acc, &(i, j)| &acc + &(&(&m[i][i] * &m[j][j]) - &(&m[i][j] * &m[j][i])));
    [s1, s2, det3(m)]
}

/// det M(p) as a polynomial in p.
pub fn det_poly(x: &MonomialMatrix) -> Result<Poly> {
    check3(x)?;
    Ok(det3(&power_matrix(x)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricFunctions {
    /// (s1, s2, s3) of M(p).
    pub of_m: [Poly; 3],
    /// (s1, s2, s3) of M(p)².
    pub of_m_squared: [Poly; 3],
}

pub fn symmetric_functions(x: &MonomialMatrix) -> Result<SymmetricFunctions> {
    check3(x)?;
    let m = power_matrix(x);
    Ok(SymmetricFunctions { of_m: elementary(&m), of_m_squared: elementary(&square(&m)) })
}

/// F(p) = s1³·s3 − s2³ over the symmetric functions of M(p)². It vanishes
/// exactly where the eigenvalues of M(p)² form a geometric progression.
pub fn f_poly(x: &MonomialMatrix) -> Result<Poly> {
    let [s1, s2, s3] = symmetric_functions(x)?.of_m_squared;
    Ok(&(&s1.pow(3) * &s3) - &s2.pow(3))
}

/// Largest m with (p − 1)^m dividing f.
pub fn order_at_one(f: &Poly) -> Result<usize> {
    if f.is_zero() {
        return input("the zero polynomial has no finite order at p = 1");
    }
    Ok(f.root_multiplicity(&Rational::one()))
}

/// Order at p = 1 of S(p) = (s2² − 2·s1·s3)/s3 built from M(p), i.e. the
/// numerator's order minus the denominator's. `None` when the numerator is
/// identically zero.
pub fn s_laurent_order(x: &MonomialMatrix) -> Result<Option<i64>> {
    let [s1, s2, s3] = symmetric_functions(x)?.of_m;
    if s3.is_zero() {
        return precondition("det M(p) vanishes identically");
    }
    let two = Poly::constant(Rational::from_integer(2.into()));
    let numerator = &s2.pow(2) - &(&two * &(&s1 * &s3));
    if numerator.is_zero() {
        return Ok(None);
    }
    Ok(Some(order_at_one(&numerator)? as i64 - order_at_one(&s3)? as i64))
}

/// t(p) with |λ2| = |λ1|^t·|λ3|^{1−t}, the eigenvalues of M(p) ordered by
/// increasing absolute value.
pub fn t_of(x: &MonomialMatrix, p: &Rational, digits: u32) -> Result<HighPrecisionReal> {
    if *p <= Rational::one() {
        return input("t(p) is defined for p > 1");
    }
    if det_poly(x)?.eval(p).is_zero() {
        return precondition("M(p) is singular at this p");
    }
    let mp = x.eval(p);
    let eig = numeric_eigenvalues(mp.entries(), digits);
    let [l1, l2, l3]: [HighPrecisionReal; 3] = eig.iter().map(HighPrecisionReal::abs).collect::<Vec<_>>().try_into().expect("three eigenvalues");
    if l3.certainly_cmp(&l2) != Some(std::cmp::Ordering::Greater) {
        return precondition("no Perron gap between the two largest eigenvalues");
    }
    let bits = bits_for_digits(digits);
    let numerator = l2.div(&l3)?.ln(bits)?;
    let denominator = l1.div(&l3)?.ln(bits)?;
    numerator.div(&denominator)
}

/// Whether the enclosure lies in (0, 1] up to its own radius.
pub fn in_unit_interval(t: &HighPrecisionReal) -> bool {
    t.hi().is_positive() && *t.lo() <= Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::taylor::taylor_coeffs;
    use crate::exact_algebra::linalg::det;
    use crate::exact_algebra::rational::{int, rat, to_f64};
    use proptest::prelude::*;

    fn mm(rows: &[&[u64]]) -> MonomialMatrix {
        MonomialMatrix::from_rows(rows).unwrap()
    }

    fn k3() -> MonomialMatrix {
        mm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
    }

    #[test]
    fn polynomials() {
        assert_eq!(det_poly(&k3()).unwrap(), Poly::from_ints(&[1, 0, -3, 2]));
        let sf = symmetric_functions(&k3()).unwrap();
        let at2: Vec<Rational> = sf.of_m_squared.iter().map(|f| f.eval(&int(2))).collect();
        assert_eq!(at2, vec![int(27), int(51), int(25)]);
        assert_eq!(f_poly(&k3()).unwrap().eval(&int(2)), int(359424));
        let zero = mm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(symmetric_functions(&zero).unwrap().of_m[2].is_zero());
        assert!(f_poly(&zero).unwrap().is_zero());
        // A geometric progression of eigenvalues (1, 2, 4) gives s = (7, 14, 8) and F = 0.
        assert_eq!(int(7).pow(3) * int(8) - int(14).pow(3), int(0));
        let tri = mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        // p²(p²−1)² = p⁶ − 2p⁴ + p²
        assert_eq!(det_poly(&tri).unwrap(), Poly::from_ints(&[0, 0, 1, 0, -2, 0, 1]));
        assert!(det_poly(&mm(&[&[0, 1], &[1, 0]])).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(order_at_one(&Poly::from_ints(&[1, 0, -3, 2])).unwrap(), 2);
        assert_eq!(order_at_one(&Poly::from_ints(&[0, -1, 2, 0, -2, 1])).unwrap(), 3);
        assert_eq!(order_at_one(&Poly::from_ints(&[-1, 1])).unwrap(), 1);
        assert!(order_at_one(&Poly::zero()).is_err());
        let uu = mm(&[&[0, 0, 0], &[0, 1, 2], &[0, 2, 4]]);
        assert_eq!(order_at_one(&det_poly(&uu).unwrap()).unwrap(), 3);
    }

    #[test]
    fn t_values() {
        let t = t_of(&k3(), &int(2), 50).unwrap();
        assert!((to_f64(&t.mid()) - 1.0).abs() < 1e-12);
        let t = t_of(&mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]), &int(2), 50).unwrap();
        assert!((to_f64(&t.mid()) - 0.5952).abs() < 1e-3);
        assert!(in_unit_interval(&t));
        assert!(t_of(&k3(), &int(1), 50).is_err());
        assert!(t_of(&k3(), &rat(1, 2), 50).is_err());
    }

    /// Independent check of t(2) for the tridiagonal pattern via f64 eigenvalues
    /// of M(2) = [[4,2,1],[2,4,2],[1,2,4]]: 3 and 4.5 ± sqrt(8.25).
    #[test]
    fn t_matches_float_eigenvalues() {
        let (a, b, c) = (4.5 - 8.25f64.sqrt(), 3.0, 4.5 + 8.25f64.sqrt());
        assert!((a * b * c - 36.0).abs() < 1e-9);
        assert_eq!(det(&mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).eval(&int(2)).entries().clone()), int(36));
        let expected = (b / c).ln() / (a / c).ln();
        let t = t_of(&mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]), &int(2), 30).unwrap();
        assert!((to_f64(&t.mid()) - expected).abs() < 1e-12);
    }

    fn full_rank() -> impl Strategy<Value = MonomialMatrix> {
        proptest::collection::vec(0u64..=4, 6)
            .prop_map(|v| MonomialMatrix::new(vec![vec![v[0], v[1], v[2]], vec![v[1], v[3], v[4]], vec![v[2], v[4], v[5]]]).unwrap())
            .prop_filter("det M(p) must not vanish identically", |x| !det_poly(x).unwrap().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn determinant_order_two_or_three(x in full_rank()) {
            let order = order_at_one(&det_poly(&x).unwrap()).unwrap();
            prop_assert!(order == 2 || order == 3);
            if order == 3 {
                let r = taylor_coeffs(&x).unwrap();
                prop_assert!(r.a2.0.is_zero() && !r.a3.0.is_zero());
            }
        }

        #[test]
        fn f_never_vanishes_identically(x in full_rank()) {
            prop_assert!(!f_poly(&x).unwrap().is_zero());
        }
    }
}
