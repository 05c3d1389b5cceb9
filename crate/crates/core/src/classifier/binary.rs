use num_traits::{One, Zero};

use super::structure::rank_one_certificate;
use super::{BlockCertificate, Certificate, Classification, Form};
use crate::error::{input, Result};
use crate::exact_algebra::rational::{format_rational as fr, RatStr, Rational};
use crate::partition::SymMatrix;

/// The 2×2 dichotomy for [[x,y],[y,z]]: tractable exactly when xz = y²,
/// y = 0, x = z, or xz = −y² with x = −z. First matching case wins.
pub fn classify2(m: &SymMatrix) -> Result<Classification> {
    if m.q() != 2 {
        return input(format!("classify2 needs a 2x2 matrix, got {}x{}", m.q(), m.q()));
    }
    let (x, y, z) = (m.get(0, 0), m.get(0, 1), m.get(1, 1));
    let params = format!("x={}, y={}, z={}", fr(x), fr(y), fr(z));
    let case = |case: u8, planar_only: bool, cert: Certificate, why: &str| {
        Classification::tractable(Form::TwoByTwoCase { case, planar_only }, cert, vec![format!("2x2 {params}: case {case}, {why}")])
    };
    let y2 = y * y;
    if x * z == y2 {
        return Ok(case(1, false, rank_one_certificate(m).expect("xz = y² means rank ≤ 1"), "xz = y² (rank one)"));
    }
    if y.is_zero() {
        let scalar = |v: &Rational| Certificate::RankOne { scale: RatStr(v.clone()), vector: vec![RatStr(Rational::one())] };
        let blocks = vec![
            BlockCertificate { indices: vec![0], certificate: scalar(x) },
            BlockCertificate { indices: vec![1], certificate: scalar(z) },
        ];
        return Ok(case(2, false, Certificate::Components { blocks }, "y = 0 (diagonal)"));
    }
    if x == z {
        let cert = Certificate::Ising { x: RatStr(x.clone()), y: RatStr(y.clone()) };
        return Ok(case(3, true, cert, "x = z (planar-only: Ising via Pfaffians)"));
    }
    if x * z == -y2 && x == &-z {
        // y = ±x, so M = x·[[1, ±1], [±1, −1]].
        let linear = u8::from(y != x);
        let cert = Certificate::GaussSum { scale: RatStr(x.clone()), quadratic: 1, linear };
        return Ok(case(4, false, cert, "xz = −y² and x = −z (Gauss sum)"));
    }
    Ok(Classification::hard(vec![format!("2x2 {params}: none of xz = y², y = 0, x = z, (xz = −y² and x = −z) holds")]))
}
