use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{to_decimal, to_f64, Rational};
use crate::error::{precondition, Result};

/// A real number known to lie in the closed interval [lo, hi] with rational endpoints.
/// All arithmetic is outward-rounded, so the enclosure is always a true bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPrecisionReal {
    lo: Rational,
    hi: Rational,
}

/// Working bits needed for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u64 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 24
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits as usize
}

impl HighPrecisionReal {
    pub fn exact(x: Rational) -> Self {
        HighPrecisionReal { lo: x.clone(), hi: x }
    }

    pub fn from_bounds(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty enclosure");
        HighPrecisionReal { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn radius(&self) -> Rational {
        (&self.hi - &self.lo) / Rational::from_integer(BigInt::from(2))
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.mid())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Certain ordering when the enclosures are disjoint.
    pub fn certainly_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Widens the endpoints to multiples of 2^−bits.
    pub fn round_out(&self, bits: u64) -> Self {
        let s = Rational::from_integer(pow2(bits));
        let lo = (&self.lo * &s).floor() / &s;
        let hi = (&self.hi * &s).ceil() / &s;
        HighPrecisionReal { lo, hi }
    }

    pub fn neg(&self) -> Self {
        HighPrecisionReal { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = (-self.lo.clone()).max(self.hi.clone());
            HighPrecisionReal { lo: Rational::zero(), hi: m }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        HighPrecisionReal { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        HighPrecisionReal { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        HighPrecisionReal { lo, hi }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.contains_zero() {
            return precondition("interval division by an enclosure containing zero");
        }
        let inv = HighPrecisionReal { lo: o.hi.recip(), hi: o.lo.recip() };
        Ok(self.mul(&inv))
    }

    /// Natural logarithm of a positive enclosure, accurate to about 2^−bits.
    pub fn ln(&self, bits: u64) -> Result<Self> {
        if !self.lo.is_positive() {
            return precondition("logarithm of an enclosure that is not strictly positive");
        }
        let (a, ea) = ln_approx(&self.lo, bits);
        let (b, eb) = if self.is_exact() { (a.clone(), ea.clone()) } else { ln_approx(&self.hi, bits) };
        Ok(HighPrecisionReal { lo: a - ea, hi: b + eb })
    }

    pub fn to_decimal_string(&self, digits: usize) -> String {
        to_decimal(&self.mid(), digits)
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.3e}", self.to_decimal_string(20), to_f64(&self.radius()))
    }
}

impl Serialize for HighPrecisionReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HighPrecisionReal", 2)?;
        st.serialize_field("value", &self.to_decimal_string(30))?;
        st.serialize_field("radius", &format!("{:.3e}", to_f64(&self.radius())))?;
        st.end()
    }
}

/// 2·atanh(z) for 0 ≤ z < 1/2 in fixed point with `w` fractional bits;
/// returns (value·2^w rounded down, error bound in units of 2^−w).
fn two_atanh_fixed(z: &Rational, w: u64) -> (BigInt, BigInt) {
    let scale = pow2(w);
    let zf = (z * Rational::from_integer(scale.clone())).floor().to_integer();
    let z2 = (&zf * &zf) >> w as usize;
    let mut term = zf;
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !term.is_zero() {
        sum += &term / BigInt::from(2 * j + 1);
        term = (&term * &z2) >> w as usize;
        j += 1;
    }
    // Each summand is off by at most 3 ulps, the neglected tail by at most 5.
    let err = BigInt::from(2 * (3 * j + 8));
    (sum * 2, err)
}

/// ln(x) for rational x > 0: (approximation, error bound), both dyadic.
fn ln_approx(x: &Rational, bits: u64) -> (Rational, Rational) {
    let w = bits + 32;
    let mut k: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = Rational::from_integer(BigInt::from(2));
    let mut m = x / pow_two(k);
    while m < Rational::one() {
        m *= &two;
        k -= 1;
    }
    while m >= two {
        m /= &two;
        k += 1;
    }
    let z = (&m - Rational::one()) / (&m + Rational::one());
    let (lm, em) = two_atanh_fixed(&z, w);
    let (l2, e2) = two_atanh_fixed(&Rational::new(BigInt::one(), BigInt::from(3)), w);
    let kk = BigInt::from(k);
    let approx = lm + &kk * l2;
    let err = em + kk.abs() * e2 + BigInt::one();
    let s = pow2(w);
    (Rational::new(approx, s.clone()), Rational::new(err, s))
}

fn pow_two(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(pow2(k as u64))
    } else {
        Rational::new(BigInt::one(), pow2((-k) as u64))
    }
}

/// Integer part helper shared with root refinement.
pub(crate) fn floor_int(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}
