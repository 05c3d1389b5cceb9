use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rational::Rational;

/// sign · Π prime^exponent; zero has sign 0 and no primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredRational {
    pub sign: i8,
    pub exponents: BTreeMap<BigUint, i64>,
}

impl FactoredRational {
    pub fn reconstruct(&self) -> Rational {
        if self.sign == 0 {
            return Rational::zero();
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, &e) in &self.exponents {
            let pe = num_traits::pow(p.clone(), e.unsigned_abs() as usize);
            if e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        let sign = if self.sign < 0 { Sign::Minus } else { Sign::Plus };
        Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den))
    }
}

fn factor_natural(n: &BigUint) -> BTreeMap<BigUint, usize> {
    if n.is_one() || n.is_zero() {
        return BTreeMap::new();
    }
    // Trial division handles the common small factors before the general factorizer.
    let mut rest = n.clone();
    let mut out = BTreeMap::new();
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigUint::from(p);
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            *out.entry(bp.clone()).or_insert(0) += 1;
        }
    }
    if !rest.is_one() {
        for (p, e) in num_prime::nt_funcs::factorize(rest) {
            *out.entry(p).or_insert(0) += e;
        }
    }
    out
}

pub fn factor(x: &Rational) -> FactoredRational {
    if x.is_zero() {
        return FactoredRational { sign: 0, exponents: BTreeMap::new() };
    }
    let mut exponents = BTreeMap::new();
    for (p, e) in factor_natural(x.numer().magnitude()) {
        exponents.insert(p, e as i64);
    }
    for (p, e) in factor_natural(x.denom().magnitude()) {
        exponents.insert(p, -(e as i64));
    }
    FactoredRational { sign: if x.is_negative() { -1 } else { 1 }, exponents }
}
