use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{char_poly, RatMatrix};
use super::poly::Poly;
use super::rational::Rational;
use super::real::{bits_for_digits, floor_int, HighPrecisionReal};
use crate::error::{input, Result};

/// A real root isolated in (lo, hi], or known exactly when lo = hi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

pub fn sturm_sequence(f: &Poly) -> Vec<Poly> {
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        // Positive rescaling keeps signs and tames coefficient growth.
        let r = -&r;
        if r.is_zero() {
            break;
        }
        let lead = r.leading().abs();
        seq.push(r.scale(&lead.recip()));
    }
    if seq.last().is_some_and(Poly::is_zero) {
        seq.pop();
    }
    seq
}

fn variations(seq: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_zero() { 0 } else if v.is_negative() { -1 } else { 1 };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct roots in (a, b] of the square-free polynomial behind `seq`.
pub fn count_roots(seq: &[Poly], a: &Rational, b: &Rational) -> usize {
    variations(seq, a) - variations(seq, b)
}

/// Power of two bounding every root's absolute value (Cauchy bound).
fn root_bound(f: &Poly) -> Rational {
    let lead = f.leading().abs();
    let m = f.coeffs().iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    let mut b = Rational::one();
    let target = Rational::one() + m;
    while b < target {
        b *= Rational::from_integer(BigInt::from(2));
    }
    b
}

pub fn squarefree_part(f: &Poly) -> Poly {
    let g = Poly::gcd(f, &f.derivative());
    f.div_rem(&g).0.primitive_part()
}

/// Disjoint isolating intervals, ascending, one per distinct real root.
pub fn isolate_real_roots(f: &Poly) -> Result<Vec<RootInterval>> {
    if f.is_zero() {
        return input("cannot isolate the roots of the zero polynomial");
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let g = squarefree_part(f);
    let seq = sturm_sequence(&g);
    let b = root_bound(&g);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone(), count_roots(&seq, &-b.clone(), &b))];
    let two = Rational::from_integer(BigInt::from(2));
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => {
                if g.eval(&hi).is_zero() {
                    out.push(RootInterval { lo: hi.clone(), hi });
                } else {
                    out.push(RootInterval { lo, hi });
                }
            }
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = count_roots(&seq, &lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Shrinks an isolating interval of a root of the square-free `g` below `width`.
pub fn refine(g: &Poly, iv: &RootInterval, width: &Rational) -> RootInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return iv.clone();
    }
    let two = Rational::from_integer(BigInt::from(2));
    let mut seq: Option<Vec<Poly>> = None;
    let mut f_hi = g.eval(&hi);
    if f_hi.is_zero() {
        return RootInterval { lo: hi.clone(), hi };
    }
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let f_mid = g.eval(&mid);
        if f_mid.is_zero() {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        let f_lo = g.eval(&lo);
        let root_left = if f_lo.is_zero() {
            // lo is a neighbouring root; fall back to counting.
            let s = seq.get_or_insert_with(|| sturm_sequence(g));
            count_roots(s, &lo, &mid) == 1
        } else {
            f_lo.is_negative() != f_mid.is_negative()
        };
        if root_left {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
        }
    }
    let _ = f_hi;
    RootInterval { lo, hi }
}

/// Eigenvalues of a symmetric rational matrix that are rational, with
/// multiplicity (ascending), and the monic leftover factor of the
/// characteristic polynomial when it is not fully split.
pub fn rational_eigenvalues(m: &RatMatrix) -> (Vec<Rational>, Option<Poly>) {
    let d = m.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let dr = Rational::from_integer(d.clone());
    let scaled: RatMatrix = m.iter().map(|r| r.iter().map(|x| x * &dr).collect()).collect();
    // char poly of the integer matrix d·M is monic over Z: its rational roots are integers.
    let f = char_poly(&scaled);
    let mut roots = Vec::new();
    let mut rest = f.clone();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let g = squarefree_part(&f);
    for iv in isolate_real_roots(&f).expect("char poly is nonzero") {
        let iv = refine(&g, &iv, &half);
        let lo = floor_int(&iv.lo);
        let hi = floor_int(&iv.hi) + 1;
        let mut k = lo;
        while k <= hi {
            let r = Rational::from_integer(k.clone());
            if (iv.lo < r || iv.is_exact()) && r <= iv.hi && f.eval(&r).is_zero() {
                let mult = rest.root_multiplicity(&r);
                for _ in 0..mult {
                    rest = rest.div_rem(&Poly::linear_root(&r)).0;
                    roots.push(&r / &dr);
                }
            }
            k += 1;
        }
    }
    roots.sort();
    let leftover = if rest.degree().unwrap_or(0) == 0 {
        None
    } else {
        // Undo the scaling: roots of the leftover for M are roots/d.
        let deg = rest.degree().unwrap();
        let cs: Vec<Rational> = rest
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * num_traits::pow(dr.clone(), k) / num_traits::pow(dr.clone(), deg))
            .collect();
        Some(Poly::new(cs).monic())
    };
    (roots, leftover)
}

/// All eigenvalues of a symmetric rational matrix with multiplicity, each as an
/// enclosure of radius ≤ 10^(1−digits), sorted by absolute value and then by
/// signed value. Rational eigenvalues are exact.
pub fn numeric_eigenvalues(m: &RatMatrix, digits: u32) -> Vec<HighPrecisionReal> {
    let (exact, leftover) = rational_eigenvalues(m);
    let mut out: Vec<HighPrecisionReal> = exact.into_iter().map(HighPrecisionReal::exact).collect();
    if let Some(rest) = leftover {
        let bits = bits_for_digits(digits);
        let width = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
        for (factor, mult) in rest.squarefree_decomposition() {
            let g = factor.primitive_part();
            for iv in isolate_real_roots(&g).expect("nonzero factor") {
                let iv = refine(&g, &iv, &width);
                for _ in 0..mult {
                    out.push(HighPrecisionReal::from_bounds(iv.lo.clone(), iv.hi.clone()));
                }
            }
        }
    }
    out.sort_by(|a, b| {
        let (ma, mb) = (a.mid(), b.mid());
        ma.abs().cmp(&mb.abs()).then(ma.cmp(&mb))
    });
    out
}
