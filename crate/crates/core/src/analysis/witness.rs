use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{precondition, Result};
use crate::exact_algebra::rational::{pow_u, to_f64, RatStr, Rational};
use crate::exact_algebra::{HighPrecisionReal, Poly};
use crate::interpolation::{nonvanishing_sup, MonomialMatrix};

use super::spectral::{det_poly, f_poly, order_at_one, s_laurent_order, symmetric_functions, t_of};

pub const DEFAULT_GRID_POINTS: usize = 8;

pub fn default_tolerance() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// t(p) = 1 on every sample.
    #[serde(rename = "tOneGood")]
    TOneGood,
    /// t(p) moves across the grid, so by continuity it takes irrational values.
    #[serde(rename = "tIrrational")]
    TIrrational,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct TSample {
    pub p: RatStr,
    pub t: HighPrecisionReal,
}

/// Everything the hardness argument for M(p) = (p^{x_ij}) looks at, computed
/// exactly where possible. The route is numeric evidence, never a proof.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub det_poly: Poly,
    /// r★: det M(p) has no root in (1, r★]. `None` means no root above 1 at all.
    pub interval_sup: Option<RatStr>,
    pub det_order: usize,
    /// Order at 1 of s2 of M(p); `None` when s2 vanishes identically.
    pub s2_order: Option<usize>,
    /// Order at 1 of S(p); negative means S(p) → ∞ as p → 1.
    pub s_laurent_order: Option<i64>,
    /// "1", "1/2" or "undetermined".
    pub t_limit: String,
    pub t_samples: Vec<TSample>,
    pub max_deviation: f64,
    pub spread: f64,
    pub t_constant: bool,
    pub f_nonzero: bool,
    pub route: Route,
    pub note: String,
}

/// p_i = 1 + (b − 1)/2^i for i = 0..8 with b = min(r★, 2).
pub fn default_grid(interval_sup: Option<&Rational>) -> Vec<Rational> {
    let two = Rational::from_integer(2.into());
    let b = match interval_sup {
        Some(r) if *r < two => r.clone(),
        _ => two.clone(),
    };
    let one = Rational::one();
    (0..DEFAULT_GRID_POINTS).map(|i| &one + (&b - &one) / pow_u(&two, i)).collect()
}

pub fn witness_report(x: &MonomialMatrix, grid: Option<&[Rational]>, digits: u32, tol: &Rational) -> Result<WitnessReport> {
    let det = det_poly(x)?;
    if det.is_zero() {
        return precondition("det M(p) vanishes identically");
    }
    let interval_sup = nonvanishing_sup(&det)?;
    let det_order = order_at_one(&det)?;
    if det_order != 2 && det_order != 3 {
        return precondition(format!("det M(p) vanishes to order {det_order} at p = 1, expected 2 or 3"));
    }
    let s2 = &symmetric_functions(x)?.of_m[1];
    let s2_order = if s2.is_zero() { None } else { Some(order_at_one(s2)?) };
    let s_order = s_laurent_order(x)?;
    let t_limit = match s_order {
        Some(k) if k < 0 => "1/2",
        Some(_) => "1",
        None => "undetermined",
    };
    let one = Rational::one();
    let points: Vec<Rational> = match grid {
        Some(g) => g.iter().filter(|p| **p > one && interval_sup.as_ref().is_none_or(|r| *p <= r)).cloned().collect(),
        None => default_grid(interval_sup.as_ref()),
    };
    let t_samples: Vec<TSample> = points
        .par_iter()
        .map(|p| t_of(x, p, digits).map(|t| TSample { p: RatStr(p.clone()), t }))
        .collect::<Result<_>>()?;
    let mids: Vec<Rational> = t_samples.iter().map(|s| s.t.mid()).collect();
    let max_dev = mids.iter().map(|t| (t - &one).abs()).max().unwrap_or_default();
    let spread = match (mids.iter().min(), mids.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => Rational::default(),
    };
    let t_constant = spread <= *tol;
    let route = if mids.is_empty() {
        Route::Inconclusive
    } else if max_dev <= *tol {
        Route::TOneGood
    } else if !t_constant {
        Route::TIrrational
    } else {
        Route::Inconclusive
    };
    let note = match route {
        Route::TOneGood => "t(p) = 1 on every sample within tolerance; evidence, not a proof",
        Route::TIrrational => "t(p) varies across the grid, so by the intermediate value theorem it takes irrational values; evidence, not a proof",
        Route::Inconclusive => "t(p) looks constant but not 1 on the grid; no conclusion",
    };
    Ok(WitnessReport {
        det_poly: det,
        interval_sup: interval_sup.map(RatStr),
        det_order,
        s2_order,
        s_laurent_order: s_order,
        t_limit: t_limit.into(),
        t_samples,
        max_deviation: to_f64(&max_dev),
        spread: to_f64(&spread),
        t_constant,
        f_nonzero: !f_poly(x)?.is_zero(),
        route,
        note: note.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::spectral::in_unit_interval;
    use crate::exact_algebra::rational::int;

    fn mm(rows: &[&[u64]]) -> MonomialMatrix {
        MonomialMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn k3_is_t_one() {
        let r = witness_report(&mm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]), None, 50, &default_tolerance()).unwrap();
        assert_eq!(r.det_order, 2);
        assert_eq!(r.route, Route::TOneGood);
        assert_eq!(r.t_limit, "1");
        assert!(r.max_deviation < 1e-12);
        assert_eq!(r.t_samples.len(), DEFAULT_GRID_POINTS);
    }

    #[test]
    fn tridiagonal_is_irrational() {
        let r = witness_report(&mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]), None, 50, &default_tolerance()).unwrap();
        assert_eq!(r.det_poly, Poly::from_ints(&[0, 0, 1, 0, -2, 0, 1]));
        assert_eq!(r.det_order, 2);
        assert!(r.interval_sup.is_none());
        assert_eq!(r.t_samples[0].p.0, int(2));
        assert!((to_f64(&r.t_samples[0].t.mid()) - 0.5952).abs() < 1e-3);
        assert!(!r.t_constant && r.f_nonzero);
        assert_eq!(r.route, Route::TIrrational);
        assert!(r.t_samples.iter().all(|s| in_unit_interval(&s.t)));
    }

    #[test]
    fn rank_one_exponents() {
        let r = witness_report(&mm(&[&[0, 0, 0], &[0, 1, 2], &[0, 2, 4]]), None, 30, &default_tolerance()).unwrap();
        assert_eq!(r.det_order, 3);
        assert!(witness_report(&mm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]), None, 30, &default_tolerance()).is_err());
    }

    #[test]
    fn explicit_grid_is_clipped() {
        let x = mm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        let r = witness_report(&x, Some(&[int(0), int(1), int(2), int(3)]), 30, &default_tolerance()).unwrap();
        assert_eq!(r.t_samples.len(), 2);
    }
}
