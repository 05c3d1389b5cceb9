use num_traits::{Signed, Zero};

use super::binary::classify2;
use super::structure::{detect_reducible, has_negative, rank_one_certificate, support_bipartition};
use super::ternary::classify3;
use super::{BlockCertificate, Certificate, Classification, Form, Verdict, DEFAULT_DIGITS};
use crate::error::{precondition, Result};
use crate::exact_algebra::rational::{format_rational as fr, RatStr, Rational};
use crate::exact_algebra::real::{bits_for_digits, HighPrecisionReal};
use crate::exact_algebra::roots::{numeric_eigenvalues, rational_eigenvalues};
use crate::interpolation::{default_tolerance, lattice_check, lattice_check_numeric, LatticeStatus, DEFAULT_LATTICE_BOUND};
use crate::partition::SymMatrix;

/// Precision knobs for the numeric fallback of the lattice certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub digits: u32,
    /// Largest |n_i| searched when the spectrum is irrational.
    pub lattice_bound: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { digits: DEFAULT_DIGITS, lattice_bound: DEFAULT_LATTICE_BOUND }
    }
}

/// Classifies any q. Complete for q ≤ 3 and for the 4×4 bipartite family;
/// larger matrices get rank one, reducibility and the lattice certificate,
/// and `Unknown` otherwise.
pub fn classify(m: &SymMatrix) -> Classification {
    classify_with(m, &ClassifyOptions::default())
}

pub fn classify_with(m: &SymMatrix, opts: &ClassifyOptions) -> Classification {
    match m.q() {
        2 => return classify2(m).expect("q = 2"),
        3 => return classify3(m).expect("q = 3"),
        _ => {}
    }
    if let Some(cert) = rank_one_certificate(m) {
        let Certificate::RankOne { scale, .. } = &cert else { unreachable!() };
        let sign = if scale.0.is_negative() { -1 } else { 1 };
        return Classification::tractable(Form::RankOne { sign }, cert, vec!["rank one: M = ε·uuᵀ".into()]);
    }
    if let Some(blocks) = detect_reducible(m) {
        return classify_direct_sum(m, blocks, opts);
    }
    if m.q() == 4 {
        if let Some((a, b)) = support_bipartition(m) {
            if a.len() == 2 && b.len() == 2 {
                let n: Vec<Vec<Rational>> = a.iter().map(|&i| b.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
                return match classify_bipartite4(&n) {
                    Ok(mut c) => {
                        if let Some(Certificate::Tensor4 { left, right, .. }) = &mut c.certificate {
                            *left = [a[0], a[1]];
                            *right = [b[0], b[1]];
                        }
                        c
                    }
                    Err(e) => Classification::unknown(vec![format!("bipartite 4x4 with sides {a:?}, {b:?}"), e.to_string()]),
                };
            }
        }
    }
    let cert = lattice_hardness_certificate_with(m, opts);
    if cert.verdict == Verdict::Hard {
        return cert;
    }
    let mut trace = vec!["no tractable form found and no hardness certificate applies".to_string()];
    trace.extend(cert.trace);
    Classification::unknown(trace)
}

fn classify_direct_sum(m: &SymMatrix, blocks: Vec<Vec<usize>>, opts: &ClassifyOptions) -> Classification {
    let mut trace = vec![format!("reducible into blocks {blocks:?}")];
    let mut certs = Vec::new();
    let mut unknown = false;
    for b in &blocks {
        let sub = classify_with(&m.principal(b), opts);
        match sub.verdict {
            Verdict::Hard => {
                trace.push(format!("block {b:?} is hard; a direct sum is tractable only if every block is"));
                trace.extend(sub.trace);
                return Classification::hard(trace);
            }
            Verdict::Unknown => unknown = true,
            Verdict::Tractable => {}
        }
        trace.extend(sub.trace.iter().map(|t| format!("block {b:?}: {t}")));
        if let Some(c) = sub.certificate {
            certs.push(BlockCertificate { indices: b.clone(), certificate: c });
        }
    }
    if unknown {
        return Classification::unknown(trace);
    }
    Classification::tractable(Form::Reducible { blocks: blocks.len() }, Certificate::Components { blocks: certs }, trace)
}

/// M = [[0,N],[Nᵀ,0]] for a nonnegative, nonsingular 2×2 N with connected
/// support. Tractable exactly when N = [[a,b],[b,a]], where M = X ⊗ Y with
/// X = [[0,1],[1,0]] and Y = [[a,b],[b,a]].
pub fn classify_bipartite4(n: &[Vec<Rational>]) -> Result<Classification> {
    if n.len() != 2 || n.iter().any(|r| r.len() != 2) {
        return precondition("the bipartite block must be 2x2");
    }
    let (a, b, c, d) = (&n[0][0], &n[0][1], &n[1][0], &n[1][1]);
    if [a, b, c, d].iter().any(|v| v.is_negative()) {
        return precondition("the bipartite block must be nonnegative");
    }
    if (a * d - b * c).is_zero() {
        return precondition("the bipartite block must be nonsingular");
    }
    let connected = [(a, d), (b, c)].iter().any(|(p, q)| !p.is_zero() && !q.is_zero())
        && [a, b, c, d].iter().filter(|v| !v.is_zero()).count() >= 3;
    if !connected {
        return precondition("the induced 4x4 matrix is reducible");
    }
    let params = format!("N = [[{},{}],[{},{}]]", fr(a), fr(b), fr(c), fr(d));
    if a == d && b == c {
        let x_block = SymMatrix::from_ints(&[&[0, 1], &[1, 0]]).expect("valid");
        let y_block = SymMatrix::new(vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]])?;
        return Ok(Classification::tractable(
            Form::Tensor4 { x_block, y_block },
            Certificate::Tensor4 { a: RatStr(a.clone()), b: RatStr(b.clone()), left: [0, 1], right: [2, 3] },
            vec![format!("bipartite 4x4 with {params}: M = X ⊗ Y, Z = Z_X·Z_Y")],
        ));
    }
    Ok(Classification::hard(vec![
        format!("bipartite 4x4 with {params}: not of the form [[a,b],[b,a]]"),
        "hard: the blocks A = NNᵀ and B = NᵀN of M² do not both reduce to tractable 2x2 problems".into(),
    ]))
}

pub fn lattice_hardness_certificate(m: &SymMatrix) -> Classification {
    lattice_hardness_certificate_with(m, &ClassifyOptions::default())
}

/// Hardness from the lattice condition on the spectrum. Three hypothesis
/// bundles are tried: positive and full rank (signed eigenvalues), or
/// nonnegative, irreducible, full rank and either non-bipartite or bipartite
/// with q ≥ 6 (absolute eigenvalues). Irrational spectra fall back to the
/// bounded numeric search, and a hard verdict then carries a caveat.
pub fn lattice_hardness_certificate_with(m: &SymMatrix, opts: &ClassifyOptions) -> Classification {
    let digits = opts.digits;
    let q = m.q();
    let unmet = |why: String| Classification::unknown(vec![format!("lattice certificate not applicable: {why}")]);
    if q < 3 {
        return unmet(format!("q = {q} < 3"));
    }
    if has_negative(m) {
        return unmet("negative entries".into());
    }
    if m.det().is_zero() {
        return unmet("singular matrix".into());
    }
    let positive = m.entries().iter().flatten().all(Signed::is_positive);
    let bundle = if positive {
        "positive, full rank"
    } else if detect_reducible(m).is_some() {
        return unmet("reducible".into());
    } else if support_bipartition(m).is_none() {
        "nonnegative, irreducible, non-bipartite, full rank"
    } else if q >= 6 {
        "nonnegative, irreducible, bipartite, q ≥ 6, full rank"
    } else {
        return unmet(format!("bipartite support with q = {q}"));
    };
    let use_abs = !positive;
    let mut trace = vec![format!("hypotheses: {bundle}")];
    let (roots, leftover) = rational_eigenvalues(m.entries());
    let what = if use_abs { "absolute eigenvalues" } else { "eigenvalues" };
    if leftover.is_none() {
        let mut vals: Vec<Rational> = roots.into_iter().map(|r| if use_abs { r.abs() } else { r }).collect();
        vals.sort();
        vals.dedup();
        let verdict = lattice_check(&vals).expect("full rank means nonzero eigenvalues");
        let shown: Vec<String> = vals.iter().map(fr).collect();
        if let Some(w) = verdict.witness {
            trace.push(format!("distinct {what} {shown:?} violate the lattice condition, witness {w:?}"));
            return Classification::unknown(trace);
        }
        trace.push(format!("distinct {what} {shown:?} satisfy the lattice condition (exact)"));
        trace.push("hard: stretching interpolation reaches every M + κI, hence vertex colouring".into());
        return Classification::hard(trace);
    }
    let bits = bits_for_digits(digits);
    let mut vals: Vec<HighPrecisionReal> = Vec::new();
    for v in numeric_eigenvalues(m.entries(), digits) {
        let v = if use_abs { v.abs() } else { v };
        if !vals.iter().any(|w| !(w.hi() < v.lo() || v.hi() < w.lo())) {
            vals.push(v);
        }
    }
    let verdict = match lattice_check_numeric(&vals, opts.lattice_bound, &default_tolerance(), bits) {
        Ok(v) => v,
        Err(e) => return unmet(e.to_string()),
    };
    let shown: Vec<String> = vals.iter().map(|v| v.to_decimal_string(12)).collect();
    match verdict.status {
        LatticeStatus::SatisfiedUpToBound(b) => {
            trace.push(format!("distinct {what} ≈ {shown:?}: no relation with |n_i| ≤ {b} (numeric)"));
            trace.push("hard: stretching interpolation reaches every M + κI, hence vertex colouring".into());
            let mut c = Classification::hard(trace);
            c.caveat = Some(format!("irrational spectrum; lattice condition checked numerically up to |n_i| ≤ {b}"));
            c
        }
        _ => {
            trace.push(format!("distinct {what} ≈ {shown:?}: numeric relation {:?}", verdict.witness));
            Classification::unknown(trace)
        }
    }
}
