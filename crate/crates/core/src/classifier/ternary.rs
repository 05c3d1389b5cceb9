use num_traits::{One, Zero};

use super::binary::classify2;
use super::structure::{detect_reducible, detect_twinned, rank_one_certificate};
use super::{BlockCertificate, Certificate, Classification, Form};
use crate::error::{input, Result};
use crate::exact_algebra::rational::{format_rational as fr, RatStr};
use crate::partition::SymMatrix;

/// The complete 3×3 dichotomy. Tractable forms are tried in a fixed order:
/// rank one, then a decoupled index with a tractable 2×2 block, then the
/// zero-diagonal star, so certificates are deterministic.
pub fn classify3(m: &SymMatrix) -> Result<Classification> {
    if m.q() != 3 {
        return input(format!("classify3 needs a 3x3 matrix, got {}x{}", m.q(), m.q()));
    }
    if let Some(cert) = rank_one_certificate(m) {
        let Certificate::RankOne { scale, .. } = &cert else { unreachable!() };
        let sign = if scale.0 < num_traits::zero() { -1 } else { 1 };
        return Ok(Classification::tractable(Form::RankOne { sign }, cert, vec!["rank one: M = ε·uuᵀ".into()]));
    }
    if let Some(c) = form2(m)? {
        return Ok(c);
    }
    if let Some(c) = form3(m) {
        return Ok(c);
    }
    Ok(hardness_trace(m))
}

fn others(k: usize) -> Vec<usize> {
    (0..3).filter(|&i| i != k).collect()
}

fn form2(m: &SymMatrix) -> Result<Option<Classification>> {
    for k in 0..3 {
        let rest = others(k);
        if rest.iter().any(|&i| !m.get(k, i).is_zero()) {
            continue;
        }
        let sub = classify2(&m.principal(&rest))?;
        let (Some(case), Some(block_cert)) = (sub.two_by_two_case(), sub.certificate.clone()) else { continue };
        let mut blocks = vec![
            BlockCertificate { indices: rest.clone(), certificate: block_cert },
            BlockCertificate {
                indices: vec![k],
                certificate: Certificate::RankOne { scale: RatStr(m.get(k, k).clone()), vector: vec![RatStr(num_traits::One::one())] },
            },
        ];
        blocks.sort_by_key(|b| b.indices[0]);
        let mut trace = vec![format!("index {k} decoupled with diagonal {}", fr(m.get(k, k)))];
        trace.extend(sub.trace);
        let c = Classification::tractable(Form::Form2 { decoupled: k, block_case: case }, Certificate::Components { blocks }, trace);
        return Ok(Some(c));
    }
    Ok(None)
}

fn form3(m: &SymMatrix) -> Option<Classification> {
    if (0..3).any(|i| !m.get(i, i).is_zero()) {
        return None;
    }
    for center in 0..3 {
        let rest = others(center);
        if m.get(rest[0], rest[1]).is_zero() {
            let x = m.get(center, rest[0]).clone();
            let y = m.get(center, rest[1]).clone();
            let trace = vec![format!("zero diagonal, indices {rest:?} unlinked, center {center}: bipartite star")];
            let form = Form::Form3 { x: RatStr(x.clone()), y: RatStr(y.clone()) };
            return Some(Classification::tractable(form, Certificate::Bipartite3 { center, x: RatStr(x), y: RatStr(y) }, trace));
        }
    }
    None
}

fn hardness_trace(m: &SymMatrix) -> Classification {
    if let Some(blocks) = detect_reducible(m) {
        let big = blocks.iter().find(|b| b.len() == 2).cloned().unwrap_or_default();
        return Classification::hard(vec![
            format!("reducible into blocks {blocks:?}"),
            format!("block {big:?} fails every tractable 2x2 case; a direct sum is tractable only if every block is"),
        ]);
    }
    if let Some(t) = detect_twinned(m) {
        let xz = &t.x.0 * &t.z.0;
        let y2 = &t.y.0 * &t.y.0;
        let which = if t.c.0.is_one() {
            "identical twin rows (c = 1)"
        } else {
            "twinned rows with c ≠ 1"
        };
        return Classification::hard(vec![
            format!(
                "twinned: rows {:?} proportional, c={}, (x,y,z)=({},{},{})",
                &t.permutation[..2],
                fr(&t.c.0),
                fr(&t.x.0),
                fr(&t.y.0),
                fr(&t.z.0)
            ),
            format!("{which}: hard since xz = {} ≠ {} = y² (degree-weighted reduction)", fr(&xz), fr(&y2)),
        ]);
    }
    if m.rank() == 2 {
        return Classification::hard(vec![
            "irreducible, rank 2 and not twinned".into(),
            "hard: the rank-two mixed case reduces from a hard 2x2 problem by thickening and stretching".into(),
        ]);
    }
    Classification::hard(vec![
        "irreducible, full rank".into(),
        "hard: generating-set interpolation reduces from vertex colouring with q = 3".into(),
    ])
}
