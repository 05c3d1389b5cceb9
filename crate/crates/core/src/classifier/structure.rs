use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Certificate;
use crate::exact_algebra::rational::{RatStr, Rational};
use crate::partition::SymMatrix;

/// M = scale·wwᵀ, reading w off the first row with a nonzero diagonal entry.
/// The zero matrix gets scale 0 and w = 1.
pub fn rank_one_certificate(m: &SymMatrix) -> Option<Certificate> {
    let q = m.q();
    if m.rank() > 1 {
        return None;
    }
    let Some(k) = (0..q).find(|&k| !m.get(k, k).is_zero()) else {
        // Rank ≤ 1 with zero diagonal forces the zero matrix (m_ij² = m_ii·m_jj).
        return Some(Certificate::RankOne { scale: RatStr(Rational::zero()), vector: vec![RatStr(Rational::one()); q] });
    };
    let scale = m.get(k, k).clone();
    let vector = (0..q).map(|i| RatStr(m.get(k, i) / &scale)).collect();
    Some(Certificate::RankOne { scale: RatStr(scale), vector })
}

/// Connected components of the off-diagonal support, when there are at least two.
pub fn detect_reducible(m: &SymMatrix) -> Option<Vec<Vec<usize>>> {
    let q = m.q();
    let mut block = vec![usize::MAX; q];
    let mut blocks = Vec::new();
    for s in 0..q {
        if block[s] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![s];
        block[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for v in 0..q {
                if block[v] == usize::MAX && !m.get(u, v).is_zero() {
                    block[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        blocks.push(members);
    }
    (blocks.len() >= 2).then_some(blocks)
}

/// Two proportional rows: after reordering to (i, j, k) the matrix is
/// [[x, cx, y], [cx, c²x, cy], [y, cy, z]].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Twinned {
    pub permutation: [usize; 3],
    pub c: RatStr,
    pub x: RatStr,
    pub y: RatStr,
    pub z: RatStr,
}

pub fn detect_twinned(m: &SymMatrix) -> Option<Twinned> {
    if m.q() != 3 {
        return None;
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let Some(p) = (0..3).find(|&t| !m.get(i, t).is_zero()) else { continue };
            let c = m.get(j, p) / m.get(i, p);
            if c.is_zero() || (0..3).any(|t| m.get(j, t) != &(&c * m.get(i, t))) {
                continue;
            }
            let k = 3 - i - j;
            let (x, y, z) = (m.get(i, i).clone(), m.get(i, k).clone(), m.get(k, k).clone());
            debug_assert_eq!(m.get(j, j), &(&c * &c * &x));
            return Some(Twinned { permutation: [i, j, k], c: RatStr(c), x: RatStr(x), y: RatStr(y), z: RatStr(z) });
        }
    }
    None
}

/// Sides of the support graph when it is connected and bipartite; a nonzero
/// diagonal entry is a loop and rules bipartiteness out.
pub fn support_bipartition(m: &SymMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let q = m.q();
    if q == 0 || (0..q).any(|i| !m.get(i, i).is_zero()) || detect_reducible(m).is_some() {
        return None;
    }
    let mut side: Vec<Option<bool>> = vec![None; q];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        let su = side[u].unwrap();
        for v in 0..q {
            if m.get(u, v).is_zero() {
                continue;
            }
            match side[v] {
                None => {
                    side[v] = Some(!su);
                    stack.push(v);
                }
                Some(sv) if sv == su => return None,
                _ => {}
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..q).partition(|&v| side[v] == Some(false));
    Some((a, b))
}

pub(crate) fn has_negative(m: &SymMatrix) -> bool {
    m.entries().iter().flatten().any(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::int;

    fn sm(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn reducible_blocks() {
        assert_eq!(detect_reducible(&sm(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 7]])), Some(vec![vec![0, 1], vec![2]]));
        assert_eq!(detect_reducible(&SymMatrix::vertex_colouring(3)), None);
        assert_eq!(detect_reducible(&sm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])), Some(vec![vec![0], vec![1], vec![2]]));
    }

    #[test]
    fn twinned_rows() {
        let t = detect_twinned(&sm(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 10]])).unwrap();
        assert_eq!(t.permutation, [0, 1, 2]);
        assert_eq!((t.c.0, t.x.0, t.y.0, t.z.0), (int(2), int(1), int(3), int(10)));
        let t = detect_twinned(&sm(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 2]])).unwrap();
        assert_eq!((t.c.0, t.x.0, t.y.0, t.z.0), (int(1), int(1), int(1), int(2)));
        assert_eq!(detect_twinned(&sm(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), None);
    }

    #[test]
    fn rank_one_reads_vector() {
        let Some(Certificate::RankOne { scale, vector }) = rank_one_certificate(&sm(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 9]])) else {
            panic!("rank one expected")
        };
        assert_eq!(scale.0, int(1));
        assert_eq!(vector.into_iter().map(|v| v.0).collect::<Vec<_>>(), vec![int(1), int(2), int(3)]);
        assert!(rank_one_certificate(&sm(&[&[1, 1], &[1, -1]])).is_none());
    }

    #[test]
    fn bipartite_support() {
        let m = sm(&[&[0, 0, 1, 2], &[0, 0, 2, 1], &[1, 2, 0, 0], &[2, 1, 0, 0]]);
        assert_eq!(support_bipartition(&m), Some((vec![0, 1], vec![2, 3])));
        assert_eq!(support_bipartition(&SymMatrix::vertex_colouring(3)), None);
    }
}
