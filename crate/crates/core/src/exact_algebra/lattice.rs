use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub type IntVec = Vec<BigInt>;

/// Row-reduces `rows` by unimodular row operations so that the leading `k`
/// columns are in Hermite normal form. Returns the rank over those columns;
/// rows past the rank are zero on the first `k` columns.
fn hnf_prefix(rows: &mut [IntVec], k: usize) -> (usize, Vec<usize>) {
    let m = rows.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut clean = true;
            for i in r + 1..m {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                axpy(&mut tail[0], &q, &head[r]);
                if !tail[0][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut head[i], &q, &tail[0]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// row -= q · other
fn axpy(row: &mut IntVec, q: &BigInt, other: &IntVec) {
    for (x, y) in row.iter_mut().zip(other) {
        *x -= q * y;
    }
}

/// Hermite normal form basis of a lattice together with each input's coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeBasis {
    pub basis: Vec<IntVec>,
    pub pivots: Vec<usize>,
    pub coordinates: Vec<IntVec>,
}

impl LatticeBasis {
    /// Unique coordinates of `v` in the basis, or `None` if `v` is outside the lattice.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Option<IntVec> {
        let mut rest: IntVec = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rest, &q, b);
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }
}

pub fn lattice_basis(vectors: &[IntVec]) -> LatticeBasis {
    let dim = vectors.first().map_or(0, Vec::len);
    assert!(vectors.iter().all(|v| v.len() == dim), "ragged lattice input");
    let mut rows = vectors.to_vec();
    let (rank, pivots) = hnf_prefix(&mut rows, dim);
    rows.truncate(rank);
    let mut out = LatticeBasis { basis: rows, pivots, coordinates: Vec::new() };
    out.coordinates = vectors
        .iter()
        .map(|v| out.coordinates_of(v).expect("input lies in its own span"))
        .collect();
    out
}

/// Canonical (HNF) basis of { n ∈ Z^cols : A n = 0 }.
pub fn integer_kernel(a: &[IntVec], cols: usize) -> Vec<IntVec> {
    let m = a.len();
    // Row j holds column j of A followed by the j-th unit vector.
    let mut rows: Vec<IntVec> = (0..cols)
        .map(|j| {
            let mut r: IntVec = (0..m).map(|i| a[i][j].clone()).collect();
            r.extend((0..cols).map(|t| BigInt::from((t == j) as i32)));
            r
        })
        .collect();
    let (rank, _) = hnf_prefix(&mut rows, m);
    let kernel: Vec<IntVec> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
    if kernel.is_empty() {
        return kernel;
    }
    lattice_basis(&kernel).basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(xs: &[i64]) -> IntVec {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn worked_basis() {
        let lb = lattice_basis(&[iv(&[1, 1]), iv(&[2, 0]), iv(&[0, 2])]);
        assert_eq!(lb.basis, vec![iv(&[1, 1]), iv(&[0, 2])]);
        assert_eq!(lb.coordinates[1], iv(&[2, -1]));
        assert!(lattice_basis(&[]).basis.is_empty());
        let z = lattice_basis(&[iv(&[0, 0])]);
        assert!(z.basis.is_empty());
        assert_eq!(z.coordinates, vec![iv(&[])]);
    }

    #[test]
    fn worked_kernels() {
        assert_eq!(integer_kernel(&[iv(&[1, 2, 3]), iv(&[1, 1, 1])], 3), vec![iv(&[1, -2, 1])]);
        assert!(integer_kernel(&[iv(&[1, 0]), iv(&[0, 1])], 2).is_empty());
        assert_eq!(integer_kernel(&[iv(&[0, 0])], 2), vec![iv(&[1, 0]), iv(&[0, 1])]);
    }

    proptest! {
        #[test]
        fn coordinates_reproduce_inputs(vs in proptest::collection::vec(proptest::collection::vec(-9i64..9, 3), 0..5)) {
            let vecs: Vec<IntVec> = vs.iter().map(|v| iv(v)).collect();
            let lb = lattice_basis(&vecs);
            for (v, c) in vecs.iter().zip(&lb.coordinates) {
                let mut acc = vec![BigInt::zero(); 3];
                for (b, k) in lb.basis.iter().zip(c) {
                    for j in 0..3 { acc[j] += k * &b[j]; }
                }
                prop_assert_eq!(&acc, v);
            }
        }

        #[test]
        fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(proptest::collection::vec(-5i64..5, 4), 1..4)) {
            let a: Vec<IntVec> = rows.iter().map(|r| iv(r)).collect();
            for k in integer_kernel(&a, 4) {
                for r in &a {
                    let dot: BigInt = r.iter().zip(&k).map(|(x, y)| x * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
