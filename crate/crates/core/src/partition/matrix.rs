use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};
use crate::exact_algebra::linalg::{self, RatMatrix};
use crate::exact_algebra::rational::{format_rational, int, parse_rational, pow_u, Rational};

/// A symmetric q×q matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMatrix {
    entries: Vec<Vec<Rational>>,
}

impl SymMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let q = entries.len();
        if entries.iter().any(|r| r.len() != q) {
            return input("matrix must be square");
        }
        for i in 0..q {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return input(format!("matrix is not symmetric at ({i},{j})"));
                }
            }
        }
        Ok(SymMatrix { entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        SymMatrix::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Builds from the upper triangle, row by row: (0,0), (0,1), …, (q−1,q−1).
    pub fn from_upper(q: usize, upper: &[Rational]) -> Self {
        assert_eq!(upper.len(), q * (q + 1) / 2);
        let mut e = vec![vec![Rational::zero(); q]; q];
        let mut k = 0;
        for i in 0..q {
            for j in i..q {
                e[i][j] = upper[k].clone();
                e[j][i] = upper[k].clone();
                k += 1;
            }
        }
        SymMatrix { entries: e }
    }

    /// VC_q: zero diagonal, ones elsewhere. Z counts proper q-colourings.
    pub fn vertex_colouring(q: usize) -> Self {
        let e = (0..q).map(|i| (0..q).map(|j| if i == j { int(0) } else { int(1) }).collect()).collect();
        SymMatrix { entries: e }
    }

    pub fn identity(q: usize) -> Self {
        SymMatrix { entries: linalg::identity(q) }
    }

    pub fn q(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> RatMatrix {
        self.entries
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymMatrix { entries: self.entries.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    /// Entrywise k-th power: the matrix seen by a k-thickened graph.
    pub fn thickened(&self, k: usize) -> Self {
        SymMatrix { entries: self.entries.iter().map(|r| r.iter().map(|x| pow_u(x, k)).collect()).collect() }
    }

    /// Matrix power: the matrix seen by a k-stretched graph.
    pub fn power(&self, k: usize) -> Self {
        SymMatrix { entries: linalg::mat_pow(&self.entries, k) }
    }

    pub fn shifted(&self, kappa: &Rational) -> Self {
        let mut e = self.entries.clone();
        for (i, row) in e.iter_mut().enumerate() {
            row[i] += kappa;
        }
        SymMatrix { entries: e }
    }

    pub fn mul(&self, other: &SymMatrix) -> RatMatrix {
        linalg::mat_mul(&self.entries, &other.entries)
    }

    /// P·M·Pᵀ where row i of the result is row `perm[i]` of M.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let e = perm.iter().map(|&a| perm.iter().map(|&b| self.entries[a][b].clone()).collect()).collect();
        SymMatrix { entries: e }
    }

    /// Principal submatrix on `idx`.
    pub fn principal(&self, idx: &[usize]) -> Self {
        self.permuted(idx)
    }

    pub fn det(&self) -> Rational {
        linalg::det(&self.entries)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.iter().flatten().any(Zero::is_zero)
    }

    /// Upper-triangle entries in row order.
    pub fn upper(&self) -> Vec<Rational> {
        let q = self.q();
        (0..q).flat_map(|i| (i..q).map(move |j| (i, j))).map(|(i, j)| self.entries[i][j].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.q()).all(|i| (0..self.q()).all(|j| self.entries[i][j] == if i == j { Rational::one() } else { Rational::zero() }))
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(format_rational).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    q: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile { q: self.q(), entries: self.entries.iter().map(|r| r.iter().map(format_rational).collect()).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = MatrixFile::deserialize(d)?;
        parse_matrix_file(f).map_err(serde::de::Error::custom)
    }
}

fn parse_matrix_file(f: MatrixFile) -> Result<SymMatrix> {
    if f.entries.len() != f.q {
        return input(format!("matrix declares q = {} but has {} rows", f.q, f.entries.len()));
    }
    let rows = f
        .entries
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SymMatrix::new(rows)
}

/// Parses `{"q": 3, "entries": [["4","2","1"], ...]}`.
pub fn parse_matrix_json(text: &str) -> Result<SymMatrix> {
    let f: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Input(format!("matrix JSON: {e}")))?;
    parse_matrix_file(f)
}
