use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::exact_algebra::rational::{format_rational, pow_u, RatStr, Rational};

/// Occurrence counts: for each edge-product value x, how many assignments produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub pairs: BTreeMap<Rational, u64>,
    pub edges: usize,
    pub q: usize,
}

impl Spectrum {
    pub fn total(&self) -> u64 {
        self.pairs.values().sum()
    }

    /// Σ x^k·count(x), which equals Z of the k-th entrywise power.
    pub fn moment(&self, k: usize) -> Rational {
        self.pairs.iter().map(|(x, &c)| pow_u(x, k) * Rational::from_integer(BigInt::from(c))).sum()
    }

    pub fn value(&self) -> Rational {
        self.moment(1)
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumFile {
    pairs: Vec<[String; 2]>,
    edges: usize,
    q: usize,
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpectrumFile {
            pairs: self.pairs.iter().map(|(x, c)| [format_rational(x), c.to_string()]).collect(),
            edges: self.edges,
            q: self.q,
        }
        .serialize(s)
    }
}

/// Diagonal vertex weights D^[r] indexed by vertex degree r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeWeightFamily {
    /// D^[r] = diag(1 + c^r, 1): the weights left after merging a twinned pair of states.
    Twinned { c: RatStr },
    /// Explicit weights per degree with an optional fallback.
    Table { table: BTreeMap<usize, Vec<RatStr>>, default: Option<Vec<RatStr>> },
}

impl DegreeWeightFamily {
    pub fn twinned(c: Rational) -> Self {
        DegreeWeightFamily::Twinned { c: RatStr(c) }
    }

    pub fn table(table: BTreeMap<usize, Vec<Rational>>, default: Option<Vec<Rational>>) -> Self {
        let wrap = |v: Vec<Rational>| v.into_iter().map(RatStr).collect();
        DegreeWeightFamily::Table {
            table: table.into_iter().map(|(k, v)| (k, wrap(v))).collect(),
            default: default.map(wrap),
        }
    }

    pub fn identity(q: usize) -> Self {
        DegreeWeightFamily::table(BTreeMap::new(), Some(vec![Rational::one(); q]))
    }

    pub fn weights(&self, degree: usize) -> Result<Vec<Rational>> {
        match self {
            DegreeWeightFamily::Twinned { c } => Ok(vec![Rational::one() + pow_u(&c.0, degree), Rational::one()]),
            DegreeWeightFamily::Table { table, default } => match table.get(&degree).or(default.as_ref()) {
                Some(w) => Ok(w.iter().map(|r| r.0.clone()).collect()),
                None => input(format!("no degree weight rule for degree {degree}")),
            },
        }
    }
}
