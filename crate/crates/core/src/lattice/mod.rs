//! Embeddings of linear plumbing lattices into the standard negative
//! definite lattice `-Z^N`, orthogonal complements, and the Donaldson
//! obstruction.

mod complement;
mod enumerate;
mod obstruction;

pub(crate) use complement::content;
pub use complement::{complement_witness, ComplementWitness};
pub use enumerate::{canonical_form, enumerate_embeddings, enumerate_embeddings_with, SearchOptions};
pub use obstruction::{donaldson_obstruction, donaldson_obstruction_with};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::hj_expand;
use crate::catalog::SingularityType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("plumbing weights must be <= -2, got {0}")]
    InvalidWeight(i64),
    #[error("|weight| {weight} exceeds the configured bound {bound}")]
    WeightBound { weight: i64, bound: i64 },
    #[error("{0} does not have a lens space link")]
    NotLens(String),
    #[error("search budget of {0} candidate extensions exhausted")]
    BudgetExhausted(u64),
    #[error("orthogonal complement has rank {0}, expected 1")]
    ComplementRank(usize),
    #[error("cannot parse graph {0:?}")]
    Parse(String),
}

/// A linear plumbing: a chain of vertices with weights `<= -2`, adjacent
/// vertices pairing to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlumbingLattice {
    weights: Vec<i64>,
}

impl PlumbingLattice {
    pub fn new(weights: Vec<i64>) -> Result<Self, LatticeError> {
        if weights.is_empty() {
            return Err(LatticeError::Parse(String::new()));
        }
        if let Some(&w) = weights.iter().find(|&&w| w > -2) {
            return Err(LatticeError::InvalidWeight(w));
        }
        Ok(PlumbingLattice { weights })
    }

    /// The plumbing `X(p,q)` bounded by `L(p,q)`.
    pub fn from_lens(p: i64, q: i64) -> Result<Self, LatticeError> {
        let cf = hj_expand(p, q).map_err(|e| LatticeError::Parse(e.to_string()))?;
        PlumbingLattice::new(cf.coefficients().iter().map(|a| -a).collect())
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Gram matrix in the lattice pairing.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0; n]; n];
        for i in 0..n {
            g[i][i] = self.weights[i];
            if i + 1 < n {
                g[i][i + 1] = 1;
                g[i + 1][i] = 1;
            }
        }
        g
    }
}

impl fmt::Display for PlumbingLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for PlumbingLattice {
    type Err = LatticeError;

    /// Comma-separated negative weights such as `-2,-10,-2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let weights = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| LatticeError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        PlumbingLattice::new(weights)
    }
}

/// The plumbing `X(p, p-q)` bounded by `-L(p,q)`.
pub fn plumbing_for_reversed_link(t: &SingularityType) -> Result<PlumbingLattice, LatticeError> {
    let lens = t.link.lens().ok_or_else(|| LatticeError::NotLens(t.species.to_string()))?;
    let rev = lens.reversed();
    PlumbingLattice::from_lens(rev.p, rev.q)
}

/// One vector of `Z^N` per plumbing vertex, vertices listed lattice by
/// lattice in their given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlumbingEmbedding {
    pub vectors: Vec<Vec<i64>>,
}

impl PlumbingEmbedding {
    pub fn ambient_rank(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    /// Whether the vectors realize the block-diagonal Gram matrix of the
    /// lattices in the pairing `<x,y> = -x.y`.
    pub fn realizes(&self, lattices: &[PlumbingLattice]) -> bool {
        let gram = block_gram(lattices);
        if gram.len() != self.vectors.len() {
            return false;
        }
        (0..gram.len()).all(|i| (0..gram.len()).all(|j| -dot(&self.vectors[i], &self.vectors[j]) == gram[i][j]))
    }
}

impl fmt::Display for PlumbingEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vectors.iter().map(|v| format_vector(v)).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Renders a coordinate vector as `2e1-e2+3e4`.
pub fn format_vector(v: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        out.push_str(&format!("{sign}{mag}e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn block_gram(lattices: &[PlumbingLattice]) -> Vec<Vec<i64>> {
    let n: usize = lattices.iter().map(PlumbingLattice::rank).sum();
    let mut g = vec![vec![0; n]; n];
    let mut off = 0;
    for l in lattices {
        let b = l.gram();
        for i in 0..l.rank() {
            for j in 0..l.rank() {
                g[off + i][off + j] = b[i][j];
            }
        }
        off += l.rank();
    }
    g
}

/// Edges of the disjoint union of the chains, by global vertex position.
pub(crate) fn block_edges(lattices: &[PlumbingLattice]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut off = 0;
    for l in lattices {
        for i in 1..l.rank() {
            edges.push((off + i - 1, off + i));
        }
        off += l.rank();
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn reversed(s: &str) -> Vec<i64> {
        plumbing_for_reversed_link(&lookup(s.parse().unwrap()).unwrap()).unwrap().weights().to_vec()
    }

    #[test]
    fn reversed_plumbings() {
        assert_eq!(reversed("A8"), vec![-9]);
        assert_eq!(reversed("K9"), vec![-2, -10, -2]);
        assert_eq!(reversed("A2(2,2)"), vec![-2, -2, -3, -2, -2]);
        assert_eq!(reversed("A2(1,2)"), vec![-3, -2, -2, -2]);
        assert_eq!(reversed("A11(2,2)"), vec![-2, -2, -12, -2, -2]);
        assert!(plumbing_for_reversed_link(&lookup("E8".parse().unwrap()).unwrap()).is_err());
    }

    #[test]
    fn parse_and_format() {
        let l: PlumbingLattice = "-2,-10,-2".parse().unwrap();
        assert_eq!(l.weights(), &[-2, -10, -2]);
        assert_eq!(l.to_string(), "-2,-10,-2");
        assert!("-1,-2".parse::<PlumbingLattice>().is_err());
        assert!("x".parse::<PlumbingLattice>().is_err());
        assert_eq!(format_vector(&[1, -1, 0, 3]), "e1-e2+3e4");
        assert_eq!(format_vector(&[0, -2]), "-2e2");
    }

    #[test]
    fn determinant_of_plumbing_is_order() {
        let l = PlumbingLattice::from_lens(36, 19).unwrap();
        let g: Vec<Vec<i128>> = l.gram().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        assert_eq!(crate::arith::det_bareiss(&g).unwrap().abs(), 36);
    }
}
