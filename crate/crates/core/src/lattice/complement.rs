use serde::Serialize;

use super::{LatticeError, PlumbingEmbedding};
use crate::arith::{det_bareiss, gcd_i128};

/// Primitive generator of the rank-one orthogonal complement of an
/// embedding of corank one, and its square in `-Z^N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementWitness {
    pub generator: Vec<i64>,
    pub square: i64,
}

/// Generator from the signed maximal minors of the embedding matrix.
pub fn complement_witness(embedding: &PlumbingEmbedding) -> Result<ComplementWitness, LatticeError> {
    let rows = embedding.vectors.len();
    let n = embedding.ambient_rank();
    if n == 0 || rows + 1 != n {
        return Err(LatticeError::ComplementRank(n.saturating_sub(rows)));
    }
    let mut minors: Vec<i128> = Vec::with_capacity(n);
    for skip in 0..n {
        let m: Vec<Vec<i128>> = embedding
            .vectors
            .iter()
            .map(|v| v.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x as i128).collect())
            .collect();
        let det = if rows == 0 { 1 } else { det_bareiss(&m).map_err(|_| LatticeError::ComplementRank(0))? };
        minors.push(if skip % 2 == 0 { det } else { -det });
    }
    let g = content(&minors);
    if g == 0 {
        return Err(LatticeError::ComplementRank(n - rows + 1));
    }
    let mut generator: Vec<i64> = minors.iter().map(|&x| (x / g) as i64).collect();
    if generator.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        generator.iter_mut().for_each(|x| *x = -*x);
    }
    let square = -generator.iter().map(|x| x * x).sum::<i64>();
    Ok(ComplementWitness { generator, square })
}

/// gcd of the entries, 0 for the zero vector.
pub(crate) fn content(v: &[i128]) -> i128 {
    v.iter().filter(|&&x| x != 0).fold(0, |acc, &x| if acc == 0 { x.abs() } else { gcd_i128(acc, x) })
}
