//! Heegaard Floer d-invariants of lens spaces and trefoil surgeries, and the
//! spin connected-sum obstruction.

mod obstruction;

pub use obstruction::{all_sums, spin_sum_obstruction, SPIN_SUM_TARGET};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FloerError {
    #[error("invalid lens space L({p},{q})")]
    InvalidLens { p: i64, q: i64 },
    #[error("spin^c label {i} out of range for order {p}")]
    InvalidLabel { p: i64, i: i64 },
    #[error("unsupported surgery coefficient {p}/{q}")]
    InvalidSurgery { p: i64, q: i64 },
}

/// The lens space `L(p,q)`, oriented as `-p/q` surgery on the unknot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LensSpace {
    pub p: i64,
    pub q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self, FloerError> {
        let ok = (p == 1 && q == 0) || (p > 1 && q > 0 && q < p && gcd(p, q) == 1);
        if ok {
            Ok(LensSpace { p, q })
        } else {
            Err(FloerError::InvalidLens { p, q })
        }
    }

    /// `-L(p,q) = L(p, p-q)`.
    pub fn reversed(self) -> Self {
        if self.p == 1 {
            self
        } else {
            LensSpace { p: self.p, q: self.p - self.q }
        }
    }

    pub fn d(self, i: i64) -> Result<Rational, FloerError> {
        d_lens(self.p, self.q, i)
    }

    pub fn spin_labels(self) -> Vec<i64> {
        spin_labels(self.p, self.q)
    }

    /// Label and d-invariant for every spin structure.
    pub fn spin_d(self) -> Vec<(i64, Rational)> {
        self.spin_labels().into_iter().map(|i| (i, self.d(i).expect("spin labels are in range"))).collect()
    }
}

pub fn d_lens(p: i64, q: i64, i: i64) -> Result<Rational, FloerError> {
    d_lens_with_depth(p, q, i).map(|(d, _)| d)
}

/// The d-invariant together with the number of recursion steps taken to
/// reach `L(1,0)`.
pub fn d_lens_with_depth(p: i64, q: i64, i: i64) -> Result<(Rational, usize), FloerError> {
    LensSpace::new(p, q)?;
    if !(0..p).contains(&i) {
        return Err(FloerError::InvalidLabel { p, i });
    }
    let (mut p, mut q, mut i) = (p, q, i);
    let mut acc = Rational::ZERO;
    let mut sign = 1i64;
    let mut depth = 0;
    while p != 1 {
        let num = (2 * i + 1 - p - q).pow(2);
        let term = Rational::new(1, 4).unwrap() - Rational::new(num, 4 * p * q).unwrap();
        acc = acc + Rational::from_integer(sign) * term;
        sign = -sign;
        (p, q, i) = (q, p % q, i % q);
        depth += 1;
    }
    Ok((acc, depth))
}

/// Spin structures of `L(p,q)`: the integers among `(q-1)/2` and
/// `(p+q-1)/2`.
pub fn spin_labels(p: i64, q: i64) -> Vec<i64> {
    let mut out: Vec<i64> =
        [q - 1, p + q - 1].into_iter().filter(|n| n % 2 == 0).map(|n| n / 2).filter(|&i| (0..p).contains(&i)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `V_s` of the right-handed trefoil.
pub fn v_trefoil(s: i64) -> i64 {
    if s == 0 {
        1
    } else {
        0
    }
}

/// d-invariant of `p/q` surgery on the right-handed trefoil in label `i`.
pub fn d_trefoil_surgery(p: i64, q: i64, i: i64) -> Result<Rational, FloerError> {
    if p < 1 || q < 1 || gcd(p, q) != 1 || (q >= p && !(p == 1 && q == 1)) {
        return Err(FloerError::InvalidSurgery { p, q });
    }
    if !(0..p).contains(&i) {
        return Err(FloerError::InvalidLabel { p, i });
    }
    let lens_d = if p == 1 { Rational::ZERO } else { d_lens(p, q, i)? };
    let v = v_trefoil(i / q).max(v_trefoil((p + q + 1 - i) / q));
    Ok(-lens_d - Rational::from_integer(2 * v))
}

/// All d-invariants of `p/q` surgery on the right-handed trefoil.
pub fn trefoil_surgery_d_all(p: i64, q: i64) -> Result<Vec<Rational>, FloerError> {
    (0..p).map(|i| d_trefoil_surgery(p, q, i)).collect()
}

/// d-invariants of `p/q` trefoil surgery in its spin structures.
pub fn trefoil_surgery_spin_d(p: i64, q: i64) -> Result<Vec<(i64, Rational)>, FloerError> {
    let labels = if p == 1 { vec![0] } else { spin_labels(p, q) };
    labels.into_iter().map(|i| d_trefoil_surgery(p, q, i).map(|d| (i, d))).collect()
}
