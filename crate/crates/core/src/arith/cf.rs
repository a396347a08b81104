use std::fmt;

use serde::Serialize;

use super::{gcd, ArithError};

/// A Hirzebruch-Jung continued fraction `a_1 - 1/(a_2 - 1/(... - 1/a_l))`
/// with every `a_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ContinuedFraction(Vec<i64>);

impl ContinuedFraction {
    pub fn new(coefficients: Vec<i64>) -> Result<Self, ArithError> {
        if coefficients.is_empty() {
            return Err(ArithError::InvalidFraction("empty coefficient list".into()));
        }
        if let Some(a) = coefficients.iter().find(|&&a| a < 2) {
            return Err(ArithError::InvalidFraction(format!("coefficient {a} < 2")));
        }
        Ok(ContinuedFraction(coefficients))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn hj_expand(p: i64, q: i64) -> Result<ContinuedFraction, ArithError> {
    if q <= 0 || q >= p || gcd(p, q) != 1 {
        return Err(ArithError::InvalidFraction(format!("need 0 < q < p with gcd 1, got p={p}, q={q}")));
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q != 0 {
        let a = (p + q - 1) / q;
        out.push(a);
        (p, q) = (q, a * q - p);
    }
    Ok(ContinuedFraction(out))
}

/// Numerator and denominator of the fraction, already coprime.
pub fn hj_value(cf: &ContinuedFraction) -> Result<(i64, i64), ArithError> {
    let coeffs = cf.coefficients();
    let mut p = *coeffs.last().expect("nonempty by construction");
    let mut q = 1i64;
    for &a in coeffs.iter().rev().skip(1) {
        let next = a.checked_mul(p).and_then(|x| x.checked_sub(q)).ok_or(ArithError::Overflow)?;
        (p, q) = (next, p);
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(v: &[i64]) -> ContinuedFraction {
        ContinuedFraction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(hj_expand(9, 1).unwrap(), cf(&[9]));
        assert_eq!(hj_expand(36, 19).unwrap(), cf(&[2, 10, 2]));
        assert_eq!(hj_expand(9, 4).unwrap(), cf(&[3, 2, 2, 2]));
        assert_eq!(hj_expand(4, 3).unwrap(), cf(&[2, 2, 2]));
    }

    #[test]
    fn values() {
        assert_eq!(hj_value(&cf(&[2])).unwrap(), (2, 1));
        assert_eq!(hj_value(&cf(&[2, 2, 3, 2, 2])).unwrap(), (15, 11));
        assert_eq!(hj_value(&cf(&[3, 10, 2, 2])).unwrap(), (81, 28));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(hj_expand(4, 4).is_err());
        assert!(hj_expand(4, 0).is_err());
        assert!(hj_expand(6, 4).is_err());
        assert!(ContinuedFraction::new(vec![3, 1]).is_err());
        assert!(ContinuedFraction::new(vec![]).is_err());
    }

    #[test]
    fn round_trip_up_to_200() {
        for p in 2..=200 {
            for q in 1..p {
                if gcd(p, q) == 1 {
                    assert_eq!(hj_value(&hj_expand(p, q).unwrap()).unwrap(), (p, q));
                }
            }
        }
    }

    #[test]
    fn value_overflow_reported() {
        let huge = cf(&[i64::MAX / 2, 4]);
        assert_eq!(hj_value(&huge), Err(ArithError::Overflow));
    }
}
