//! Exact rational and modular arithmetic.

mod cf;
mod rational;

pub use cf::{hj_expand, hj_value, ContinuedFraction};
pub use rational::{rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("invalid continued-fraction input: {0}")]
    InvalidFraction(String),
    #[error("{c} is not a unit modulo {n}")]
    NotAUnit { c: i64, n: i64 },
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

pub fn is_perfect_square(n: i64) -> bool {
    n >= 0 && n.isqrt().pow(2) == n
}

/// Whether `c` is the square of a unit modulo `n`, by exhaustive search.
pub fn is_square_unit_mod(c: i64, n: i64) -> Result<bool, ArithError> {
    if n < 2 || gcd(c, n) != 1 {
        return Err(ArithError::NotAUnit { c, n });
    }
    let target = c.rem_euclid(n) as i128;
    let n128 = n as i128;
    Ok((1..n).filter(|&u| gcd(u, n) == 1).any(|u| (u as i128 * u as i128) % n128 == target))
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_bareiss(m: &[Vec<i128>]) -> Result<i128, ArithError> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(ArithError::Overflow)?;
                a[i][j] = x / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(169));
        assert!(is_perfect_square(1));
        assert!(!is_perfect_square(96));
        assert!(!is_perfect_square(-4));
        assert!(is_perfect_square(i64::MAX.isqrt().pow(2)));
    }

    #[test]
    fn square_units() {
        assert!(!is_square_unit_mod(7, 12).unwrap());
        assert!(!is_square_unit_mod(29, 36).unwrap());
        assert!(!is_square_unit_mod(5, 9).unwrap());
        assert!(is_square_unit_mod(-11, 15).unwrap());
        for n in 2..60 {
            assert!(is_square_unit_mod(1, n).unwrap());
        }
        assert!(is_square_unit_mod(2, 4).is_err());
        assert!(is_square_unit_mod(1, 1).is_err());
    }

    #[test]
    fn bareiss_determinants() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det_bareiss(&m).unwrap(), 4);
        let swap = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det_bareiss(&swap).unwrap(), -1);
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(det_bareiss(&singular).unwrap(), 0);
        assert_eq!(det_bareiss(&[]).unwrap(), 1);
    }

    #[test]
    fn gcd_lcm_factor() {
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(factorize(96), vec![(2, 5), (3, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(169), vec![(13, 2)]);
    }

    #[test]
    fn square_units_match_enumeration() {
        for n in 2..=100i64 {
            let squares: std::collections::BTreeSet<i64> =
                (0..n).filter(|&u| gcd(u, n) == 1).map(|u| u * u % n).collect();
            for c in 0..n {
                match is_square_unit_mod(c, n) {
                    Ok(v) => assert_eq!(v, squares.contains(&c), "{c} mod {n}"),
                    Err(_) => assert_ne!(gcd(c, n), 1),
                }
            }
        }
    }
}
