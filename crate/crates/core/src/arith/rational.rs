use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{gcd_i128, ArithError};

/// An exact fraction over `i64`, always stored in lowest terms with a
/// positive denominator.
///
/// Intermediate products are formed in `i128`; a result that does not fit
/// back into `i64` is an [`ArithError::Overflow`]. The operator impls panic
/// on overflow, the `checked_*` methods report it.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self, ArithError> {
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::ZeroDenominator);
        }
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let num = i64::try_from(n).map_err(|_| ArithError::Overflow)?;
        let den = i64::try_from(d).map_err(|_| ArithError::Overflow)?;
        Ok(Rational { num, den })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, ArithError> {
        let (a, b, c, d) = (self.num as i128, self.den as i128, rhs.num as i128, rhs.den as i128);
        Self::from_i128(a * d + c * b, b * d)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, ArithError> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, ArithError> {
        let (a, b, c, d) = (self.num as i128, self.den as i128, rhs.num as i128, rhs.den as i128);
        Self::from_i128(a * c, b * d)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, ArithError> {
        if rhs.num == 0 {
            return Err(ArithError::DivisionByZero);
        }
        let (a, b, c, d) = (self.num as i128, self.den as i128, rhs.num as i128, rhs.den as i128);
        Self::from_i128(a * d, b * c)
    }

    /// Representative of `self` in `[0, 1)`, i.e. the class in ℚ/ℤ.
    pub fn fract_mod_one(self) -> Self {
        let r = self.num.rem_euclid(self.den);
        Rational { num: r, den: self.den }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(rhs).expect("rational overflow in addition")
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self.checked_sub(rhs).expect("rational overflow in subtraction")
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.checked_mul(rhs).expect("rational overflow in multiplication")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(rhs).expect("rational division failed")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: self.num.checked_neg().expect("rational overflow in negation"), den: self.den }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| ArithError::Parse(s.to_string()));
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building constants; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("invalid rational literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(Rational::new(0, -7).unwrap(), Rational::ZERO);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(ArithError::ZeroDenominator));
        assert_eq!(rat(1, 2).checked_div(Rational::ZERO), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_integer(i64::MAX);
        assert_eq!(big.checked_add(Rational::ONE), Err(ArithError::Overflow));
        assert_eq!(big.checked_mul(rat(2, 1)), Err(ArithError::Overflow));
        // the reduced result fits even though the raw product does not
        assert_eq!(big.checked_mul(rat(1, 2)).unwrap().denom(), 2);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn operator_overflow_panics() {
        let _ = Rational::from_integer(i64::MAX) + Rational::ONE;
    }

    #[test]
    fn ordering_and_fract() {
        assert!(rat(-3, 4) < rat(1, 4));
        assert!(rat(7, 4) > rat(5, 3));
        assert_eq!(rat(-7, 12).fract_mod_one(), rat(5, 12));
        assert_eq!(rat(9, 4).fract_mod_one(), rat(1, 4));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-5/4".parse::<Rational>().unwrap(), rat(-5, 4));
        assert_eq!("3".parse::<Rational>().unwrap(), rat(3, 1));
        assert_eq!(rat(10, 4).to_string(), "5/2");
        assert_eq!(rat(-8, 4).to_string(), "-2");
        assert!("1/x".parse::<Rational>().is_err());
    }

    fn big(r: Rational) -> num_rational::BigRational {
        num_rational::BigRational::new(r.numer().into(), r.denom().into())
    }

    #[test]
    fn agrees_with_big_rational_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 10_000 {
            let a = Rational::new(rng.gen_range(-10_000..=10_000), rng.gen_range(1..=10_000)).unwrap();
            let b = Rational::new(rng.gen_range(-10_000..=10_000), rng.gen_range(1..=10_000)).unwrap();
            let op = rng.gen_range(0..4);
            let (ours, oracle) = match op {
                0 => (a.checked_add(b), big(a) + big(b)),
                1 => (a.checked_sub(b), big(a) - big(b)),
                2 => (a.checked_mul(b), big(a) * big(b)),
                _ => {
                    if b.is_zero() {
                        continue;
                    }
                    (a.checked_div(b), big(a) / big(b))
                }
            };
            assert_eq!(big(ours.unwrap()), oracle, "{a} op{op} {b}");
            assert_eq!(a.cmp(&b), big(a).cmp(&big(b)));
            checked += 1;
        }
    }

    proptest::proptest! {
        #[test]
        fn field_laws(an in -1000i64..1000, ad in 1i64..1000, bn in -1000i64..1000, bd in 1i64..1000) {
            let a = Rational::new(an, ad).unwrap();
            let b = Rational::new(bn, bd).unwrap();
            proptest::prop_assert_eq!(a + b, b + a);
            proptest::prop_assert_eq!(a * b, b * a);
            proptest::prop_assert_eq!(a + b - b, a);
            proptest::prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
