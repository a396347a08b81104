use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CatalogError;

/// A quotient-singularity species together with its integer parameter.
///
/// Index-three species follow Brieskorn-style names: `A1One` is `A_1(1)`,
/// `A11(n)` is `A_n(1,1)`, `A12(n)` is `A_n(1,2)` and so on. `A12(2)` is
/// the singularity written `A_2(1,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Species {
    A(u32),
    D(u32),
    E(u32),
    K(u32),
    A1One,
    A1Two,
    A11(u32),
    A12(u32),
    A22(u32),
    D1(u32),
    D2(u32),
}

impl Species {
    pub fn validate(self) -> Result<Self, CatalogError> {
        let ok = match self {
            Species::A(n) | Species::K(n) => n >= 1,
            Species::D(n) | Species::D1(n) | Species::D2(n) => n >= 4,
            Species::E(n) => (6..=8).contains(&n),
            Species::A1One | Species::A1Two => true,
            Species::A11(n) => n >= 3,
            Species::A12(n) | Species::A22(n) => n >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(CatalogError::OutOfRange(self.to_string()))
        }
    }

    pub fn index(self) -> u32 {
        match self {
            Species::A(_) | Species::D(_) | Species::E(_) => 1,
            Species::K(_) => 2,
            _ => 3,
        }
    }

    pub fn is_gorenstein(self) -> bool {
        self.index() == 1
    }

    /// Ordering class: higher-index species first, then E, D, A.
    fn rank(self) -> (u32, u32) {
        let class = match self {
            Species::D2(_) => 0,
            Species::D1(_) => 1,
            Species::A22(_) | Species::A1Two => 2,
            Species::A12(_) => 3,
            Species::A11(_) => 4,
            Species::A1One => 5,
            Species::K(_) => 6,
            Species::E(_) => 7,
            Species::D(_) => 8,
            Species::A(_) => 9,
        };
        let n = match self {
            Species::A1One | Species::A1Two => 1,
            Species::A(n)
            | Species::D(n)
            | Species::E(n)
            | Species::K(n)
            | Species::A11(n)
            | Species::A12(n)
            | Species::A22(n)
            | Species::D1(n)
            | Species::D2(n) => n,
        };
        (class, u32::MAX - n)
    }
}

impl Ord for Species {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Species {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Species::A(n) => write!(f, "A{n}"),
            Species::D(n) => write!(f, "D{n}"),
            Species::E(n) => write!(f, "E{n}"),
            Species::K(n) => write!(f, "K{n}"),
            Species::A1One => write!(f, "A1(1)"),
            Species::A1Two => write!(f, "A1(2)"),
            Species::A11(n) => write!(f, "A{n}(1,1)"),
            Species::A12(n) => write!(f, "A{n}(1,2)"),
            Species::A22(n) => write!(f, "A{n}(2,2)"),
            Species::D1(n) => write!(f, "D{n}(1)"),
            Species::D2(n) => write!(f, "D{n}(2)"),
        }
    }
}

impl FromStr for Species {
    type Err = CatalogError;

    /// Accepts tokens such as `A4`, `E8`, `K5`, `A2(1,2)`, `D5(2)`, with
    /// optional `_` and braces as in `A_{10}(1,1)`.
    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::Parse(token.to_string());
        let cleaned: String = token.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect();
        let mut chars = cleaned.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (num, suffix) = match rest.find('(') {
            Some(i) => (&rest[..i], Some(&rest[i..])),
            None => (rest, None),
        };
        let n: u32 = num.parse().map_err(|_| bad())?;
        let species = match (letter, suffix) {
            ('A', None) => Species::A(n),
            ('D', None) => Species::D(n),
            ('E', None) => Species::E(n),
            ('K', None) => Species::K(n),
            ('A', Some("(1)")) if n == 1 => Species::A1One,
            ('A', Some("(2)")) if n == 1 => Species::A1Two,
            ('A', Some("(1,1)")) => Species::A11(n),
            ('A', Some("(1,2)")) => Species::A12(n),
            ('A', Some("(2,2)")) => Species::A22(n),
            ('D', Some("(1)")) => Species::D1(n),
            ('D', Some("(2)")) => Species::D2(n),
            _ => return Err(bad()),
        };
        species.validate()
    }
}

impl Serialize for Species {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Species {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
