use std::fmt;

use serde::Serialize;

use crate::arith::{lcm, Rational};
use crate::catalog::{format_multiset, lookup, parse_multiset, CatalogError, SingularityType, Species};

/// A multiset of singularities with its derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub members: Vec<SingularityType>,
    /// Total number of exceptional curves.
    pub l: u32,
    pub index: u32,
    pub k2: Rational,
    pub d: Rational,
    pub e_orb: Rational,
    pub h1_product: i64,
}

impl Configuration {
    pub fn new(species: &[Species]) -> Result<Self, CatalogError> {
        let mut species = species.to_vec();
        species.sort();
        let members = species.iter().map(|&s| lookup(s)).collect::<Result<Vec<_>, _>>()?;
        let l: u32 = members.iter().map(|m| m.curve_count).sum();
        let index = members.iter().fold(1, |acc, m| lcm(acc, m.index as i64)) as u32;
        let mut k2 = Rational::from_integer(9 - l as i64);
        let mut e_orb = Rational::from_integer(3);
        let mut h1_product = 1i64;
        for m in &members {
            k2 = k2 - m.dp_square()?;
            e_orb = e_orb - (Rational::ONE - Rational::new(1, m.group_order).unwrap());
            h1_product *= m.det_r;
        }
        let d = k2 * Rational::from_integer(h1_product);
        Ok(Configuration { members, l, index, k2, d, e_orb, h1_product })
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        Configuration::new(&parse_multiset(text)?)
    }

    pub fn species(&self) -> Vec<Species> {
        self.members.iter().map(|m| m.species).collect()
    }

    pub fn name(&self) -> String {
        format_multiset(&self.species())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn derived_invariants() {
        let k2 = Configuration::parse("K2").unwrap();
        assert_eq!(k2.k2, rat(8, 1));
        assert_eq!(k2.e_orb, rat(17, 8));
        assert_eq!(k2.d, rat(64, 1));
        assert_eq!(k2.index, 2);

        let c = Configuration::parse("A6(1,1)").unwrap();
        assert_eq!(c.d, rat(169, 1));

        let c = Configuration::parse("A1(1)E8").unwrap();
        assert_eq!(c.k2, rat(1, 3));
        assert_eq!(c.d, rat(1, 1));
        assert_eq!(c.name(), "A1(1)E8");

        let c = Configuration::parse("K1A4").unwrap();
        assert_eq!(c.k2, rat(5, 1));
        assert!(c.k2 > rat(3, 1) * c.e_orb);

        let c = Configuration::parse("D9(2)").unwrap();
        assert_eq!(c.d, rat(16, 1));
    }

    #[test]
    fn unset_correction_is_an_error() {
        assert!(Configuration::parse("D4(1)").is_err());
    }
}
