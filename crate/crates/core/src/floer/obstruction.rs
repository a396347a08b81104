use crate::arith::{rat, Rational};
use crate::catalog::{spin_d_invariants, SpinData};
use crate::screening::{Configuration, Evidence, FilterId, ObstructionVerdict, Outcome};

/// The value a sum of spin d-invariants must hit.
pub const SPIN_SUM_TARGET: (i64, i64) = (1, 4);

/// Every sum obtained by choosing one value from each set, sorted and
/// without repetition.
pub fn all_sums(sets: &[Vec<Rational>]) -> Vec<Rational> {
    let mut sums = vec![Rational::ZERO];
    for set in sets {
        sums = sums.iter().flat_map(|&s| set.iter().map(move |&v| s + v)).collect();
        sums.sort();
        sums.dedup();
    }
    sums
}

/// Whether some choice of spin structures makes the d-invariants of the
/// links add up to 1/4. Needs an even `|H_1|` product.
pub fn spin_sum_obstruction(config: &Configuration) -> ObstructionVerdict {
    let filter = FilterId::SpinSum;
    if config.h1_product % 2 != 0 {
        return ObstructionVerdict::not_applicable(filter, "product of link homology orders is odd");
    }
    let mut sets = Vec::with_capacity(config.members.len());
    for m in &config.members {
        match spin_d_invariants(m) {
            SpinData::Available(v) => sets.push(v),
            SpinData::Unavailable => {
                return ObstructionVerdict::not_applicable(
                    filter,
                    format!("spin d-invariants of {} are unavailable", m.species),
                )
            }
        }
    }
    let sums = all_sums(&sets);
    let target = rat(SPIN_SUM_TARGET.0, SPIN_SUM_TARGET.1);
    let outcome = if sums.contains(&target) { Outcome::Pass } else { Outcome::Obstructed };
    ObstructionVerdict::new(filter, outcome, Evidence::SpinSums { sums })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(name: &str) -> ObstructionVerdict {
        spin_sum_obstruction(&Configuration::parse(name).unwrap())
    }

    fn sums(v: &ObstructionVerdict) -> Vec<Rational> {
        match &v.evidence {
            Evidence::SpinSums { sums } => sums.clone(),
            other => panic!("unexpected evidence {other:?}"),
        }
    }

    #[test]
    fn obstructed_examples() {
        for (name, expected) in [
            ("K1E8", vec![rat(5, 4), rat(9, 4)]),
            ("A1(2)E8", vec![rat(3, 4), rat(9, 4)]),
            ("A3(2,2)E8", vec![rat(3, 4), rat(11, 4)]),
            ("D9(2)", vec![rat(5, 4), rat(9, 4)]),
        ] {
            let v = verdict(name);
            assert_eq!(v.outcome, Outcome::Obstructed, "{name}");
            assert_eq!(sums(&v), expected, "{name}");
        }
    }

    #[test]
    fn passing_and_inapplicable() {
        assert_eq!(verdict("K1A4").outcome, Outcome::Pass);
        assert_eq!(verdict("A1").outcome, Outcome::Pass);
        assert_eq!(verdict("E8").outcome, Outcome::NotApplicable);
        assert_eq!(verdict("A4").outcome, Outcome::NotApplicable);
        assert_eq!(verdict("D5(2)").outcome, Outcome::NotApplicable);
    }

    #[test]
    fn sums_of_products() {
        let s = all_sums(&[vec![rat(-3, 4), rat(1, 4)], vec![rat(1, 1)]]);
        assert_eq!(s, vec![rat(1, 4), rat(5, 4)]);
        assert_eq!(all_sums(&[]), vec![Rational::ZERO]);
    }
}
