//! Candidate configurations for each index, assuming trivial first
//! homology of the smooth locus.

use crate::arith::{gcd, Rational};
use crate::catalog::{lookup, Species, GORENSTEIN_K_NONZERO};

use super::Configuration;

/// At most this many singular points when one is not a rational double
/// point.
const MAX_MEMBERS: usize = 4;

/// Largest curve count any member can have while keeping `K^2 > 0`.
const CURVE_CAP: u32 = 12;

/// Rational double points usable alongside a non-Gorenstein member: all
/// `A_m`, odd `D_m`, and `E_6, E_7, E_8`.
fn gorenstein_companions() -> Vec<Species> {
    let mut out: Vec<Species> = (1..=CURVE_CAP).map(Species::A).collect();
    out.extend((5..=CURVE_CAP).filter(|m| m % 2 == 1).map(Species::D));
    out.extend([Species::E(6), Species::E(7), Species::E(8)]);
    out.sort();
    out
}

/// Multisets drawn from `pool` (non-decreasing positions) with at most
/// `max` elements and total curve count at most `curves`.
fn multisets(pool: &[Species], max: usize, curves: u32) -> Vec<Vec<Species>> {
    fn go(
        pool: &[Species],
        start: usize,
        max: usize,
        curves: u32,
        cur: &mut Vec<Species>,
        out: &mut Vec<Vec<Species>>,
    ) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in start..pool.len() {
            let c = curve_count(pool[i]);
            if c <= curves {
                cur.push(pool[i]);
                go(pool, i, max, curves - c, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pool, 0, max, curves, &mut Vec::new(), &mut out);
    out
}

fn curve_count(s: Species) -> u32 {
    lookup(s).map(|t| t.curve_count).unwrap_or(u32::MAX)
}

fn det(s: Species) -> i64 {
    lookup(s).expect("enumerated species are valid").det_r
}

fn pairwise_coprime(members: &[Species]) -> bool {
    members.iter().enumerate().all(|(i, &a)| members[i + 1..].iter().all(|&b| gcd(det(a), det(b)) == 1))
}

fn all_cyclic(members: &[Species]) -> bool {
    members.iter().all(|&s| lookup(s).is_ok_and(|t| t.h1_link.is_cyclic()))
}

fn positive_k2(c: &Configuration) -> bool {
    c.k2 > Rational::ZERO
}

fn finish(mut out: Vec<Configuration>) -> Vec<Configuration> {
    out.sort_by_key(Configuration::species);
    out.dedup_by(|a, b| a.species() == b.species());
    out
}

/// All candidates of the given index, sorted canonically. Index 1 keeps
/// the imported Gorenstein types with non-trivial canonical class and
/// pairwise coprime determinants.
pub fn enumerate_candidates(index: u32) -> Vec<Configuration> {
    match index {
        1 => finish(
            GORENSTEIN_K_NONZERO
                .entries
                .iter()
                .filter(|e| pairwise_coprime(e))
                .map(|e| Configuration::new(e).expect("imported entries are valid"))
                .collect(),
        ),
        2 => enumerate_index2(),
        3 => finish((1..=6).flat_map(enumerate_index3_case).collect()),
        _ => Vec::new(),
    }
}

fn enumerate_index2() -> Vec<Configuration> {
    let k_pool: Vec<Species> = (1..=CURVE_CAP).map(Species::K).collect();
    let companions = gorenstein_companions();
    let mut out = Vec::new();
    for ks in multisets(&k_pool, MAX_MEMBERS, CURVE_CAP) {
        if ks.is_empty() {
            continue;
        }
        let used: u32 = ks.iter().map(|&s| curve_count(s)).sum();
        for rest in multisets(&companions, MAX_MEMBERS - ks.len(), CURVE_CAP - used) {
            let members: Vec<Species> = ks.iter().chain(&rest).copied().collect();
            if !pairwise_coprime(&members) || !all_cyclic(&members) {
                continue;
            }
            let c = Configuration::new(&members).expect("valid members");
            if positive_k2(&c) {
                out.push(c);
            }
        }
    }
    finish(out)
}

/// The index-3 case a species belongs to, numbered as in the case
/// analysis: 1 `A1(1)`, 2 `An(1,1)`, 3 `An(1,2)`, 4 `A1(2)` and
/// `An(2,2)`, 5 `Dn(1)`, 6 `Dn(2)`.
pub fn index3_case(s: Species) -> Option<u8> {
    match s {
        Species::A1One => Some(1),
        Species::A11(_) => Some(2),
        Species::A12(_) => Some(3),
        Species::A1Two | Species::A22(_) => Some(4),
        Species::D1(_) => Some(5),
        Species::D2(_) => Some(6),
        _ => None,
    }
}

fn case_members(case: u8) -> Vec<Species> {
    let range = 2..=CURVE_CAP;
    match case {
        1 => vec![Species::A1One],
        2 => (3..=CURVE_CAP).map(Species::A11).collect(),
        3 => range.map(Species::A12).collect(),
        4 => std::iter::once(Species::A1Two).chain(range.map(Species::A22)).collect(),
        5 => (5..=CURVE_CAP).filter(|n| n % 2 == 1).map(Species::D1).collect(),
        6 => (5..=CURVE_CAP).filter(|n| n % 2 == 1).map(Species::D2).collect(),
        _ => Vec::new(),
    }
}

/// Candidates with exactly one index-3 point, of the given case, plus
/// pairwise coprime rational double points.
///
/// In case 4 a companion may share a factor with the index-3 point as
/// long as that factor is prime to 6; such rows are later removed by the
/// coprimality filter.
pub fn enumerate_index3_case(case: u8) -> Vec<Configuration> {
    let companions = gorenstein_companions();
    let mut out = Vec::new();
    for special in case_members(case) {
        let Ok(t) = lookup(special) else { continue };
        let budget = CURVE_CAP.saturating_sub(t.curve_count);
        for rest in multisets(&companions, MAX_MEMBERS - 1, budget) {
            if !pairwise_coprime(&rest) {
                continue;
            }
            let compatible = rest.iter().all(|&s| {
                let g = gcd(t.det_r, det(s));
                if case == 4 {
                    gcd(g, 6) == 1
                } else {
                    g == 1
                }
            });
            let members: Vec<Species> = std::iter::once(special).chain(rest.iter().copied()).collect();
            if !compatible || !all_cyclic(&members) {
                continue;
            }
            let c = Configuration::new(&members).expect("valid members");
            if positive_k2(&c) {
                out.push(c);
            }
        }
    }
    finish(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[Configuration]) -> Vec<String> {
        v.iter().map(Configuration::name).collect()
    }

    #[test]
    fn index1_list() {
        let mut got = names(&enumerate_candidates(1));
        got.sort();
        let mut want: Vec<String> =
            ["A8", "E8", "D8", "A7", "E7", "E6", "D5", "A4", "A2A1", "A1"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_candidates(2).len(), 28);
        let per_case: Vec<usize> = (1..=6).map(|c| enumerate_index3_case(c).len()).collect();
        assert_eq!(per_case, vec![13, 19, 33, 58, 4, 4]);
    }

    #[test]
    fn one_k_per_index2_candidate() {
        for c in enumerate_candidates(2) {
            assert_eq!(c.species().iter().filter(|s| matches!(s, Species::K(_))).count(), 1, "{c}");
        }
    }
}
