//! Candidate enumeration and the obstruction chain.

mod config;
mod enumerate;
mod replay;
mod report;
mod verdict;

pub use config::Configuration;
pub use enumerate::{enumerate_candidates, enumerate_index3_case, index3_case};
pub use replay::replay;
pub use report::{
    classify, classify_with, d_table, factor_rational, CandidateReport, ClassificationReport, CrossCheck, DTable,
    DTableId, DTableRow,
};
pub use verdict::{Evidence, FilterId, NonCyclicLink, ObstructionVerdict, OrbitWitness, Outcome, SharedFactor};

use crate::arith::{gcd, is_perfect_square, Rational};
use crate::catalog::LOG_DEL_PEZZO_INDEX2;
use crate::floer::spin_sum_obstruction;
use crate::lattice::{donaldson_obstruction_with, SearchOptions};
use crate::linking::linking_obstruction;
use crate::Error;

/// Link homology orders must be pairwise coprime and every link must have
/// cyclic first homology.
pub fn coprime_cyclic_filter(c: &Configuration) -> ObstructionVerdict {
    let mut shared = Vec::new();
    for (i, a) in c.members.iter().enumerate() {
        for b in &c.members[i + 1..] {
            let g = gcd(a.det_r, b.det_r);
            if g != 1 {
                shared.push(SharedFactor { a: a.species, b: b.species, gcd: g });
            }
        }
    }
    let non_cyclic: Vec<NonCyclicLink> = c
        .members
        .iter()
        .filter(|m| !m.h1_link.is_cyclic())
        .map(|m| NonCyclicLink { member: m.species, h1: m.h1_link.to_string() })
        .collect();
    let outcome = if shared.is_empty() && non_cyclic.is_empty() { Outcome::Pass } else { Outcome::Obstructed };
    ObstructionVerdict::new(FilterId::CoprimeCyclic, outcome, Evidence::Coprimality { shared, non_cyclic })
}

/// `D = K^2 * prod det` must be a nonzero square integer.
pub fn arithmetic_filter(c: &Configuration) -> ObstructionVerdict {
    let square = c.d.is_integer() && c.d.numer() > 0 && is_perfect_square(c.d.numer());
    ObstructionVerdict::new(
        FilterId::Arithmetic,
        if square { Outcome::Pass } else { Outcome::Obstructed },
        Evidence::Determinant { k2: c.k2, d: c.d, factored: factor_rational(c.d) },
    )
}

/// Orbifold BMY: with `K^2 > 0` and an anti-ample canonical class ruled
/// out, `K^2 <= 3 e_orb` must hold. A negative `e_orb` is always
/// obstructed.
pub fn bmy_filter(c: &Configuration, anti_ample_impossible: bool) -> ObstructionVerdict {
    let three_e_orb = Rational::from_integer(3) * c.e_orb;
    let evidence = Evidence::Bmy { k2: c.k2, e_orb: c.e_orb, three_e_orb, anti_ample_possible: !anti_ample_impossible };
    let obstructed = c.e_orb < Rational::ZERO || (anti_ample_impossible && c.k2 > Rational::ZERO && c.k2 > three_e_orb);
    let outcome = if obstructed { Outcome::Obstructed } else { Outcome::Pass };
    ObstructionVerdict::new(FilterId::Bmy, outcome, evidence)
}

/// BMY as used by the pipeline: anti-ample data exists only for index 2,
/// elsewhere only the sign of `e_orb` is checked.
pub fn pipeline_bmy(c: &Configuration) -> ObstructionVerdict {
    if c.index == 2 {
        return bmy_filter(c, !LOG_DEL_PEZZO_INDEX2.contains(&c.species()));
    }
    if c.e_orb < Rational::ZERO {
        return bmy_filter(c, true);
    }
    ObstructionVerdict::not_applicable(FilterId::Bmy, format!("no anti-ample data for index {}", c.index))
}

/// Runs one filter. Linking preconditions that fail (non-cyclic or
/// non-coprime homology) give a not-applicable verdict.
pub fn run_filter(filter: FilterId, c: &Configuration, options: &SearchOptions) -> Result<ObstructionVerdict, Error> {
    Ok(match filter {
        FilterId::CoprimeCyclic => coprime_cyclic_filter(c),
        FilterId::Arithmetic => arithmetic_filter(c),
        FilterId::Bmy => pipeline_bmy(c),
        FilterId::Donaldson => donaldson_obstruction_with(c, options)?,
        FilterId::Linking => linking_obstruction(c)
            .unwrap_or_else(|e| ObstructionVerdict::not_applicable(FilterId::Linking, e.to_string())),
        FilterId::SpinSum => spin_sum_obstruction(c),
    })
}

/// Every filter of the chain, in chain order, without short-circuiting.
pub fn screen_all(c: &Configuration, options: &SearchOptions) -> Result<Vec<ObstructionVerdict>, Error> {
    FilterId::CHAIN.iter().map(|&f| run_filter(f, c, options)).collect()
}

/// The chain in the given order, stopping at the first obstruction.
pub fn screen(
    c: &Configuration,
    order: &[FilterId],
    options: &SearchOptions,
) -> Result<Vec<ObstructionVerdict>, Error> {
    let mut out = Vec::new();
    for &f in order {
        let v = run_filter(f, c, options)?;
        let stop = v.is_obstructed();
        out.push(v);
        if stop {
            break;
        }
    }
    Ok(out)
}
