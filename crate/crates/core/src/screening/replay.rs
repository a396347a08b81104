//! Standalone re-checking of the evidence attached to a verdict.

use crate::arith::{gcd, is_perfect_square, is_square_unit_mod, rat, Rational};
use crate::catalog::{spin_d_invariants, SpinData};
use crate::floer::{all_sums, SPIN_SUM_TARGET};
use crate::lattice::{content, dot};
use crate::linking::{connected_sum_form, linking_form, CyclicLinkingForm};

use super::{factor_rational, Configuration, Evidence, FilterId, ObstructionVerdict, OrbitWitness, Outcome};

/// Whether the verdict's evidence is internally consistent and agrees
/// with the configuration, and whether it supports the stated outcome.
/// Embedding evidence is checked orbit by orbit without repeating the
/// search.
pub fn replay(config: &Configuration, verdict: &ObstructionVerdict) -> bool {
    let outcome = verdict.outcome;
    match (&verdict.filter, &verdict.evidence) {
        (_, Evidence::Missing { .. }) => outcome == Outcome::NotApplicable,
        (FilterId::CoprimeCyclic, Evidence::Coprimality { shared, non_cyclic }) => {
            let members = config.species();
            let det = |s| config.members.iter().find(|m| m.species == s).map(|m| m.det_r);
            let shared_ok = shared.iter().all(|f| {
                members.contains(&f.a)
                    && members.contains(&f.b)
                    && det(f.a).zip(det(f.b)).is_some_and(|(x, y)| gcd(x, y) == f.gcd && f.gcd > 1)
            });
            let cyclic_ok = non_cyclic
                .iter()
                .all(|n| config.members.iter().any(|m| m.species == n.member && !m.h1_link.is_cyclic()));
            let bad = !shared.is_empty() || !non_cyclic.is_empty();
            shared_ok && cyclic_ok && bad == (outcome == Outcome::Obstructed)
        }
        (FilterId::Arithmetic, Evidence::Determinant { k2, d, factored }) => {
            let square = d.is_integer() && d.numer() > 0 && is_perfect_square(d.numer());
            *k2 == config.k2
                && *d == *k2 * Rational::from_integer(config.h1_product)
                && *factored == factor_rational(*d)
                && square == (outcome == Outcome::Pass)
        }
        (FilterId::Bmy, Evidence::Bmy { k2, e_orb, three_e_orb, anti_ample_possible }) => {
            let obstructed =
                *e_orb < Rational::ZERO || (!anti_ample_possible && *k2 > Rational::ZERO && k2 > three_e_orb);
            *k2 == config.k2
                && *e_orb == config.e_orb
                && *three_e_orb == Rational::from_integer(3) * *e_orb
                && obstructed == (outcome == Outcome::Obstructed)
        }
        (FilterId::Donaldson, Evidence::Embedding { ambient_rank, required_square, orbits }) => {
            *required_square == -config.h1_product
                && orbits.iter().all(|o| orbit_ok(o, *ambient_rank))
                && orbits.iter().any(|o| o.square == *required_square) == (outcome == Outcome::Pass)
        }
        (FilterId::Linking, Evidence::Linking { order, composed, residue, square_unit }) => {
            let forms: Option<Vec<CyclicLinkingForm>> =
                config.members.iter().map(|m| linking_form(m).ok().map(CyclicLinkingForm::negate)).collect();
            let Some(Ok(c)) = forms.map(|f| connected_sum_form(&f)) else { return false };
            let unit = if *order == 1 { true } else { is_square_unit_mod(*residue, *order).unwrap_or(false) };
            c.order() == *order
                && c.as_rational() == *composed
                && (*order == 1 || *residue == (-c.value()).rem_euclid(*order))
                && unit == *square_unit
                && unit == (outcome == Outcome::Pass)
        }
        (FilterId::SpinSum, Evidence::SpinSums { sums }) => {
            let sets: Option<Vec<Vec<Rational>>> = config
                .members
                .iter()
                .map(|m| match spin_d_invariants(m) {
                    SpinData::Available(v) => Some(v),
                    SpinData::Unavailable => None,
                })
                .collect();
            let Some(sets) = sets else { return false };
            let hit = sums.contains(&rat(SPIN_SUM_TARGET.0, SPIN_SUM_TARGET.1));
            all_sums(&sets) == *sums && hit == (outcome == Outcome::Pass)
        }
        _ => false,
    }
}

fn orbit_ok(o: &OrbitWitness, n: usize) -> bool {
    let m = o.weights.len();
    if o.vectors.len() != m || o.vectors.iter().any(|v| v.len() != n) || o.generator.len() != n {
        return false;
    }
    let adjacent = |i: usize, j: usize| o.edges.contains(&(i, j)) || o.edges.contains(&(j, i));
    let gram_ok = (0..m).all(|i| {
        (0..m).all(|j| {
            let want = if i == j {
                o.weights[i]
            } else if adjacent(i, j) {
                1
            } else {
                0
            };
            -dot(&o.vectors[i], &o.vectors[j]) == want
        })
    });
    let orthogonal = o.vectors.iter().all(|v| dot(v, &o.generator) == 0);
    let primitive = content(&o.generator.iter().map(|&x| x as i128).collect::<Vec<_>>()) == 1;
    gram_ok && orthogonal && primitive && -dot(&o.generator, &o.generator) == o.square
}
