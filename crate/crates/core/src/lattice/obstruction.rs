use super::{
    block_edges, complement_witness, enumerate_embeddings_with, plumbing_for_reversed_link, LatticeError,
    PlumbingLattice, SearchOptions,
};
use crate::screening::{Configuration, Evidence, FilterId, ObstructionVerdict, OrbitWitness, Outcome};

pub fn donaldson_obstruction(config: &Configuration) -> Result<ObstructionVerdict, LatticeError> {
    donaldson_obstruction_with(config, &SearchOptions::default())
}

/// Embeds the plumbings bounded by the reversed links into `-Z^(n+1)` and
/// asks whether some orbit has a complement of square `-prod det`.
/// Configurations with a non-lens link are not applicable.
pub fn donaldson_obstruction_with(
    config: &Configuration,
    options: &SearchOptions,
) -> Result<ObstructionVerdict, LatticeError> {
    if let Some(m) = config.members.iter().find(|m| m.link.lens().is_none()) {
        return Ok(ObstructionVerdict::not_applicable(
            FilterId::Donaldson,
            format!("{} has a non-lens link", m.species),
        ));
    }
    let lattices: Vec<PlumbingLattice> =
        config.members.iter().map(plumbing_for_reversed_link).collect::<Result<_, _>>()?;
    let weights: Vec<i64> = lattices.iter().flat_map(|l| l.weights().iter().copied()).collect();
    let edges = block_edges(&lattices);
    let ambient_rank = weights.len() + 1;
    let required_square = -config.h1_product;
    let embeddings = enumerate_embeddings_with(&lattices, ambient_rank, options)?;
    let orbits = embeddings
        .iter()
        .map(|e| {
            complement_witness(e).map(|w| OrbitWitness {
                weights: weights.clone(),
                edges: edges.clone(),
                vectors: e.vectors.clone(),
                generator: w.generator,
                square: w.square,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let outcome = if orbits.iter().any(|o| o.square == required_square) { Outcome::Pass } else { Outcome::Obstructed };
    Ok(ObstructionVerdict::new(
        FilterId::Donaldson,
        outcome,
        Evidence::Embedding { ambient_rank, required_square, orbits },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(s: &str) -> ObstructionVerdict {
        donaldson_obstruction(&Configuration::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn realizable_configurations_pass() {
        for s in ["A4", "A2A1", "A1", "K5", "K1A4", "K1", "A2(1,2)A4", "A1(1)"] {
            assert_eq!(verdict(s).outcome, Outcome::Pass, "{s}");
        }
    }

    #[test]
    fn obstructed_examples() {
        for s in ["A8", "A7", "K9", "K8", "K1A8"] {
            assert_eq!(verdict(s).outcome, Outcome::Obstructed, "{s}");
        }
    }

    #[test]
    fn non_lens_is_not_applicable() {
        assert_eq!(verdict("E8").outcome, Outcome::NotApplicable);
        assert_eq!(verdict("D5(2)").outcome, Outcome::NotApplicable);
    }
}
