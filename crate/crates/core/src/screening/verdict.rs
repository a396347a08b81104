use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::catalog::Species;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Obstructed,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Obstructed => "OBSTRUCTED",
            Outcome::NotApplicable => "N/A",
        })
    }
}

/// The filters of the screening chain, in their default order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterId {
    CoprimeCyclic,
    Arithmetic,
    Bmy,
    Donaldson,
    Linking,
    SpinSum,
}

impl FilterId {
    pub const CHAIN: [FilterId; 6] = [
        FilterId::CoprimeCyclic,
        FilterId::Arithmetic,
        FilterId::Bmy,
        FilterId::Donaldson,
        FilterId::Linking,
        FilterId::SpinSum,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FilterId::CoprimeCyclic => "coprime/cyclic",
            FilterId::Arithmetic => "D square",
            FilterId::Bmy => "BMY",
            FilterId::Donaldson => "Donaldson",
            FilterId::Linking => "linking",
            FilterId::SpinSum => "spin d",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedFactor {
    pub a: Species,
    pub b: Species,
    pub gcd: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCyclicLink {
    pub member: Species,
    pub h1: String,
}

/// One embedding orbit and its orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitWitness {
    /// Plumbing weights of every vertex, in the order of `vectors`.
    pub weights: Vec<i64>,
    /// Edges between vertices, by position in `vectors`.
    pub edges: Vec<(usize, usize)>,
    pub vectors: Vec<Vec<i64>>,
    pub generator: Vec<i64>,
    pub square: i64,
}

/// Filter-specific data that lets a verdict be re-checked on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    None,
    Coprimality { shared: Vec<SharedFactor>, non_cyclic: Vec<NonCyclicLink> },
    Determinant { k2: Rational, d: Rational, factored: String },
    Bmy { k2: Rational, e_orb: Rational, three_e_orb: Rational, anti_ample_possible: bool },
    Embedding { ambient_rank: usize, required_square: i64, orbits: Vec<OrbitWitness> },
    Linking { order: i64, composed: Rational, residue: i64, square_unit: bool },
    SpinSums { sums: Vec<Rational> },
    Missing { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub filter: FilterId,
    pub outcome: Outcome,
    pub evidence: Evidence,
}

impl ObstructionVerdict {
    pub fn new(filter: FilterId, outcome: Outcome, evidence: Evidence) -> Self {
        ObstructionVerdict { filter, outcome, evidence }
    }

    pub fn not_applicable(filter: FilterId, reason: impl Into<String>) -> Self {
        ObstructionVerdict::new(filter, Outcome::NotApplicable, Evidence::Missing { reason: reason.into() })
    }

    pub fn is_obstructed(&self) -> bool {
        self.outcome == Outcome::Obstructed
    }
}
