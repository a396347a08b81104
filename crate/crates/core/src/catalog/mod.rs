//! Registry of quotient-singularity species and imported classification
//! lists.

mod data;
mod graph;
mod species;

pub use data::{
    format_multiset, parse_multiset, ImportedClassification, GORENSTEIN_K_NONZERO, GORENSTEIN_K_ZERO,
    LOG_DEL_PEZZO_INDEX2, REALIZABLE_INDEX1, REALIZABLE_INDEX2, REALIZABLE_INDEX3,
};
pub use graph::DualGraph;
pub use species::Species;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{hj_expand, rat, Rational};
use crate::floer::{trefoil_surgery_spin_d, LensSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameter out of range for {0}")]
    OutOfRange(String),
    #[error("cannot parse singularity token {0:?}")]
    Parse(String),
    #[error("the correction term of {0} is not defined")]
    UnsetCorrection(String),
}

/// First homology of the link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum H1Group {
    Cyclic(i64),
    Z2xZ2,
    Z6xZ2,
}

impl H1Group {
    pub fn order(self) -> i64 {
        match self {
            H1Group::Cyclic(n) => n,
            H1Group::Z2xZ2 => 4,
            H1Group::Z6xZ2 => 12,
        }
    }

    pub fn is_cyclic(self) -> bool {
        matches!(self, H1Group::Cyclic(_))
    }
}

impl fmt::Display for H1Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Group::Cyclic(n) => write!(f, "Z{n}"),
            H1Group::Z2xZ2 => write!(f, "Z2+Z2"),
            H1Group::Z6xZ2 => write!(f, "Z6+Z2"),
        }
    }
}

/// How the link of the singularity is described.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum LinkDescriptor {
    Lens {
        p: i64,
        q: i64,
    },
    /// Surgery with this (negative) framing on the left-handed trefoil,
    /// equivalently the reverse of `-framing` surgery on the right-handed one.
    TrefoilSurgery {
        framing: i64,
    },
    Tabulated {
        name: String,
    },
}

impl LinkDescriptor {
    pub fn lens(&self) -> Option<LensSpace> {
        match *self {
            LinkDescriptor::Lens { p, q } => Some(LensSpace::new(p, q).expect("catalog lens is valid")),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SingularityType {
    pub species: Species,
    pub index: u32,
    pub det_r: i64,
    pub group_order: i64,
    pub curve_count: u32,
    dp_square: Option<Rational>,
    pub h1_link: H1Group,
    pub link: LinkDescriptor,
}

impl SingularityType {
    /// The correction `D_p^2`; undefined for `D4(1)` and `D4(2)`.
    pub fn dp_square(&self) -> Result<Rational, CatalogError> {
        self.dp_square.ok_or_else(|| CatalogError::UnsetCorrection(self.species.to_string()))
    }

    pub fn dual_graph(&self) -> DualGraph {
        dual_graph(self.species)
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.species.fmt(f)
    }
}

/// Minimal-resolution dual graph of a species.
pub fn dual_graph(species: Species) -> DualGraph {
    let from_lens = |p: i64, q: i64| {
        DualGraph::chain(hj_expand(p, q).expect("valid lens").coefficients().iter().map(|a| -a).collect())
    };
    match species {
        Species::A(n) => DualGraph::chain(vec![-2; n as usize]),
        Species::D(n) => DualGraph::chain_with_branch(vec![-2; n as usize - 1], n as usize - 3, -2),
        Species::E(n) => DualGraph::chain_with_branch(vec![-2; n as usize - 1], 2, -2),
        Species::K(1) => DualGraph::chain(vec![-4]),
        Species::K(n) => {
            let mut w = vec![-2; n as usize];
            w[0] = -3;
            w[n as usize - 1] = -3;
            DualGraph::chain(w)
        }
        Species::D1(4) => DualGraph::chain_with_branch(vec![-2, -3, -2], 1, -2),
        Species::D1(n) => {
            let mut w = vec![-2; n as usize - 1];
            w[1] = -3;
            DualGraph::chain_with_branch(w, n as usize - 3, -2)
        }
        Species::D2(n) => {
            let mut w = vec![-2; n as usize - 1];
            w[0] = -4;
            DualGraph::chain_with_branch(w, n as usize - 3, -2)
        }
        other => {
            let (p, q) = cyclic_index3_link(other).expect("cyclic index-three species");
            from_lens(p, q)
        }
    }
}

fn cyclic_index3_link(species: Species) -> Option<(i64, i64)> {
    let n = |k: u32| k as i64;
    Some(match species {
        Species::A1One => (3, 1),
        Species::A1Two => (6, 1),
        Species::A11(k) => (9 * n(k) - 15, 6 * n(k) - 11),
        Species::A12(k) => (9 * n(k) - 9, 6 * n(k) - 7),
        Species::A22(k) => (9 * n(k) - 3, 3 * n(k) - 2),
        _ => return None,
    })
}

pub fn lookup(species: Species) -> Result<SingularityType, CatalogError> {
    let species = species.validate()?;
    let graph = dual_graph(species);
    let curve_count = graph.vertex_count() as u32;
    let (det_r, group_order, dp_square, h1_link, link) = match species {
        Species::A(n) => {
            let p = n as i64 + 1;
            (p, p, Some(Rational::ZERO), H1Group::Cyclic(p), LinkDescriptor::Lens { p, q: p - 1 })
        }
        Species::D(n) => {
            let h1 = if n % 2 == 0 { H1Group::Z2xZ2 } else { H1Group::Cyclic(4) };
            let link = LinkDescriptor::Tabulated { name: species.to_string() };
            (4, 4 * (n as i64 - 2), Some(Rational::ZERO), h1, link)
        }
        Species::E(n) => {
            let (det, order) = match n {
                6 => (3, 24),
                7 => (2, 48),
                _ => (1, 120),
            };
            let link = LinkDescriptor::TrefoilSurgery { framing: n as i64 - 9 };
            (det, order, Some(Rational::ZERO), H1Group::Cyclic(det), link)
        }
        Species::K(n) => {
            let p = 4 * n as i64;
            let link = LinkDescriptor::Lens { p, q: 2 * n as i64 - 1 };
            (p, p, Some(rat(-1, 1)), H1Group::Cyclic(p), link)
        }
        Species::D1(n) | Species::D2(n) => {
            let h1 = if n % 2 == 0 { H1Group::Z6xZ2 } else { H1Group::Cyclic(12) };
            let dp = match (species, n) {
                (_, 4) => None,
                (Species::D1(_), _) => Some(rat(-2, 3)),
                _ => Some(rat(-4, 3)),
            };
            let link = LinkDescriptor::Tabulated { name: species.to_string() };
            (12, graph.group_order(), dp, h1, link)
        }
        other => {
            let (p, q) = cyclic_index3_link(other).expect("cyclic index-three species");
            let dp = match other {
                Species::A1One => rat(-1, 3),
                Species::A11(_) => rat(-4, 3),
                Species::A12(_) => rat(-2, 1),
                _ => rat(-8, 3),
            };
            (p, p, Some(dp), H1Group::Cyclic(p), LinkDescriptor::Lens { p, q })
        }
    };
    Ok(SingularityType { species, index: species.index(), det_r, group_order, curve_count, dp_square, h1_link, link })
}

/// Spin d-invariants of a link, or the absence of usable data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SpinData {
    /// Sorted, without repetition.
    Available(Vec<Rational>),
    Unavailable,
}

/// The set of d-invariants of the link over its spin structures.
pub fn spin_d_invariants(t: &SingularityType) -> SpinData {
    let mut values: Vec<Rational> = match (&t.link, t.species) {
        (LinkDescriptor::Lens { .. }, _) => t.link.lens().unwrap().spin_d().into_iter().map(|(_, d)| d).collect(),
        (LinkDescriptor::TrefoilSurgery { framing }, _) => {
            // the link is the reverse of +|framing| surgery on the right-handed trefoil
            trefoil_surgery_spin_d(-framing, 1)
                .expect("positive integral surgery")
                .into_iter()
                .map(|(_, d)| -d)
                .collect()
        }
        (_, Species::D(n)) => {
            let n = n as i64;
            let mut v = vec![rat(n, 4), rat(n - 4, 4)];
            if n % 2 == 0 {
                // all four spin^c structures of a Z2+Z2 link are spin
                v.push(Rational::ZERO);
            }
            v
        }
        (_, Species::D2(9)) => vec![rat(5, 4), rat(9, 4)],
        _ => return SpinData::Unavailable,
    };
    values.sort();
    values.dedup();
    SpinData::Available(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SingularityType {
        lookup(s.parse().unwrap()).unwrap()
    }

    fn spin(s: &str) -> Vec<Rational> {
        match spin_d_invariants(&t(s)) {
            SpinData::Available(v) => v,
            SpinData::Unavailable => panic!("no spin data for {s}"),
        }
    }

    #[test]
    fn lookup_examples() {
        let k2 = t("K2");
        assert_eq!((k2.det_r, k2.group_order), (8, 8));
        assert_eq!(k2.dp_square().unwrap(), rat(-1, 1));
        assert_eq!(k2.link, LinkDescriptor::Lens { p: 8, q: 3 });
        let a4 = t("A4");
        assert_eq!((a4.det_r, a4.group_order), (5, 5));
        assert_eq!(a4.link, LinkDescriptor::Lens { p: 5, q: 4 });
        let a6 = t("A6(2,2)");
        assert_eq!(a6.det_r, 51);
        assert_eq!(a6.link, LinkDescriptor::Lens { p: 51, q: 16 });
        assert!(lookup(Species::D(3)).is_err());
        assert!(lookup(Species::A12(1)).is_err());
    }

    #[test]
    fn determinant_matches_link_homology() {
        let mut all: Vec<Species> = Vec::new();
        for n in 1..15 {
            all.push(Species::A(n));
            all.push(Species::K(n));
        }
        for n in 4..15 {
            all.extend([Species::D(n), Species::D1(n), Species::D2(n)]);
        }
        for n in 2..15 {
            all.extend([Species::A12(n), Species::A22(n)]);
        }
        for n in 3..15 {
            all.push(Species::A11(n));
        }
        all.extend([Species::E(6), Species::E(7), Species::E(8), Species::A1One, Species::A1Two]);
        for s in all {
            let ty = lookup(s).unwrap();
            assert_eq!(ty.dual_graph().abs_det(), ty.det_r, "{s}");
            assert_eq!(ty.h1_link.order(), ty.det_r, "{s}");
            if let Some(l) = ty.link.lens() {
                assert_eq!(l.p, ty.det_r, "{s}");
            }
            if ty.index == 3 && !matches!(s, Species::D1(_) | Species::D2(_)) {
                let expected = match s {
                    Species::A11(n) | Species::A12(n) | Species::A22(n) => n,
                    _ => 1,
                };
                assert_eq!(ty.curve_count, expected, "{s}");
            }
        }
    }

    #[test]
    fn index_three_dihedral_orders() {
        assert_eq!(t("D4(1)").group_order, 24);
        assert!(t("D4(1)").dp_square().is_err());
        assert!(t("D4(2)").dp_square().is_err());
        for n in 5..20 {
            assert_eq!(lookup(Species::D1(n)).unwrap().group_order, 12 * (3 * n as i64 - 10));
        }
        for n in 4..20 {
            assert_eq!(lookup(Species::D2(n)).unwrap().group_order, 12 * (3 * n as i64 - 8));
        }
        assert_eq!(t("D6(1)").h1_link, H1Group::Z6xZ2);
        assert_eq!(t("D9(2)").h1_link, H1Group::Cyclic(12));
        assert_eq!(t("D5(1)").curve_count, 5);
    }

    #[test]
    fn spin_sets() {
        assert_eq!(spin("K1"), vec![rat(-3, 4), rat(1, 4)]);
        assert_eq!(spin("E8"), vec![rat(2, 1)]);
        assert_eq!(spin("E7"), vec![rat(1, 4), rat(7, 4)]);
        assert_eq!(spin("E6"), vec![rat(3, 2)]);
        assert_eq!(spin("A2"), vec![rat(1, 2)]);
        assert_eq!(spin("D5"), vec![rat(1, 4), rat(5, 4)]);
        assert_eq!(spin("D9(2)"), vec![rat(5, 4), rat(9, 4)]);
        assert_eq!(spin("A1(2)"), vec![rat(-5, 4), rat(1, 4)]);
        assert_eq!(spin_d_invariants(&t("D5(2)")), SpinData::Unavailable);
        assert_eq!(spin_d_invariants(&t("D7(1)")), SpinData::Unavailable);
    }

    #[test]
    fn closed_forms_for_a_and_k() {
        for n in 1..=50i64 {
            let a = spin(&format!("A{n}"));
            let expected = if n % 2 == 1 { vec![rat(-1, 4), rat(n, 4)] } else { vec![rat(n, 4)] };
            let mut expected = expected;
            expected.sort();
            expected.dedup();
            assert_eq!(a, expected, "A{n}");
            let k = spin(&format!("K{n}"));
            let expected = if n % 2 == 1 { vec![rat(-3, 4), rat(1, 4)] } else { vec![rat(-1, 4)] };
            assert_eq!(k, expected, "K{n}");
        }
    }
}
