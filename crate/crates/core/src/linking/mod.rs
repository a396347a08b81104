//! Linking forms on cyclic groups and the connected-sum linking obstruction.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, is_square_unit_mod, Rational};
use crate::catalog::{DualGraph, LinkDescriptor, SingularityType};
use crate::screening::{Configuration, Evidence, FilterId, ObstructionVerdict, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkingError {
    #[error("invalid linking form {value}/{order}")]
    Invalid { order: i64, value: i64 },
    #[error("link of {0} has non-cyclic first homology")]
    NonCyclic(String),
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("no generator found for the plumbing boundary")]
    NoGenerator,
}

/// The form `λ(g,g) = value/order` on `Z/order`, with `value` reduced into
/// `[0, order)`. The trivial group has order 1 and value 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicLinkingForm {
    order: i64,
    value: i64,
}

impl CyclicLinkingForm {
    pub fn new(order: i64, value: i64) -> Result<Self, LinkingError> {
        if order < 1 {
            return Err(LinkingError::Invalid { order, value });
        }
        let value = value.rem_euclid(order);
        if order > 1 && gcd(value, order) != 1 {
            return Err(LinkingError::Invalid { order, value });
        }
        Ok(CyclicLinkingForm { order, value })
    }

    pub fn trivial() -> Self {
        CyclicLinkingForm { order: 1, value: 0 }
    }

    pub fn order(self) -> i64 {
        self.order
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn as_rational(self) -> Rational {
        Rational::new(self.value, self.order).unwrap()
    }

    /// The form of the orientation-reversed manifold.
    pub fn negate(self) -> Self {
        CyclicLinkingForm::new(self.order, -self.value).unwrap()
    }

    /// Same order and `c' = c u^2` for some unit `u`.
    pub fn is_isomorphic(self, other: Self) -> bool {
        if self.order != other.order {
            return false;
        }
        if self.order == 1 {
            return true;
        }
        let n = self.order as i128;
        (1..self.order)
            .filter(|&u| gcd(u, self.order) == 1)
            .any(|u| (self.value as i128 * (u as i128 * u as i128)) % n == other.value as i128)
    }
}

impl fmt::Display for CyclicLinkingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            write!(f, "(0)")
        } else {
            write!(f, "({}/{})", self.value, self.order)
        }
    }
}

/// `(q/p)` on `H_1(L(p,q)) = Z/p`.
pub fn lens_linking_form(p: i64, q: i64) -> Result<CyclicLinkingForm, LinkingError> {
    if p == 1 {
        return Ok(CyclicLinkingForm::trivial());
    }
    if q <= 0 || q >= p {
        return Err(LinkingError::Invalid { order: p, value: q });
    }
    CyclicLinkingForm::new(p, q)
}

/// `(-1/k)` on the homology of `+k` surgery on any knot.
pub fn surgery_linking_form(framing: i64) -> Result<CyclicLinkingForm, LinkingError> {
    if framing < 1 {
        return Err(LinkingError::Invalid { order: framing, value: -1 });
    }
    CyclicLinkingForm::new(framing, -1)
}

/// The form of the boundary of a negative definite plumbing, computed as
/// `x^T (-Q)^{-1} x` on a generator `x` of the cokernel of `Q`.
pub fn graph_linking_form(graph: &DualGraph) -> Result<CyclicLinkingForm, LinkingError> {
    let order = graph.abs_det();
    if order == 1 {
        return Ok(CyclicLinkingForm::trivial());
    }
    let q = graph.intersection_matrix();
    let n = graph.vertex_count();
    let unit = |i: usize| {
        let mut x = vec![0; n];
        x[i] = 1;
        x
    };
    let pairs = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| [(i, j, 1), (i, j, -1)]));
    let candidates = (0..n).map(unit).chain(pairs.map(|(i, j, s)| {
        let mut x = unit(i);
        x[j] = s;
        x
    }));
    for x in candidates {
        let y = solve_negated(&q, &x);
        let class_order = y.iter().fold(1, |acc, v| crate::arith::lcm(acc, v.denom()));
        if class_order == order {
            let lambda = (0..n).fold(Rational::ZERO, |acc, r| acc + y[r] * Rational::from_integer(x[r]));
            let scaled = lambda * Rational::from_integer(order);
            return CyclicLinkingForm::new(order, scaled.numer());
        }
    }
    Err(LinkingError::NoGenerator)
}

/// Solves `(-Q) y = x` by Gaussian elimination; sparse rows stay sparse
/// for trees, so chains cost O(n^2).
fn solve_negated(q: &[Vec<i64>], x: &[i64]) -> Vec<Rational> {
    let n = q.len();
    let mut a: Vec<Vec<Rational>> = q
        .iter()
        .zip(x)
        .map(|(row, &b)| row.iter().map(|&v| Rational::from_integer(-v)).chain([Rational::from_integer(b)]).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("definite matrix is invertible");
        a.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col] / a[col][col];
            let (top, rest) = a.split_at_mut(r);
            for (x, &v) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                if !v.is_zero() {
                    *x = *x - f * v;
                }
            }
        }
    }
    let mut y = vec![Rational::ZERO; n];
    for r in (0..n).rev() {
        let mut acc = a[r][n];
        for j in r + 1..n {
            if !a[r][j].is_zero() {
                acc = acc - a[r][j] * y[j];
            }
        }
        y[r] = acc / a[r][r];
    }
    y
}

/// Composition on the diagonal generator `(1,...,1)` of the sum of cyclic
/// groups of pairwise coprime orders.
pub fn connected_sum_form(forms: &[CyclicLinkingForm]) -> Result<CyclicLinkingForm, LinkingError> {
    for (i, a) in forms.iter().enumerate() {
        for b in &forms[i + 1..] {
            if gcd(a.order, b.order) != 1 {
                return Err(LinkingError::NotCoprime(a.order, b.order));
            }
        }
    }
    let total = forms.iter().fold(Rational::ZERO, |acc, f| acc + f.as_rational());
    let order: i64 = forms.iter().map(|f| f.order).product();
    let value = (total * Rational::from_integer(order)).numer();
    CyclicLinkingForm::new(order, value)
}

/// Linking form of the link of a singularity with cyclic first homology.
pub fn linking_form(t: &SingularityType) -> Result<CyclicLinkingForm, LinkingError> {
    if !t.h1_link.is_cyclic() {
        return Err(LinkingError::NonCyclic(t.species.to_string()));
    }
    match t.link {
        LinkDescriptor::Lens { p, q } => lens_linking_form(p, q),
        // the link is the reverse of +|framing| surgery on a knot
        LinkDescriptor::TrefoilSurgery { framing } => Ok(surgery_linking_form(-framing)?.negate()),
        LinkDescriptor::Tabulated { .. } => graph_linking_form(&t.dual_graph()),
    }
}

/// The reversed links must compose to a form isomorphic to `(-1/N)`.
pub fn linking_obstruction(config: &Configuration) -> Result<ObstructionVerdict, LinkingError> {
    let reversed =
        config.members.iter().map(|m| linking_form(m).map(CyclicLinkingForm::negate)).collect::<Result<Vec<_>, _>>()?;
    let composed = connected_sum_form(&reversed)?;
    let n = composed.order();
    let (residue, square_unit) = if n == 1 {
        (0, true)
    } else {
        let r = (-composed.value()).rem_euclid(n);
        (r, is_square_unit_mod(r, n).expect("composed value is a unit"))
    };
    let outcome = if square_unit { Outcome::Pass } else { Outcome::Obstructed };
    Ok(ObstructionVerdict::new(
        FilterId::Linking,
        outcome,
        Evidence::Linking { order: n, composed: composed.as_rational(), residue, square_unit },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{hj_expand, rat};
    use crate::catalog::lookup;

    fn form(n: i64, c: i64) -> CyclicLinkingForm {
        CyclicLinkingForm::new(n, c).unwrap()
    }

    fn species_form(s: &str) -> CyclicLinkingForm {
        linking_form(&lookup(s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn basic_forms() {
        assert_eq!(lens_linking_form(4, 3).unwrap(), form(4, 3));
        assert_eq!(lens_linking_form(9, 4).unwrap(), form(9, 4));
        assert_eq!(lens_linking_form(1, 0).unwrap(), CyclicLinkingForm::trivial());
        assert_eq!(surgery_linking_form(3).unwrap(), form(3, 2));
        assert_eq!(surgery_linking_form(4).unwrap(), form(4, 3));
        assert_eq!(surgery_linking_form(1).unwrap(), CyclicLinkingForm::trivial());
        assert!(CyclicLinkingForm::new(4, 2).is_err());
    }

    #[test]
    fn composition() {
        assert_eq!(connected_sum_form(&[form(4, 3), form(3, 2)]).unwrap().as_rational(), rat(5, 12));
        assert_eq!(connected_sum_form(&[form(9, 4), form(4, 3)]).unwrap().as_rational(), rat(7, 36));
        assert_eq!(connected_sum_form(&[form(9, 4)]).unwrap(), form(9, 4));
        assert!(connected_sum_form(&[form(4, 1), form(2, 1)]).is_err());
    }

    #[test]
    fn plumbing_route_agrees_with_closed_forms() {
        for p in 2..60 {
            for q in 1..p {
                if gcd(p, q) != 1 {
                    continue;
                }
                let g = DualGraph::chain(hj_expand(p, q).unwrap().coefficients().iter().map(|a| -a).collect());
                assert!(graph_linking_form(&g).unwrap().is_isomorphic(form(p, q)), "L({p},{q})");
            }
        }
        let graph = |s: &str| graph_linking_form(&lookup(s.parse().unwrap()).unwrap().dual_graph()).unwrap();
        assert!(graph("E6").is_isomorphic(species_form("E6")));
        assert!(graph("E7").is_isomorphic(species_form("E7")));
        assert_eq!(graph("E8"), CyclicLinkingForm::trivial());
        assert!(species_form("D5").is_isomorphic(surgery_linking_form(4).unwrap().negate()));
        assert_eq!(species_form("D9(2)").order(), 12);
    }

    #[test]
    fn isomorphism_is_an_equivalence() {
        for n in 1..=50 {
            let forms: Vec<_> = (0..n.max(2)).filter_map(|c| CyclicLinkingForm::new(n, c).ok()).collect();
            for &a in &forms {
                assert!(a.is_isomorphic(a));
                for &b in &forms {
                    assert_eq!(a.is_isomorphic(b), b.is_isomorphic(a));
                    for &c in &forms {
                        if a.is_isomorphic(b) && b.is_isomorphic(c) {
                            assert!(a.is_isomorphic(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn obstruction_examples() {
        for (name, composed, residue) in
            [("K1E6", rat(5, 12), 7), ("A2(1,2)D5", rat(7, 36), 29), ("A2(1,2)E8", rat(4, 9), 5)]
        {
            let v = linking_obstruction(&Configuration::parse(name).unwrap()).unwrap();
            assert_eq!(v.outcome, Outcome::Obstructed, "{name}");
            match v.evidence {
                Evidence::Linking { composed: c, residue: r, .. } => {
                    assert_eq!((c, r), (composed, residue), "{name}");
                }
                other => panic!("{other:?}"),
            }
        }
        for name in ["K1A4", "K5", "A1(1)", "D5(2)", "A2(1,2)E7", "A2(2,2)E8", "E8"] {
            let v = linking_obstruction(&Configuration::parse(name).unwrap()).unwrap();
            assert_eq!(v.outcome, Outcome::Pass, "{name}");
        }
        assert!(linking_obstruction(&Configuration::parse("D8").unwrap()).is_err());
    }
}
