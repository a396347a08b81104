use serde::Serialize;

use crate::arith::{det_bareiss, hj_value, ContinuedFraction, Rational};

/// A weighted tree of rational curves: vertex self-intersections (all
/// negative) and undirected edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub weights: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    /// A linear chain with the given (negative) weights.
    pub fn chain(weights: Vec<i64>) -> Self {
        let edges = (1..weights.len()).map(|i| (i - 1, i)).collect();
        DualGraph { weights, edges }
    }

    /// A chain with one extra vertex of weight `branch_weight` attached to
    /// chain vertex `at`.
    pub fn chain_with_branch(chain: Vec<i64>, at: usize, branch_weight: i64) -> Self {
        let mut g = DualGraph::chain(chain);
        let v = g.weights.len();
        g.weights.push(branch_weight);
        g.edges.push((at, v));
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    /// The intersection matrix: weights on the diagonal, 1 on edges.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.weights.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &w) in self.weights.iter().enumerate() {
            m[i][i] = w;
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// `|det|` of the intersection matrix, which is `|H_1|` of the boundary.
    pub fn abs_det(&self) -> i64 {
        let m: Vec<Vec<i128>> =
            self.intersection_matrix().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        let d = det_bareiss(&m).expect("dual graph determinant fits in i128");
        i64::try_from(d.abs()).expect("dual graph determinant fits in i64")
    }

    /// Order of the local fundamental group of the singularity.
    ///
    /// Chains are cyclic quotients, so the order is the determinant. For a
    /// star with one trivalent vertex the order is `4|e| / chi^2`, where `e`
    /// is the orbifold Euler number and `chi` the orbifold Euler
    /// characteristic of the base.
    pub fn group_order(&self) -> i64 {
        let centre = (0..self.vertex_count()).find(|&v| self.neighbours(v).len() >= 3);
        let Some(c) = centre else {
            return self.abs_det();
        };
        assert_eq!(self.neighbours(c).len(), 3, "only three-armed stars are supported");
        let mut e = Rational::from_integer(self.weights[c]);
        let mut chi = Rational::from_integer(-1);
        for start in self.neighbours(c) {
            let arm = self.arm_from(c, start);
            let cf = ContinuedFraction::new(arm).expect("arm weights are at most -2");
            let (alpha, beta) = hj_value(&cf).expect("small arm");
            e = e + Rational::new(beta, alpha).unwrap();
            chi = chi + Rational::new(1, alpha).unwrap();
        }
        let order = Rational::from_integer(4) * Rational::new(e.numer().abs(), e.denom()).unwrap() / (chi * chi);
        assert!(order.is_integer(), "star group order must be integral");
        order.numer()
    }

    /// Negated weights along the arm leaving `centre` through `start`.
    fn arm_from(&self, centre: usize, start: usize) -> Vec<i64> {
        let mut out = vec![-self.weights[start]];
        let (mut prev, mut cur) = (centre, start);
        loop {
            let next: Vec<usize> = self.neighbours(cur).into_iter().filter(|&v| v != prev).collect();
            match next.as_slice() {
                [] => return out,
                [v] => {
                    out.push(-self.weights[*v]);
                    (prev, cur) = (cur, *v);
                }
                _ => panic!("arm branches again"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn(n: usize) -> DualGraph {
        DualGraph::chain_with_branch(vec![-2; n - 1], n - 3, -2)
    }

    fn en(n: usize) -> DualGraph {
        DualGraph::chain_with_branch(vec![-2; n - 1], 2, -2)
    }

    #[test]
    fn chain_determinant() {
        assert_eq!(DualGraph::chain(vec![-2; 8]).abs_det(), 9);
        assert_eq!(DualGraph::chain(vec![-3, -3]).abs_det(), 8);
        assert_eq!(DualGraph::chain(vec![-2, -2, -2]).group_order(), 4);
    }

    #[test]
    fn gorenstein_star_orders() {
        for n in 4..20 {
            assert_eq!(dn(n).abs_det(), 4);
            assert_eq!(dn(n).group_order(), 4 * (n as i64 - 2));
        }
        assert_eq!((en(6).abs_det(), en(6).group_order()), (3, 24));
        assert_eq!((en(7).abs_det(), en(7).group_order()), (2, 48));
        assert_eq!((en(8).abs_det(), en(8).group_order()), (1, 120));
    }
}
