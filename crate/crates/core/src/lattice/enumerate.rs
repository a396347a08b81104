//! Backtracking enumeration of plumbing embeddings up to the signed
//! permutation action on `Z^N`.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{block_edges, LatticeError, PlumbingEmbedding, PlumbingLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of candidate extensions examined before giving up.
    pub budget: u64,
    /// Largest allowed `|weight|`.
    pub max_weight: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 10_000_000, max_weight: 16 }
    }
}

/// Canonical representative of the signed-permutation orbit of a set of
/// vectors: every column is negated so its first nonzero entry is
/// positive, then columns are sorted in decreasing lexicographic order.
pub fn canonical_form(vectors: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = vectors.len();
    let n = vectors.first().map_or(0, Vec::len);
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut col: Vec<i64> = (0..rows).map(|i| vectors[i][j]).collect();
            if col.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                col.iter_mut().for_each(|x| *x = -*x);
            }
            col
        })
        .collect();
    cols.sort_by(|a, b| b.cmp(a));
    (0..rows).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

pub fn enumerate_embeddings(
    lattices: &[PlumbingLattice],
    ambient_rank: usize,
) -> Result<Vec<PlumbingEmbedding>, LatticeError> {
    enumerate_embeddings_with(lattices, ambient_rank, &SearchOptions::default())
}

/// All embeddings of the direct sum of `lattices` into `-Z^N`, one
/// canonical representative per orbit, sorted.
pub fn enumerate_embeddings_with(
    lattices: &[PlumbingLattice],
    ambient_rank: usize,
    options: &SearchOptions,
) -> Result<Vec<PlumbingEmbedding>, LatticeError> {
    let weights: Vec<i64> = lattices.iter().flat_map(|l| l.weights().iter().copied()).collect();
    if let Some(&w) = weights.iter().find(|w| w.abs() > options.max_weight) {
        return Err(LatticeError::WeightBound { weight: w.abs(), bound: options.max_weight });
    }
    if weights.is_empty() {
        return Ok(vec![PlumbingEmbedding { vectors: Vec::new() }]);
    }
    let search = Search::new(&weights, &block_edges(lattices), ambient_rank, options.budget);

    let first = search.order[0];
    let roots: Vec<Vec<i64>> = square_partitions(weights[first].abs(), ambient_rank);
    let found: Vec<BTreeSet<Vec<Vec<i64>>>> = roots
        .par_iter()
        .map(|parts| {
            let mut state = State::new(weights.len(), ambient_rank);
            let mut out = BTreeSet::new();
            if search.tick() {
                let mut v = vec![0; ambient_rank];
                v[..parts.len()].copy_from_slice(parts);
                state.vectors[first] = v;
                search.place(1, parts.len(), &mut state, &mut out);
            }
            out
        })
        .collect();
    if search.exhausted.load(Ordering::Relaxed) {
        return Err(LatticeError::BudgetExhausted(options.budget));
    }
    let all: BTreeSet<Vec<Vec<i64>>> = found.into_iter().flatten().collect();
    Ok(all.into_iter().map(|vectors| PlumbingEmbedding { vectors }).collect())
}

struct Search {
    order: Vec<usize>,
    norms: Vec<i64>,
    adjacent: Vec<Vec<bool>>,
    n: usize,
    budget: u64,
    spent: AtomicU64,
    exhausted: AtomicBool,
}

struct State {
    vectors: Vec<Vec<i64>>,
}

impl State {
    fn new(vertices: usize, n: usize) -> Self {
        State { vectors: vec![vec![0; n]; vertices] }
    }
}

impl Search {
    fn new(weights: &[i64], edges: &[(usize, usize)], n: usize, budget: u64) -> Self {
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(weights[i].abs()));
        let mut adjacent = vec![vec![false; weights.len()]; weights.len()];
        for &(a, b) in edges {
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        Search {
            order,
            norms: weights.iter().map(|w| w.abs()).collect(),
            adjacent,
            n,
            budget,
            spent: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Charges one candidate extension; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        if self.spent.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    /// Places vertex `order[k]`; coordinates `used..n` are still zero in
    /// every placed vector.
    fn place(&self, k: usize, used: usize, state: &mut State, out: &mut BTreeSet<Vec<Vec<i64>>>) {
        if k == self.order.len() {
            out.insert(canonical_form(&state.vectors));
            return;
        }
        let v = self.order[k];
        let placed: Vec<usize> = self.order[..k].to_vec();
        let targets: Vec<i64> = placed.iter().map(|&u| if self.adjacent[u][v] { -1 } else { 0 }).collect();
        // Squared norm of each placed vector on coordinates c..used.
        let mut tails: Vec<Vec<i64>> = placed
            .iter()
            .map(|&u| {
                let mut t = vec![0; used + 1];
                for c in (0..used).rev() {
                    t[c] = t[c + 1] + state.vectors[u][c].pow(2);
                }
                t
            })
            .collect();
        let mut head = vec![0; used];
        let mut partial = vec![0; placed.len()];
        self.fill_head(
            k,
            v,
            used,
            0,
            self.norms[v],
            &placed,
            &targets,
            &mut tails,
            &mut head,
            &mut partial,
            state,
            out,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_head(
        &self,
        k: usize,
        v: usize,
        used: usize,
        c: usize,
        remaining: i64,
        placed: &[usize],
        targets: &[i64],
        tails: &mut [Vec<i64>],
        head: &mut [i64],
        partial: &mut [i64],
        state: &mut State,
        out: &mut BTreeSet<Vec<Vec<i64>>>,
    ) {
        if !self.tick() {
            return;
        }
        // Cauchy-Schwarz: the unfilled head coordinates must still be able
        // to reach every target dot product.
        for (j, _) in placed.iter().enumerate() {
            let gap = targets[j] - partial[j];
            if gap * gap > remaining * tails[j][c] {
                return;
            }
        }
        if c == used {
            for parts in square_partitions(remaining, self.n - used) {
                if !self.tick() {
                    return;
                }
                let mut vec = vec![0; self.n];
                vec[..used].copy_from_slice(head);
                vec[used..used + parts.len()].copy_from_slice(&parts);
                state.vectors[v] = vec;
                self.place(k + 1, used + parts.len(), state, out);
            }
            state.vectors[v] = vec![0; self.n];
            return;
        }
        let bound = isqrt(remaining);
        for x in -bound..=bound {
            head[c] = x;
            for (j, &u) in placed.iter().enumerate() {
                partial[j] += x * state.vectors[u][c];
            }
            self.fill_head(k, v, used, c + 1, remaining - x * x, placed, targets, tails, head, partial, state, out);
            for (j, &u) in placed.iter().enumerate() {
                partial[j] -= x * state.vectors[u][c];
            }
        }
        head[c] = 0;
    }
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Non-increasing sequences of positive integers with squares summing to
/// `n` and at most `slots` terms.
fn square_partitions(n: i64, slots: usize) -> Vec<Vec<i64>> {
    fn go(n: i64, max: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let mut a = isqrt(n).min(max);
        while a >= 1 {
            // The remaining slots cannot hold more than slots * a^2.
            if (slots as i64) * a * a < n {
                break;
            }
            cur.push(a);
            go(n - a * a, a, slots - 1, cur, out);
            cur.pop();
            a -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, i64::MAX, slots, &mut Vec::new(), &mut out);
    out
}
