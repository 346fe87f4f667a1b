//! Steiner distance, Steiner k-eccentricity and Steiner k-diameter.
//!
//! The distance `d(S)` is the least number of edges in a connected subgraph
//! containing `S`. It is computed with the terminal-subset dynamic program
//! over states `(vertex, covered terminals)`: a split step merges two trees
//! rooted at the same vertex, a grow step extends a tree along a shortest
//! path.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::k_subsets;

/// Largest terminal set the DP accepts (its table has `2^|S|` rows).
pub const MAX_TERMINALS: usize = 20;

/// A validated terminal set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteinerQuery {
    terminals: VertexSet,
}

impl SteinerQuery {
    pub fn new(g: &Graph, terminals: VertexSet) -> Result<SteinerQuery> {
        if let Some(v) = terminals.difference(g.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
        if terminals.len() < 2 {
            return Err(Error::TooFewTerminals(terminals.len()));
        }
        Ok(SteinerQuery { terminals })
    }

    pub fn terminals(&self) -> VertexSet {
        self.terminals
    }
}

/// All-pairs shortest path lengths; errors when `g` is disconnected.
pub(crate) fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let dist: Vec<Vec<usize>> = (0..g.order()).map(|v| g.distances_from(v)).collect();
    if dist[0].contains(&usize::MAX) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.order() {
        return Err(Error::KOutOfRange { k, n: g.order() });
    }
    Ok(())
}

// DP on a precomputed distance matrix. Terminals are taken in ascending
// vertex order.
pub(crate) fn steiner_distance_with(dist: &[Vec<usize>], terminals: VertexSet) -> usize {
    let n = dist.len();
    let terms = terminals.to_vec();
    let k = terms.len();
    debug_assert!((2..=MAX_TERMINALS).contains(&k));
    if k == 2 {
        return dist[terms[0]][terms[1]];
    }
    let full = (1usize << k) - 1;
    let mut dp = vec![vec![usize::MAX; n]; full + 1];
    for (i, &t) in terms.iter().enumerate() {
        dp[1 << i].clone_from(&dist[t]);
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut row = vec![usize::MAX; n];
        // proper non-empty submasks containing the lowest bit of `mask`
        let low = mask & mask.wrapping_neg();
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if sub & low != 0 {
                let (a, b) = (&dp[sub], &dp[mask ^ sub]);
                for v in 0..n {
                    row[v] = row[v].min(a[v].saturating_add(b[v]));
                }
            }
            sub = (sub - 1) & mask;
        }
        let grown: Vec<usize> = (0..n)
            .map(|v| (0..n).map(|u| row[u].saturating_add(dist[u][v])).min().unwrap_or(usize::MAX))
            .collect();
        dp[mask] = grown;
    }
    dp[full][terms[0]]
}

/// Minimum number of edges of a connected subgraph of `g` containing `terminals`.
pub fn steiner_distance(g: &Graph, terminals: VertexSet) -> Result<usize> {
    let query = SteinerQuery::new(g, terminals)?;
    if query.terminals.len() > MAX_TERMINALS {
        return Err(Error::TooLarge {
            what: "steiner_distance terminal set",
            max: MAX_TERMINALS,
            n: query.terminals.len(),
        });
    }
    let dist = distance_matrix(g)?;
    Ok(steiner_distance_with(&dist, query.terminals))
}

/// `d(S)` for every `k`-subset `S`, in lexicographic order of `S`.
pub fn all_steiner_distances(g: &Graph, k: usize) -> Result<Vec<(VertexSet, usize)>> {
    check_k(g, k)?;
    if k > MAX_TERMINALS {
        return Err(Error::TooLarge { what: "steiner_distance terminal set", max: MAX_TERMINALS, n: k });
    }
    let dist = distance_matrix(g)?;
    Ok(k_subsets(g.order(), k)
        .map(|s| (s, steiner_distance_with(&dist, s)))
        .collect())
}

/// Largest `d(S)` over `k`-subsets `S` containing `v`.
pub fn steiner_eccentricity(g: &Graph, k: usize, v: usize) -> Result<usize> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    Ok(all_steiner_distances(g, k)?
        .into_iter()
        .filter(|(s, _)| s.contains(v))
        .map(|(_, d)| d)
        .max()
        .expect("some k-subset contains v"))
}

/// Steiner `k`-diameter: the largest `d(S)` over all `k`-subsets.
pub fn sdiam(g: &Graph, k: usize) -> Result<usize> {
    Ok(all_steiner_distances(g, k)?
        .into_iter()
        .map(|(_, d)| d)
        .max()
        .expect("at least one k-subset"))
}
