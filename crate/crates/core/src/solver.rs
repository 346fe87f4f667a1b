//! Exact k-vertex-rainbow index.
//!
//! The search ascends the palette size `l` from 0. For each `l` it walks the
//! colorings using exactly `l` colors as restricted-growth strings (so color
//! renamings are visited once) and returns the first one the verifier
//! accepts. Colorings with fewer colors were covered by earlier rounds.
//!
//! Each `k`-subset `S` is reduced up front to its inclusion-minimal
//! connecting sets: the `W` outside `S` for which `S ∪ W` induces a connected
//! subgraph and no proper subset of `W` does. `S` has a rainbow tree under a
//! coloring iff one of these sets is rainbow, and only sets with at most `l`
//! vertices can be. Subsets are tried hardest first (descending Steiner
//! distance), with the most recent failure promoted to the front.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{is_rainbow, RestrictedGrowth, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rainbow::{bfs_tree, exists_rainbow_tree, WitnessTree};
use crate::steiner::{all_steiner_distances, sdiam};
use crate::subsets::subsets_by_size;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub colorings_examined: u64,
    pub subsets_checked: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RvxResult {
    pub k: usize,
    pub value: usize,
    /// First accepting coloring in restricted-growth order; uses exactly
    /// `value` colors.
    pub witness: VertexColoring,
    pub stats: SolveStats,
    /// One rainbow tree per `k`-subset under `witness`, when requested.
    pub certificates: Option<BTreeMap<VertexSet, WitnessTree>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RvxOutcome {
    Exact(RvxResult),
    /// No coloring with at most `max_colors` colors works.
    AboveLimit { k: usize, max_colors: usize, stats: SolveStats },
}

impl RvxOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            RvxOutcome::Exact(r) => Some(r.value),
            RvxOutcome::AboveLimit { .. } => None,
        }
    }

    pub fn stats(&self) -> SolveStats {
        match self {
            RvxOutcome::Exact(r) => r.stats,
            RvxOutcome::AboveLimit { stats, .. } => *stats,
        }
    }

    pub fn into_exact(self) -> Option<RvxResult> {
        match self {
            RvxOutcome::Exact(r) => Some(r),
            RvxOutcome::AboveLimit { .. } => None,
        }
    }
}

pub(crate) fn validate(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.order() {
        return Err(Error::KOutOfRange { k, n: g.order() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

// One k-subset with its minimal connecting sets, smallest first.
struct SubsetTable {
    minimal: Vec<u64>,
    sizes: Vec<u32>,
}

impl SubsetTable {
    fn build(g: &Graph, terminals: VertexSet) -> SubsetTable {
        let mut minimal: Vec<u64> = Vec::new();
        for w in subsets_by_size(g.vertices().difference(terminals)) {
            let bits = w.bits();
            if minimal.iter().any(|&m| m & !bits == 0) {
                continue;
            }
            if g.induces_connected(terminals.union(w)) {
                minimal.push(bits);
            }
        }
        let sizes = minimal.iter().map(|m| m.count_ones()).collect();
        SubsetTable { minimal, sizes }
    }

    fn admits(&self, colors: &[u8], palette: usize) -> bool {
        self.minimal
            .iter()
            .zip(&self.sizes)
            .take_while(|(_, &size)| size as usize <= palette)
            .any(|(&w, _)| is_rainbow(colors, palette, VertexSet::from_bits(w)))
    }
}

/// Builder-style front end for the exact search.
pub struct RvxSolver<'g> {
    graph: &'g Graph,
    k: usize,
    max_colors: Option<usize>,
    certificates: bool,
}

impl<'g> RvxSolver<'g> {
    pub fn new(graph: &'g Graph, k: usize) -> Result<RvxSolver<'g>> {
        validate(graph, k)?;
        Ok(RvxSolver { graph, k, max_colors: None, certificates: false })
    }

    /// Stop once more than `limit` colors would be needed.
    pub fn max_colors(mut self, limit: Option<usize>) -> Self {
        self.max_colors = limit;
        self
    }

    /// Attach a rainbow tree for every `k`-subset to the result.
    pub fn certificates(mut self, on: bool) -> Self {
        self.certificates = on;
        self
    }

    pub fn solve(&self) -> Result<RvxOutcome> {
        let g = self.graph;
        let n = g.order();
        let mut ordered = all_steiner_distances(g, self.k)?;
        // hardest first; the sort is stable so ties stay lexicographic
        ordered.sort_by_key(|&(_, d)| std::cmp::Reverse(d));
        let tables: Vec<SubsetTable> = ordered.iter().map(|&(s, _)| SubsetTable::build(g, s)).collect();

        let mut stats = SolveStats::default();
        let mut hot = 0usize;
        let mut accepts = |colors: &[u8], palette: usize, stats: &mut SolveStats| -> bool {
            stats.colorings_examined += 1;
            stats.subsets_checked += 1;
            if !tables[hot].admits(colors, palette) {
                return false;
            }
            for (i, table) in tables.iter().enumerate() {
                if i == hot {
                    continue;
                }
                stats.subsets_checked += 1;
                if !table.admits(colors, palette) {
                    hot = i;
                    return false;
                }
            }
            true
        };

        let limit = self.max_colors.unwrap_or(n).min(n);
        let mut found: Option<VertexColoring> = None;
        if accepts(&[], 0, &mut stats) {
            found = Some(VertexColoring::empty_palette());
        }
        let mut palette = 1;
        while found.is_none() && palette <= limit {
            let mut rgs = RestrictedGrowth::new(n, palette);
            while rgs.advance() {
                if accepts(rgs.current(), palette, &mut stats) {
                    found = Some(VertexColoring::new(rgs.current().to_vec(), palette)?);
                    break;
                }
            }
            if found.is_none() {
                palette += 1;
            }
        }

        let Some(witness) = found else {
            // only reachable through an explicit limit below n: with n
            // distinct colors every connecting set is rainbow
            return Ok(RvxOutcome::AboveLimit {
                k: self.k,
                max_colors: self.max_colors.unwrap_or(n),
                stats,
            });
        };
        let certificates = if self.certificates {
            let mut map = BTreeMap::new();
            for (s, _) in &ordered {
                let tree = exists_rainbow_tree(g, &witness, *s)?
                    .expect("accepted coloring admits a tree for every subset");
                map.insert(*s, tree);
            }
            Some(map)
        } else {
            None
        };
        Ok(RvxOutcome::Exact(RvxResult {
            k: self.k,
            value: witness.palette(),
            witness,
            stats,
            certificates,
        }))
    }
}

/// Exact `rvx_k(G)`.
pub fn rvx(g: &Graph, k: usize) -> Result<RvxResult> {
    Ok(RvxSolver::new(g, k)?
        .solve()?
        .into_exact()
        .expect("no color limit was set"))
}

/// `rvx_k(G)` with an optional cap on the palette.
pub fn rvx_with_limit(g: &Graph, k: usize, max_colors: Option<usize>) -> Result<RvxOutcome> {
    RvxSolver::new(g, k)?.max_colors(max_colors).solve()
}

/// 0 when every `k`-subset induces a connected subgraph (`sdiam_k = k - 1`),
/// otherwise 1.
pub fn rvx_lower_bound(g: &Graph, k: usize) -> Result<usize> {
    validate(g, k)?;
    Ok(usize::from(sdiam(g, k)? != k - 1))
}

/// A coloring accepted for every `k`: distinct colors on the internal
/// vertices of a breadth-first spanning tree from vertex 0, color 0 on its
/// leaves. Uses at most `n - 2` colors.
pub fn rvx_upper_bound_coloring(g: &Graph) -> Result<VertexColoring> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let tree = Graph::from_edges(n, bfs_tree(g, 0, g.vertices()))?;
    let internal: Vec<usize> = (0..n).filter(|&v| tree.degree(v) >= 2).collect();
    if internal.is_empty() {
        return Ok(VertexColoring::empty_palette());
    }
    let mut colors = vec![0u8; n];
    for (color, &v) in internal.iter().enumerate() {
        colors[v] = color as u8;
    }
    VertexColoring::new(colors, internal.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::rainbow::is_k_rainbow_coloring;

    #[test]
    fn values_on_named_graphs() {
        assert_eq!(rvx(&path(5).unwrap(), 3).unwrap().value, 3);
        assert_eq!(rvx(&complete(5).unwrap(), 3).unwrap().value, 0);
        assert_eq!(rvx(&clique_chain(3).unwrap(), 3).unwrap().value, 3);
        for n in 3..=8 {
            assert_eq!(rvx(&path(n).unwrap(), 2).unwrap().value, n - 2, "P_{n}");
        }
    }

    // Under the literal definition a single color already works: every
    // 3-subset of P_4 or C_5 has a tree with at most one vertex outside it.
    #[test]
    fn literal_values_for_p4_and_c5() {
        assert_eq!(rvx(&path(4).unwrap(), 3).unwrap().value, 1);
        assert_eq!(rvx(&cycle(5).unwrap(), 3).unwrap().value, 1);
    }

    #[test]
    fn witness_and_certificates_are_valid() {
        let g = rose(2, 4).unwrap();
        let outcome = RvxSolver::new(&g, 3).unwrap().certificates(true).solve().unwrap();
        let result = outcome.into_exact().unwrap();
        assert_eq!(result.witness.colors_used(), result.value);
        assert!(is_k_rainbow_coloring(&g, &result.witness, 3).unwrap().is_accepted());
        let certs = result.certificates.unwrap();
        assert_eq!(certs.len(), 35);
        for (s, tree) in &certs {
            assert!(tree.is_valid(&g, &result.witness, *s));
        }
    }

    #[test]
    fn limit_stops_the_search() {
        let p6 = path(6).unwrap();
        let capped = rvx_with_limit(&p6, 2, Some(3)).unwrap();
        assert!(matches!(capped, RvxOutcome::AboveLimit { max_colors: 3, .. }));
        assert_eq!(rvx_with_limit(&p6, 2, Some(4)).unwrap().value(), Some(4));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(rvx_lower_bound(&complete(6).unwrap(), 3).unwrap(), 0);
        assert_eq!(rvx_lower_bound(&path(4).unwrap(), 2).unwrap(), 1);
        assert_eq!(rvx_lower_bound(&path(5).unwrap().complement(), 3).unwrap(), 1);
    }

    #[test]
    fn upper_bound_colorings() {
        let p6 = path(6).unwrap();
        let c = rvx_upper_bound_coloring(&p6).unwrap();
        assert_eq!(c.palette(), 4);
        assert!(is_k_rainbow_coloring(&p6, &c, 2).unwrap().is_accepted());

        assert_eq!(rvx_upper_bound_coloring(&star(6).unwrap()).unwrap().palette(), 1);

        let c6 = cycle(6).unwrap();
        let c = rvx_upper_bound_coloring(&c6).unwrap();
        assert!(c.palette() <= 4);
        for k in 2..=6 {
            assert!(is_k_rainbow_coloring(&c6, &c, k).unwrap().is_accepted());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(rvx(&split, 2), Err(Error::Disconnected)));
        assert!(matches!(rvx(&path(4).unwrap(), 5), Err(Error::KOutOfRange { .. })));
        assert!(matches!(rvx_upper_bound_coloring(&split), Err(Error::Disconnected)));
    }
}
