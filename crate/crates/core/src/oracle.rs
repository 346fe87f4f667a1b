//! Brute-force reference for the exact solver.
//!
//! Shares nothing with the solver's search: it enumerates every subtree of
//! the graph edge set by edge set, and every coloring over a palette of `l`
//! colors without symmetry reduction.

use std::collections::HashSet;

use crate::coloring::{is_rainbow, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::validate;
use crate::subsets::k_subsets;

pub const ORACLE_MAX_ORDER: usize = 7;

/// Vertex sets of all subtrees of `g` with at least one edge.
pub fn tree_vertex_sets(g: &Graph) -> HashSet<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut found = HashSet::new();
    let mut parent: Vec<usize> = (0..g.order()).collect();
    grow(&edges, 0, &mut parent, 0, 0, g.order(), &mut found);
    found
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

// Chooses an acyclic edge subset edge by edge. An acyclic subset whose edge
// count is one less than its vertex count is a tree.
fn grow(
    edges: &[(usize, usize)],
    next: usize,
    parent: &mut Vec<usize>,
    touched: u64,
    chosen: usize,
    n: usize,
    found: &mut HashSet<u64>,
) {
    if chosen > 0 && chosen + 1 == touched.count_ones() as usize {
        found.insert(touched);
    }
    if chosen + 1 >= n {
        return;
    }
    for i in next..edges.len() {
        let (u, v) = edges[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru == rv {
            continue;
        }
        parent[ru] = rv;
        grow(edges, i + 1, parent, touched | 1 << u | 1 << v, chosen + 1, n, found);
        parent[ru] = ru;
    }
}

/// Whether some `S`-tree of `g` has rainbow non-terminal vertices, decided
/// by listing every subtree.
pub fn rainbow_tree_by_enumeration(g: &Graph, coloring: &VertexColoring, terminals: VertexSet) -> bool {
    tree_vertex_sets(g)
        .into_iter()
        .map(VertexSet::from_bits)
        .filter(|&t| terminals.is_subset(t))
        .any(|t| coloring.is_rainbow(t.difference(terminals)))
}

/// `rvx_k(G)` by exhaustive search over all `l^n` colorings for
/// `l = 0, 1, ...`. Limited to 7 vertices.
pub fn brute_force_rvx(g: &Graph, k: usize) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge { what: "brute_force_rvx", max: ORACLE_MAX_ORDER, n });
    }
    validate(g, k)?;
    let trees = tree_vertex_sets(g);
    let options: Vec<Vec<VertexSet>> = k_subsets(n, k)
        .map(|s| {
            let mut outside: Vec<VertexSet> = trees
                .iter()
                .map(|&t| VertexSet::from_bits(t))
                .filter(|&t| s.is_subset(t))
                .map(|t| t.difference(s))
                .collect();
            outside.sort_unstable();
            outside.dedup();
            outside
        })
        .collect();
    let works = |colors: &[u8], palette: usize| {
        options
            .iter()
            .all(|opts| opts.iter().any(|&w| is_rainbow(colors, palette, w)))
    };

    if works(&[], 0) {
        return Ok(0);
    }
    for palette in 1..=n {
        let mut colors = vec![0u8; n];
        loop {
            if works(&colors, palette) {
                return Ok(palette);
            }
            // odometer step over {0..palette}^n
            let mut i = 0;
            while i < n && colors[i] as usize == palette - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n distinct colors always suffice on a connected graph")
}
