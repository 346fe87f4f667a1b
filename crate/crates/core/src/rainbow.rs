//! Vertex-rainbow Steiner trees and the k-vertex-rainbow coloring verifier.
//!
//! An `S`-tree is rainbow when its vertices outside `S` carry distinct
//! colors. Such a tree exists exactly when some set `W` of vertices outside
//! `S` is rainbow and `S ∪ W` induces a connected subgraph: any spanning tree
//! of that subgraph is rainbow, and pruning non-`S` leaves from a rainbow
//! tree leaves a rainbow set `W` whose union with `S` is connected.

use serde::Serialize;

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::{k_subsets, subsets_by_size};

/// A Steiner tree certificate: its edges and the vertices `V(T) \ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessTree {
    pub edges: Vec<(usize, usize)>,
    pub internal: VertexSet,
}

impl WitnessTree {
    pub fn vertices(&self) -> VertexSet {
        let mut set = self.internal;
        for &(u, v) in &self.edges {
            set.insert(u);
            set.insert(v);
        }
        set
    }

    /// Checks that the edges form a tree of `g` containing `terminals`,
    /// that `internal` is exactly the non-terminal part, and that it is
    /// rainbow under `coloring`.
    pub fn is_valid(&self, g: &Graph, coloring: &VertexColoring, terminals: VertexSet) -> bool {
        let vertices = self.vertices();
        if !terminals.is_subset(vertices) || vertices.difference(terminals) != self.internal {
            return false;
        }
        if self.edges.len() + 1 != vertices.len() {
            return false;
        }
        if self.edges.iter().any(|&(u, v)| u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
            return false;
        }
        let tree = match Graph::from_edges(g.order(), self.edges.iter().copied()) {
            Ok(t) => t,
            Err(_) => return false,
        };
        let root = vertices.first().expect("at least two terminals");
        tree.component_within(root, vertices) == vertices && coloring.is_rainbow(self.internal)
    }
}

/// Outcome of the k-vertex-rainbow coloring check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RainbowCheck {
    Accepted,
    /// The lexicographically first `k`-subset without a rainbow tree.
    Failed(VertexSet),
}

impl RainbowCheck {
    pub fn is_accepted(&self) -> bool {
        matches!(self, RainbowCheck::Accepted)
    }
}

/// Edges of a breadth-first spanning tree of `g[within]` rooted at `root`,
/// each as `(min, max)` and sorted.
pub(crate) fn bfs_tree(g: &Graph, root: usize, within: VertexSet) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(within.len().saturating_sub(1));
    let mut seen = VertexSet::singleton(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).intersection(within).difference(seen) {
            seen.insert(v);
            edges.push((u.min(v), u.max(v)));
            queue.push_back(v);
        }
    }
    edges.sort_unstable();
    edges
}

pub(crate) fn check_coloring_fits(g: &Graph, coloring: &VertexColoring) -> Result<()> {
    coloring.check_order(g.order())
}

fn check_terminals(g: &Graph, terminals: VertexSet) -> Result<()> {
    if let Some(v) = terminals.difference(g.vertices()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    if terminals.len() < 2 {
        return Err(Error::TooFewTerminals(terminals.len()));
    }
    Ok(())
}

// First rainbow W (by size, then lexicographically) with S ∪ W connected.
fn first_rainbow_internal_set(g: &Graph, coloring: &VertexColoring, terminals: VertexSet) -> Option<VertexSet> {
    let palette = coloring.palette();
    subsets_by_size(g.vertices().difference(terminals))
        .take_while(|w| w.len() <= palette)
        .find(|&w| coloring.is_rainbow(w) && g.induces_connected(terminals.union(w)))
}

/// Finds a vertex-rainbow `S`-tree, if one exists.
///
/// The internal set is the first rainbow `W` in order of ascending size and
/// then lexicographic order for which `S ∪ W` induces a connected subgraph;
/// the tree is a breadth-first spanning tree of that subgraph rooted at the
/// smallest terminal.
pub fn exists_rainbow_tree(
    g: &Graph,
    coloring: &VertexColoring,
    terminals: VertexSet,
) -> Result<Option<WitnessTree>> {
    check_terminals(g, terminals)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_coloring_fits(g, coloring)?;
    Ok(first_rainbow_internal_set(g, coloring, terminals).map(|internal| {
        let root = terminals.first().expect("checked above");
        WitnessTree { edges: bfs_tree(g, root, terminals.union(internal)), internal }
    }))
}

/// Checks every `k`-subset, in lexicographic order, for a rainbow tree.
pub fn is_k_rainbow_coloring(g: &Graph, coloring: &VertexColoring, k: usize) -> Result<RainbowCheck> {
    if k < 2 || k > g.order() {
        return Err(Error::KOutOfRange { k, n: g.order() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_coloring_fits(g, coloring)?;
    Ok(k_subsets(g.order(), k)
        .find(|&s| first_rainbow_internal_set(g, coloring, s).is_none())
        .map_or(RainbowCheck::Accepted, RainbowCheck::Failed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, star, theorem3_coloring, theorem3_graph};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn coloring(colors: &[u8]) -> VertexColoring {
        VertexColoring::from_colors(colors.to_vec()).unwrap()
    }

    #[test]
    fn path_with_distinct_internal_colors() {
        let p4 = path(4).unwrap();
        let c = coloring(&[0, 0, 1, 0]);
        let tree = exists_rainbow_tree(&p4, &c, set(&[0, 3])).unwrap().unwrap();
        assert_eq!(tree.internal, set(&[1, 2]));
        assert_eq!(tree.edges, vec![(0, 1), (1, 2), (2, 3)]);
        assert!(tree.is_valid(&p4, &c, set(&[0, 3])));
    }

    #[test]
    fn path_with_one_color_has_no_tree() {
        let p4 = path(4).unwrap();
        let c = coloring(&[0, 0, 0, 0]);
        assert_eq!(exists_rainbow_tree(&p4, &c, set(&[0, 3])).unwrap(), None);
    }

    #[test]
    fn clique_triples_need_no_internal_vertices() {
        let k4 = complete(4).unwrap();
        for c in [coloring(&[0, 0, 0, 0]), coloring(&[0, 1, 2, 3]), VertexColoring::empty_palette()] {
            for s in k_subsets(4, 3) {
                let tree = exists_rainbow_tree(&k4, &c, s).unwrap().unwrap();
                assert!(tree.internal.is_empty());
                assert!(tree.is_valid(&k4, &c, s));
            }
        }
    }

    #[test]
    fn verifier_examples() {
        let star5 = star(5).unwrap();
        let one = coloring(&[0; 5]);
        assert_eq!(is_k_rainbow_coloring(&star5, &one, 3).unwrap(), RainbowCheck::Accepted);

        let p5 = path(5).unwrap();
        let two = coloring(&[0, 1, 0, 1, 0]);
        assert_eq!(
            is_k_rainbow_coloring(&p5, &two, 2).unwrap(),
            RainbowCheck::Failed(set(&[0, 4]))
        );

        let g = theorem3_graph(9, 2).unwrap();
        let c = theorem3_coloring(9, 2).unwrap();
        assert!(is_k_rainbow_coloring(&g, &c, 3).unwrap().is_accepted());
    }

    #[test]
    fn errors() {
        let p4 = path(4).unwrap();
        let c = coloring(&[0, 0, 0, 0]);
        assert!(matches!(exists_rainbow_tree(&p4, &c, set(&[2])), Err(Error::TooFewTerminals(1))));
        assert!(matches!(
            exists_rainbow_tree(&p4, &c, set(&[0, 9])),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
        assert!(matches!(is_k_rainbow_coloring(&p4, &c, 5), Err(Error::KOutOfRange { .. })));
        assert!(matches!(
            is_k_rainbow_coloring(&p4, &coloring(&[0, 1]), 2),
            Err(Error::ColoringLength { got: 2, n: 4 })
        ));
    }

    #[test]
    fn invalid_witnesses_are_rejected() {
        let p4 = path(4).unwrap();
        let c = coloring(&[0, 0, 1, 0]);
        let s = set(&[0, 3]);
        let missing_edge = WitnessTree { edges: vec![(0, 1), (2, 3)], internal: set(&[1, 2]) };
        assert!(!missing_edge.is_valid(&p4, &c, s));
        let not_rainbow = WitnessTree { edges: vec![(0, 1), (1, 2), (2, 3)], internal: set(&[1, 2]) };
        assert!(!not_rainbow.is_valid(&p4, &coloring(&[0, 0, 0, 0]), s));
        let non_edge = WitnessTree { edges: vec![(0, 3)], internal: VertexSet::EMPTY };
        assert!(!non_edge.is_valid(&p4, &c, s));
    }
}
