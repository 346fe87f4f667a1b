//! Brute-force canonical forms and isomorphism-free enumeration of small
//! connected graphs.

use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::write_graph6;
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 8;

/// Orders covered by [`enumerate_connected_graphs`].
pub const ENUM_MIN_ORDER: usize = 2;
pub const ENUM_MAX_ORDER: usize = 6;

/// Lexicographically least upper-triangle bitstring over all relabelings.
///
/// The bitstring follows graph6 order `x(0,1), x(0,2), x(1,2), ...` and is
/// packed most-significant-bit first, so comparing `(n, code)` numerically
/// compares bitstrings lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The bitstring as ASCII `0`/`1` bytes.
    pub fn bytes(&self) -> Vec<u8> {
        let m = pair_count(self.order());
        (0..m)
            .map(|i| if self.code >> (m - 1 - i) & 1 == 1 { b'1' } else { b'0' })
            .collect()
    }

    /// The canonically labelled representative.
    pub fn graph(&self) -> Graph {
        graph_from_code(self.order(), self.code)
    }

    pub fn graph6(&self) -> String {
        write_graph6(&self.graph()).expect("canonical orders are in range")
    }
}

fn pair_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

// (i, j) pairs in graph6 order.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let m = pair_count(n);
    let edges = pairs(n)
        .enumerate()
        .filter(|(idx, _)| code >> (m - 1 - idx) & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// Code of the relabeled graph whose vertex `i` is `g`'s vertex `sigma[i]`.
fn relabeled_code(g: &Graph, sigma: &[u8]) -> u64 {
    let mut code = 0u64;
    for (i, j) in pairs(g.order()) {
        code = code << 1 | g.has_edge(sigma[i] as usize, sigma[j] as usize) as u64;
    }
    code
}

fn permutations(n: usize) -> &'static [Vec<u8>] {
    static TABLES: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=CANON_MAX_ORDER)
            .map(|k| (0..k as u8).permutations(k).collect())
            .collect()
    });
    &tables[n]
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::TooLarge { what: "canonical_form", max: CANON_MAX_ORDER, n });
    }
    let code = permutations(n)
        .iter()
        .map(|sigma| relabeled_code(g, sigma))
        .min()
        .unwrap_or(0);
    Ok(CanonicalForm { n: n as u8, code })
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.graph())
}

// True when no relabeling of `code` yields a smaller code.
fn is_canonical_code(n: usize, code: u64) -> bool {
    let g = graph_from_code(n, code);
    permutations(n).iter().all(|sigma| relabeled_code(&g, sigma) >= code)
}

/// One connected graph per isomorphism class, canonically labelled and in
/// ascending canonical-form order.
pub fn enumerate_connected_graphs(n: usize) -> Result<&'static [Graph]> {
    if !(ENUM_MIN_ORDER..=ENUM_MAX_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder {
            what: "built-in enumeration",
            min: ENUM_MIN_ORDER,
            max: ENUM_MAX_ORDER,
            n,
        });
    }
    static CACHE: [OnceLock<Vec<Graph>>; ENUM_MAX_ORDER + 1] = [const { OnceLock::new() }; ENUM_MAX_ORDER + 1];
    Ok(CACHE[n].get_or_init(|| {
        let m = pair_count(n);
        (0..1u64 << m)
            .filter(|&code| graph_from_code(n, code).is_connected() && is_canonical_code(n, code))
            .map(|code| graph_from_code(n, code))
            .collect()
    }))
}
