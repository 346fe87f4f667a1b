//! Exact computation of the k-vertex-rainbow index `rvx_k(G)` and related
//! Steiner invariants for small graphs, with constructors for the extremal
//! families and a harness that checks the known bounds instance by instance.
//!
//! A vertex coloring is *k-vertex-rainbow* when every `k`-subset `S` of the
//! vertices is joined by a tree whose vertices outside `S` have pairwise
//! distinct colors; `rvx_k(G)` is the fewest colors such a coloring needs.

pub mod canon;
pub mod coloring;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod rainbow;
pub mod solver;
pub mod steiner;
pub mod subsets;

pub use canon::{canonical_form, enumerate_connected_graphs, CanonicalForm};
pub use coloring::VertexColoring;
pub use error::{Error, Result};
pub use families::Family;
pub use formats::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use oracle::brute_force_rvx;
pub use rainbow::{exists_rainbow_tree, is_k_rainbow_coloring, RainbowCheck, WitnessTree};
pub use solver::{
    rvx, rvx_lower_bound, rvx_upper_bound_coloring, rvx_with_limit, RvxOutcome, RvxResult,
    RvxSolver, SolveStats,
};
pub use steiner::{sdiam, steiner_distance, steiner_eccentricity, SteinerQuery};
