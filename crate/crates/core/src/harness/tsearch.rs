//! Search for `t(n, k, l)`, the fewest edges of a connected order-`n` graph
//! with `rvx_k <= l`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{cache_key, Evaluator, Status};
use crate::canon::{canonical_form, enumerate_connected_graphs, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::formats::write_graph6;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TSearchResult {
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    /// `None` when no graph in the input reaches `rvx_k <= l`.
    pub t_value: Option<usize>,
    pub extremal: Vec<String>,
    pub graphs_examined: usize,
    pub lower_bound: usize,
    /// Upper bound when the case split follows the parity of `n - l`;
    /// `None` outside `2 <= l <= n - 3`.
    pub upper_bound_proof: Option<usize>,
    /// Upper bound when the case split follows the parities of `k` and `l`.
    pub upper_bound_statement: Option<f64>,
    pub lower_status: Status,
    pub upper_proof_status: Status,
    pub upper_statement_status: Status,
}

/// `n - 1 + floor((n - l) / 2)`: the size of the rose-plus-path construction.
pub fn theorem3_upper_proof(n: usize, ell: usize) -> Option<usize> {
    (ell >= 2 && ell + 3 <= n).then(|| n - 1 + (n - ell) / 2)
}

/// The stated bound with its `k`/`l` parity case split, which may be a half
/// integer.
pub fn theorem3_upper_statement(n: usize, k: usize, ell: usize) -> Option<f64> {
    (ell >= 2 && ell + 3 <= n).then(|| {
        let extra = if k % 2 != ell % 2 { n - ell - 1 } else { n - ell };
        (n - 1) as f64 + extra as f64 / 2.0
    })
}

fn check_params(n: usize, k: usize, ell: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if ell < 2 || ell + 2 > n {
        return Err(Error::InvalidParameter(format!("ell = {ell} outside 2..={}", n.saturating_sub(2))));
    }
    Ok(())
}

/// Exhaustive search over the enumerated connected graphs of order `n`
/// (2 to 6).
pub fn t_search(n: usize, k: usize, ell: usize, eval: &Evaluator) -> Result<TSearchResult> {
    check_params(n, k, ell)?;
    t_search_graphs(n, k, ell, enumerate_connected_graphs(n)?.iter().cloned(), eval)
}

/// Search over an explicit graph stream; graphs of another order or that are
/// disconnected are ignored.
pub fn t_search_graphs<I>(n: usize, k: usize, ell: usize, graphs: I, eval: &Evaluator) -> Result<TSearchResult>
where
    I: IntoIterator<Item = Graph>,
{
    check_params(n, k, ell)?;
    let mut by_size: BTreeMap<usize, BTreeMap<String, Graph>> = BTreeMap::new();
    for g in graphs {
        if g.order() == n && g.is_connected() {
            by_size.entry(g.edge_count()).or_default().insert(cache_key(&g)?, g);
        }
    }
    let graphs_examined = by_size.values().map(BTreeMap::len).sum();

    let mut t_value = None;
    let mut extremal = Vec::new();
    for (&m, layer) in &by_size {
        let hits: Vec<&Graph> = layer
            .par_iter()
            .map(|(_, g)| eval.rvx(g, k).map(|v| (v <= ell).then_some(g)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if !hits.is_empty() {
            t_value = Some(m);
            let mut found: Vec<(Option<_>, String)> = hits
                .into_iter()
                .map(|g| {
                    let form = if n <= CANON_MAX_ORDER { Some(canonical_form(g)?) } else { None };
                    Ok((form, write_graph6(&form.map_or_else(|| g.clone(), |f| f.graph()))?))
                })
                .collect::<Result<_>>()?;
            found.sort();
            extremal = found.into_iter().map(|(_, g6)| g6).collect();
            break;
        }
    }

    let upper_bound_proof = theorem3_upper_proof(n, ell);
    let upper_bound_statement = theorem3_upper_statement(n, k, ell);
    let status = |ok: Option<bool>| match ok {
        None => Status::Skipped,
        Some(true) => Status::Confirmed,
        Some(false) => Status::Refuted,
    };
    Ok(TSearchResult {
        n,
        k,
        ell,
        t_value,
        extremal,
        graphs_examined,
        lower_bound: n - 1,
        upper_bound_proof,
        upper_bound_statement,
        lower_status: status(t_value.map(|t| t >= n - 1)),
        upper_proof_status: status(upper_bound_proof.zip(t_value).map(|(u, t)| t <= u)),
        upper_statement_status: status(upper_bound_statement.zip(t_value).map(|(u, t)| t as f64 <= u)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_tree_size_reaches_n_minus_two() {
        let eval = Evaluator::default();
        for n in 4..=6 {
            let r = t_search(n, 3, n - 2, &eval).unwrap();
            assert_eq!(r.t_value, Some(n - 1));
            assert_eq!(r.upper_proof_status, Status::Skipped);
        }
    }

    #[test]
    fn six_three_two_within_bounds() {
        let eval = Evaluator::default();
        let r = t_search(6, 3, 2, &eval).unwrap();
        let t = r.t_value.unwrap();
        assert!((5..=7).contains(&t), "t = {t}");
        assert_eq!(r.upper_bound_proof, Some(7));
        assert_eq!(r.upper_bound_statement, Some(6.5));
        assert!(!r.extremal.is_empty());
        let mut sorted = r.extremal.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), r.extremal.len());
    }

    #[test]
    fn bounds_follow_each_reading() {
        assert_eq!(theorem3_upper_proof(8, 3), Some(9));
        assert_eq!(theorem3_upper_proof(8, 2), Some(10));
        assert_eq!(theorem3_upper_proof(6, 4), None);
        assert_eq!(theorem3_upper_statement(8, 3, 2), Some(9.5));
        assert_eq!(theorem3_upper_statement(8, 3, 3), Some(9.5));
    }

    #[test]
    fn rejects_out_of_range() {
        let eval = Evaluator::default();
        assert!(t_search(6, 3, 5, &eval).is_err());
        assert!(t_search(6, 1, 2, &eval).is_err());
        assert!(t_search(6, 7, 2, &eval).is_err());
    }
}
