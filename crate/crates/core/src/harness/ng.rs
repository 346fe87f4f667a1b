//! Nordhaus-Gaddum sweep for `rvx_3(G) + rvx_3(complement of G)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{cache_key, ClaimKind, ClaimReport, Counterexample, Evaluator, Status};
use crate::canon::{canonical_form, enumerate_connected_graphs, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::formats::write_graph6;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgPair {
    pub graph6: String,
    pub complement_graph6: String,
    pub rvx: usize,
    pub rvx_complement: usize,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgSweepResult {
    pub n: usize,
    pub pairs_examined: usize,
    pub min_sum: Option<usize>,
    pub max_sum: Option<usize>,
    /// Representatives attaining the minimum and maximum.
    pub min_pairs: Vec<String>,
    pub max_pairs: Vec<String>,
    pub pairs: Vec<NgPair>,
    /// `exactly 4` for n = 4, `[2, n-1]` otherwise.
    pub expected: String,
    pub status: Status,
}

impl NgSweepResult {
    fn in_bound(n: usize, sum: usize) -> bool {
        if n == 4 {
            sum == 4
        } else {
            (2..=n - 1).contains(&sum)
        }
    }

    /// One claim report per bound, each pair an instance. Order 4 is
    /// checked against the exact value 4; larger orders against `[2, n-1]`
    /// split into its lower and upper halves.
    pub fn reports(&self) -> Result<Vec<ClaimReport>> {
        let n = self.n;
        let pair_cx = |pair: &NgPair, complement: bool| -> Result<Counterexample> {
            let g6 = if complement { &pair.complement_graph6 } else { &pair.graph6 };
            let value = if complement { pair.rvx_complement } else { pair.rvx };
            let g = crate::formats::parse_graph6(g6.as_bytes())?;
            Counterexample::for_value(&g, 3, value)
        };
        let params = |p: &NgPair| format!("n={n},G={},rvx3(G)={},rvx3(co-G)={}", p.graph6, p.rvx, p.rvx_complement);
        if n == 4 {
            let mut obs2 = ClaimReport::new("obs2", ClaimKind::Reported)
                .note("order 4: the only connected, co-connected graph is P_4");
            for p in &self.pairs {
                obs2.push(params(p), 4, p.sum, p.sum == 4, || pair_cx(p, p.rvx <= p.rvx_complement))?;
            }
            return Ok(vec![obs2]);
        }
        let mut lower = ClaimReport::new("lemma1", ClaimKind::Hard);
        let mut upper = ClaimReport::new("thm2", ClaimKind::Hard);
        for p in &self.pairs {
            lower.push(params(p), ">= 2", p.sum, p.sum >= 2, || pair_cx(p, false))?;
            upper.push(params(p), format!("<= {}", n - 1), p.sum, p.sum < n, || pair_cx(p, p.rvx < p.rvx_complement))?;
        }
        Ok(vec![lower, upper])
    }
}

struct Candidate {
    graph: Graph,
    complement: Graph,
    key: String,
    complement_key: String,
}

fn representative_order(g: &Graph, h: &Graph) -> Result<std::cmp::Ordering> {
    if g.order() <= CANON_MAX_ORDER {
        Ok(canonical_form(g)?.cmp(&canonical_form(h)?))
    } else {
        Ok(write_graph6(g)?.cmp(&write_graph6(h)?))
    }
}

/// Sweep over all connected graphs of order `n` (4 to 6) whose complement is
/// also connected.
pub fn ng_sweep(n: usize, eval: &Evaluator) -> Result<NgSweepResult> {
    if !(4..=6).contains(&n) {
        return Err(Error::UnsupportedOrder { what: "built-in Nordhaus-Gaddum sweep", min: 4, max: 6, n });
    }
    ng_sweep_graphs(n, enumerate_connected_graphs(n)?.iter().cloned(), eval)
}

/// Sweep over an explicit graph stream (e.g. graph6 lines for `n > 6`).
/// Graphs of other orders, disconnected graphs and graphs with disconnected
/// complement are ignored; `{G, complement}` pairs are counted once, keyed by
/// the smaller canonical form.
pub fn ng_sweep_graphs<I>(n: usize, graphs: I, eval: &Evaluator) -> Result<NgSweepResult>
where
    I: IntoIterator<Item = Graph>,
{
    if n < 4 {
        return Err(Error::UnsupportedOrder { what: "Nordhaus-Gaddum sweep", min: 4, max: 62, n });
    }
    let mut reps: BTreeMap<(String, String), Candidate> = BTreeMap::new();
    for g in graphs {
        if g.order() != n || !g.is_connected() {
            continue;
        }
        let co = g.complement();
        if !co.is_connected() {
            continue;
        }
        let (graph, complement) = match representative_order(&g, &co)? {
            std::cmp::Ordering::Greater => (co, g),
            _ => (g, co),
        };
        let key = cache_key(&graph)?;
        let complement_key = cache_key(&complement)?;
        reps.entry((key.clone(), complement_key.clone()))
            .or_insert(Candidate { graph, complement, key, complement_key });
    }
    let mut candidates: Vec<Candidate> = reps.into_values().collect();
    if n <= CANON_MAX_ORDER {
        candidates.sort_by_cached_key(|c| canonical_form(&c.graph).expect("order checked"));
    }

    // evaluate each distinct graph once so statistics do not depend on threads
    let mut distinct: BTreeMap<String, &Graph> = BTreeMap::new();
    for c in &candidates {
        distinct.entry(c.key.clone()).or_insert(&c.graph);
        distinct.entry(c.complement_key.clone()).or_insert(&c.complement);
    }
    let values: BTreeMap<String, usize> = distinct
        .into_par_iter()
        .map(|(key, g)| eval.rvx(g, 3).map(|v| (key, v)))
        .collect::<Result<_>>()?;

    let mut pairs = Vec::with_capacity(candidates.len());
    for c in &candidates {
        let (a, b) = (values[&c.key], values[&c.complement_key]);
        pairs.push(NgPair {
            graph6: write_graph6(&c.graph)?,
            complement_graph6: write_graph6(&c.complement)?,
            rvx: a,
            rvx_complement: b,
            sum: a + b,
        });
    }
    let min_sum = pairs.iter().map(|p| p.sum).min();
    let max_sum = pairs.iter().map(|p| p.sum).max();
    let attaining = |target: Option<usize>| -> Vec<String> {
        pairs
            .iter()
            .filter(|p| Some(p.sum) == target)
            .map(|p| p.graph6.clone())
            .collect()
    };
    let status = if pairs.iter().all(|p| NgSweepResult::in_bound(n, p.sum)) {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    Ok(NgSweepResult {
        n,
        pairs_examined: pairs.len(),
        min_sum,
        max_sum,
        min_pairs: attaining(min_sum),
        max_pairs: attaining(max_sum),
        expected: if n == 4 { "exactly 4".into() } else { format!("[2, {}]", n - 1) },
        status,
        pairs,
    })
}
