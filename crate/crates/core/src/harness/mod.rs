//! Instance-by-instance checks of the published bounds and values, the
//! Nordhaus-Gaddum sweep and the minimal-size search.
//!
//! Checks fall into two kinds. [`ClaimKind::Hard`] claims follow from the
//! definitions and must never be refuted. [`ClaimKind::Reported`] claims are
//! recorded as they come out; a refuted instance there documents a
//! disagreement between the stated value and the literal definition.

pub mod cache;
pub mod claims;
pub mod ng;
pub mod tsearch;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::coloring::VertexColoring;
use crate::error::Result;
use crate::formats::{parse_graph6, write_graph6};
use crate::graph::Graph;
use crate::rainbow::is_k_rainbow_coloring;
use crate::solver::{rvx, validate};

pub use cache::{cache_key, cache_load, cache_store, spot_check, CacheEntry, RvxCache, SpotCheck};
pub use claims::{run_suite, Suite};
pub use ng::{ng_sweep, ng_sweep_graphs, NgPair, NgSweepResult};
pub use tsearch::{t_search, t_search_graphs, TSearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Refuted,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Hard,
    Reported,
}

/// Data that lets a refutation be re-derived from scratch: the graph, `k`
/// and the computed index, plus the coloring when the refutation is about a
/// specific coloring being rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub k: usize,
    pub rvx: Option<usize>,
    pub coloring: Option<String>,
}

impl Counterexample {
    pub fn for_value(g: &Graph, k: usize, value: usize) -> Result<Counterexample> {
        Ok(Counterexample { graph6: write_graph6(g)?, k, rvx: Some(value), coloring: None })
    }

    pub fn for_coloring(g: &Graph, k: usize, coloring: &VertexColoring) -> Result<Counterexample> {
        Ok(Counterexample {
            graph6: write_graph6(g)?,
            k,
            rvx: None,
            coloring: Some(coloring.to_string()),
        })
    }

    /// Recomputes from the embedded data: the solver must reproduce `rvx`,
    /// and the verifier must reject `coloring`.
    pub fn reverify(&self) -> Result<bool> {
        let g = parse_graph6(self.graph6.as_bytes())?;
        if let Some(value) = self.rvx {
            if rvx(&g, self.k)?.value != value {
                return Ok(false);
            }
        }
        if let Some(text) = &self.coloring {
            let c: VertexColoring = text.parse()?;
            if is_k_rainbow_coloring(&g, &c, self.k)?.is_accepted() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimInstance {
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub kind: ClaimKind,
    pub notes: Vec<String>,
    pub instances: Vec<ClaimInstance>,
}

impl ClaimReport {
    pub fn new(id: &str, kind: ClaimKind) -> ClaimReport {
        ClaimReport { id: id.to_string(), kind, notes: Vec::new(), instances: Vec::new() }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub(crate) fn push(
        &mut self,
        params: String,
        expected: impl ToString,
        computed: impl ToString,
        holds: bool,
        counterexample: impl FnOnce() -> Result<Counterexample>,
    ) -> Result<()> {
        let counterexample = if holds { None } else { Some(counterexample()?) };
        self.instances.push(ClaimInstance {
            params,
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if holds { Status::Confirmed } else { Status::Refuted },
            counterexample,
        });
        Ok(())
    }

    pub(crate) fn skip(&mut self, params: String, expected: impl ToString, reason: impl ToString) {
        self.instances.push(ClaimInstance {
            params,
            expected: expected.to_string(),
            computed: reason.to_string(),
            status: Status::Skipped,
            counterexample: None,
        });
    }

    pub fn count(&self, status: Status) -> usize {
        self.instances.iter().filter(|i| i.status == status).count()
    }

    pub fn refuted(&self) -> impl Iterator<Item = &ClaimInstance> {
        self.instances.iter().filter(|i| i.status == Status::Refuted)
    }

    /// True when no instance is refuted.
    pub fn holds(&self) -> bool {
        self.count(Status::Refuted) == 0
    }

    /// Re-derives every counterexample; returns the ones that did not
    /// reproduce.
    pub fn unreproducible(&self) -> Result<Vec<&ClaimInstance>> {
        let mut bad = Vec::new();
        for inst in self.refuted() {
            match &inst.counterexample {
                Some(cx) if cx.reverify()? => {}
                _ => bad.push(inst),
            }
        }
        Ok(bad)
    }
}

type Slot = Arc<OnceLock<usize>>;

/// Cache-backed `rvx` evaluation shared by the sweeps. Safe to use from
/// several worker threads; concurrent requests for the same graph wait for a
/// single solve, so the statistics do not depend on scheduling.
pub struct Evaluator {
    cache: Mutex<RvxCache>,
    pending: Mutex<HashMap<(String, usize), Slot>>,
    solves: AtomicU64,
    hits: AtomicU64,
    colorings: AtomicU64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EvaluatorStats {
    pub solves: u64,
    pub cache_hits: u64,
    pub colorings_examined: u64,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new(RvxCache::in_memory())
    }
}

impl Evaluator {
    pub fn new(cache: RvxCache) -> Evaluator {
        Evaluator {
            cache: Mutex::new(cache),
            pending: Mutex::new(HashMap::new()),
            solves: AtomicU64::new(0),
            hits: AtomicU64::new(0),
            colorings: AtomicU64::new(0),
        }
    }

    pub fn rvx(&self, g: &Graph, k: usize) -> Result<usize> {
        validate(g, k)?;
        let key = cache_key(g)?;
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key, k) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        let slot = self
            .pending
            .lock()
            .expect("pending lock")
            .entry((key.clone(), k))
            .or_default()
            .clone();
        let mut solved = false;
        let value = *slot.get_or_init(|| {
            solved = true;
            let result = rvx(g, k).expect("input validated");
            self.colorings
                .fetch_add(result.stats.colorings_examined, Ordering::Relaxed);
            self.cache.lock().expect("cache lock").insert(key.clone(), k, result.value);
            result.value
        });
        let counter = if solved { &self.solves } else { &self.hits };
        counter.fetch_add(1, Ordering::Relaxed);
        Ok(value)
    }

    pub fn stats(&self) -> EvaluatorStats {
        EvaluatorStats {
            solves: self.solves.load(Ordering::Relaxed),
            cache_hits: self.hits.load(Ordering::Relaxed),
            colorings_examined: self.colorings.load(Ordering::Relaxed),
        }
    }

    pub fn flush(&self) -> Result<()> {
        self.cache.lock().expect("cache lock").flush()
    }

    pub fn into_cache(self) -> RvxCache {
        self.cache.into_inner().expect("cache lock")
    }
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool when `jobs`
/// is `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
