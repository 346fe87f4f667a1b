//! Claim suites: every numbered statement checked instance by instance.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ng_sweep, t_search, with_jobs, ClaimKind, ClaimReport, Counterexample, Evaluator};
use crate::canon::{canonical_form, enumerate_connected_graphs};
use crate::error::{Error, Result};
use crate::families::{
    clique_chain, complete_bipartite, complete_multipartite, cycle, example1_graph, path, star, theorem3_coloring,
    theorem3_graph, wheel,
};
use crate::formats::write_graph6;
use crate::graph::{Graph, VertexSet};
use crate::rainbow::{is_k_rainbow_coloring, RainbowCheck};
use crate::steiner::sdiam;

use super::tsearch::{theorem3_upper_proof, theorem3_upper_statement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Prop1,
    Prop2,
    Prop3,
    Obs1,
    Intro,
    Example1,
    Example2,
    Lemma2,
    Thm2,
    Lemma3,
    Chain,
    TSearch,
    Thm3,
    All,
}

impl Suite {
    pub const EACH: [Suite; 13] = [
        Suite::Prop1,
        Suite::Prop2,
        Suite::Prop3,
        Suite::Obs1,
        Suite::Intro,
        Suite::Example1,
        Suite::Example2,
        Suite::Lemma2,
        Suite::Thm2,
        Suite::Lemma3,
        Suite::Chain,
        Suite::TSearch,
        Suite::Thm3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Obs1 => "obs1",
            Suite::Intro => "intro",
            Suite::Example1 => "example1",
            Suite::Example2 => "example2",
            Suite::Lemma2 => "lemma2",
            Suite::Thm2 => "thm2",
            Suite::Lemma3 => "lemma3",
            Suite::Chain => "chain",
            Suite::TSearch => "tsearch",
            Suite::Thm3 => "thm3",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|s| s.name() == name.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {name:?}")))
    }

    /// Orders run when none are requested.
    pub fn default_orders(self) -> RangeInclusive<usize> {
        match self {
            Suite::Prop1 | Suite::Prop2 | Suite::Chain => 2..=6,
            Suite::Prop3 | Suite::Thm2 | Suite::TSearch => 4..=6,
            Suite::Obs1 | Suite::Intro => 3..=9,
            Suite::Example1 => 5..=8,
            Suite::Example2 => 5..=9,
            Suite::Lemma2 => 5..=5,
            Suite::Lemma3 => 3..=5,
            Suite::Thm3 => 5..=10,
            Suite::All => 2..=10,
        }
    }

    /// Orders the suite can handle at all.
    pub fn supported_orders(self) -> RangeInclusive<usize> {
        match self {
            Suite::Lemma3 => 3..=7,
            Suite::All => 2..=10,
            other => other.default_orders(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::parse(s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs a suite over orders `min..=max`, defaulting either end to the
/// suite's own range and clamping to what it supports. Reports with the
/// same id are merged.
pub fn run_suite(
    suite: Suite,
    min: Option<usize>,
    max: Option<usize>,
    eval: &Evaluator,
    jobs: Option<usize>,
) -> Result<Vec<ClaimReport>> {
    with_jobs(jobs, || {
        if suite == Suite::All {
            let mut out = Vec::new();
            for s in Suite::EACH {
                if let Some(orders) = resolve(s, min, max) {
                    out.extend(run_one(s, orders, eval)?);
                }
            }
            return Ok(out);
        }
        let supported = suite.supported_orders();
        let orders = resolve(suite, min, max).ok_or(Error::UnsupportedOrder {
            what: suite.name(),
            min: *supported.start(),
            max: *supported.end(),
            n: max.or(min).unwrap_or(0),
        })?;
        run_one(suite, orders, eval)
    })
}

fn resolve(suite: Suite, min: Option<usize>, max: Option<usize>) -> Option<RangeInclusive<usize>> {
    let default = suite.default_orders();
    let supported = suite.supported_orders();
    let lo = min.unwrap_or(*default.start()).max(*supported.start());
    let hi = max.unwrap_or(*default.end()).min(*supported.end());
    (lo <= hi).then_some(lo..=hi)
}

fn run_one(suite: Suite, orders: RangeInclusive<usize>, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    let mut reports = Vec::new();
    match suite {
        Suite::Prop1 => {
            for n in orders {
                reports.push(check_prop1(n, &[2, 3, 4], eval)?);
            }
        }
        Suite::Prop2 => {
            for n in orders {
                reports.push(check_prop2(n, &[2, 3], eval)?);
            }
        }
        Suite::Prop3 => {
            for n in orders {
                reports.push(check_prop3(n, eval)?);
            }
        }
        Suite::Obs1 => reports.extend(check_obs1(orders, eval)?),
        Suite::Intro => reports.extend(check_intro(orders, eval)?),
        Suite::Example1 => {
            for n in orders {
                reports.push(check_example1(n, eval)?);
            }
        }
        Suite::Example2 => {
            for n in orders {
                reports.push(check_example2(n, eval)?);
            }
        }
        Suite::Lemma2 => reports.extend(check_lemma2(eval)?),
        Suite::Thm2 => {
            for n in orders {
                reports.extend(ng_sweep(n, eval)?.reports()?);
            }
        }
        Suite::Lemma3 => {
            for n in orders {
                reports.extend(check_lemma3_exhaustive(n, LEMMA3_TRIALS, eval)?);
            }
        }
        Suite::Chain => {
            for n in orders {
                let graphs = enumerate_connected_graphs(n)?;
                let parts: Vec<ClaimReport> = graphs
                    .par_iter()
                    .map(|g| check_monotonic_chain(g, eval))
                    .collect::<Result<_>>()?;
                reports.extend(parts);
            }
        }
        Suite::TSearch => {
            for n in orders {
                reports.extend(check_tsearch(n, eval)?);
            }
        }
        Suite::Thm3 => {
            for n in orders {
                for ell in 2..=n - 3 {
                    for k in [3, 4] {
                        reports.push(check_theorem3_construction(n, ell, k)?);
                    }
                }
            }
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
    Ok(merge(reports))
}

/// Concatenates reports sharing an id, keeping first-seen order.
pub fn merge(reports: Vec<ClaimReport>) -> Vec<ClaimReport> {
    let mut out: Vec<ClaimReport> = Vec::new();
    for r in reports {
        match out.iter_mut().find(|o| o.id == r.id) {
            Some(o) => {
                for note in r.notes {
                    if !o.notes.contains(&note) {
                        o.notes.push(note);
                    }
                }
                o.instances.extend(r.instances);
            }
            None => out.push(r),
        }
    }
    out
}

struct Row {
    params: String,
    expected: String,
    computed: String,
    holds: bool,
    counterexample: Counterexample,
}

impl Row {
    fn value(params: String, expected: impl ToString, g: &Graph, k: usize, value: usize, holds: bool) -> Result<Row> {
        Ok(Row {
            params,
            expected: expected.to_string(),
            computed: value.to_string(),
            holds,
            counterexample: Counterexample::for_value(g, k, value)?,
        })
    }
}

fn fill(report: &mut ClaimReport, rows: Vec<Row>) -> Result<()> {
    for row in rows {
        let cx = row.counterexample;
        report.push(row.params, row.expected, row.computed, row.holds, || Ok(cx))?;
    }
    Ok(())
}

fn g6(g: &Graph) -> Result<String> {
    write_graph6(g)
}

fn in_order_range(n: usize, lo: usize, hi: usize, what: &'static str) -> Result<()> {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder { what, min: lo, max: hi, n })
    }
}

/// `rvx_k = 0` exactly when `sdiam_k = k - 1`, over every connected graph
/// of order `n` (2 to 6).
pub fn check_prop1(n: usize, ks: &[usize], eval: &Evaluator) -> Result<ClaimReport> {
    in_order_range(n, 2, 6, "prop1")?;
    let graphs = enumerate_connected_graphs(n)?;
    let jobs: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| ks.iter().filter(|&&k| k >= 2 && k <= n).map(move |&k| (g, k)))
        .collect();
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(g, k)| {
            let value = eval.rvx(g, k)?;
            let d = sdiam(g, k)?;
            let expected = if d == k - 1 { "0".to_string() } else { ">= 1".to_string() };
            let params = format!("n={n},k={k},G={},sdiam={d}", g6(g)?);
            Row::value(params, expected, g, k, value, (value == 0) == (d == k - 1))
        })
        .collect::<Result<_>>()?;
    let mut report = ClaimReport::new("prop1", ClaimKind::Hard);
    fill(&mut report, rows)?;
    Ok(report)
}

/// `0 <= rvx_k <= n - 2` over every connected graph of order `n` (2 to 6).
pub fn check_prop2(n: usize, ks: &[usize], eval: &Evaluator) -> Result<ClaimReport> {
    in_order_range(n, 2, 6, "prop2")?;
    let graphs = enumerate_connected_graphs(n)?;
    let jobs: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| ks.iter().filter(|&&k| k >= 2 && k <= n).map(move |&k| (g, k)))
        .collect();
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(g, k)| {
            let value = eval.rvx(g, k)?;
            let params = format!("n={n},k={k},G={}", g6(g)?);
            Row::value(params, format!("<= {}", n - 2), g, k, value, value + 2 <= n)
        })
        .collect::<Result<_>>()?;
    let mut report = ClaimReport::new("prop2", ClaimKind::Hard)
        .note("stated for n >= 5; smaller orders are checked as well");
    fill(&mut report, rows)?;
    Ok(report)
}

/// `rvx_3 = 0` exactly when the minimum degree is at least `n - 2`, over
/// every connected graph of order `n` (4 to 6).
pub fn check_prop3(n: usize, eval: &Evaluator) -> Result<ClaimReport> {
    in_order_range(n, 4, 6, "prop3")?;
    let graphs = enumerate_connected_graphs(n)?;
    let rows: Vec<Row> = graphs
        .par_iter()
        .map(|g| {
            let value = eval.rvx(g, 3)?;
            let delta = g.min_degree();
            let dense = delta + 2 >= n;
            let expected = if dense { "0" } else { ">= 1" };
            let params = format!("n={n},G={},min_degree={delta}", g6(g)?);
            Row::value(params, expected, g, 3, value, (value == 0) == dense)
        })
        .collect::<Result<_>>()?;
    let mut report = ClaimReport::new("prop3", ClaimKind::Hard);
    fill(&mut report, rows)?;
    Ok(report)
}

fn family_rows(cases: Vec<(String, Graph, usize, usize)>, eval: &Evaluator) -> Result<Vec<Row>> {
    cases
        .par_iter()
        .map(|(params, g, k, expected)| {
            let value = eval.rvx(g, *k)?;
            Row::value(params.clone(), expected, g, *k, value, value == *expected)
        })
        .collect()
}

fn partitions(n: usize, parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        for mut rest in partitions(n - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The four family values, reported per instance: `K_{s,t}` with `k = 2`,
/// complete multipartite graphs with `k` equal to the number of parts,
/// wheels for every `k`, and paths for every `k`. Orders 3 to 9.
pub fn check_obs1(orders: RangeInclusive<usize>, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    if *orders.start() < 3 || *orders.end() > 9 {
        return Err(Error::UnsupportedOrder { what: "obs1", min: 3, max: 9, n: *orders.end() });
    }
    let mut bip = Vec::new();
    let mut multi = Vec::new();
    let mut wheels = Vec::new();
    let mut paths = Vec::new();
    for n in orders {
        for s in 2..n {
            let t = n - s;
            if t <= s {
                bip.push((format!("K_{{{s},{t}}},k=2"), complete_bipartite(s, t)?, 2, 1));
            }
        }
        for p in 3..=n {
            for parts in partitions(n, p, n) {
                let name = parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                multi.push((format!("K_{{{name}}},k={p}"), complete_multipartite(&parts)?, p, 1));
            }
        }
        if n >= 4 {
            let g = wheel(n - 1)?;
            for k in 2..=n {
                wheels.push((format!("W_{},order={n},k={k}", n - 1), g.clone(), k, 1));
            }
        }
        let g = path(n)?;
        for k in 2..=n {
            paths.push((format!("P_{n},k={k}"), g.clone(), k, n - 2));
        }
    }
    let mut r1 = ClaimReport::new("obs1.1", ClaimKind::Reported);
    fill(&mut r1, family_rows(bip, eval)?)?;
    let mut r2 = ClaimReport::new("obs1.2", ClaimKind::Reported)
        .note("k is tied to the number of parts, as in the statement");
    fill(&mut r2, family_rows(multi, eval)?)?;
    let mut r3 = ClaimReport::new("obs1.3", ClaimKind::Reported)
        .note("W_r is a hub joined to the cycle C_r, so it has order r + 1");
    fill(&mut r3, family_rows(wheels, eval)?)?;
    let mut r4 = ClaimReport::new("obs1.4", ClaimKind::Reported)
        .note("for k = n the terminal set is every vertex, leaving no vertex to color");
    fill(&mut r4, family_rows(paths, eval)?)?;
    Ok(vec![r1, r2, r3, r4])
}

/// Stars `K_{1,n-1}` (value 1 for every `k`) over the given orders, and
/// clique chains of 2 and 3 cliques (value equal to the number of cliques
/// at `k = 3`), which are always included.
pub fn check_intro(orders: RangeInclusive<usize>, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    let mut stars = Vec::new();
    for n in orders.filter(|&n| n >= 3) {
        let g = star(n)?;
        for k in 2..=n {
            stars.push((format!("K_{{1,{}}},k={k}", n - 1), g.clone(), k, 1));
        }
    }
    let chains = (2..=3)
        .map(|p| Ok((format!("clique_chain({p}),k=3"), clique_chain(p)?, 3, p)))
        .collect::<Result<Vec<_>>>()?;
    let mut r1 = ClaimReport::new("intro.star", ClaimKind::Reported);
    fill(&mut r1, family_rows(stars, eval)?)?;
    let mut r2 = ClaimReport::new("intro.clique-chain", ClaimKind::Reported);
    fill(&mut r2, family_rows(chains, eval)?)?;
    Ok(vec![r1, r2])
}

/// `rvx_3(G) = rvx_3(complement) = 1` for the path-plus-`H` construction
/// with `H` edgeless, orders 5 to 8.
pub fn check_example1(n: usize, eval: &Evaluator) -> Result<ClaimReport> {
    in_order_range(n, 5, 8, "example1")?;
    let g = example1_graph(n)?;
    let co = g.complement();
    let mut report = ClaimReport::new("example1", ClaimKind::Reported).note("H is edgeless");
    if !g.is_connected() || !co.is_connected() {
        report.skip(format!("n={n}"), "sum 2", "graph or complement disconnected");
        return Ok(report);
    }
    let a = eval.rvx(&g, 3)?;
    let b = eval.rvx(&co, 3)?;
    let rows = vec![
        Row::value(format!("n={n},G={},rvx3(G)", g6(&g)?), 1, &g, 3, a, a == 1)?,
        Row::value(format!("n={n},G={},rvx3(co-G)", g6(&g)?), 1, &co, 3, b, b == 1)?,
        Row {
            params: format!("n={n},G={},sum", g6(&g)?),
            expected: "2".into(),
            computed: (a + b).to_string(),
            holds: a + b == 2,
            counterexample: if a != 1 {
                Counterexample::for_value(&g, 3, a)?
            } else {
                Counterexample::for_value(&co, 3, b)?
            },
        },
    ];
    fill(&mut report, rows)?;
    Ok(report)
}

/// For `P_n`: `rvx_3 = n - 2`, `sdiam_3` of the complement is 3, its index
/// is 1, and the sum is `n - 1`. Orders 5 to 9.
pub fn check_example2(n: usize, eval: &Evaluator) -> Result<ClaimReport> {
    in_order_range(n, 5, 9, "example2")?;
    let g = path(n)?;
    let co = g.complement();
    let a = eval.rvx(&g, 3)?;
    let b = eval.rvx(&co, 3)?;
    let d = sdiam(&co, 3)?;
    let rows = vec![
        Row::value(format!("n={n},rvx3(P_n)"), n - 2, &g, 3, a, a == n - 2)?,
        Row {
            params: format!("n={n},sdiam3(co-P_n)"),
            expected: "3".into(),
            computed: d.to_string(),
            holds: d == 3,
            counterexample: Counterexample::for_value(&co, 3, b)?,
        },
        Row::value(format!("n={n},rvx3(co-P_n)"), 1, &co, 3, b, b == 1)?,
        Row {
            params: format!("n={n},sum"),
            expected: (n - 1).to_string(),
            computed: (a + b).to_string(),
            holds: a + b == n - 1,
            counterexample: if a != n - 2 {
                Counterexample::for_value(&g, 3, a)?
            } else {
                Counterexample::for_value(&co, 3, b)?
            },
        },
    ];
    let mut report = ClaimReport::new("example2", ClaimKind::Reported);
    fill(&mut report, rows)?;
    Ok(report)
}

/// The order-5 upper bound (hard, over every pair) and the individual values
/// quoted in its case analysis (reported).
pub fn check_lemma2(eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    let sweep = ng_sweep(5, eval)?;
    let mut bound = ClaimReport::new("lemma2", ClaimKind::Hard);
    for p in &sweep.pairs {
        let (worse, value) = if p.rvx >= p.rvx_complement {
            (&p.graph6, p.rvx)
        } else {
            (&p.complement_graph6, p.rvx_complement)
        };
        let g = crate::formats::parse_graph6(worse.as_bytes())?;
        bound.push(
            format!("n=5,G={},rvx3(G)={},rvx3(co-G)={}", p.graph6, p.rvx, p.rvx_complement),
            "<= 4",
            p.sum,
            p.sum <= 4,
            || Counterexample::for_value(&g, 3, value),
        )?;
    }

    let p5 = path(5)?;
    // fork: vertex 0 joined to 1, 2, 3 and the pendant 4 hanging off 3
    let fork = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])?;
    let c5 = cycle(5)?;
    // banner: the 4-cycle 0123 with pendant 4 at 0
    let banner = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
    // bull: triangle 012 with pendants 3 at 1 and 4 at 2
    let bull = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])?;
    let cases: Vec<(&str, Graph, Bound)> = vec![
        ("P_5", p5.clone(), Bound::Exactly(3)),
        ("co-P_5", p5.complement(), Bound::AtMost(1)),
        ("fork", fork.clone(), Bound::AtMost(2)),
        ("co-fork", fork.complement(), Bound::AtMost(2)),
        ("C_5", c5, Bound::Exactly(2)),
        ("banner", banner.clone(), Bound::Exactly(2)),
        ("co-banner", banner.complement(), Bound::Exactly(2)),
        ("bull", bull, Bound::Exactly(2)),
    ];
    let mut values = ClaimReport::new("lemma2.values", ClaimKind::Reported)
        .note("the figure is unavailable; the 4-cycle case is read as the banner and the triangle case as the bull");
    for (name, g, bound) in cases {
        let v = eval.rvx(&g, 3)?;
        values.push(format!("{name},G={}", g6(&g)?), bound, v, bound.holds(v), || {
            Counterexample::for_value(&g, 3, v)
        })?;
    }
    Ok(vec![bound, values])
}

#[derive(Debug, Clone, Copy)]
enum Bound {
    Exactly(usize),
    AtMost(usize),
}

impl Bound {
    fn holds(self, v: usize) -> bool {
        match self {
            Bound::Exactly(e) => v == e,
            Bound::AtMost(e) => v <= e,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exactly(e) => write!(f, "{e}"),
            Bound::AtMost(e) => write!(f, "<= {e}"),
        }
    }
}

pub const LEMMA3_TRIALS: usize = 50;

fn lemma3_seed(g: &Graph, q: usize) -> Result<u64> {
    let form = canonical_form(g)?;
    Ok(((form.order() as u64) << 48) | ((q as u64) << 40) | form.code())
}

/// Attaches a new vertex to `trials` random `q`-subsets of `g` (seeded from
/// the canonical form of `g` and `q`; repeated subsets are tried once).
///
/// Returns two reports. `lemma3`: when `q >= n - rvx_3(G)` the index does not
/// grow. `claim3`: for any `q` it grows by at most one, on `G` and, when both
/// complements are connected, on the complement side.
pub fn check_lemma3(g: &Graph, q: usize, trials: usize, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    let n = g.order();
    in_order_range(n, 3, 7, "lemma3")?;
    if q == 0 || q > n {
        return Err(Error::InvalidParameter(format!("q = {q} outside 1..={n}")));
    }
    let ell = eval.rvx(g, 3)?;
    let co = g.complement();
    let co_value = if co.is_connected() { Some(eval.rvx(&co, 3)?) } else { None };

    let mut rng = ChaCha8Rng::seed_from_u64(lemma3_seed(g, q)?);
    let sets: BTreeSet<VertexSet> = (0..trials)
        .map(|_| sample(&mut rng, n, q).into_iter().collect())
        .collect();

    let name = g6(g)?;
    let mut lemma = ClaimReport::new("lemma3", ClaimKind::Hard);
    let mut claim = ClaimReport::new("claim3", ClaimKind::Hard);
    let applies = q + ell >= n;
    if !applies {
        lemma.skip(format!("G={name},q={q}"), format!("<= {ell}"), format!("q < n - rvx3(G) = {}", n - ell));
    }
    for x in sets {
        let extended = g.with_new_vertex(x)?;
        let value = eval.rvx(&extended, 3)?;
        let params = format!("G={name},rvx3(G)={ell},q={q},X={x}");
        if applies {
            lemma.push(params.clone(), format!("<= {ell}"), value, value <= ell, || {
                Counterexample::for_value(&extended, 3, value)
            })?;
        }
        claim.push(params.clone(), format!("<= {}", ell + 1), value, value <= ell + 1, || {
            Counterexample::for_value(&extended, 3, value)
        })?;
        let co_ext = extended.complement();
        if let (Some(base), true) = (co_value, co_ext.is_connected()) {
            let value = eval.rvx(&co_ext, 3)?;
            claim.push(
                format!("{params},side=complement,rvx3(co-G)={base}"),
                format!("<= {}", base + 1),
                value,
                value <= base + 1,
                || Counterexample::for_value(&co_ext, 3, value),
            )?;
        }
    }
    Ok(vec![lemma, claim])
}

/// [`check_lemma3`] over every connected graph of order `n` and every
/// `q` in `1..=n`.
pub fn check_lemma3_exhaustive(n: usize, trials: usize, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    in_order_range(n, 3, 6, "lemma3 sweep")?;
    let graphs = enumerate_connected_graphs(n)?;
    let jobs: Vec<(&Graph, usize)> = graphs.iter().flat_map(|g| (1..=n).map(move |q| (g, q))).collect();
    let parts: Vec<Vec<ClaimReport>> = jobs
        .par_iter()
        .map(|&(g, q)| check_lemma3(g, q, trials, eval))
        .collect::<Result<_>>()?;
    Ok(merge(parts.into_iter().flatten().collect()))
}

/// Computes `rvx_k(G)` for `k = 2..=n` and reports whether the sequence is
/// non-decreasing. Orders up to 6.
pub fn check_monotonic_chain(g: &Graph, eval: &Evaluator) -> Result<ClaimReport> {
    let n = g.order();
    in_order_range(n, 2, 6, "chain")?;
    let values = (2..=n).map(|k| eval.rvx(g, k)).collect::<Result<Vec<_>>>()?;
    let drop = values.windows(2).position(|w| w[1] < w[0]);
    let computed = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut report = ClaimReport::new("chain", ClaimKind::Reported)
        .note("values listed for k = 2..=n; with k = n no vertex lies outside the terminal set");
    report.push(format!("G={}", g6(g)?), "non-decreasing", computed, drop.is_none(), || {
        let i = drop.expect("refuted only on a drop");
        Counterexample::for_value(g, i + 3, values[i + 1])
    })?;
    Ok(report)
}

/// The exact value `t(n, k, n - 2) = n - 1` (hard) and the bounds on
/// `t(n, k, l)` for `2 <= l <= n - 3`: the lower bound and the upper bound
/// under the proof's case split (hard), and under the stated case split
/// (reported). Orders 4 to 6, `k` in 2 and 3.
pub fn check_tsearch(n: usize, eval: &Evaluator) -> Result<Vec<ClaimReport>> {
    in_order_range(n, 4, 6, "tsearch")?;
    let mut exact = ClaimReport::new("t-exact", ClaimKind::Hard);
    let mut lower = ClaimReport::new("thm3-lower", ClaimKind::Hard);
    let mut upper = ClaimReport::new("thm3-upper", ClaimKind::Hard)
        .note("case split on the parity of n - l, as in the proof");
    let mut stated = ClaimReport::new("thm3-upper-statement", ClaimKind::Reported)
        .note("case split on whether k and l differ in parity, as in the statement");
    let witness = |g: &Graph, k: usize| -> Result<Counterexample> { Counterexample::for_value(g, k, eval.rvx(g, k)?) };
    for k in 2..=3 {
        let r = t_search(n, k, n - 2, eval)?;
        let t = r.t_value.expect("a spanning tree always qualifies");
        let p = path(n)?;
        exact.push(format!("n={n},k={k},l={}", n - 2), n - 1, t, t == n - 1, || witness(&p, k))?;
        for ell in 2..=n.saturating_sub(3) {
            let r = t_search(n, k, ell, eval)?;
            let t = r.t_value.expect("complete graphs qualify");
            let params = format!("n={n},k={k},l={ell}");
            let built = theorem3_graph(n, ell)?;
            lower.push(params.clone(), format!(">= {}", n - 1), t, t + 1 >= n, || witness(&p, k))?;
            let up = theorem3_upper_proof(n, ell).expect("l in range");
            upper.push(params.clone(), format!("<= {up}"), t, t <= up, || witness(&built, k))?;
            let st = theorem3_upper_statement(n, k, ell).expect("l in range");
            stated.push(params, format!("<= {st}"), t, t as f64 <= st, || witness(&built, k))?;
        }
    }
    Ok(vec![exact, lower, upper, stated])
}

/// Builds the rose-plus-path graph, checks its order and size, and runs the
/// verifier on the explicit coloring from the construction.
pub fn check_theorem3_construction(n: usize, ell: usize, k: usize) -> Result<ClaimReport> {
    in_order_range(n, 5, 10, "thm3 construction")?;
    if ell < 2 || ell + 3 > n {
        return Err(Error::InvalidParameter(format!("l = {ell} outside 2..={}", n - 3)));
    }
    if !(3..=4).contains(&k) {
        return Err(Error::InvalidParameter(format!("k = {k} outside 3..=4")));
    }
    let g = theorem3_graph(n, ell)?;
    let coloring = theorem3_coloring(n, ell)?;
    let cx = || Counterexample::for_coloring(&g, k, &coloring);
    let params = format!("n={n},l={ell},k={k}");
    let mut report = ClaimReport::new("thm3-construction", ClaimKind::Reported)
        .note("the construction branches on the parity of n - l");
    report.push(format!("{params},order"), n, g.order(), g.order() == n, cx)?;
    let size = theorem3_upper_proof(n, ell).expect("l in range");
    report.push(format!("{params},edges"), size, g.edge_count(), g.edge_count() == size, cx)?;
    let check = is_k_rainbow_coloring(&g, &coloring, k)?;
    let computed = match &check {
        RainbowCheck::Accepted => "accepted".to_string(),
        RainbowCheck::Failed(s) => format!("rejected at S={s}"),
    };
    report.push(format!("{params},coloring={coloring}"), "accepted", computed, check.is_accepted(), cx)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain(&[Suite::All]) {
            assert_eq!(Suite::parse(s.name()).unwrap(), *s);
        }
        assert!(Suite::parse("prop9").is_err());
    }

    #[test]
    fn partitions_are_counted() {
        assert_eq!(partitions(5, 3, 5), vec![vec![3, 1, 1], vec![2, 2, 1]]);
        assert_eq!(partitions(6, 3, 6).len(), 3);
    }

    #[test]
    fn prop3_small_orders_confirmed() {
        let eval = Evaluator::default();
        for n in 4..=5 {
            let r = check_prop3(n, &eval).unwrap();
            assert!(r.holds());
            assert_eq!(r.instances.len(), [6, 21][n - 4]);
        }
        assert!(check_prop3(7, &eval).is_err());
    }

    #[test]
    fn path_chain_is_refuted_with_counterexample() {
        let eval = Evaluator::default();
        let r = check_monotonic_chain(&path(5).unwrap(), &eval).unwrap();
        assert_eq!(r.instances[0].computed, "3,3,1,0");
        assert_eq!(r.count(Status::Refuted), 1);
        assert!(r.unreproducible().unwrap().is_empty());
        let k5 = check_monotonic_chain(&crate::families::complete(5).unwrap(), &eval).unwrap();
        assert!(k5.holds());
    }

    #[test]
    fn lemma3_on_cycle() {
        let eval = Evaluator::default();
        let c5 = cycle(5).unwrap();
        for q in 1..=5 {
            let reports = check_lemma3(&c5, q, LEMMA3_TRIALS, &eval).unwrap();
            assert!(reports.iter().all(ClaimReport::holds));
        }
        assert!(check_lemma3(&c5, 6, 5, &eval).is_err());
    }

    #[test]
    fn lemma3_seed_is_stable() {
        let eval = Evaluator::default();
        let g = path(5).unwrap();
        let a = check_lemma3(&g, 2, 10, &eval).unwrap();
        let b = check_lemma3(&g.permute(&[4, 3, 2, 1, 0]), 2, 10, &eval).unwrap();
        let xs = |r: &[ClaimReport]| r[1].instances.iter().map(|i| i.computed.clone()).collect::<Vec<_>>();
        assert_eq!(a[1].instances.len(), b[1].instances.len());
        assert_eq!(xs(&a), xs(&b));
    }

    #[test]
    fn theorem3_construction_nine_two() {
        let r = check_theorem3_construction(9, 2, 3).unwrap();
        assert!(r.holds(), "{r:?}");
        let r = check_theorem3_construction(8, 3, 3).unwrap();
        assert_eq!(r.instances[1].computed, "9");
        let r = check_theorem3_construction(8, 2, 3).unwrap();
        assert_eq!(r.instances[1].computed, "10");
    }

    #[test]
    fn run_suite_clamps_and_rejects() {
        let eval = Evaluator::default();
        let r = run_suite(Suite::Prop3, Some(5), Some(5), &eval, None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].instances.len(), 21);
        assert!(run_suite(Suite::Prop3, Some(8), Some(9), &eval, None).is_err());
    }

    #[test]
    fn merge_concatenates_same_ids() {
        let mut a = ClaimReport::new("x", ClaimKind::Hard);
        a.skip("a".into(), 1, "r");
        let mut b = ClaimReport::new("x", ClaimKind::Hard);
        b.skip("b".into(), 1, "r");
        let merged = merge(vec![a, b, ClaimReport::new("y", ClaimKind::Reported)]);
        assert_eq!(merged.len(), 2);
        assert_eq!(merged[0].instances.len(), 2);
    }
}
