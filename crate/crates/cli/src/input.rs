use std::io::Read;

use anyhow::{bail, Context, Result};
use rvx_core::{parse_edge_list, parse_graph6, write_graph6, Family, Graph};
use serde::Serialize;

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format
    #[arg(long, value_name = "G6")]
    g6: Option<String>,
    /// File with one graph (graph6, or an edge list whose first line is the order); `-` reads stdin
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
    /// Named family with parameters, e.g. `rose:2,3`
    #[arg(long, value_name = "NAME[:PARAMS]")]
    family: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct InputInfo {
    pub source: &'static str,
    pub spec: String,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
}

impl InputInfo {
    pub fn new(source: &'static str, spec: String, g: &Graph) -> Result<InputInfo> {
        Ok(InputInfo { source, spec, graph6: write_graph6(g)?, order: g.order(), edges: g.edge_count() })
    }
}

impl GraphSource {
    pub fn load(&self) -> Result<(Graph, InputInfo)> {
        if let Some(text) = &self.g6 {
            let g = parse_graph6(text.as_bytes()).with_context(|| format!("--g6 {text:?}"))?;
            return Ok((g.clone(), InputInfo::new("g6", text.clone(), &g)?));
        }
        if let Some(path) = &self.file {
            let mut graphs = read_graphs(path)?;
            if graphs.len() != 1 {
                bail!("--file {path:?}: expected exactly one graph, found {}", graphs.len());
            }
            let g = graphs.remove(0);
            return Ok((g.clone(), InputInfo::new("file", path.clone(), &g)?));
        }
        let spec = self.family.as_deref().expect("clap enforces one source");
        let g = Family::parse(spec)
            .and_then(|f| f.build())
            .with_context(|| format!("--family {spec:?}"))?;
        Ok((g.clone(), InputInfo::new("family", spec.to_string(), &g)?))
    }
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {path:?}"))
    }
}

/// Reads an edge list (first non-empty line is a bare order) or one graph6
/// record per line.
pub fn read_graphs(path: &str) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(line) if line.bytes().all(|b| b.is_ascii_digit()) => {
            Ok(vec![parse_edge_list(&text).with_context(|| format!("{path:?}"))?])
        }
        Some(_) => read_graph6_lines(path, &text),
    }
}

pub fn read_graph6_lines(path: &str, text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim().as_bytes()).with_context(|| format!("{path:?} line {}", i + 1)))
        .collect()
}
