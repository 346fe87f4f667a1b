use std::io::Write;

use anyhow::Result;
use rvx_core::harness::{ClaimKind, ClaimReport, Counterexample, Status};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct ClaimRow {
    pub id: String,
    pub kind: ClaimKind,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Serialize)]
pub struct ClaimSummary {
    pub id: String,
    pub kind: ClaimKind,
    pub notes: Vec<String>,
    pub confirmed: usize,
    pub refuted: usize,
    pub skipped: usize,
}

pub fn claim_rows(reports: &[ClaimReport]) -> Vec<ClaimRow> {
    reports
        .iter()
        .flat_map(|r| {
            r.instances.iter().map(move |i| ClaimRow {
                id: r.id.clone(),
                kind: r.kind,
                params: i.params.clone(),
                expected: i.expected.clone(),
                computed: i.computed.clone(),
                status: i.status,
                counterexample: i.counterexample.clone(),
            })
        })
        .collect()
}

pub fn claim_summaries(reports: &[ClaimReport]) -> Vec<ClaimSummary> {
    reports
        .iter()
        .map(|r| ClaimSummary {
            id: r.id.clone(),
            kind: r.kind,
            notes: r.notes.clone(),
            confirmed: r.count(Status::Confirmed),
            refuted: r.count(Status::Refuted),
            skipped: r.count(Status::Skipped),
        })
        .collect()
}

/// Tabular view used for CSV output.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub params: Value,
    pub result: Value,
    pub stats: Value,
    pub claims: Vec<ClaimRow>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            input: Value::Null,
            params: Value::Object(Default::default()),
            result: Value::Null,
            stats: Value::Object(Default::default()),
            claims: Vec::new(),
            table: None,
        }
    }

    pub fn refuted(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Refuted)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Text => {
                let mut lines = Vec::new();
                flatten(&serde_json::to_value(self)?, String::new(), &mut lines);
                lines.join("\n") + "\n"
            }
            Format::Csv => {
                let mut out = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some(table) => {
                        out.write_record(&table.header)?;
                        for row in &table.rows {
                            out.write_record(row)?;
                        }
                    }
                    None => {
                        out.write_record(["key", "value"])?;
                        let mut lines = Vec::new();
                        flatten(&serde_json::to_value(self)?, String::new(), &mut lines);
                        for line in lines {
                            let (k, v) = line.split_once(": ").unwrap_or((&line, ""));
                            out.write_record([k, v])?;
                        }
                    }
                }
                out.flush()?;
                String::from_utf8(out.into_inner().map_err(|e| e.into_error())?)?
            }
        })
    }

    pub fn emit(&self, format: Format) -> Result<()> {
        let text = self.render(format)?;
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        Ok(())
    }
}

// `path: value` lines, one per scalar.
fn flatten(value: &Value, path: String, out: &mut Vec<String>) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(v, join(k), out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, format!("{path}[{i}]"), out);
            }
        }
        Value::Object(_) => out.push(format!("{path}: {{}}")),
        Value::Array(_) => out.push(format!("{path}: []")),
        Value::String(s) => out.push(format!("{path}: {s}")),
        other => out.push(format!("{path}: {other}")),
    }
}
