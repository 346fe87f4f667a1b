//! Persistent `rvx` cache.
//!
//! One record per line, tab separated: canonical graph6, `k`, value. Files
//! are append-only, so concurrent sweeps can be merged by concatenating and
//! loading (duplicates collapse; conflicting duplicates are rejected).

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::{canonical_form, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::formats::{parse_graph6, write_graph6};
use crate::graph::Graph;
use crate::solver::rvx;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CacheEntry {
    pub graph6: String,
    pub k: usize,
    pub rvx: usize,
}

impl CacheEntry {
    fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.graph6, self.k, self.rvx)
    }
}

/// Key under which `g` is cached: the canonical graph6 for orders the
/// canonical form supports, the graph6 as given otherwise.
pub fn cache_key(g: &Graph) -> Result<String> {
    if g.order() <= CANON_MAX_ORDER {
        Ok(canonical_form(g)?.graph6())
    } else {
        write_graph6(g)
    }
}

#[derive(Debug, Default)]
pub struct RvxCache {
    path: Option<PathBuf>,
    entries: BTreeMap<(String, usize), usize>,
    unsaved: Vec<CacheEntry>,
}

impl RvxCache {
    /// A cache that lives only in memory.
    pub fn in_memory() -> RvxCache {
        RvxCache::default()
    }

    /// Loads `path`; a missing file yields an empty cache bound to `path`.
    pub fn open(path: impl AsRef<Path>) -> Result<RvxCache> {
        let path = path.as_ref().to_path_buf();
        let entries = if path.exists() { cache_load(&path)? } else { Vec::new() };
        let mut cache = RvxCache { path: Some(path), ..RvxCache::default() };
        for e in entries {
            cache.entries.insert((e.graph6, e.k), e.rvx);
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str, k: usize) -> Option<usize> {
        self.entries.get(&(key.to_string(), k)).copied()
    }

    pub fn insert(&mut self, key: String, k: usize, value: usize) {
        if self.entries.insert((key.clone(), k), value).is_none() {
            self.unsaved.push(CacheEntry { graph6: key, k, rvx: value });
        }
    }

    pub fn entries(&self) -> Vec<CacheEntry> {
        self.entries
            .iter()
            .map(|((g6, k), &v)| CacheEntry { graph6: g6.clone(), k: *k, rvx: v })
            .collect()
    }

    /// Appends entries added since the last flush to the backing file.
    pub fn flush(&mut self) -> Result<()> {
        if let Some(path) = &self.path {
            if !self.unsaved.is_empty() {
                cache_store(path, &self.unsaved)?;
            }
        }
        self.unsaved.clear();
        Ok(())
    }
}

/// Reads every record of a cache file. Conflicting duplicates and malformed
/// lines abort with the offending line number.
pub fn cache_load(path: impl AsRef<Path>) -> Result<Vec<CacheEntry>> {
    let path = path.as_ref();
    let shown = path.display().to_string();
    let bad = |line: usize, reason: String| Error::CacheRecord { path: shown.clone(), line, reason };
    let reader = BufReader::new(File::open(path)?);
    let mut seen: BTreeMap<(String, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [g6, k, value] = fields[..] else {
            return Err(bad(line_no, format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        let graph = parse_graph6(g6.as_bytes()).map_err(|e| bad(line_no, e.to_string()))?;
        let k: usize = k.parse().map_err(|_| bad(line_no, format!("unparsable k {k:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| bad(line_no, format!("unparsable rvx {value:?}")))?;
        if k < 2 || k > graph.order() {
            return Err(bad(line_no, format!("k = {k} out of range for n = {}", graph.order())));
        }
        match seen.insert((g6.to_string(), k), value) {
            Some(prev) if prev != value => {
                return Err(bad(line_no, format!("conflicting values {prev} and {value}")));
            }
            Some(_) => continue,
            None => out.push(CacheEntry { graph6: g6.to_string(), k, rvx: value }),
        }
    }
    Ok(out)
}

/// Appends records to a cache file, creating it if needed.
pub fn cache_store(path: impl AsRef<Path>, entries: &[CacheEntry]) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = String::new();
    for e in entries {
        buf.push_str(&e.to_line());
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())?;
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct SpotCheck {
    pub entry: CacheEntry,
    pub recomputed: usize,
}

impl SpotCheck {
    pub fn matches(&self) -> bool {
        self.entry.rvx == self.recomputed
    }
}

/// Recomputes a seeded random sample of `fraction` of the entries (at least
/// one when the cache is non-empty).
pub fn spot_check(entries: &[CacheEntry], fraction: f64, seed: u64) -> Result<Vec<SpotCheck>> {
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    let count = ((entries.len() as f64 * fraction).ceil() as usize).clamp(1, entries.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = sample(&mut rng, entries.len(), count).into_vec();
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|i| {
            let entry = entries[i].clone();
            let g = parse_graph6(entry.graph6.as_bytes())?;
            let recomputed = rvx(&g, entry.k)?.value;
            Ok(SpotCheck { entry, recomputed })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn store_then_load_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path_buf = dir.path().join("rvx.tsv");
        let entries = vec![
            CacheEntry { graph6: cache_key(&path(4).unwrap()).unwrap(), k: 2, rvx: 2 },
            CacheEntry { graph6: cache_key(&cycle(5).unwrap()).unwrap(), k: 3, rvx: 1 },
        ];
        cache_store(&path_buf, &entries).unwrap();
        assert_eq!(cache_load(&path_buf).unwrap(), entries);
    }

    #[test]
    fn flush_appends_only_new_entries() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("rvx.tsv");
        let mut cache = RvxCache::open(&file).unwrap();
        cache.insert("Bw".into(), 2, 0);
        cache.insert("Bw".into(), 2, 0);
        cache.flush().unwrap();
        cache.insert("BW".into(), 2, 1);
        cache.flush().unwrap();
        let text = std::fs::read_to_string(&file).unwrap();
        assert_eq!(text, "Bw\t2\t0\nBW\t2\t1\n");
        let reopened = RvxCache::open(&file).unwrap();
        assert_eq!(reopened.get("BW", 2), Some(1));
        assert_eq!(reopened.len(), 2);
    }

    #[test]
    fn corrupt_line_is_reported_with_its_number() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("rvx.tsv");
        std::fs::write(&file, "Bw\t2\t0\nBW\t2\n").unwrap();
        let err = cache_load(&file).unwrap_err();
        assert!(matches!(err, Error::CacheRecord { line: 2, .. }), "{err}");
        std::fs::write(&file, "Bw\t2\t0\nBw\t2\t1\n").unwrap();
        assert!(matches!(cache_load(&file).unwrap_err(), Error::CacheRecord { line: 2, .. }));
        std::fs::write(&file, "Bw\t9\t0\n").unwrap();
        assert!(matches!(cache_load(&file).unwrap_err(), Error::CacheRecord { line: 1, .. }));
    }

    #[test]
    fn spot_check_recomputes() {
        let entries = vec![
            CacheEntry { graph6: cache_key(&path(5).unwrap()).unwrap(), k: 3, rvx: 3 },
            CacheEntry { graph6: cache_key(&cycle(5).unwrap()).unwrap(), k: 3, rvx: 2 },
        ];
        let checks = spot_check(&entries, 1.0, 7).unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks[0].matches());
        assert!(!checks[1].matches());
    }
}
