//! Append-only JSON-lines store of computed saturation numbers.
//!
//! One record per line. Appends go through a single `write_all` on a file
//! opened with `O_APPEND`, so concurrent runs interleave whole lines.
//! Unreadable lines are skipped with a warning on stderr.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::{Deserialize, Serialize};

use cyclesat::{check_saturated, CycleFamily, Graph, SearchResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    /// Canonical family string, so `{5,4}` and `{4,5}` share a key.
    pub family: String,
    pub n: usize,
    pub sat: Option<usize>,
    pub lower_bound: usize,
    pub exhaustive: bool,
    pub witnesses: Vec<String>,
    pub tool_version: String,
    /// RFC 3339, UTC.
    pub timestamp: String,
    pub wall_time_ms: u64,
}

impl ResultRecord {
    pub fn from_search(res: &SearchResult) -> Self {
        ResultRecord {
            family: res.family.to_string(),
            n: res.n,
            sat: res.sat,
            lower_bound: res.lower_bound,
            exhaustive: res.exhaustive,
            witnesses: res.witnesses.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Micros, true),
            wall_time_ms: res.counters.wall_time_ms,
        }
    }

    pub fn key(&self) -> (String, usize) {
        (self.family.clone(), self.n)
    }
}

/// A stored witness that failed re-verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub family: String,
    pub n: usize,
    pub graph6: String,
    pub problem: String,
}

#[derive(Debug, Clone)]
pub struct Store {
    path: PathBuf,
}

impl Store {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Store { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, record: &ResultRecord) -> io::Result<()> {
        let mut line = serde_json::to_vec(record)?;
        line.push(b'\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(&line)
    }

    /// Every readable record in file order. A missing file is an empty store.
    pub fn load(&self) -> io::Result<Vec<ResultRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e),
        };
        let mut records = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str(&line) {
                Ok(r) => records.push(r),
                Err(e) => eprintln!("warning: {}:{}: skipping unreadable record: {e}", self.path.display(), i + 1),
            }
        }
        Ok(records)
    }

    /// The most recently appended exhaustive record for the key, or failing
    /// that the most recent record of any kind.
    pub fn query(&self, family: &CycleFamily, n: usize) -> io::Result<Option<ResultRecord>> {
        let key = family.to_string();
        let hits: Vec<ResultRecord> = self.load()?.into_iter().filter(|r| r.family == key && r.n == n).collect();
        let best = hits.iter().rev().find(|r| r.exhaustive).or(hits.last());
        Ok(best.cloned())
    }

    /// Folds `others` into this store, keeping one record per key, and
    /// rewrites the file. Returns the number of records kept.
    pub fn merge(&self, others: &[Store]) -> io::Result<usize> {
        let mut all = self.load()?;
        for s in others {
            all.extend(s.load()?);
        }
        let merged = dedup(all);
        let mut body = Vec::new();
        for r in &merged {
            serde_json::to_writer(&mut body, r)?;
            body.push(b'\n');
        }
        let tmp = self.path.with_extension("merge.tmp");
        fs::write(&tmp, body)?;
        fs::rename(&tmp, &self.path)?;
        Ok(merged.len())
    }

    /// Re-checks every stored witness against its family and stated value.
    pub fn reverify(&self) -> io::Result<(usize, Vec<Discrepancy>)> {
        let mut checked = 0;
        let mut bad = Vec::new();
        for r in self.load()? {
            for g6 in &r.witnesses {
                checked += 1;
                if let Err(problem) = reverify_witness(&r, g6) {
                    bad.push(Discrepancy { family: r.family.clone(), n: r.n, graph6: g6.clone(), problem });
                }
            }
        }
        Ok((checked, bad))
    }
}

fn reverify_witness(r: &ResultRecord, g6: &str) -> Result<(), String> {
    let family: CycleFamily = r.family.parse().map_err(|e| format!("bad family: {e}"))?;
    let g = Graph::from_graph6(g6).map_err(|e| format!("bad graph6: {e}"))?;
    if g.n() != r.n {
        return Err(format!("witness has {} vertices, record says {}", g.n(), r.n));
    }
    if r.sat.is_some_and(|s| s != g.m()) {
        return Err(format!("witness has {} edges, record says {}", g.m(), r.sat.unwrap_or_default()));
    }
    let verdict = check_saturated(&g, &family);
    if !verdict.is_saturated() {
        return Err(format!("witness is {}", verdict.status_str()));
    }
    Ok(())
}

/// One record per key: exhaustive beats non-exhaustive, then the later
/// timestamp, then the later position. Output is sorted by key.
pub fn dedup(records: Vec<ResultRecord>) -> Vec<ResultRecord> {
    let mut best: HashMap<(String, usize), ResultRecord> = HashMap::new();
    for r in records {
        match best.get(&r.key()) {
            Some(old) if (old.exhaustive, &old.timestamp) > (r.exhaustive, &r.timestamp) => {}
            _ => {
                best.insert(r.key(), r);
            }
        }
    }
    let mut out: Vec<ResultRecord> = best.into_values().collect();
    out.sort_by_key(ResultRecord::key);
    out
}
