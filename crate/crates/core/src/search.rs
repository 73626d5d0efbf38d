//! Exact `sat(n, C_I)` by edge-count-ordered enumeration of connected graphs.
//!
//! Level `m` holds one canonical representative per isomorphism class of
//! connected, `C_I`-free graphs with `n` vertices and `m` edges. Level `n-1`
//! is the set of free trees; level `m+1` comes from level `m` by canonical
//! augmentation: a child `H = P + e` is kept only when `P` is isomorphic to
//! `H - e*`, where `e*` is the largest non-bridge edge of the canonical form of
//! `H`. Every class therefore has exactly one accepted parent, and duplicates
//! among the children of a single parent are dropped locally.
//!
//! Both filters are hereditary: subgraphs of cycle-free graphs stay cycle-free
//! and every saturated graph is connected, so nothing that could be saturated
//! is ever pruned.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::canonize;
use crate::families::CycleFamily;
use crate::graph::{Graph, GraphError};
use crate::saturation::is_maximal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("{m} edges cannot form a connected graph on {n} vertices (need {} to {})", .n - 1, .n * (.n - 1) / 2)]
    EdgeCount { n: usize, m: usize },
    #[error("could not build a worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Stop at the first saturated graph of the minimum level.
    Value,
    /// Finish the minimum level to collect every extremal graph.
    #[default]
    Full,
}

#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub max_edges: Option<usize>,
    pub timeout: Option<Duration>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounters {
    pub graphs_enumerated: u64,
    pub saturation_checks: u64,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub family: CycleFamily,
    pub mode: SearchMode,
    /// `sat(n, C_I)`; only present when certified.
    pub sat: Option<usize>,
    /// Every edge count below this bound was exhausted without a saturated graph.
    pub lower_bound: usize,
    /// Canonical graph6 strings of the extremal graphs found, sorted.
    pub witnesses: Vec<String>,
    /// True when `sat` is certified by a complete sweep of all lower levels.
    pub exhaustive: bool,
    /// True when `witnesses` is all of `Sat(n, C_I)` up to isomorphism.
    pub complete_witnesses: bool,
    pub counters: SearchCounters,
}

/// Hereditary filter applied to every enumerated graph.
type Keep<'a> = dyn Fn(&Graph) -> bool + Sync + 'a;

struct Enumerator<'a> {
    keep: &'a Keep<'a>,
    deadline: Option<Instant>,
    tripped: AtomicBool,
}

impl Enumerator<'_> {
    fn out_of_time(&self) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.tripped.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// All free trees on `n` vertices, canonical and sorted.
    fn trees(&self, n: usize) -> Result<Vec<Graph>, GraphError> {
        let mut level: BTreeSet<(String, Vec<(usize, usize)>)> = BTreeSet::new();
        level.insert((Graph::empty(1)?.to_graph6(), Vec::new()));
        for order in 2..=n {
            let mut next = BTreeSet::new();
            for (_, edges) in &level {
                for v in 0..order - 1 {
                    let mut e = edges.clone();
                    e.push((v, order - 1));
                    let (c, _) = canonize(&Graph::new(order, e)?);
                    next.insert((c.to_graph6(), c.edges().collect()));
                }
            }
            level = next;
        }
        level
            .into_iter()
            .map(|(_, e)| Graph::new(n, e))
            .filter(|g| g.as_ref().map_or(true, |g| (self.keep)(g)))
            .collect()
    }

    fn children(&self, parent: &Graph) -> Vec<Graph> {
        if self.out_of_time() {
            return Vec::new();
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (u, v) in parent.non_edges() {
            let child = parent.with_edge(u, v);
            if !(self.keep)(&child) {
                continue;
            }
            let (canon, _) = canonize(&child);
            if seen.contains(&canon) {
                continue;
            }
            let Some((a, b)) = deletion_edge(&canon) else { continue };
            // deleting isomorphic edges changes the same pair of degrees
            let mut want = [canon.degree(a), canon.degree(b)];
            let mut have = [child.degree(u), child.degree(v)];
            want.sort_unstable();
            have.sort_unstable();
            if want != have {
                continue;
            }
            if canonize(&canon.without_edge(a, b)).0 == *parent {
                seen.insert(canon.clone());
                out.push(canon);
            }
        }
        out
    }

    fn next_level(&self, parents: &[Graph]) -> Vec<Graph> {
        let mut level: Vec<Graph> = parents.par_iter().flat_map_iter(|p| self.children(p)).collect();
        level.par_sort_by_cached_key(Graph::to_graph6);
        level
    }
}

/// The largest non-bridge edge of a canonical graph; `None` for trees.
fn deletion_edge(canon: &Graph) -> Option<(usize, usize)> {
    let edges: Vec<_> = canon.edges().collect();
    edges.into_iter().rev().find(|&(a, b)| !canon.is_bridge(a, b))
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, SearchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}

/// One representative per isomorphism class of connected graphs with `n`
/// vertices and `m` edges, in canonical form, sorted by graph6.
pub fn enumerate_connected(n: usize, m: usize) -> Result<Vec<Graph>, SearchError> {
    if n == 0 {
        return Err(GraphError::Empty.into());
    }
    if m + 1 < n || m > n * (n - 1) / 2 {
        return Err(SearchError::EdgeCount { n, m });
    }
    let keep = |_: &Graph| true;
    let en = Enumerator { keep: &keep, deadline: None, tripped: AtomicBool::new(false) };
    let mut level = en.trees(n)?;
    for _ in n - 1..m {
        level = en.next_level(&level);
    }
    Ok(level)
}

/// Every connected graph on `n` vertices up to isomorphism, all edge counts.
pub fn enumerate_all_connected(n: usize) -> Result<Vec<Graph>, SearchError> {
    let keep = |_: &Graph| true;
    let en = Enumerator { keep: &keep, deadline: None, tripped: AtomicBool::new(false) };
    let mut level = en.trees(n)?;
    let mut all = level.clone();
    for _ in n - 1..n * (n - 1) / 2 {
        level = en.next_level(&level);
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

/// Computes `sat(n, C_I)` and, in full mode, all of `Sat(n, C_I)`.
pub fn compute_sat(
    n: usize,
    family: &CycleFamily,
    mode: SearchMode,
    budget: &Budget,
) -> Result<SearchResult, SearchError> {
    if n == 0 {
        return Err(GraphError::Empty.into());
    }
    let start = Instant::now();
    let lengths = family.truncate(n);
    let keep = |g: &Graph| crate::saturation::find_forbidden_cycle(g, family).is_none();
    let en = Enumerator {
        keep: &keep,
        deadline: budget.timeout.map(|t| start + t),
        tripped: AtomicBool::new(false),
    };
    let checks = AtomicU64::new(0);
    let mut counters = SearchCounters::default();

    let outcome = with_pool(budget.jobs, || -> Result<(usize, Option<Vec<String>>, bool), GraphError> {
        let mut level = en.trees(n)?;
        let mut m = n - 1;
        loop {
            if budget.max_edges.is_some_and(|cap| m > cap) || en.out_of_time() {
                return Ok((m, None, false));
            }
            counters.graphs_enumerated += level.len() as u64;
            let saturated = |g: &&Graph| {
                checks.fetch_add(1, Ordering::Relaxed);
                is_maximal(g, &lengths)
            };
            let found: Vec<String> = match mode {
                SearchMode::Value => level.par_iter().find_first(saturated).into_iter().map(Graph::to_graph6).collect(),
                SearchMode::Full => {
                    level.par_iter().filter(saturated).map(Graph::to_graph6).collect()
                }
            };
            if !found.is_empty() {
                let complete = mode == SearchMode::Full && !en.out_of_time();
                return Ok((m, Some(found), complete));
            }
            if m == n * (n - 1) / 2 {
                // a maximal free graph always exists, so this is unreachable
                unreachable!("no saturated graph on {n} vertices");
            }
            level = en.next_level(&level);
            if en.out_of_time() {
                return Ok((m + 1, None, false));
            }
            m += 1;
        }
    })??;

    counters.saturation_checks = checks.into_inner();
    counters.wall_time_ms = start.elapsed().as_millis() as u64;
    let (level, found, complete) = outcome;
    Ok(match found {
        Some(mut witnesses) => {
            witnesses.sort();
            SearchResult {
                n,
                family: family.clone(),
                mode,
                sat: Some(level),
                lower_bound: level,
                witnesses,
                exhaustive: true,
                complete_witnesses: complete,
                counters,
            }
        }
        None => SearchResult {
            n,
            family: family.clone(),
            mode,
            sat: None,
            lower_bound: level,
            witnesses: Vec::new(),
            exhaustive: false,
            complete_witnesses: false,
            counters,
        },
    })
}
