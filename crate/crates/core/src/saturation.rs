//! Cycle-freeness and saturation checks with explicit witnesses.
//!
//! Everything here reduces to one primitive: find a simple path with exactly
//! `k` edges between two vertices. The search is a depth-first walk over simple
//! paths with a bitset visited mask; at every node a bitset BFS over the still
//! unused vertices bounds what the remaining budget can reach, which cuts dead
//! branches long before they bottom out.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::families::CycleFamily;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SaturationError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("endpoints coincide at vertex {0}")]
    SameVertex(usize),
    #[error("cycle length {len} outside [3, {n}]")]
    CycleLength { len: usize, n: usize },
    #[error("{0}-{1} is already an edge")]
    EdgePresent(usize, usize),
}

/// Outcome of checking a graph against a cycle family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Saturated,
    /// `cycle` lists the vertices in cyclic order; its length is `cycle.len()`.
    ContainsForbidden { cycle: Vec<usize> },
    /// Adding `uv` creates no cycle whose length lies in the family.
    NotMaximal { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationVerdict {
    pub verdict: Verdict,
    /// Number of non-edges probed before the verdict was reached.
    pub probes: usize,
}

impl SaturationVerdict {
    pub fn is_saturated(&self) -> bool {
        self.verdict == Verdict::Saturated
    }

    /// Vertex list backing the verdict: the forbidden cycle, the offending
    /// non-edge, or nothing.
    pub fn witness(&self) -> Vec<usize> {
        match &self.verdict {
            Verdict::Saturated => Vec::new(),
            Verdict::ContainsForbidden { cycle } => cycle.clone(),
            Verdict::NotMaximal { u, v } => vec![*u, *v],
        }
    }

    pub fn status_str(&self) -> &'static str {
        match self.verdict {
            Verdict::Saturated => "saturated",
            Verdict::ContainsForbidden { .. } => "contains_forbidden",
            Verdict::NotMaximal { .. } => "not_maximal",
        }
    }
}

/// Simple path from `from` to `to` with exactly `k` edges whose interior
/// avoids everything outside `interior`.
fn find_path(g: &Graph, from: usize, to: usize, k: usize, interior: VertexSet) -> Option<Vec<usize>> {
    if k == 0 || from == to {
        return None;
    }
    let interior = interior.without(from).without(to);
    if k - 1 > interior.len() {
        return None;
    }
    let mut search = PathSearch { g, to, interior, path: Vec::with_capacity(k + 1) };
    search.path.push(from);
    if search.extend(from, VertexSet::singleton(from), k) {
        Some(search.path)
    } else {
        None
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    to: usize,
    interior: VertexSet,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, at: usize, used: VertexSet, left: usize) -> bool {
        let nbrs = self.g.neighbors(at);
        if left == 1 {
            if nbrs.contains(self.to) {
                self.path.push(self.to);
                return true;
            }
            return false;
        }
        let free = self.interior.difference(&used);
        if !self.budget_allows(at, free, left) {
            return false;
        }
        for next in nbrs.intersection(&free).iter() {
            self.path.push(next);
            if self.extend(next, used.with(next), left - 1) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    /// BFS from `at` through `free`: the target must sit within `left` steps
    /// and enough fresh vertices must be reachable to spend the budget.
    fn budget_allows(&self, at: usize, free: VertexSet, left: usize) -> bool {
        let mut seen = VertexSet::singleton(at);
        let mut frontier = seen;
        let mut dist = 0;
        let mut target_dist = None;
        let mut fresh = 0;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(&self.g.neighbors(v));
            }
            if target_dist.is_none() && next.contains(self.to) {
                target_dist = Some(dist);
            }
            frontier = next.intersection(&free).difference(&seen);
            fresh += frontier.len();
            seen = seen.union(&frontier);
        }
        // the path still needs left-1 interior vertices
        matches!(target_dist, Some(d) if d <= left) && fresh >= left - 1
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), SaturationError> {
    if v >= g.n() {
        return Err(SaturationError::OutOfRange { v, n: g.n() });
    }
    Ok(())
}

fn assert_path(g: &Graph, path: &[usize], from: usize, to: usize, k: usize) {
    let distinct: VertexSet = path.iter().copied().collect();
    assert!(
        path.len() == k + 1
            && path[0] == from
            && path[k] == to
            && distinct.len() == path.len()
            && path.windows(2).all(|w| g.has_edge(w[0], w[1])),
        "internal error: invalid path witness {path:?}"
    );
}

fn assert_cycle(g: &Graph, cycle: &[usize], len: usize) {
    let distinct: VertexSet = cycle.iter().copied().collect();
    assert!(
        cycle.len() == len
            && distinct.len() == len
            && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len])),
        "internal error: invalid cycle witness {cycle:?}"
    );
}

/// A simple `u`–`v` path with exactly `k` edges, if one exists.
pub fn exists_path_of_length(
    g: &Graph,
    u: usize,
    v: usize,
    k: usize,
) -> Result<Option<Vec<usize>>, SaturationError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(SaturationError::SameVertex(u));
    }
    let found = find_path(g, u, v, k, g.vertex_set());
    if let Some(p) = &found {
        assert_path(g, p, u, v, k);
    }
    Ok(found)
}

/// A cycle on exactly `len` vertices, listed from its smallest vertex.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Result<Option<Vec<usize>>, SaturationError> {
    if len < 3 || len > g.n() {
        return Err(SaturationError::CycleLength { len, n: g.n() });
    }
    let found = cycle_of_length(g, len);
    if let Some(c) = &found {
        assert_cycle(g, c, len);
    }
    Ok(found)
}

fn cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let all = g.vertex_set();
    for s in 0..g.n() {
        // cycles through s whose other vertices are all larger than s
        let mut above = all;
        for w in 0..=s {
            above.remove(w);
        }
        if above.len() < len - 1 {
            break;
        }
        // largest closing neighbor first, so the cycle reads upward from s
        let ends: Vec<usize> = g.neighbors(s).intersection(&above).iter().collect();
        for &t in ends.iter().rev() {
            if let Some(p) = find_path(g, s, t, len - 1, above) {
                return Some(p);
            }
        }
    }
    None
}

/// First cycle (shortest length first) whose length lies in `family`.
pub fn find_forbidden_cycle(g: &Graph, family: &CycleFamily) -> Option<Vec<usize>> {
    family.truncate(g.n()).into_iter().find_map(|len| {
        let c = cycle_of_length(g, len)?;
        assert_cycle(g, &c, len);
        Some(c)
    })
}

pub fn is_family_free(g: &Graph, family: &CycleFamily) -> bool {
    find_forbidden_cycle(g, family).is_none()
}

/// For a non-edge `uv`, the shortest cycle of `G + uv` with length in
/// `family`; it runs `u ... v` and closes through the new edge.
pub fn creates_forbidden_cycle(
    g: &Graph,
    u: usize,
    v: usize,
    family: &CycleFamily,
) -> Result<Option<Vec<usize>>, SaturationError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(SaturationError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(SaturationError::EdgePresent(u.min(v), u.max(v)));
    }
    Ok(created_cycle(g, u, v, &family.truncate(g.n())))
}

fn created_cycle(g: &Graph, u: usize, v: usize, lengths: &[usize]) -> Option<Vec<usize>> {
    let all = g.vertex_set();
    lengths.iter().find_map(|&len| {
        let p = find_path(g, u, v, len - 1, all)?;
        assert_path(g, &p, u, v, len - 1);
        Some(p)
    })
}

/// Full saturation check. Non-edges are probed in lexicographic order and the
/// first counter-witness wins, so verdicts are deterministic.
pub fn check_saturated(g: &Graph, family: &CycleFamily) -> SaturationVerdict {
    let lengths = family.truncate(g.n());
    for &len in &lengths {
        if let Some(cycle) = cycle_of_length(g, len) {
            assert_cycle(g, &cycle, len);
            return SaturationVerdict { verdict: Verdict::ContainsForbidden { cycle }, probes: 0 };
        }
    }
    let mut probes = 0;
    for (u, v) in g.non_edges() {
        probes += 1;
        if created_cycle(g, u, v, &lengths).is_none() {
            return SaturationVerdict { verdict: Verdict::NotMaximal { u, v }, probes };
        }
    }
    SaturationVerdict { verdict: Verdict::Saturated, probes }
}

/// Maximality half of the check alone, for callers that already know `g` is
/// free of the family.
pub(crate) fn is_maximal(g: &Graph, lengths: &[usize]) -> bool {
    g.non_edges().all(|(u, v)| created_cycle(g, u, v, lengths).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, Construction};
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn fam(s: &str) -> CycleFamily {
        s.parse().unwrap()
    }

    #[test]
    fn path_examples() {
        let c6 = cycle(6);
        assert_eq!(exists_path_of_length(&c6, 0, 3, 3).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(exists_path_of_length(&c6, 0, 3, 2).unwrap(), None);
        assert_eq!(exists_path_of_length(&c6, 0, 1, 5).unwrap(), Some(vec![0, 5, 4, 3, 2, 1]));
        assert_eq!(exists_path_of_length(&c6, 2, 2, 3), Err(SaturationError::SameVertex(2)));
        assert_eq!(exists_path_of_length(&c6, 0, 1, 0).unwrap(), None);
        assert_eq!(exists_path_of_length(&c6, 0, 1, 6).unwrap(), None);
    }

    #[test]
    fn sat10_path_between_pendants() {
        // F_2^+: a=0, b1=1, c1=2, b2=3, c2=4, a'=5, b1'=6, c1'=7, b2'=8, c2'=9
        let g = generate(&Construction::SatN(10)).unwrap();
        assert_eq!(exists_path_of_length(&g, 6, 8, 4).unwrap(), Some(vec![6, 1, 0, 3, 8]));
        assert_eq!(exists_path_of_length(&g, 6, 8, 3).unwrap(), None);
    }

    #[test]
    fn cycle_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(has_cycle_of_length(&k4, 4).unwrap().is_some());
        assert!(has_cycle_of_length(&k4, 3).unwrap().is_some());
        let c6 = cycle(6);
        assert_eq!(has_cycle_of_length(&c6, 6).unwrap(), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(has_cycle_of_length(&c6, 4).unwrap(), None);
        assert_eq!(has_cycle_of_length(&c6, 7), Err(SaturationError::CycleLength { len: 7, n: 6 }));
        assert_eq!(has_cycle_of_length(&c6, 2), Err(SaturationError::CycleLength { len: 2, n: 6 }));
    }

    #[test]
    fn sat_n_has_no_4_or_5_cycles() {
        for n in 1..=50 {
            let g = generate(&Construction::SatN(n)).unwrap();
            for len in [4, 5] {
                if len <= n {
                    assert_eq!(has_cycle_of_length(&g, len).unwrap(), None, "n={n} len={len}");
                }
            }
        }
    }

    #[test]
    fn family_free_examples() {
        assert_eq!(find_forbidden_cycle(&cycle(5), &fam("{5}")), Some(vec![0, 1, 2, 3, 4]));
        assert!(is_family_free(&generate(&Construction::SatN(9)).unwrap(), &fam("{4,5}")));
        assert!(is_family_free(&cycle(7), &fam("2Z+2")));
        assert!(!is_family_free(&cycle(6), &fam("2Z+2")));
    }

    #[test]
    fn created_cycle_examples() {
        let g = generate(&Construction::SatN(10)).unwrap();
        let c = creates_forbidden_cycle(&g, 6, 8, &fam("{4,5}")).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(creates_forbidden_cycle(&g, 6, 8, &fam("{4}")).unwrap(), None);
        let c = creates_forbidden_cycle(&g, 6, 8, &fam("{6,7}")).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(creates_forbidden_cycle(&path(4), 0, 3, &fam("{4}")).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(
            creates_forbidden_cycle(&path(4), 0, 1, &fam("{4}")),
            Err(SaturationError::EdgePresent(0, 1))
        );
    }

    #[test]
    fn stars_are_saturated_when_triangles_forbidden() {
        for n in 1..=30 {
            let star = generate(&Construction::Star(n)).unwrap();
            for f in ["{3}", "{3,4,5}", "[3,inf)", "3Z+0"] {
                assert!(check_saturated(&star, &fam(f)).is_saturated(), "n={n} {f}");
            }
        }
    }

    #[test]
    fn c6_is_45_saturated() {
        // oracle: brute force over the nine non-edges of C6; distance-2 chords
        // close a C3 and a C5, antipodal chords close two C4s
        let c6 = cycle(6);
        for (u, v) in c6.non_edges() {
            let d = (v - u).min(6 - (v - u));
            let created: Vec<usize> = [4, 5]
                .into_iter()
                .filter(|&l| exists_path_of_length(&c6, u, v, l - 1).unwrap().is_some())
                .collect();
            assert_eq!(created, if d == 2 { vec![5] } else { vec![4] });
        }
        let verdict = check_saturated(&c6, &fam("{4,5}"));
        assert_eq!(verdict.verdict, Verdict::Saturated);
        assert_eq!(verdict.probes, 9);
    }

    #[test]
    fn verdict_variants() {
        let p3 = path(3);
        assert_eq!(check_saturated(&p3, &fam("{4,5}")).verdict, Verdict::NotMaximal { u: 0, v: 2 });
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            check_saturated(&k4, &fam("{4,5}")).verdict,
            Verdict::ContainsForbidden { cycle: vec![0, 1, 2, 3] }
        );
        // empty truncation: only complete graphs qualify
        assert!(check_saturated(&Graph::complete(3).unwrap(), &fam("{4,5}")).is_saturated());
        assert!(!check_saturated(&p3, &fam("[9,inf)")).is_saturated());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..=9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
            })
        })
    }

    fn arb_family() -> impl Strategy<Value = CycleFamily> {
        prop_oneof![
            proptest::collection::vec(3usize..10, 1..4).prop_map(|v| CycleFamily::finite(v).unwrap()),
            (3usize..7).prop_map(|a| CycleFamily::ray(a).unwrap()),
            (2usize..4, 0i64..3).prop_map(|(a, b)| CycleFamily::progression(a, b + 1).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn verdict_matches_definition(g in arb_graph(), f in arb_family()) {
            let verdict = check_saturated(&g, &f);
            let free = is_family_free(&g, &f);
            let maximal = g
                .non_edges()
                .all(|(u, v)| creates_forbidden_cycle(&g, u, v, &f).unwrap().is_some());
            prop_assert_eq!(verdict.is_saturated(), free && maximal);
            match verdict.verdict {
                Verdict::ContainsForbidden { cycle } => {
                    prop_assert!(f.contains(cycle.len()));
                    assert_cycle(&g, &cycle, cycle.len());
                }
                Verdict::NotMaximal { u, v } => {
                    prop_assert!(!g.has_edge(u, v));
                    prop_assert_eq!(creates_forbidden_cycle(&g, u, v, &f).unwrap(), None);
                }
                Verdict::Saturated => {
                    for (u, v) in g.non_edges() {
                        let h = g.add_edge(u, v).unwrap();
                        prop_assert!(!is_family_free(&h, &f));
                    }
                }
            }
        }

        #[test]
        fn saturated_45_has_short_paths(g in arb_graph()) {
            let f = CycleFamily::finite([4, 5]).unwrap();
            if check_saturated(&g, &f).is_saturated() {
                for (u, v) in g.non_edges() {
                    let p3 = exists_path_of_length(&g, u, v, 3).unwrap();
                    let p4 = exists_path_of_length(&g, u, v, 4).unwrap();
                    prop_assert!(p3.is_some() || p4.is_some());
                }
            }
        }
    }
}
