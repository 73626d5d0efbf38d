//! Structural predicates around degree-1 and degree-2 vertices, the
//! quarter-unit discharging ledger and the conjecture comparison reports.
//!
//! Degree classes: `D_i` holds the vertices of degree `i`. A degree-2 vertex
//! lies in `D_2^j` when exactly `j` of its neighbors have degree 2, and
//! `D_2^1` splits into `D_2^{1+}` (its degree-2 neighbor lies in `D_2^2`) and
//! `D_2^{1-}` (the rest).
//!
//! Charges start at `d(v) - 5/2` and move by four rules:
//!
//! 1. `D_2^0` and `D_2^2` vertices take 1/4 from each neighbor;
//! 2. `D_2^{1+}` vertices take 3/4 from their neighbor of degree above 2;
//! 3. `D_2^{1-}` vertices take 1/2 from their neighbor of degree above 2;
//! 4. leaves take 3/2 from their neighbor.
//!
//! All charges are stored as integer multiples of 1/4.

use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::constructions::{ceil_div, five_quarters};
use crate::families::{CycleFamily, FamilyError};
use crate::graph::Graph;
use crate::search::{compute_sat, Budget, SearchError, SearchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeClass {
    Isolated,
    Leaf,
    /// Degree 2, no degree-2 neighbor.
    TwoZero,
    /// Degree 2, one degree-2 neighbor which itself has two.
    TwoOnePlus,
    /// Degree 2, one degree-2 neighbor which has only one.
    TwoOneMinus,
    /// Degree 2, both neighbors of degree 2.
    TwoTwo,
    /// Degree at least 3.
    High,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeClasses {
    pub d1: VertexSet,
    pub d2: VertexSet,
    pub d3: VertexSet,
    pub d2_zero: VertexSet,
    pub d2_one_plus: VertexSet,
    pub d2_one_minus: VertexSet,
    pub d2_two: VertexSet,
}

impl DegreeClasses {
    pub fn class_of(&self, g: &Graph, v: usize) -> DegreeClass {
        match g.degree(v) {
            0 => DegreeClass::Isolated,
            1 => DegreeClass::Leaf,
            2 if self.d2_zero.contains(v) => DegreeClass::TwoZero,
            2 if self.d2_one_plus.contains(v) => DegreeClass::TwoOnePlus,
            2 if self.d2_one_minus.contains(v) => DegreeClass::TwoOneMinus,
            2 => DegreeClass::TwoTwo,
            _ => DegreeClass::High,
        }
    }
}

pub fn degree_classes(g: &Graph) -> DegreeClasses {
    let of_degree = |d: usize| (0..g.n()).filter(|&v| g.degree(v) == d).collect::<VertexSet>();
    let (d1, d2, d3) = (of_degree(1), of_degree(2), of_degree(3));
    let deg2_nbrs = |v: usize| g.neighbors(v).intersection(&d2);
    let d2_of = |i: usize| d2.iter().filter(|&v| deg2_nbrs(v).len() == i).collect::<VertexSet>();
    let (d2_zero, d2_one, d2_two) = (d2_of(0), d2_of(1), d2_of(2));
    let d2_one_plus: VertexSet =
        d2_one.iter().filter(|&v| !deg2_nbrs(v).intersection(&d2_two).is_empty()).collect();
    let d2_one_minus = d2_one.difference(&d2_one_plus);
    DegreeClasses { d1, d2, d3, d2_zero, d2_one_plus, d2_one_minus, d2_two }
}

/// A maximal path `x_1..x_r` of degree-2 vertices together with the outside
/// neighbors `x_0` (`before`) and `x_{r+1}` (`after`) of its ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneratedPath {
    pub vertices: Vec<usize>,
    pub before: usize,
    pub after: usize,
    /// `x_0 = x_{r+1}`: the extension closes into a cycle.
    pub closed: bool,
}

impl DegeneratedPath {
    /// Number of edges of the path itself.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The extension `x_0 x_1 .. x_r x_{r+1}`; for a closed extension the
    /// shared end appears once, at the front.
    pub fn extension(&self) -> Vec<usize> {
        let mut a = vec![self.before];
        a.extend(&self.vertices);
        if !self.closed {
            a.push(self.after);
        }
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneratedPaths {
    pub paths: Vec<DegeneratedPath>,
    /// Components of `G` that are cycles of degree-2 vertices; these have no
    /// outside neighbors and are kept apart from `paths`.
    pub pure_cycles: Vec<Vec<usize>>,
}

/// Every maximal degenerated path, oriented so the first vertex is smaller
/// than the last (or `before < after` for a single vertex), sorted.
pub fn degenerated_paths(g: &Graph) -> DegeneratedPaths {
    let d2 = degree_classes(g).d2;
    let mut seen = VertexSet::empty();
    let mut paths = Vec::new();
    let mut pure_cycles = Vec::new();
    for start in d2.iter() {
        if seen.contains(start) {
            continue;
        }
        let comp = g.reachable_within(start, d2);
        seen = seen.union(&comp);
        let ends: Vec<usize> =
            comp.iter().filter(|&v| g.neighbors(v).intersection(&comp).len() < 2).collect();
        let Some(&first) = ends.first() else {
            pure_cycles.push(walk_cycle(g, comp));
            continue;
        };
        let mut vertices = vec![first];
        let mut prev = usize::MAX;
        let mut at = first;
        while let Some(next) = g.neighbors(at).intersection(&comp).iter().find(|&w| w != prev) {
            vertices.push(next);
            prev = at;
            at = next;
        }
        let outside = |v: usize, inner: Option<usize>| {
            g.neighbors(v).iter().filter(|&w| Some(w) != inner && !comp.contains(w)).collect::<Vec<_>>()
        };
        let (before, after) = if vertices.len() == 1 {
            let o = outside(first, None);
            (o[0], o[1])
        } else {
            let last = vertices.len() - 1;
            (outside(vertices[0], Some(vertices[1]))[0], outside(vertices[last], Some(vertices[last - 1]))[0])
        };
        let mut path = DegeneratedPath { vertices, before, after, closed: before == after };
        let flip = if path.vertices.len() == 1 { path.before > path.after } else { path.vertices[0] > *path.vertices.last().unwrap() };
        if flip {
            path.vertices.reverse();
            std::mem::swap(&mut path.before, &mut path.after);
        }
        paths.push(path);
    }
    paths.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    DegeneratedPaths { paths, pure_cycles }
}

fn walk_cycle(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let first = comp.first().expect("nonempty component");
    let mut cycle = vec![first];
    let mut prev = first;
    let mut at = g.neighbors(first).first().expect("degree 2");
    while at != first {
        cycle.push(at);
        let next = g.neighbors(at).iter().find(|&w| w != prev).expect("degree 2");
        prev = at;
        at = next;
    }
    cycle
}

/// A vertex whose open neighborhood contains the path `x - w - y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingViolation {
    pub vertex: usize,
    pub path: [usize; 3],
}

/// One witness per vertex whose neighborhood is not a matching.
pub fn neighborhood_matching_violations(g: &Graph) -> Vec<MatchingViolation> {
    (0..g.n())
        .filter_map(|v| {
            let nb = g.neighbors(v);
            nb.iter().find_map(|w| {
                let inner = g.neighbors(w).intersection(&nb);
                let mut it = inner.iter();
                match (it.next(), it.next()) {
                    (Some(x), Some(y)) => Some(MatchingViolation { vertex: v, path: [x, w, y] }),
                    _ => None,
                }
            })
        })
        .collect()
}

/// Yes/no answers for a fixed list of structural properties. These describe
/// the graph and carry no claim that they should hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaProbes {
    /// Every vertex has at most one leaf neighbor and no two leaves are adjacent.
    pub one_leaf_per_vertex: bool,
    /// For every leaf `u` with neighbor `v`, `N(v) - u` induces a perfect matching.
    pub leaf_neighborhood_perfect_matching: bool,
    /// Every leaf hangs off a vertex of degree at least 5.
    pub leaf_neighbor_degree_at_least_5: bool,
    /// Every degenerated path has at most 2 edges.
    pub degenerated_paths_short: bool,
    /// No degenerated path with one edge lies in a triangle.
    pub degenerated_edges_off_triangles: bool,
    /// Every degenerated path with an edge lies in an induced 6-cycle.
    pub degenerated_paths_in_induced_c6: bool,
    /// `2 s+ + s- <= 2` at every vertex of degree at least 3 without a leaf neighbor.
    pub degree_two_neighbor_bound: bool,
}

pub fn lemma_probes(g: &Graph) -> LemmaProbes {
    let classes = degree_classes(g);
    let leaves = classes.d1;
    let one_leaf_per_vertex = (0..g.n()).all(|v| g.neighbors(v).intersection(&leaves).len() <= 1)
        && leaves.iter().all(|u| g.neighbors(u).intersection(&leaves).is_empty());
    let leaf_hosts = || leaves.iter().filter_map(|u| g.neighbors(u).first().map(|v| (u, v)));
    let leaf_neighborhood_perfect_matching = leaf_hosts().all(|(u, v)| {
        let rest = g.neighbors(v).without(u);
        rest.iter().all(|x| g.neighbors(x).intersection(&rest).len() == 1)
    });
    let leaf_neighbor_degree_at_least_5 = leaf_hosts().all(|(_, v)| g.degree(v) >= 5);

    let paths = degenerated_paths(g).paths;
    let degenerated_paths_short = paths.iter().all(|p| p.length() <= 2);
    let degenerated_edges_off_triangles = paths
        .iter()
        .filter(|p| p.length() == 1)
        .all(|p| g.neighbors(p.vertices[0]).intersection(&g.neighbors(p.vertices[1])).is_empty());
    let degenerated_paths_in_induced_c6 =
        paths.iter().filter(|p| p.length() >= 1).all(|p| in_induced_six_cycle(g, p));

    let degree_two_neighbor_bound = (0..g.n())
        .filter(|&v| g.degree(v) >= 3 && g.neighbors(v).intersection(&leaves).is_empty())
        .all(|v| {
            let c = neighbor_counts(g, &classes, v);
            2 * c.s_plus + c.s_minus <= 2
        });

    LemmaProbes {
        one_leaf_per_vertex,
        leaf_neighborhood_perfect_matching,
        leaf_neighbor_degree_at_least_5,
        degenerated_paths_short,
        degenerated_edges_off_triangles,
        degenerated_paths_in_induced_c6,
        degree_two_neighbor_bound,
    }
}

/// Whether `A(P)` is an open path that some chordless 6-cycle contains.
fn in_induced_six_cycle(g: &Graph, p: &DegeneratedPath) -> bool {
    let a = p.extension();
    if p.closed || a.len() > 6 {
        return false;
    }
    let on_a: VertexSet = a.iter().copied().collect();
    let outside = g.vertex_set().difference(&on_a);
    let k = 6 - (a.len() - 1);
    // try every closing path; chords may rule out the first one found
    let mut stack = vec![vec![p.after]];
    while let Some(path) = stack.pop() {
        let at = *path.last().unwrap();
        if path.len() == k {
            if g.has_edge(at, p.before) {
                let mut cycle = a.clone();
                cycle.extend(&path[1..]);
                if chordless(g, &cycle) {
                    return true;
                }
            }
            continue;
        }
        for w in g.neighbors(at).intersection(&outside).iter() {
            if !path.contains(&w) {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    false
}

fn chordless(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    (0..l).all(|i| (i + 2..l).all(|j| (i == 0 && j == l - 1) || !g.has_edge(cycle[i], cycle[j])))
}

/// Neighbor counts by class for a vertex of degree at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub struct NeighborCounts {
    /// Neighbors in `D_2^0`.
    pub r: usize,
    /// Neighbors in `D_2^{1+}`.
    pub s_plus: usize,
    /// Neighbors in `D_2^{1-}`.
    pub s_minus: usize,
    /// Neighbors outside `D_2`.
    pub t: usize,
}

fn neighbor_counts(g: &Graph, c: &DegreeClasses, v: usize) -> NeighborCounts {
    let nb = g.neighbors(v);
    NeighborCounts {
        r: nb.intersection(&c.d2_zero).len(),
        s_plus: nb.intersection(&c.d2_one_plus).len(),
        s_minus: nb.intersection(&c.d2_one_minus).len(),
        t: nb.difference(&c.d2).len(),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("degree-2 vertex {vertex} has no neighbor of degree above 2 to draw from")]
    NoHighNeighbor { vertex: usize },
    #[error("leaf {leaf} hangs off vertex {neighbor} of degree {degree}; the rules need degree at least 3")]
    LeafNeighbor { leaf: usize, neighbor: usize, degree: usize },
    #[error("adjacent vertices {u} and {v} both have two degree-2 neighbors")]
    AdjacentTwoTwo { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCharge {
    pub vertex: usize,
    pub degree: usize,
    pub class: DegreeClass,
    /// `4 ch(v) = 4 d(v) - 10`.
    pub initial_quarters: i64,
    pub final_quarters: i64,
    /// Present for vertices of degree at least 3 with no leaf neighbor.
    pub counts: Option<NeighborCounts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub quarters: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub vertices: Vec<VertexCharge>,
    pub transfers: Vec<Transfer>,
    pub initial_total_quarters: i64,
    pub final_total_quarters: i64,
}

impl ChargeLedger {
    /// `4 (2m - 5n/2) = 8m - 10n`.
    pub fn expected_total_quarters(g: &Graph) -> i64 {
        8 * g.m() as i64 - 10 * g.n() as i64
    }
}

/// Renders a quarter count as an exact fraction, e.g. `-6 -> "-3/2"`.
pub fn format_quarters(q: i64) -> String {
    let (num, den) = match (q % 4 == 0, q % 2 == 0) {
        (true, _) => return (q / 4).to_string(),
        (false, true) => (q / 2, 2),
        (false, false) => (q, 4),
    };
    format!("{num}/{den}")
}

fn check_preconditions(g: &Graph, c: &DegreeClasses) -> Result<(), DischargeError> {
    for v in c.d2_one_plus.union(&c.d2_one_minus).iter() {
        if !g.neighbors(v).iter().any(|w| g.degree(w) > 2) {
            return Err(DischargeError::NoHighNeighbor { vertex: v });
        }
    }
    for leaf in c.d1.iter() {
        let neighbor = g.neighbors(leaf).first().expect("leaf has a neighbor");
        let degree = g.degree(neighbor);
        if degree < 3 {
            return Err(DischargeError::LeafNeighbor { leaf, neighbor, degree });
        }
    }
    for u in c.d2_two.iter() {
        if let Some(v) = g.neighbors(u).intersection(&c.d2_two).iter().find(|&v| v > u) {
            return Err(DischargeError::AdjacentTwoTwo { u, v });
        }
    }
    Ok(())
}

/// Applies each rule once. Rejects graphs where a rule names a neighbor that
/// does not exist, or where rule transfers would leave a degree-1 or degree-2
/// vertex with nonzero final charge: a leaf on a vertex of degree below 3,
/// or two adjacent vertices of `D_2^2`.
pub fn discharge(g: &Graph) -> Result<ChargeLedger, DischargeError> {
    let c = degree_classes(g);
    check_preconditions(g, &c)?;
    let mut transfers = Vec::new();
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let high = || nb.iter().find(|&w| g.degree(w) > 2).expect("checked above");
        match c.class_of(g, v) {
            DegreeClass::TwoZero | DegreeClass::TwoTwo => {
                transfers.extend(nb.iter().map(|w| Transfer { from: w, to: v, quarters: 1 }));
            }
            DegreeClass::TwoOnePlus => transfers.push(Transfer { from: high(), to: v, quarters: 3 }),
            DegreeClass::TwoOneMinus => transfers.push(Transfer { from: high(), to: v, quarters: 2 }),
            DegreeClass::Leaf => transfers.push(Transfer { from: high(), to: v, quarters: 6 }),
            DegreeClass::Isolated | DegreeClass::High => {}
        }
    }
    let mut vertices: Vec<VertexCharge> = (0..g.n())
        .map(|v| {
            let initial = 4 * g.degree(v) as i64 - 10;
            let counts = (g.degree(v) >= 3 && g.neighbors(v).intersection(&c.d1).is_empty())
                .then(|| neighbor_counts(g, &c, v));
            VertexCharge {
                vertex: v,
                degree: g.degree(v),
                class: c.class_of(g, v),
                initial_quarters: initial,
                final_quarters: initial,
                counts,
            }
        })
        .collect();
    for t in &transfers {
        vertices[t.from].final_quarters -= t.quarters;
        vertices[t.to].final_quarters += t.quarters;
    }
    Ok(ChargeLedger {
        initial_total_quarters: vertices.iter().map(|v| v.initial_quarters).sum(),
        final_total_quarters: vertices.iter().map(|v| v.final_quarters).sum(),
        vertices,
        transfers,
    })
}

/// `4 (t + 3r/4 + s-/2 + s+/4 - 5/2)`: the final charge predicted from the
/// neighbor counts alone.
pub fn predicted_final_quarters(c: &NeighborCounts) -> i64 {
    (4 * c.t + 3 * c.r + 2 * c.s_minus + c.s_plus) as i64 - 10
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "conjecture", rename_all = "snake_case")]
pub enum Conjecture {
    /// `sat(n, [4,r]) = ⌈5n/4 - 3/2⌉` for large `n`, `r >= 5`.
    FourToR { r: usize },
    /// `sat(n, [5,r]) = ⌈10(n-1)/7⌉` for large `n`, `r >= 5`.
    FiveToR { r: usize },
    /// `sat(n, [s,r]) = sat(n, [s,inf))` for large `r` and `n`, `s >= 4`.
    Tail { s: usize, r: usize },
    /// `sat(n, 3Z+1) = ⌈5n/4 - 3/2⌉` for all `n >= 1`.
    ThreeZPlusOne,
    /// `sat(n, aZ+2) = n + C(a,2) - 1` for `a >= 2`, `n >= a+1`.
    ProgressionPlusTwo { a: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("unknown conjecture id {0}; expected 1 to 5")]
    UnknownId(u8),
    #[error("conjecture {id} needs parameter {name}")]
    MissingParameter { id: u8, name: &'static str },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

impl Conjecture {
    /// Builds a conjecture from its number and the parameters it uses
    /// (`r` for 1 and 2, `s` and `r` for 3, `a` for 5).
    pub fn from_id(
        id: u8,
        r: Option<usize>,
        s: Option<usize>,
        a: Option<usize>,
    ) -> Result<Self, ConjectureError> {
        let need = |v: Option<usize>, name| v.ok_or(ConjectureError::MissingParameter { id, name });
        let conj = match id {
            1 => Conjecture::FourToR { r: need(r, "r")? },
            2 => Conjecture::FiveToR { r: need(r, "r")? },
            3 => Conjecture::Tail { s: need(s, "s")?, r: need(r, "r")? },
            4 => Conjecture::ThreeZPlusOne,
            5 => Conjecture::ProgressionPlusTwo { a: need(a, "a")? },
            _ => return Err(ConjectureError::UnknownId(id)),
        };
        conj.validate()?;
        Ok(conj)
    }

    pub fn id(&self) -> u8 {
        match self {
            Conjecture::FourToR { .. } => 1,
            Conjecture::FiveToR { .. } => 2,
            Conjecture::Tail { .. } => 3,
            Conjecture::ThreeZPlusOne => 4,
            Conjecture::ProgressionPlusTwo { .. } => 5,
        }
    }

    fn validate(&self) -> Result<(), ConjectureError> {
        let bad = |m: String| Err(ConjectureError::Parameter(m));
        match *self {
            Conjecture::FourToR { r } | Conjecture::FiveToR { r } if r < 5 => bad(format!("r must be at least 5, got {r}")),
            Conjecture::Tail { s, r } if s < 4 || r < s => bad(format!("need s >= 4 and r >= s, got s={s}, r={r}")),
            Conjecture::ProgressionPlusTwo { a } if a < 2 => bad(format!("a must be at least 2, got {a}")),
            _ => Ok(()),
        }
    }

    /// The family whose saturation number is predicted.
    pub fn family(&self) -> Result<CycleFamily, FamilyError> {
        match *self {
            Conjecture::FourToR { r } => CycleFamily::interval(4, r),
            Conjecture::FiveToR { r } => CycleFamily::interval(5, r),
            Conjecture::Tail { s, r } => CycleFamily::interval(s, r),
            Conjecture::ThreeZPlusOne => CycleFamily::progression(3, 1),
            Conjecture::ProgressionPlusTwo { a } => CycleFamily::progression(a, 2),
        }
    }

    /// Claimed only beyond an unspecified threshold.
    pub fn asymptotic(&self) -> bool {
        matches!(self, Conjecture::FourToR { .. } | Conjecture::FiveToR { .. } | Conjecture::Tail { .. })
    }

    fn smallest_n(&self) -> usize {
        match *self {
            Conjecture::ProgressionPlusTwo { a } => a + 1,
            _ => 1,
        }
    }

    /// Closed-form prediction, when the conjecture has one.
    fn predicted(&self, n: usize) -> Option<u64> {
        let n64 = n as i64;
        match *self {
            Conjecture::FourToR { .. } | Conjecture::ThreeZPlusOne => Some(five_quarters(n)),
            Conjecture::FiveToR { .. } => Some(ceil_div(10 * (n64 - 1), 7).max(0) as u64),
            Conjecture::Tail { .. } => None,
            Conjecture::ProgressionPlusTwo { a } => Some((n + a * (a - 1) / 2 - 1) as u64),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub conjectured: Option<u64>,
    pub computed: Option<u64>,
    /// Certified lower bound when `computed` is absent.
    pub lower_bound: u64,
    pub status: Agreement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub id: u8,
    pub conjecture: Conjecture,
    pub family: CycleFamily,
    pub asymptotic: bool,
    pub rows: Vec<ConjectureRow>,
}

/// Compares a conjecture against exhaustive search for each `n` in `range`
/// that the conjecture covers. Rows whose search runs out of budget read
/// `unknown`; nothing here asserts the conjecture.
pub fn check_conjecture(
    conj: Conjecture,
    range: RangeInclusive<usize>,
    budget: &Budget,
) -> Result<ConjectureReport, ConjectureError> {
    conj.validate()?;
    let family = conj.family()?;
    let tail = match conj {
        Conjecture::Tail { s, .. } => Some(CycleFamily::ray(s)?),
        _ => None,
    };
    let start = (*range.start()).max(conj.smallest_n());
    let mut rows = Vec::new();
    for n in start..=*range.end() {
        let res = compute_sat(n, &family, SearchMode::Value, budget)?;
        let conjectured = match &tail {
            Some(t) => compute_sat(n, t, SearchMode::Value, budget)?.sat.map(|v| v as u64),
            None => conj.predicted(n),
        };
        let computed = res.sat.map(|v| v as u64);
        let status = match (conjectured, computed) {
            (Some(a), Some(b)) if a == b => Agreement::Agree,
            (Some(_), Some(_)) => Agreement::Disagree,
            _ => Agreement::Unknown,
        };
        rows.push(ConjectureRow { n, conjectured, computed, lower_bound: res.lower_bound as u64, status });
    }
    Ok(ConjectureReport { id: conj.id(), conjecture: conj, family, asymptotic: conj.asymptotic(), rows })
}
