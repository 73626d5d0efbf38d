//! Named graph constructions and the table of known saturation numbers.
//!
//! Labeling contract (every generator is deterministic):
//!
//! * Friendship graph `F_k`: hub `a = 0`, triangle `i` (1-based) is
//!   `b_i = 2i-1`, `c_i = 2i`.
//! * `F_k^+`: the `F_k` core on `0..=2k`, then the pendant of core vertex `x`
//!   at `x + 2k + 1` (so `a' = 2k+1`, `b_i' = 2k+2i`, `c_i' = 2k+2i+1`).
//! * `Sat_n`: the core of the underlying `F_k^+` keeps its labels; the
//!   surviving pendants follow in the order `a', b_1', c_1', b_2', ...`.
//! * Star `K_{1,n-1}`: center 0.
//! * `J_{s,t}^{+r}`: path `x_1..x_s` on `0..s`, clique `y_1..y_t` on
//!   `s..s+t`, pendants of `y_1..y_r` on `s+t..s+t+r`.
//! * Cycle `C_n`: `0-1-...-(n-1)-0`; `C_{n-1}^+` is the cycle on `0..n-1` with
//!   the pendant `n-1` hanging off `n-2`. Both coincide with the J-graph
//!   labeling of `J_{n-1,1}` and `J_{n-2,1}^{+1}`.

use serde::Serialize;
use thiserror::Error;

use crate::families::CycleFamily;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    Friendship { k: usize },
    FriendshipPlus { k: usize },
    SatN(usize),
    Star(usize),
    JGraph { s: usize, t: usize, r: usize },
    Cycle(usize),
    CycleWithPendant(usize),
}

impl Construction {
    /// The J-graph from the `aZ+2` construction on `n` vertices:
    /// `J_{a(k-1)+2, a-1}^{+r}` with `n - 1 = ak + r`, `k >= 1`, `0 <= r < a`.
    pub fn progression_j_graph(a: usize, n: usize) -> Result<Construction, ConstructionError> {
        if a < 2 || n < a + 1 {
            return Err(ConstructionError::Parameter(format!(
                "aZ+2 construction needs a >= 2 and n >= a+1, got a={a}, n={n}"
            )));
        }
        let (k, r) = ((n - 1) / a, (n - 1) % a);
        Ok(Construction::JGraph { s: a * (k - 1) + 2, t: a - 1, r })
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |msg: String| Err(ConstructionError::Parameter(msg));
        match *self {
            Construction::SatN(0) => bad("Sat_n needs n >= 1".into()),
            Construction::Star(0) => bad("star needs n >= 1".into()),
            Construction::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Construction::CycleWithPendant(n) if n < 4 => {
                bad(format!("cycle with pendant needs n >= 4, got {n}"))
            }
            Construction::JGraph { s, t, r } if s < 2 || t < 1 || r > t => {
                bad(format!("J-graph needs s >= 2, t >= 1, 0 <= r <= t; got s={s}, t={t}, r={r}"))
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> Result<usize, ConstructionError> {
        self.validate()?;
        Ok(match *self {
            Construction::Friendship { k } => 2 * k + 1,
            Construction::FriendshipPlus { k } => 4 * k + 2,
            Construction::SatN(n) | Construction::Star(n) => n,
            Construction::Cycle(n) | Construction::CycleWithPendant(n) => n,
            Construction::JGraph { s, t, r } => s + t + r,
        })
    }

    /// Closed-form edge count; always equals `generate(self).m()`.
    pub fn edge_count(&self) -> Result<usize, ConstructionError> {
        self.validate()?;
        Ok(match *self {
            Construction::Friendship { k } => 3 * k,
            Construction::FriendshipPlus { k } => 5 * k + 1,
            Construction::SatN(n) => ceil_div(5 * n as i64 - 6, 4) as usize,
            Construction::Star(n) => n - 1,
            Construction::JGraph { s, t, r } => (s - 1) + 2 * t + t * (t - 1) / 2 + r,
            Construction::Cycle(n) | Construction::CycleWithPendant(n) => n,
        })
    }
}

/// Free-function form of [`Construction::edge_count`].
pub fn construction_edge_count(spec: &Construction) -> Result<usize, ConstructionError> {
    spec.edge_count()
}

pub fn generate(spec: &Construction) -> Result<Graph, ConstructionError> {
    spec.validate()?;
    let n = spec.vertex_count()?;
    let edges: Vec<(usize, usize)> = match *spec {
        Construction::Friendship { k } => friendship_edges(k),
        Construction::FriendshipPlus { k } => {
            let core = 2 * k + 1;
            let mut e = friendship_edges(k);
            e.extend((0..core).map(|x| (x, x + core)));
            e
        }
        Construction::SatN(n) => return sat_n(n),
        Construction::Star(n) => (1..n).map(|v| (0, v)).collect(),
        Construction::JGraph { s, t, r } => {
            let mut e: Vec<_> = (0..s - 1).map(|i| (i, i + 1)).collect();
            for y in s..s + t {
                e.push((0, y));
                e.push((s - 1, y));
                e.extend((y + 1..s + t).map(|z| (y, z)));
            }
            e.extend((0..r).map(|j| (s + j, s + t + j)));
            e
        }
        Construction::Cycle(n) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Construction::CycleWithPendant(n) => {
            let c = n - 1;
            let mut e: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
            e.push((c - 1, c));
            e
        }
    };
    Ok(Graph::new(n, edges)?)
}

fn friendship_edges(k: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]).collect()
}

/// `Sat_n` for `n = 4k + r`: `F_k^+ - {a', b_1'}`, `F_k^+ - {a'}`, `F_k^+`,
/// or `F_{k+1}^+ - {a', b_1', c_1'}` for `r = 0, 1, 2, 3`.
fn sat_n(n: usize) -> Result<Graph, ConstructionError> {
    let (k, r) = (n / 4, n % 4);
    let triangles = if r == 3 { k + 1 } else { k };
    let core = 2 * triangles + 1;
    // core vertices 0 (= a), 1 (= b_1), 2 (= c_1) lose their pendants
    let dropped: &[usize] = match r {
        0 => &[0, 1],
        1 => &[0],
        2 => &[],
        _ => &[0, 1, 2],
    };
    let mut edges = friendship_edges(triangles);
    let mut next = core;
    for x in (0..core).filter(|x| !dropped.contains(x)) {
        edges.push((x, next));
        next += 1;
    }
    debug_assert_eq!(next, n);
    Ok(Graph::new(n, edges)?)
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn binom2(a: i64) -> i64 {
    a * (a - 1) / 2
}

/// `⌈5n/4 - 3/2⌉`, the common value for `{4,5}`, `[4,inf)` and the
/// friendship-based construction.
pub fn five_quarters(n: usize) -> u64 {
    ceil_div(5 * n as i64 - 6, 4).max(0) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaStatus {
    Proven,
    Conjectured,
    /// Conjectured only beyond an unspecified threshold `n(r)`.
    ConjecturedLargeN,
    BoundsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FormulaValue {
    Exact { value: u64 },
    Bounds { lower: u64, upper: u64 },
}

/// One row of the formula table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaEntry {
    pub family: &'static str,
    pub closed_form: &'static str,
    pub valid_for: &'static str,
    pub status: FormulaStatus,
    pub source: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub family: String,
    pub n: usize,
    #[serde(flatten)]
    pub value: FormulaValue,
    pub status: FormulaStatus,
    pub entry: FormulaEntry,
}

impl FormulaResult {
    pub fn exact(&self) -> Option<u64> {
        match self.value {
            FormulaValue::Exact { value } => Some(value),
            FormulaValue::Bounds { .. } => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("n = {n} is outside the validity range ({valid_for}) of the formula for {family}")]
    Range { family: String, n: usize, valid_for: &'static str },
    #[error("no known formula for {0}")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    ContainsTriangle,
    FourFive,
    RayFour,
    RayFive,
    RaySix,
    SingleFour,
    SingleFive,
    SingleSix,
    Hamiltonian,
    SingleLong,
    EvenProgression,
    ThreeZPlusOne,
    ProgressionPlusTwo,
    FourToR,
    FiveToR,
    ConstructionBound,
}

const TABLE: &[(Rule, FormulaEntry)] = &[
    (Rule::ContainsTriangle, FormulaEntry {
        family: "any I with 3 in I",
        closed_form: "n - 1",
        valid_for: "n >= 1",
        status: FormulaStatus::Proven,
        source: "star K_{1,n-1}; connectivity lower bound",
    }),
    (Rule::FourFive, FormulaEntry {
        family: "{4,5}",
        closed_form: "ceil(5n/4 - 3/2)",
        valid_for: "n >= 1",
        status: FormulaStatus::Proven,
        source: "friendship-graph construction with discharging lower bound",
    }),
    (Rule::RayFour, FormulaEntry {
        family: "[4,inf)",
        closed_form: "ceil(5n/4 - 3/2)",
        valid_for: "n >= 1",
        status: FormulaStatus::Proven,
        source: "Ferrara et al.",
    }),
    (Rule::RayFive, FormulaEntry {
        family: "[5,inf)",
        closed_form: "ceil(10(n-1)/7)",
        valid_for: "n >= 5",
        status: FormulaStatus::Proven,
        source: "Ferrara et al.",
    }),
    (Rule::RaySix, FormulaEntry {
        family: "[6,inf)",
        closed_form: "ceil(3(n-1)/2)",
        valid_for: "n >= 10",
        status: FormulaStatus::Proven,
        source: "Ma, Hou, Hei and Gao",
    }),
    (Rule::SingleFour, FormulaEntry {
        family: "{4}",
        closed_form: "floor((3n-5)/2)",
        valid_for: "n >= 5",
        status: FormulaStatus::Proven,
        source: "Ollmann; Tuza; Fisher et al.",
    }),
    (Rule::SingleFive, FormulaEntry {
        family: "{5}",
        closed_form: "ceil(10(n-1)/7)",
        valid_for: "n >= 21",
        status: FormulaStatus::Proven,
        source: "Chen",
    }),
    (Rule::SingleSix, FormulaEntry {
        family: "{6}",
        closed_form: "4n/3 - 2 <= sat <= (4n+1)/3",
        valid_for: "n >= 9",
        status: FormulaStatus::BoundsOnly,
        source: "Lan, Shi, Wang and Zhang",
    }),
    (Rule::Hamiltonian, FormulaEntry {
        family: "{n} (Hamiltonian cycle C_n)",
        closed_form: "ceil(3n/2)",
        valid_for: "n = 17 or n >= 19",
        status: FormulaStatus::Proven,
        source: "Clark, Entringer and Shapiro; Lin et al.",
    }),
    (Rule::SingleLong, FormulaEntry {
        family: "{r}, r >= 7",
        closed_form: "(1 + 1/(r+2))n - 1 < sat < (1 + 1/(r-4))n + C(r-4,2)",
        valid_for: "n >= 2r - 5",
        status: FormulaStatus::BoundsOnly,
        source: "Furedi and Kim",
    }),
    (Rule::EvenProgression, FormulaEntry {
        family: "2Z+2",
        closed_form: "n",
        valid_for: "n >= 3",
        status: FormulaStatus::Proven,
        source: "odd cycles and C_{n-1}^+; connectivity and acyclicity lower bound",
    }),
    (Rule::ThreeZPlusOne, FormulaEntry {
        family: "3Z+1",
        closed_form: "ceil(5n/4 - 3/2)",
        valid_for: "n >= 1",
        status: FormulaStatus::Conjectured,
        source: "conjecture",
    }),
    (Rule::ProgressionPlusTwo, FormulaEntry {
        family: "aZ+2, a >= 3",
        closed_form: "n + C(a,2) - 1",
        valid_for: "n >= a + 1",
        status: FormulaStatus::Conjectured,
        source: "conjecture; J-graph construction gives the upper bound",
    }),
    (Rule::FourToR, FormulaEntry {
        family: "[4,r], r >= 6",
        closed_form: "ceil(5n/4 - 3/2)",
        valid_for: "n >= n(r), threshold unknown",
        status: FormulaStatus::ConjecturedLargeN,
        source: "conjecture",
    }),
    (Rule::FiveToR, FormulaEntry {
        family: "[5,r], r >= 6",
        closed_form: "ceil(10(n-1)/7)",
        valid_for: "n >= n(r), threshold unknown",
        status: FormulaStatus::ConjecturedLargeN,
        source: "conjecture",
    }),
    (Rule::ConstructionBound, FormulaEntry {
        family: "I with {3,4} ∩ I = {4} and {5,6,7} ∩ I nonempty",
        closed_form: "n - 1 <= sat <= ceil(5n/4 - 3/2)",
        valid_for: "n >= 1",
        status: FormulaStatus::BoundsOnly,
        source: "Sat_n construction; connectivity lower bound",
    }),
];

/// Every row of the formula table, for dumping.
pub fn formula_table() -> Vec<FormulaEntry> {
    TABLE.iter().map(|(_, e)| *e).collect()
}

fn rule_for(family: &CycleFamily, n: usize) -> Option<Rule> {
    use CycleFamily::*;
    if family.contains(3) {
        return Some(Rule::ContainsTriangle);
    }
    let rule = match family {
        Interval(4, 5) => Rule::FourFive,
        Ray(4) => Rule::RayFour,
        Ray(5) => Rule::RayFive,
        Ray(6) => Rule::RaySix,
        FiniteSet(v) if v[..] == [4] => Rule::SingleFour,
        FiniteSet(v) if v[..] == [5] => Rule::SingleFive,
        FiniteSet(v) if v[..] == [6] => Rule::SingleSix,
        FiniteSet(v) if v.len() == 1 && v[0] == n && v[0] >= 7 && (n == 17 || n >= 19) => {
            Rule::Hamiltonian
        }
        FiniteSet(v) if v.len() == 1 && v[0] >= 7 => Rule::SingleLong,
        Progression { step: 2, offset: 2 } => Rule::EvenProgression,
        Progression { step: 3, offset: 1 } => Rule::ThreeZPlusOne,
        Progression { step, offset: 2 } if *step >= 3 => Rule::ProgressionPlusTwo,
        Interval(4, _) => Rule::FourToR,
        Interval(5, _) => Rule::FiveToR,
        _ if family.contains(4) && [5, 6, 7].iter().any(|&l| family.contains(l)) => {
            Rule::ConstructionBound
        }
        _ => return None,
    };
    Some(rule)
}

/// Looks up `sat(n, C_I)` in the formula table. Values are never extrapolated
/// outside the stated validity range.
pub fn sat_formula(family: &CycleFamily, n: usize) -> Result<FormulaResult, FormulaError> {
    let rule = rule_for(family, n).ok_or_else(|| FormulaError::Unknown(family.to_string()))?;
    let entry = TABLE.iter().find(|(r, _)| *r == rule).map(|(_, e)| *e).expect("rule in table");
    let ni = n as i64;
    let min_n: i64 = match (rule, family) {
        (Rule::RayFive, _) => 5,
        (Rule::RaySix, _) => 10,
        (Rule::SingleFour, _) => 5,
        (Rule::SingleFive, _) => 21,
        (Rule::SingleSix, _) => 9,
        (Rule::EvenProgression, _) => 3,
        (Rule::SingleLong, CycleFamily::FiniteSet(v)) => 2 * v[0] as i64 - 5,
        (Rule::ProgressionPlusTwo, CycleFamily::Progression { step, .. }) => *step as i64 + 1,
        _ => 1,
    };
    if ni < min_n {
        return Err(FormulaError::Range { family: family.to_string(), n, valid_for: entry.valid_for });
    }
    let exact = |v: i64| FormulaValue::Exact { value: v.max(0) as u64 };
    let value = match (rule, family) {
        (Rule::ContainsTriangle, _) => exact(ni - 1),
        (Rule::FourFive | Rule::RayFour | Rule::ThreeZPlusOne | Rule::FourToR, _) => {
            exact(five_quarters(n) as i64)
        }
        (Rule::RayFive | Rule::SingleFive | Rule::FiveToR, _) => exact(ceil_div(10 * (ni - 1), 7)),
        (Rule::RaySix, _) => exact(ceil_div(3 * (ni - 1), 2)),
        (Rule::SingleFour, _) => exact(floor_div(3 * ni - 5, 2)),
        (Rule::SingleSix, _) => FormulaValue::Bounds {
            lower: ceil_div(4 * ni - 6, 3) as u64,
            upper: floor_div(4 * ni + 1, 3) as u64,
        },
        (Rule::Hamiltonian, _) => exact(ceil_div(3 * ni, 2)),
        (Rule::SingleLong, CycleFamily::FiniteSet(v)) => {
            let r = v[0] as i64;
            // both inequalities are strict
            let lower = floor_div((r + 3) * ni - (r + 2), r + 2) + 1;
            let upper = ceil_div((r - 3) * ni + (r - 4) * binom2(r - 4), r - 4) - 1;
            FormulaValue::Bounds { lower: lower as u64, upper: upper as u64 }
        }
        (Rule::EvenProgression, _) => exact(ni),
        (Rule::ProgressionPlusTwo, CycleFamily::Progression { step, .. }) => {
            exact(ni + binom2(*step as i64) - 1)
        }
        (Rule::ConstructionBound, _) => FormulaValue::Bounds {
            lower: (ni - 1) as u64,
            upper: five_quarters(n),
        },
        _ => unreachable!("rule/family pairing fixed by rule_for"),
    };
    Ok(FormulaResult { family: family.to_string(), n, value, status: entry.status, entry })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> CycleFamily {
        s.parse().unwrap()
    }

    #[test]
    fn sat_n_examples() {
        let g = generate(&Construction::SatN(10)).unwrap();
        assert_eq!((g.n(), g.m()), (10, 11));
        assert_eq!(g, generate(&Construction::FriendshipPlus { k: 2 }).unwrap());
        let g7 = generate(&Construction::SatN(7)).unwrap();
        assert_eq!((g7.n(), g7.m()), (7, 8));
        // Sat_7 keeps the pendants of b_2 and c_2 only
        assert_eq!(g7.degrees(), vec![4, 2, 2, 3, 3, 1, 1]);
        assert_eq!(generate(&Construction::SatN(3)).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(generate(&Construction::SatN(1)).unwrap().m(), 0);
        assert_eq!(generate(&Construction::SatN(2)).unwrap(), Graph::complete(2).unwrap());
        let g4 = generate(&Construction::SatN(4)).unwrap();
        assert_eq!(g4, Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn sat_n_counts_up_to_200() {
        for n in 1..=200 {
            let g = generate(&Construction::SatN(n)).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.m() as u64, five_quarters(n), "n={n}");
            assert_eq!(Construction::SatN(n).edge_count().unwrap(), g.m());
            assert!(g.is_connected());
        }
        assert_eq!(Construction::SatN(9).edge_count().unwrap(), 10);
    }

    #[test]
    fn friendship_counts() {
        for k in 0..10 {
            let f = generate(&Construction::Friendship { k }).unwrap();
            assert_eq!((f.n(), f.m()), (2 * k + 1, 3 * k));
            let spec = Construction::FriendshipPlus { k };
            let fp = generate(&spec).unwrap();
            assert_eq!((fp.n(), fp.m()), (4 * k + 2, 5 * k + 1));
            assert_eq!(spec.edge_count().unwrap(), fp.m());
        }
        assert_eq!(generate(&Construction::Friendship { k: 0 }).unwrap().m(), 0);
    }

    #[test]
    fn j_graph_figure_example() {
        let spec = Construction::JGraph { s: 8, t: 2, r: 1 };
        let g = generate(&spec).unwrap();
        assert_eq!((g.n(), g.m()), (11, 13));
        assert_eq!(spec.edge_count().unwrap(), 13);
        assert!(g.has_edge(0, 8) && g.has_edge(7, 9) && g.has_edge(8, 9) && g.has_edge(8, 10));
    }

    #[test]
    fn cycles_are_j_graphs() {
        for n in 3..=20 {
            assert_eq!(
                generate(&Construction::Cycle(n)).unwrap(),
                generate(&Construction::JGraph { s: n - 1, t: 1, r: 0 }).unwrap()
            );
        }
        for n in 4..=20 {
            assert_eq!(
                generate(&Construction::CycleWithPendant(n)).unwrap(),
                generate(&Construction::JGraph { s: n - 2, t: 1, r: 1 }).unwrap()
            );
        }
    }

    #[test]
    fn progression_j_graph_counts() {
        for a in 2..=5usize {
            for n in a + 1..=30 {
                let spec = Construction::progression_j_graph(a, n).unwrap();
                let g = generate(&spec).unwrap();
                assert_eq!(g.n(), n);
                assert_eq!(g.m(), n + a * (a - 1) / 2 - 1, "a={a} n={n}");
                assert_eq!(spec.edge_count().unwrap(), g.m());
            }
        }
        assert!(Construction::progression_j_graph(3, 3).is_err());
        assert!(Construction::progression_j_graph(1, 5).is_err());
    }

    #[test]
    fn parameter_errors() {
        for bad in [
            Construction::SatN(0),
            Construction::Star(0),
            Construction::Cycle(2),
            Construction::CycleWithPendant(3),
            Construction::JGraph { s: 1, t: 1, r: 0 },
            Construction::JGraph { s: 3, t: 0, r: 0 },
            Construction::JGraph { s: 3, t: 1, r: 2 },
        ] {
            assert!(matches!(generate(&bad), Err(ConstructionError::Parameter(_))), "{bad:?}");
            assert!(bad.edge_count().is_err());
        }
        assert!(matches!(generate(&Construction::Star(300)), Err(ConstructionError::Graph(_))));
    }

    #[test]
    fn formula_examples() {
        let f = sat_formula(&fam("{4,5}"), 8).unwrap();
        assert_eq!((f.exact(), f.status), (Some(9), FormulaStatus::Proven));
        let f = sat_formula(&fam("{4}"), 5).unwrap();
        assert_eq!((f.exact(), f.status), (Some(5), FormulaStatus::Proven));
        let f = sat_formula(&fam("3Z+2"), 10).unwrap();
        assert_eq!((f.exact(), f.status), (Some(12), FormulaStatus::Conjectured));
        assert_eq!(sat_formula(&fam("{4,5}"), 1).unwrap().exact(), Some(0));
        assert_eq!(sat_formula(&fam("{5,4}"), 12).unwrap().exact(), Some(14));
        assert_eq!(sat_formula(&fam("{3}"), 6).unwrap().exact(), Some(5));
        assert_eq!(sat_formula(&fam("2Z+2"), 6).unwrap().exact(), Some(6));
        assert_eq!(sat_formula(&fam("[5,inf)"), 8).unwrap().exact(), Some(10));
        assert_eq!(sat_formula(&fam("[6,inf)"), 11).unwrap().exact(), Some(15));
        assert_eq!(sat_formula(&fam("{17}"), 17).unwrap().exact(), Some(26));
        assert_eq!(
            sat_formula(&fam("[4,6]"), 8).unwrap().status,
            FormulaStatus::ConjecturedLargeN
        );
    }

    #[test]
    fn formula_ranges_are_enforced() {
        assert!(matches!(sat_formula(&fam("{5}"), 5), Err(FormulaError::Range { .. })));
        assert!(matches!(sat_formula(&fam("{4}"), 4), Err(FormulaError::Range { .. })));
        assert!(matches!(sat_formula(&fam("2Z+2"), 2), Err(FormulaError::Range { .. })));
        assert!(matches!(sat_formula(&fam("4Z+2"), 4), Err(FormulaError::Range { .. })));
        assert!(matches!(sat_formula(&fam("{18}"), 18), Err(FormulaError::Range { .. })));
        assert!(matches!(sat_formula(&fam("{5,9}"), 10), Err(FormulaError::Unknown(_))));
    }

    #[test]
    fn bounds_entries() {
        let f = sat_formula(&fam("{6}"), 9).unwrap();
        assert_eq!(f.value, FormulaValue::Bounds { lower: 10, upper: 12 });
        // r = 7, n = 9: 10/9 * 9 - 1 = 9 < sat < 4/3 * 9 + 3 = 15
        let f = sat_formula(&fam("{7}"), 9).unwrap();
        assert_eq!(f.value, FormulaValue::Bounds { lower: 10, upper: 14 });
        let f = sat_formula(&fam("{4,6}"), 10).unwrap();
        assert_eq!(f.value, FormulaValue::Bounds { lower: 9, upper: 11 });
    }

    #[test]
    fn table_dump_serializes() {
        assert_eq!(formula_table().len(), TABLE.len());
        let f = sat_formula(&fam("{4,5}"), 8).unwrap();
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["kind"], "exact");
        assert_eq!(json["value"], 9);
        assert_eq!(json["status"], "proven");
    }
}
