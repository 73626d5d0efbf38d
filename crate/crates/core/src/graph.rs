//! Immutable simple undirected graphs on vertices `0..n` with bitset adjacency.
//!
//! Edge edits return new values, so a graph can be probed with many `G + e`
//! variants without aliasing. The graph6 codec follows the published format
//! bit for bit: header byte(s) for `n`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed
//! into 6-bit chunks offset by 63.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex count {0} exceeds the supported ceiling of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("endpoint {v} out of range for a graph on {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeAbsent(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("byte {0:#04x} outside the graph6 alphabet")]
    BadByte(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits in graph6 body")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple undirected graph on the labeled vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![VertexSet::empty(); n], m: 0 })
    }

    /// Builds a graph from unordered pairs; duplicate pairs collapse into one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            if !g.adj[u].contains(v) {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
                g.m += 1;
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let all = VertexSet::range(n);
        let adj = (0..n).map(|v| all.without(v)).collect();
        Ok(Graph { n, adj, m: n * (n - 1) / 2 })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Returns `G + uv`; the receiver is untouched.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if self.adj[u].contains(v) {
            return Err(GraphError::EdgePresent(u.min(v), u.max(v)));
        }
        Ok(self.with_edge(u, v))
    }

    /// Returns `G - uv`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if !self.adj[u].contains(v) {
            return Err(GraphError::EdgeAbsent(u.min(v), u.max(v)));
        }
        Ok(self.without_edge(u, v))
    }

    // Unchecked variants for hot loops that already know the pair is valid.
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && !self.adj[u].contains(v));
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g.m += 1;
        g
    }

    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.adj[u].contains(v));
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g.m -= 1;
        g
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            frontier = next.intersection(&within).difference(&seen);
            seen = seen.union(&frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, self.vertex_set()).len() == self.n
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reachable_within(v, left);
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// True when `uv` is an edge whose removal disconnects its endpoints.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        let h = self.without_edge(u, v);
        !h.reachable_within(u, h.vertex_set()).contains(v)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::empty(); self.n];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Graph { n: self.n, adj, m: self.m }
    }

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::with_capacity(4 + (self.n * self.n.saturating_sub(1) / 2).div_ceil(6));
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(b'~');
            for shift in [12, 6, 0] {
                out.push(((self.n >> shift) & 0x3f) as u8 + 63);
            }
        }
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                chunk = (chunk << 1) | self.adj[i].contains(j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(chunk + 63);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((chunk << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 output is ASCII")
    }

    /// Decodes one graph6 record. An optional `>>graph6<<` header is accepted;
    /// surrounding whitespace is not.
    pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
        let bytes = s.as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
        let (n, body) = if first == b'~' {
            if rest.first() == Some(&b'~') {
                // 36-bit sizes are far beyond the vertex ceiling
                let n = decode_size(rest.get(1..7).ok_or(Graph6Error::BadHeader)?)?;
                return Err(GraphError::TooLarge(n).into());
            }
            let n = decode_size(rest.get(..3).ok_or(Graph6Error::BadHeader)?)?;
            if n <= 62 {
                return Err(Graph6Error::BadHeader);
            }
            (n, &rest[3..])
        } else {
            let n = sixbits(first)? as usize;
            (n, rest)
        };
        check_order(n)?;
        let nbits = n * (n - 1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() != expected {
            return Err(Graph6Error::Length { expected, found: body.len() });
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = sixbits(body[k / 6])?;
                if byte & (0x20 >> (k % 6)) != 0 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                    g.m += 1;
                }
                k += 1;
            }
        }
        if nbits % 6 != 0 {
            let last = sixbits(body[expected - 1])?;
            if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
                return Err(Graph6Error::Padding);
            }
        }
        Ok(g)
    }

    /// Layout-free DOT with edges in sorted pair order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::Empty)
    } else if n > MAX_VERTICES {
        Err(GraphError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn sixbits(b: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Graph6Error::BadByte(b))
    }
}

fn decode_size(bytes: &[u8]) -> Result<usize, Graph6Error> {
    bytes.iter().try_fold(0usize, |acc, &b| Ok((acc << 6) | sixbits(b)? as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(k3().m(), 3);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn build_deduplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::OutOfRange { v: 3, n: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::empty(MAX_VERTICES + 1), Err(GraphError::TooLarge(MAX_VERTICES + 1)));
    }

    #[test]
    fn add_edge_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.add_edge(0, 2).unwrap(), k3());
        assert_eq!(p3.m(), 2);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.add_edge(0, 2).unwrap().m(), 5);
        assert_eq!(k3().add_edge(2, 0), Err(GraphError::EdgePresent(0, 2)));
        assert_eq!(k3().add_edge(1, 1), Err(GraphError::Loop(1)));
    }

    #[test]
    fn connectivity() {
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(c6.is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert_eq!(Graph::new(5, [(0, 3), (1, 4)]).unwrap().components().len(), 3);
    }

    #[test]
    fn bridges() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(g.is_bridge(2, 3));
        assert!(!g.is_bridge(0, 1));
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(k3().to_graph6(), "Bw");
        assert_eq!(Graph::new(1, []).unwrap().to_graph6(), "@");
        // petgraph's test vector: 5 vertices, edges AC AE BD DE
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::from_graph6("DQc").unwrap(), g);
        assert_eq!(Graph::from_graph6(">>graph6<<Bw").unwrap(), k3());
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::new(100, (0..99).map(|i| (i, i + 1))).unwrap();
        let s = g.to_graph6();
        assert!(s.starts_with("~?@c"));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(Graph::from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(Graph::from_graph6("?"), Err(Graph6Error::Graph(GraphError::Empty)));
        assert_eq!(Graph::from_graph6("Bww"), Err(Graph6Error::Length { expected: 1, found: 2 }));
        assert_eq!(Graph::from_graph6("B"), Err(Graph6Error::Length { expected: 1, found: 0 }));
        assert_eq!(Graph::from_graph6("Bx"), Err(Graph6Error::Padding));
        assert_eq!(Graph::from_graph6("B w"), Err(Graph6Error::Length { expected: 1, found: 2 }));
        assert_eq!(Graph::from_graph6("B\n"), Err(Graph6Error::BadByte(b'\n')));
        assert_eq!(Graph::from_graph6("~?"), Err(Graph6Error::BadHeader));
        assert_eq!(Graph::from_graph6("~???"), Err(Graph6Error::BadHeader));
        assert!(matches!(
            Graph::from_graph6("~~???~??"),
            Err(Graph6Error::Graph(GraphError::TooLarge(_)))
        ));
    }

    #[test]
    fn dot_is_sorted() {
        let g = Graph::new(3, [(2, 1), (0, 2)]).unwrap();
        assert_eq!(g.to_dot("G"), "graph G {\n  0;\n  1;\n  2;\n  0 -- 2;\n  1 -- 2;\n}\n");
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
                Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(32)) {
            prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        }

        #[test]
        fn add_then_remove_restores(g in arb_graph(20), seed in any::<u64>()) {
            let non: Vec<_> = g.non_edges().collect();
            prop_assume!(!non.is_empty());
            let (u, v) = non[(seed as usize) % non.len()];
            let h = g.add_edge(u, v).unwrap();
            prop_assert_eq!(h.m(), g.m() + 1);
            prop_assert_eq!(h.remove_edge(v, u).unwrap(), g.clone());
            for w in 0..h.n() {
                prop_assert!(!h.neighbors(w).contains(w));
                for x in h.neighbors(w).iter() {
                    prop_assert!(h.neighbors(x).contains(w));
                }
            }
            prop_assert_eq!(h.degrees().iter().sum::<usize>(), 2 * h.m());
        }
    }
}
