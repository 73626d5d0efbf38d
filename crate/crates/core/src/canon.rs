//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree starts from the coarsest equitable refinement of the unit
//! partition, repeatedly individualizes a vertex of the first non-singleton
//! cell and refines again. Each discrete leaf induces a relabeling; the
//! canonical form is the relabeled graph with the smallest adjacency rows.
//! Twins (vertices with equal neighborhoods apart from each other) give
//! isomorphic subtrees, so only one twin per cell is ever branched on.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Canonical representative of a graph's isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabeled graph.
    pub graph6: String,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<usize>,
}

/// Isomorphism-invariant canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (graph, labeling) = canonize(g);
    CanonicalForm { graph6: graph.to_graph6(), labeling }
}

/// The canonically relabeled graph together with the relabeling used.
pub fn canonize(g: &Graph) -> (Graph, Vec<usize>) {
    let mut search = Search { g, best: None };
    let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search.descend(cells);
    let (_, labeling) = search.best.expect("search tree has at least one leaf");
    (g.relabel(&labeling), labeling)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            self.descend(child);
        }
    }

    fn twins(&self, u: usize, w: usize) -> bool {
        self.g.neighbors(u).without(w) == self.g.neighbors(w).without(u)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut labeling = vec![0; self.g.n()];
        for (label, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = label;
        }
        let mut rows = vec![VertexSet::empty(); self.g.n()];
        for v in 0..self.g.n() {
            rows[labeling[v]] = self.g.neighbors(v).iter().map(|w| labeling[w]).collect();
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, labeling));
        }
    }
}

/// Splits cells by neighbor counts into each splitter cell until stable.
/// New fragments are ordered by count, so the result is label-independent.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut split = false;
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(&splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                for chunk in keyed.chunk_by(|a, b| a.0 == b.0) {
                    next.push(chunk.iter().map(|&(_, v)| v).collect());
                }
                split |= next.len() - before > 1;
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        break;
    }
}
