//! Independent brute force over all labeled graphs: no canonical forms, no
//! pruning and its own cycle finder based on vertex permutations.

/// Adjacency matrix of a labeled graph on `n <= 6` vertices.
#[derive(Clone)]
pub struct Labeled {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Labeled {
    #[allow(clippy::needless_range_loop)]
    fn from_mask(n: usize, mask: u32) -> Self {
        let mut adj = vec![vec![false; n]; n];
        let mut bit = 0;
        for j in 0..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
                bit += 1;
            }
        }
        Labeled { n, adj }
    }

    fn edges(&self) -> usize {
        (0..self.n).map(|i| (i + 1..self.n).filter(|&j| self.adj[i][j]).count()).sum()
    }

    /// Whether some ordering of `len` distinct vertices is a closed walk.
    fn has_cycle(&self, len: usize) -> bool {
        let mut seq = Vec::with_capacity(len);
        let mut used = vec![false; self.n];
        self.arrange(len, &mut seq, &mut used)
    }

    fn arrange(&self, len: usize, seq: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if seq.len() == len {
            return (0..len).all(|i| self.adj[seq[i]][seq[(i + 1) % len]]);
        }
        for v in 0..self.n {
            if !used[v] {
                used[v] = true;
                seq.push(v);
                let hit = self.arrange(len, seq, used);
                seq.pop();
                used[v] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }

    fn free(&self, lengths: &[usize]) -> bool {
        lengths.iter().all(|&l| l > self.n || !self.has_cycle(l))
    }

    fn saturated(&self, lengths: &[usize]) -> bool {
        if !self.free(lengths) {
            return false;
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.adj[i][j] {
                    let mut h = self.clone();
                    h.adj[i][j] = true;
                    h.adj[j][i] = true;
                    if h.free(lengths) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Minimum edge count of a saturated labeled graph on `n` vertices for the
/// cycle lengths in `lengths`.
pub fn brute_force_sat(n: usize, lengths: &[usize]) -> usize {
    let pairs = n * (n - 1) / 2;
    (0u32..1 << pairs)
        .map(|mask| Labeled::from_mask(n, mask))
        .filter(|g| g.saturated(lengths))
        .map(|g| g.edges())
        .min()
        .expect("the maximal free graphs are saturated")
}
