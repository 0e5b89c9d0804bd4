//! Directed multigraphs and posets built from orientations.

use std::collections::BTreeMap;

use super::Poset;
use crate::error::{QsymError, Result};

/// Vertices `0..n`; `edges` is a multiset of arcs `(i, j)`, `i != j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > super::MAX_ELEMENTS {
            return Err(QsymError::Input("graph too large".into()));
        }
        for &(i, j) in &edges {
            if i >= n || j >= n {
                return Err(QsymError::Input(format!("edge ({}, {}) out of range", i + 1, j + 1)));
            }
            if i == j {
                return Err(QsymError::Input(format!("loop at vertex {}", i + 1)));
            }
        }
        Ok(DirectedGraph { n, edges })
    }

    /// Undirected pairs `{i < j}` with the number of arcs `i -> j` and `j -> i`.
    pub fn pairs(&self) -> Vec<((usize, usize), (u32, u32))> {
        let mut m: BTreeMap<(usize, usize), (u32, u32)> = BTreeMap::new();
        for &(i, j) in &self.edges {
            let e = m.entry((i.min(j), i.max(j))).or_default();
            if i < j {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        m.into_iter().collect()
    }

    pub fn is_simple(&self) -> bool {
        self.pairs().iter().all(|(_, (a, b))| a + b == 1)
    }

    /// Simple cycles of length >= 3 in the underlying undirected graph, each
    /// listed once as a vertex sequence starting at its smallest vertex.
    pub fn undirected_cycles(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let mut out = Vec::new();
        fn rec(adj: &[u64], s: usize, path: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
            let v = *path.last().unwrap();
            for u in crate::composition::mask_elems(adj[v]) {
                if u == s && path.len() >= 3 && path[1] < v {
                    out.push(path.clone());
                }
                if u > s && used >> u & 1 == 0 {
                    path.push(u);
                    rec(adj, s, path, used | 1 << u, out);
                    path.pop();
                }
            }
        }
        for s in 0..self.n {
            rec(&adj, s, &mut vec![s], 1 << s, &mut out);
        }
        out
    }
}

/// Transitive closure of arcs; errors if they contain a directed cycle.
pub fn orientation_closure(n: usize, arcs: &[(usize, usize)]) -> Result<Poset> {
    Poset::from_relations(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_orientation_is_a_chain() {
        let p = orientation_closure(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(p.is_chain(0b111));
        assert!(orientation_closure(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn cycles_of_square_with_diagonal() {
        let g = DirectedGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(g.undirected_cycles().len(), 3);
        assert!(DirectedGraph::new(2, vec![(1, 1)]).is_err());
    }
}
