//! Rooted trees, directed away from the root, told apart by their
//! chromatic quasisymmetric functions.

use std::collections::{BTreeMap, BTreeSet};

use crate::posets::{DirectedGraph, LabeledPoset, Poset};
use crate::ppartitions::kp_fundamental;
use crate::ring::{Mono, ParamPoly, Var};
use crate::textfmt::qsym_to_text;

use super::chromatic::chromatic_x;

/// Parent arrays (`parent[0]` unused, the root is vertex 0) of one rooted
/// tree per isomorphism class on `n` vertices.
pub fn rooted_trees(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    fn rec(i: usize, n: usize, parent: &mut Vec<usize>, seen: &mut BTreeSet<String>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            if seen.insert(ahu(parent, 0)) {
                out.push(parent.clone());
            }
            return;
        }
        for p in 0..i {
            parent[i] = p;
            rec(i + 1, n, parent, seen, out);
        }
    }
    rec(1, n, &mut parent, &mut seen, &mut out);
    out
}

/// Canonical nested-parenthesis encoding of the subtree at `v`.
fn ahu(parent: &[usize], v: usize) -> String {
    let mut kids: Vec<String> = (1..parent.len()).filter(|&c| parent[c] == v).map(|c| ahu(parent, c)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

pub fn tree_graph(parent: &[usize]) -> DirectedGraph {
    DirectedGraph::new(parent.len(), (1..parent.len()).map(|c| (parent[c], c)).collect()).unwrap()
}

pub fn tree_poset(parent: &[usize]) -> Poset {
    Poset::from_relations(parent.len(), &tree_graph(parent).edges).unwrap()
}

#[derive(Clone, Debug)]
pub struct RootedTreeReport {
    pub n: usize,
    pub trees: usize,
    /// Two non-isomorphic trees with equal `X`, as parent arrays.
    pub collision: Option<(Vec<usize>, Vec<usize>)>,
    /// A tree whose `q^{n-1}` coefficient is not the strict tree-poset function.
    pub top_coefficient_mismatch: Option<Vec<usize>>,
}

impl RootedTreeReport {
    pub fn passed(&self) -> bool {
        self.collision.is_none() && self.top_coefficient_mismatch.is_none()
    }
}

/// Computes `X_T(x;q)` for every rooted tree on `n` vertices, checks that
/// they are pairwise distinct, and that the top `q` coefficient equals
/// `K_{T,w}` for the tree poset with an order-reversing labeling.
pub fn distinguishes_rooted_trees(n: usize) -> RootedTreeReport {
    let trees = rooted_trees(n);
    let mut by_text: BTreeMap<String, usize> = BTreeMap::new();
    let mut collision = None;
    let mut top_coefficient_mismatch = None;
    let top = Mono::var(Var::Q, n.saturating_sub(1) as u32);
    for (i, t) in trees.iter().enumerate() {
        let x = chromatic_x(&tree_graph(t));
        let key = qsym_to_text(&x, false);
        if let Some(&j) = by_text.get(&key) {
            collision.get_or_insert_with(|| (trees[j].clone(), t.clone()));
        } else {
            by_text.insert(key, i);
        }
        let top_part = x.map_coeffs(|c| ParamPoly::constant(c.coeff(&top)));
        if top_part != kp_fundamental(&LabeledPoset::reversing(tree_poset(t))) {
            top_coefficient_mismatch.get_or_insert_with(|| t.clone());
        }
    }
    RootedTreeReport { n, trees: trees.len(), collision, top_coefficient_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_rooted_trees() {
        let counts: Vec<usize> = (1..=6).map(|n| rooted_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn small_trees_are_distinguished() {
        for n in 1..=4 {
            let r = distinguishes_rooted_trees(n);
            assert!(r.passed(), "{:?}", r);
        }
    }
}
