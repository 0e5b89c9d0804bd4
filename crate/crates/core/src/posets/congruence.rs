//! Equivalence relations on posets, chain congruences and quotients.

use super::{LabeledPoset, Poset};
use crate::composition::mask_elems;
use crate::error::{QsymError, Result};

/// A set partition of `0..n`, blocks sorted and listed by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equivalence {
    blocks: Vec<u64>,
    class: Vec<usize>,
}

impl Equivalence {
    pub fn new(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut seen = 0u64;
        let mut masks = Vec::new();
        for b in blocks {
            if b.is_empty() {
                return Err(QsymError::Input("empty equivalence block".into()));
            }
            let mut m = 0u64;
            for &x in b {
                if x >= n || seen >> x & 1 == 1 {
                    return Err(QsymError::Input(format!(
                        "equivalence blocks must partition 1..{}; bad element {}",
                        n,
                        x + 1
                    )));
                }
                seen |= 1 << x;
                m |= 1 << x;
            }
            masks.push(m);
        }
        if seen.count_ones() as usize != n {
            return Err(QsymError::Input("equivalence blocks do not cover every element".into()));
        }
        Ok(Self::from_masks(n, masks))
    }

    fn from_masks(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_by_key(|m| m.trailing_zeros());
        let mut class = vec![0; n];
        for (i, &m) in masks.iter().enumerate() {
            for x in mask_elems(m) {
                class[x] = i;
            }
        }
        Equivalence { blocks: masks, class }
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_masks(n, (0..n).map(|x| 1u64 << x).collect())
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&m| mask_elems(m).collect()).collect()
    }

    /// Mask of the class of `x`.
    pub fn class_of(&self, x: usize) -> u64 {
        self.blocks[self.class[x]]
    }

    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.class[x] == self.class[y]
    }

    /// Every class is a union of fibers of `f` (given as fiber masks).
    pub fn respected_by(&self, fibers: &[u64]) -> bool {
        self.blocks.iter().all(|&b| fibers.iter().any(|&f| b & !f == 0))
    }

    /// Classes are chains, and `x < y` across classes forces `max[x] < min[y]`.
    pub fn is_chain_congruence(&self, p: &Poset) -> bool {
        if !self.blocks.iter().all(|&b| p.is_chain(b)) {
            return false;
        }
        let min = |b: u64| p.minimal_in(b).trailing_zeros() as usize;
        let max = |b: u64| p.maximal_in(b).trailing_zeros() as usize;
        p.relations().into_iter().all(|(x, y)| self.equiv(x, y) || p.lt(max(self.class_of(x)), min(self.class_of(y))))
    }

    /// Split the class containing `x` into `{x}` and the rest.
    pub fn split_off(&self, x: usize) -> Equivalence {
        let mut masks = self.blocks.clone();
        let i = self.class[x];
        masks[i] &= !(1u64 << x);
        masks.push(1u64 << x);
        masks.retain(|&m| m != 0);
        Self::from_masks(self.len(), masks)
    }
}

/// Smallest chain congruence coarser than `e` on a poset extending `p`:
/// classes are the strongly connected pieces of `<=_P` joined with `e`,
/// ordered inside by label and across by reachability.
pub fn chain_congruence_closure(p: &LabeledPoset, e: &Equivalence) -> Result<(LabeledPoset, Equivalence)> {
    p.require_natural()?;
    let n = p.len();
    if e.len() != n {
        return Err(QsymError::Input("equivalence and poset sizes differ".into()));
    }
    let mut reach: Vec<u64> = (0..n).map(|x| p.poset.up_set(x) | e.class_of(x)).collect();
    for k in 0..n {
        for x in 0..n {
            if reach[x] >> k & 1 == 1 {
                reach[x] |= reach[k];
            }
        }
    }
    let mut classes: Vec<u64> = Vec::new();
    let mut done = 0u64;
    for x in 0..n {
        if done >> x & 1 == 1 {
            continue;
        }
        let c = mask_elems(reach[x]).filter(|&y| reach[y] >> x & 1 == 1).fold(0u64, |m, y| m | 1 << y);
        done |= c;
        classes.push(c);
    }
    let e2 = Equivalence::from_masks(n, classes);
    let mut rel = Vec::new();
    for (x, &rx) in reach.iter().enumerate() {
        for y in 0..n {
            if x == y {
                continue;
            }
            let related = if e2.equiv(x, y) { p.label(x) < p.label(y) } else { rx >> y & 1 == 1 };
            if related {
                rel.push((x, y));
            }
        }
    }
    let p2 = Poset::from_relations(n, &rel)?;
    Ok((LabeledPoset::natural(p2), e2))
}

/// `P/E` with class weights `|C|`; classes listed along a linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub poset: Poset,
    pub classes: Vec<u64>,
    pub weights: Vec<u32>,
}

pub fn quotient(p: &Poset, e: &Equivalence) -> Result<Quotient> {
    if !e.is_chain_congruence(p) {
        return Err(QsymError::Domain("equivalence is not a chain congruence".into()));
    }
    let k = e.blocks().len();
    // order the classes by repeatedly taking a minimal class with smallest element
    let below = |a: u64, b: u64| {
        a != b && p.lt(p.maximal_in(a).trailing_zeros() as usize, p.minimal_in(b).trailing_zeros() as usize)
    };
    let mut order: Vec<u64> = Vec::with_capacity(k);
    let mut left: Vec<u64> = e.blocks().to_vec();
    while !left.is_empty() {
        let i = (0..left.len())
            .filter(|&i| !left.iter().any(|&b| below(b, left[i])))
            .min_by_key(|&i| left[i].trailing_zeros())
            .unwrap();
        order.push(left.remove(i));
    }
    let mut rel = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if below(order[i], order[j]) {
                rel.push((i, j));
            }
        }
    }
    Ok(Quotient {
        poset: Poset::from_relations(k, &rel)?,
        weights: order.iter().map(|c| c.count_ones()).collect(),
        classes: order,
    })
}

impl LabeledPoset {
    pub fn chain_congruence_closure(&self, e: &Equivalence) -> Result<(LabeledPoset, Equivalence)> {
        chain_congruence_closure(self, e)
    }
}

impl Poset {
    pub fn quotient(&self, e: &Equivalence) -> Result<Quotient> {
        quotient(self, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::chain;

    #[test]
    fn closure_of_figure_example() {
        // v1<v4, v2<v4, v2<v6, v3<v5 with classes {v1,v4},{v2,v5},{v3,v6}
        let p = Poset::from_relations(6, &[(0, 3), (1, 3), (1, 5), (2, 4)]).unwrap();
        let lp = LabeledPoset::new(p, (1..=6).collect()).unwrap();
        let e = Equivalence::new(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert!(!e.is_chain_congruence(&lp.poset));
        let (p2, e2) = lp.chain_congruence_closure(&e).unwrap();
        assert_eq!(e2.block_lists(), vec![vec![0, 3], vec![1, 2, 4, 5]]);
        assert!(e2.is_chain_congruence(&p2.poset));
        let order = [1, 2, 4, 5, 0, 3];
        for w in order.windows(2) {
            assert!(p2.poset.lt(w[0], w[1]));
        }
        let q = p2.poset.quotient(&e2).unwrap();
        assert_eq!(q.weights, vec![4, 2]);
        assert!(q.poset.lt(0, 1));
    }

    #[test]
    fn chain_quotient() {
        let e = Equivalence::new(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let q = chain(4).quotient(&e).unwrap();
        assert_eq!(q.weights, vec![2, 2]);
        let s = Equivalence::singletons(4);
        let (p2, e2) = LabeledPoset::natural(chain(4)).chain_congruence_closure(&s).unwrap();
        assert_eq!(p2.poset, chain(4));
        assert_eq!(e2, s);
    }

    #[test]
    fn bad_blocks() {
        assert!(Equivalence::new(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Equivalence::new(3, &[vec![0, 1]]).is_err());
    }
}
