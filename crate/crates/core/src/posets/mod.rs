//! Finite posets stored as closure bitsets, labelings, and standard
//! constructions.

mod congruence;
mod graph;
mod linext;
mod perm;
mod surj;

pub use congruence::{chain_congruence_closure, quotient, Equivalence, Quotient};
pub use graph::{orientation_closure, DirectedGraph};
pub use linext::involution_phi;
pub use perm::{des_set, dex_set, exc_set, inverse_perm, is_alpha_unimodal_perm};
pub use surj::{f_to_sigma, sigma_to_f, Surjection};

use std::collections::BTreeSet;

use crate::composition::{mask_elems, next_permutation, SetMask};
use crate::error::{QsymError, Result};

pub const MAX_ELEMENTS: usize = 63;

/// A partial order on `0..n`. `up[x]` has bit `y` set iff `x <= y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Poset {
    /// Transitive closure of the given strict relations `(x, y)` meaning `x < y`.
    pub fn from_relations(n: usize, rel: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(QsymError::Input(format!("at most {} elements supported", MAX_ELEMENTS)));
        }
        let mut up: Vec<u64> = (0..n).map(|x| 1u64 << x).collect();
        for &(x, y) in rel {
            if x >= n || y >= n {
                return Err(QsymError::Input(format!("relation ({}, {}) out of range", x, y)));
            }
            if x == y {
                return Err(QsymError::Input(format!("relation {} < {} is a loop", x, x)));
            }
            up[x] |= 1 << y;
        }
        for k in 0..n {
            for x in 0..n {
                if up[x] >> k & 1 == 1 {
                    up[x] |= up[k];
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && up[x] >> y & 1 == 1 && up[y] >> x & 1 == 1 {
                    return Err(QsymError::Input(format!(
                        "relations contain a cycle through elements {} and {}",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(Self::from_up(up))
    }

    fn from_up(up: Vec<u64>) -> Self {
        let n = up.len();
        let mut down = vec![0u64; n];
        for (x, &u) in up.iter().enumerate() {
            for y in mask_elems(u) {
                down[y] |= 1 << x;
            }
        }
        Poset { n, up, down }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements `>= x`.
    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    /// Elements `<= x`.
    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    /// Strict relations `(x, y)` with `x < y`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in mask_elems(self.up[x] & !(1 << x)) {
                out.push((x, y));
            }
        }
        out
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(x, y)| {
                let between = self.up[x] & self.down[y] & !(1 << x) & !(1 << y);
                between == 0
            })
            .collect()
    }

    /// Minimal elements of the induced subposet on `mask`.
    pub fn minimal_in(&self, mask: u64) -> u64 {
        mask_elems(mask).filter(|&x| self.down[x] & mask == 1 << x).fold(0, |m, x| m | 1 << x)
    }

    pub fn maximal_in(&self, mask: u64) -> u64 {
        mask_elems(mask).filter(|&x| self.up[x] & mask == 1 << x).fold(0, |m, x| m | 1 << x)
    }

    pub fn has_unique_min(&self, mask: u64) -> bool {
        mask != 0 && self.minimal_in(mask).count_ones() == 1
    }

    pub fn is_chain(&self, mask: u64) -> bool {
        let v: Vec<usize> = mask_elems(mask).collect();
        v.iter().enumerate().all(|(i, &x)| v[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    /// `mask` is closed downward.
    pub fn is_down_set(&self, mask: u64) -> bool {
        mask_elems(mask).all(|x| self.down[x] & !mask == 0)
    }

    pub fn induced(&self, elems: &[usize]) -> Poset {
        let up = elems
            .iter()
            .map(|&x| elems.iter().enumerate().filter(|&(_, &y)| self.leq(x, y)).fold(0u64, |m, (j, _)| m | 1 << j))
            .collect();
        Self::from_up(up)
    }

    pub fn dual(&self) -> Poset {
        Self::from_up(self.down.clone())
    }

    /// All linear extensions as element orders, lexicographic in element index.
    pub fn linear_extension_orders(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let ident: Vec<usize> = (0..self.n).collect();
        self.extensions_rec(&ident, 0, &mut Vec::with_capacity(self.n), &mut out);
        out
    }

    /// Backtracking over minimal elements, tried in order of `rank[x]`.
    fn extensions_rec(&self, rank: &[usize], placed: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == self.n {
            out.push(cur.clone());
            return;
        }
        let mut cands: Vec<usize> = mask_elems(self.minimal_in(self.all() & !placed)).collect();
        cands.sort_by_key(|&x| rank[x]);
        for x in cands {
            cur.push(x);
            self.extensions_rec(rank, placed | 1 << x, cur, out);
            cur.pop();
        }
    }

    pub fn count_linear_extensions(&self) -> usize {
        // memoized over down-sets; only used for small posets
        let mut memo = std::collections::HashMap::new();
        fn rec(p: &Poset, placed: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
            if placed == p.all() {
                return 1;
            }
            if let Some(&v) = memo.get(&placed) {
                return v;
            }
            let v = mask_elems(p.minimal_in(p.all() & !placed)).map(|x| rec(p, placed | 1 << x, memo)).sum();
            memo.insert(placed, v);
            v
        }
        rec(self, 0, &mut memo)
    }

    /// Labels `w(x)` obtained by repeatedly removing the minimal element of
    /// smallest index.
    pub fn canonical_natural_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        let mut placed = 0u64;
        for k in 1..=self.n {
            let x = self.minimal_in(self.all() & !placed).trailing_zeros() as usize;
            labels[x] = k;
            placed |= 1 << x;
        }
        labels
    }

    pub fn direct_sum(&self, other: &Poset) -> Poset {
        let mut rel = self.relations();
        rel.extend(other.relations().into_iter().map(|(x, y)| (x + self.n, y + self.n)));
        Poset::from_relations(self.n + other.n, &rel).unwrap()
    }

    /// Every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        let mut rel = self.relations();
        rel.extend(other.relations().into_iter().map(|(x, y)| (x + self.n, y + self.n)));
        for x in 0..self.n {
            for y in 0..other.n {
                rel.push((x, y + self.n));
            }
        }
        Poset::from_relations(self.n + other.n, &rel).unwrap()
    }

    /// Relation matrix as a bit string under the vertex permutation `perm`.
    fn encode(&self, perm: &[usize]) -> u64 {
        let mut code = 0u64;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.leq(perm[i], perm[j]) {
                    code |= 1 << (i * self.n + j);
                }
            }
        }
        code
    }

    /// Isomorphism invariant: minimum encoding over all relabelings (n <= 8).
    pub fn canonical_form(&self) -> Result<(usize, u64)> {
        if self.n > 8 {
            return Err(QsymError::Domain("canonical form limited to 8 elements".into()));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = u64::MAX;
        loop {
            best = best.min(self.encode(&perm));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok((self.n, best))
    }

    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool> {
        Ok(self.n == other.n && self.canonical_form()? == other.canonical_form()?)
    }

    /// Representatives of all isomorphism classes of posets on `n` elements,
    /// each with `0..n` a linear extension.
    pub fn all_up_to_iso(n: usize) -> Vec<Poset> {
        let mut level = vec![Poset::from_up(Vec::new())];
        for k in 0..n {
            let mut seen = BTreeSet::new();
            let mut next = Vec::new();
            for p in &level {
                let full = p.all();
                for d in crate::composition::submasks(full) {
                    if !p.is_down_set(d) {
                        continue;
                    }
                    let mut up = p.up.clone();
                    for x in mask_elems(d) {
                        up[x] |= 1 << k;
                    }
                    up.push(1 << k);
                    let q = Poset::from_up(up);
                    if seen.insert(q.canonical_form().unwrap()) {
                        next.push(q);
                    }
                }
            }
            level = next;
        }
        level
    }
}

/// A poset with a bijective labeling `w : elements -> [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledPoset {
    pub poset: Poset,
    labels: Vec<usize>,
    inv: Vec<usize>,
}

impl LabeledPoset {
    pub fn new(poset: Poset, labels: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if labels.len() != n {
            return Err(QsymError::Input(format!("expected {} labels, got {}", n, labels.len())));
        }
        let mut inv = vec![usize::MAX; n + 1];
        for (x, &l) in labels.iter().enumerate() {
            if l == 0 || l > n || inv[l] != usize::MAX {
                return Err(QsymError::Input(format!("labels {:?} are not a bijection onto [n]", labels)));
            }
            inv[l] = x;
        }
        Ok(LabeledPoset { poset, labels, inv })
    }

    /// The canonical natural labeling.
    pub fn natural(poset: Poset) -> Self {
        let labels = poset.canonical_natural_labels();
        Self::new(poset, labels).unwrap()
    }

    /// Labels reversing the canonical natural labeling, `n + 1 - w`.
    pub fn reversing(poset: Poset) -> Self {
        let n = poset.len();
        let labels = poset.canonical_natural_labels().into_iter().map(|l| n + 1 - l).collect();
        Self::new(poset, labels).unwrap()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    /// The element carrying label `l`.
    pub fn element(&self, l: usize) -> usize {
        self.inv[l]
    }

    pub fn is_natural(&self) -> bool {
        self.poset.relations().iter().all(|&(x, y)| self.labels[x] < self.labels[y])
    }

    pub fn is_order_reversing(&self) -> bool {
        self.poset.relations().iter().all(|&(x, y)| self.labels[x] > self.labels[y])
    }

    pub fn require_natural(&self) -> Result<()> {
        if self.is_natural() {
            Ok(())
        } else {
            Err(QsymError::Domain("operation requires a natural labeling".into()))
        }
    }

    /// Labels `n + 1 - w(x)`.
    pub fn complement_labels(&self) -> LabeledPoset {
        let n = self.len();
        let labels = self.labels.iter().map(|&l| n + 1 - l).collect();
        Self::new(self.poset.clone(), labels).unwrap()
    }

    /// The Jordan-Holder set: label words read along linear extensions,
    /// in lexicographic order.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut orders = Vec::new();
        self.poset.extensions_rec(&self.labels, 0, &mut Vec::with_capacity(self.len()), &mut orders);
        orders.into_iter().map(|o| o.into_iter().map(|x| self.labels[x]).collect()).collect()
    }

    /// `{w^{-1}(sigma_j) : j in [a, b]}` as a mask (positions 1-based).
    pub fn block_preimage(&self, sigma: &[usize], a: usize, b: usize) -> u64 {
        sigma[a - 1..b].iter().fold(0u64, |m, &l| m | 1 << self.inv[l])
    }
}

/// Chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Poset {
    let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_relations(n, &rel).unwrap()
}

pub fn antichain(n: usize) -> Poset {
    Poset::from_relations(n, &[]).unwrap()
}

/// Disjoint union of chains of the given lengths.
pub fn disjoint_chains(lengths: &[u32]) -> Poset {
    lengths.iter().fold(antichain(0), |p, &l| p.direct_sum(&chain(l as usize)))
}

/// Path `v_1 .. v_n` with `v_i > v_{i+1}` for `i` in `S`, `v_i < v_{i+1}` otherwise.
pub fn zigzag_path(s: SetMask, n: usize) -> Result<Poset> {
    if s & !crate::composition::full_mask(n) != 0 {
        return Err(QsymError::Input("S must be a subset of [n-1]".into()));
    }
    let rel: Vec<(usize, usize)> = (1..n).map(|i| if s >> i & 1 == 1 { (i, i - 1) } else { (i - 1, i) }).collect();
    Poset::from_relations(n, &rel)
}

/// Cycle `v_1 .. v_n v_1` oriented by `S` as for paths; `S` must be a proper
/// nonempty subset of `[n]`.
pub fn zigzag_cycle(s: SetMask, n: usize) -> Result<Poset> {
    let full = (1u64 << (n + 1)) - 2;
    if n < 2 || s & !full != 0 || s == 0 || s == full {
        return Err(QsymError::Input("zigzag cycle needs n >= 2 and S a proper nonempty subset of [n]".into()));
    }
    let rel: Vec<(usize, usize)> = (1..=n)
        .map(|i| {
            let (a, b) = (i - 1, i % n);
            if s >> i & 1 == 1 {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    Poset::from_relations(n, &rel)
}

/// `r` minimal elements each below all of `m` maximal ones.
pub fn complete_bipartite(r: usize, m: usize) -> Poset {
    let mut rel = Vec::new();
    for x in 0..r {
        for y in 0..m {
            rel.push((x, r + y));
        }
    }
    Poset::from_relations(r + m, &rel).unwrap()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::composition::mask_from;

    pub(crate) fn example_poset() -> LabeledPoset {
        let p = Poset::from_relations(5, &[(0, 2), (0, 3), (1, 3), (2, 4), (3, 4)]).unwrap();
        LabeledPoset::new(p, vec![1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn jordan_holder_set_of_example() {
        let l = example_poset().linear_extensions();
        let words: BTreeSet<String> = l.iter().map(|s| s.iter().map(|d| d.to_string()).collect()).collect();
        let want: BTreeSet<String> =
            ["13245", "12345", "21345", "12435", "21435"].iter().map(|s| s.to_string()).collect();
        assert_eq!(words, want);
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(Poset::from_relations(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn zigzag_path_word() {
        let p = zigzag_path(mask_from(&[3, 5]), 8).unwrap();
        let word: String = (0..7).map(|i| if p.lt(i, i + 1) { 'u' } else { 'd' }).collect();
        assert_eq!(word, "uududuu");
        assert!(zigzag_cycle(0, 4).is_err());
        assert!(zigzag_cycle(mask_from(&[1, 2, 3, 4]), 4).is_err());
    }

    #[test]
    fn poset_counts_up_to_iso() {
        let counts: Vec<usize> = (0..=5).map(|n| Poset::all_up_to_iso(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn small_constructions() {
        assert!(disjoint_chains(&[2]).is_isomorphic(&complete_bipartite(1, 1)).unwrap());
        assert_eq!(antichain(3).count_linear_extensions(), 6);
        assert_eq!(chain(4).linear_extension_orders().len(), 1);
        let labels = example_poset().poset.canonical_natural_labels();
        assert_eq!(labels, vec![1, 2, 3, 4, 5]);
    }
}
