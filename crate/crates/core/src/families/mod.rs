//! Applied families. Each one has a definitional route (colorings,
//! permutations, edge subsets) and a decomposition into reverse P-partition
//! generating functions whose Psi certificates are positive.

pub mod chromatic;
pub mod counterexamples;
pub mod eulerian;
pub mod llt;
pub mod matroid;
pub mod schur;
pub mod trees;
pub mod tutte;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::Result;
use crate::posets::{orientation_closure, DirectedGraph, Poset};
use crate::ppartitions::ostar_counts;
use crate::qsym::{Basis, QSymElement};
use crate::ring::{Mono, ParamPoly, Rational};

pub use chromatic::{
    chromatic_psi, chromatic_x, chromatic_x_orientations, is_k_balanced, k_balanced_psi, k_balanced_x,
};
pub use eulerian::{cycle_eulerian_q, eulerian_q};
pub use llt::{llt_psi, llt_unicellular, llt_vertical, llt_vertical_psi};
pub use matroid::{matroid_f, matroid_psi, Matroid};
pub use schur::{roichman_coeff, schur};
pub use trees::distinguishes_rooted_trees;
pub use tutte::{b_polynomial, b_psi, tutte_multivariate};

/// Sums `weight(kappa)` over all surjections `kappa: [n] -> [l]` (colors
/// 1-based, every `l`), collecting each into `M_{type(kappa)}`. A coloring
/// with weight `None` is skipped.
pub fn monomial_by_type(n: usize, mut weight: impl FnMut(&[usize]) -> Option<Mono>) -> QSymElement {
    let mut acc: HashMap<(Vec<u32>, Mono), i64> = HashMap::new();
    let mut kappa = vec![0usize; n];
    let mut counts = vec![0u32; n + 1];
    for l in 1..=n.max(1) {
        if n == 0 {
            break;
        }
        surj_rec(0, n, l, &mut kappa, &mut counts, 0, &mut |kappa, counts| {
            if let Some(m) = weight(kappa) {
                *acc.entry((counts[1..=l].to_vec(), m)).or_default() += 1;
            }
        });
    }
    let mut terms: BTreeMap<Composition, ParamPoly> = BTreeMap::new();
    for ((t, m), c) in acc {
        terms.entry(Composition(t)).or_default().add_term(m, Rational::from_integer(c.into()));
    }
    if n == 0 {
        terms.insert(Composition(Vec::new()), ParamPoly::one());
    }
    QSymElement::from_terms(n, Basis::M, terms)
}

fn surj_rec(
    i: usize,
    n: usize,
    l: usize,
    kappa: &mut [usize],
    counts: &mut [u32],
    used: usize,
    visit: &mut dyn FnMut(&[usize], &[u32]),
) {
    if i == n {
        if used == l {
            visit(kappa, counts);
        }
        return;
    }
    if n - i < l - used {
        return;
    }
    for c in 1..=l {
        let fresh = counts[c] == 0;
        counts[c] += 1;
        kappa[i] = c;
        surj_rec(i + 1, n, l, kappa, counts, used + fresh as usize, visit);
        counts[c] -= 1;
    }
}

/// Per-edge direction flags relative to the input graph: `forward[e]` keeps
/// edge `e` as given, otherwise it is reversed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    pub fn from_mask(num_edges: usize, mask: u64) -> Self {
        Orientation { forward: (0..num_edges).map(|e| mask >> e & 1 == 1).collect() }
    }

    /// Edges kept in their original direction.
    pub fn asc(&self) -> u32 {
        self.forward.iter().filter(|&&f| f).count() as u32
    }

    pub fn arcs(&self, g: &DirectedGraph) -> Vec<(usize, usize)> {
        g.edges.iter().zip(&self.forward).map(|(&(i, j), &f)| if f { (i, j) } else { (j, i) }).collect()
    }

    /// The orientation a coloring induces on a proper coloring: every edge
    /// points to the larger color.
    pub fn of_coloring(g: &DirectedGraph, kappa: &[usize]) -> Self {
        Orientation { forward: g.edges.iter().map(|&(i, j)| kappa[i] < kappa[j]).collect() }
    }

    /// All `2^|E|` orientations.
    pub fn all(g: &DirectedGraph) -> impl Iterator<Item = Orientation> + '_ {
        let m = g.edges.len();
        (0..1u64 << m).map(move |mask| Orientation::from_mask(m, mask))
    }
}

pub(crate) fn require_small_edge_set(g: &DirectedGraph) -> Result<()> {
    if g.edges.len() > 24 {
        return Err(crate::error::QsymError::Domain(format!(
            "{} edges is beyond the exhaustive orientation sum",
            g.edges.len()
        )));
    }
    Ok(())
}

/// Memoized `|O*_alpha(P)|` tables, keyed by the poset itself.
#[derive(Default)]
pub(crate) struct OstarCache {
    map: HashMap<Poset, BTreeMap<Composition, BigInt>>,
}

impl OstarCache {
    /// Counts for the dual of the closure of `arcs` (the poset carrying
    /// `omega` of the strict sum on the closure), or `None` on a directed cycle.
    pub(crate) fn dual_counts_of_arcs(
        &mut self,
        n: usize,
        arcs: &[(usize, usize)],
    ) -> Option<&BTreeMap<Composition, BigInt>> {
        let p = orientation_closure(n, arcs).ok()?;
        Some(self.counts(p.dual()))
    }

    pub(crate) fn counts(&mut self, p: Poset) -> &BTreeMap<Composition, BigInt> {
        self.map.entry(p).or_insert_with_key(ostar_counts)
    }
}

/// `acc += weight * counts`, coefficientwise.
pub(crate) fn add_certs(
    acc: &mut BTreeMap<Composition, ParamPoly>,
    counts: &BTreeMap<Composition, BigInt>,
    weight: Mono,
) {
    for (a, c) in counts {
        acc.entry(a.clone()).or_default().add_term(weight, Rational::from_integer(c.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_types_count_ordered_set_partitions() {
        // Fubini numbers
        for (n, fub) in [(1, 1), (2, 3), (3, 13), (4, 75)] {
            let e = monomial_by_type(n, |_| Some(Mono::default()));
            let total: Rational = e.terms().map(|(_, c)| c.as_constant().unwrap()).sum();
            assert_eq!(total, Rational::from_integer(fub.into()));
        }
    }
}
