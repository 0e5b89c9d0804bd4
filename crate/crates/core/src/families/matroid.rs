//! Matroid quasisymmetric functions.

use std::collections::BTreeMap;

use crate::composition::{binomial, mask_elems, Composition};
use crate::error::{QsymError, Result};
use crate::posets::{LabeledPoset, Poset};
use crate::ppartitions::{for_each_coloring, kp_fundamental, PartitionExpansionReport};
use crate::qsym::{Basis, QSymElement};
use crate::ring::{Mono, ParamPoly, Rational};

use super::{add_certs, monomial_by_type, OstarCache};

/// A matroid on the ground set `0..n`, given by its bases (as masks, sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    bases: Vec<u64>,
}

impl Matroid {
    /// Validates equal cardinality and the basis-exchange axiom.
    pub fn new(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        if n > 63 {
            return Err(QsymError::Input("ground set too large".into()));
        }
        if bases.is_empty() {
            return Err(QsymError::Input("a matroid needs at least one basis".into()));
        }
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut m = 0u64;
            for &e in b {
                if e >= n {
                    return Err(QsymError::Input(format!("element {} outside the ground set", e + 1)));
                }
                if m >> e & 1 == 1 {
                    return Err(QsymError::Input(format!("element {} repeated in a basis", e + 1)));
                }
                m |= 1 << e;
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        let r = masks[0].count_ones();
        if masks.iter().any(|m| m.count_ones() != r) {
            return Err(QsymError::Input("bases have different cardinalities".into()));
        }
        let is_basis = |m: u64| masks.binary_search(&m).is_ok();
        for &b1 in &masks {
            for &b2 in &masks {
                for x in mask_elems(b1 & !b2) {
                    if !mask_elems(b2 & !b1).any(|y| is_basis(b1 & !(1 << x) | 1 << y)) {
                        return Err(QsymError::Input(format!(
                            "basis exchange fails for element {} between two bases",
                            x + 1
                        )));
                    }
                }
            }
        }
        Ok(Matroid { n, bases: masks })
    }

    /// `U^r_n`: every `r`-subset of `[n]` is a basis.
    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(QsymError::Input("rank exceeds ground set".into()));
        }
        let mut bases = Vec::new();
        crate::qsym::for_each_combination(n, r, |c| bases.push(c.to_vec()));
        Matroid::new(n, &bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn is_basis(&self, m: u64) -> bool {
        self.bases.binary_search(&m).is_ok()
    }

    /// `e < e'` iff `e ∈ B`, `e' ∉ B` and `B - e + e'` is a basis.
    pub fn basis_poset(&self, b: u64) -> Poset {
        let outside = ((1u64 << self.n) - 1) & !b;
        let mut rel = Vec::new();
        for e in mask_elems(b) {
            for f in mask_elems(outside) {
                if self.is_basis(b & !(1 << e) | 1 << f) {
                    rel.push((e, f));
                }
            }
        }
        Poset::from_relations(self.n, &rel).expect("exchange relations have height one")
    }

    /// A unique basis minimizes `sum_{e in B} f(e)`.
    pub fn is_generic(&self, f: &[usize]) -> bool {
        let mut best = usize::MAX;
        let mut ties = 0;
        for &b in &self.bases {
            let w: usize = mask_elems(b).map(|e| f[e]).sum();
            if w < best {
                best = w;
                ties = 1;
            } else if w == best {
                ties += 1;
            }
        }
        ties == 1
    }

    /// A generic `f` into `[n]` that is not injective, if one exists.
    pub fn generic_noninjective_witness(&self) -> Option<Vec<usize>> {
        let mut found = None;
        for_each_coloring(self.n, self.n.max(1), &|_| true, &mut |f| {
            if found.is_none() && self.is_generic(f) {
                let mut seen = 0u64;
                if f.iter().any(|&c| {
                    let dup = seen >> c & 1 == 1;
                    seen |= 1 << c;
                    dup
                }) {
                    found = Some(f.to_vec());
                }
            }
        });
        found
    }
}

/// `F(M,x)` in the monomial basis from the definition: generic maps of each
/// surjective type.
pub fn matroid_f(m: &Matroid) -> QSymElement {
    monomial_by_type(m.n, |f| m.is_generic(f).then(Mono::default))
}

/// `sum_B K_{P_B,w}`, `w` order-reversing, in the fundamental basis.
pub fn matroid_f_posets(m: &Matroid) -> QSymElement {
    let mut out = QSymElement::zero(m.n, Basis::F);
    for &b in &m.bases {
        out = out.add(&kp_fundamental(&LabeledPoset::reversing(m.basis_poset(b)))).unwrap();
    }
    out
}

/// Psi expansion of `omega F(M,x) = sum_B K_{P_B^*}`, natural labels on the
/// dual basis posets.
pub fn matroid_psi(m: &Matroid, check: bool) -> PartitionExpansionReport {
    let mut cache = OstarCache::default();
    let mut certs = BTreeMap::new();
    for &b in &m.bases {
        add_certs(&mut certs, cache.counts(m.basis_poset(b).dual()), Mono::default());
    }
    let mut r = PartitionExpansionReport::from_certificates(m.n, certs);
    if check {
        let brute = matroid_f(m);
        r.check("generic maps = sum over bases", brute == matroid_f_posets(m));
        r.check("omega of generic maps = Psi certificates", brute.omega() == r.element);
        r.check("certificates nonnegative integers", r.positive);
    }
    r
}

/// `(1^{a-1}, k+1, 1^{b-k})`, the compositions on which `|O*|` of `a`
/// minimal elements below `b` maximal ones is nonzero.
pub fn uniform_index(a: usize, b: usize, k: usize) -> Composition {
    let mut parts = vec![1u32; a - 1];
    parts.push(k as u32 + 1);
    parts.extend(std::iter::repeat_n(1, b - k));
    Composition(parts)
}

/// `sum_{k=0}^{b} c_k Psi_{(1^{a-1},k+1,1^{b-k})}` on `n = a + b` with
/// `c_k = binomial(n, k+1)`, except `c_0 = 1` unless `k0_binomial`.
pub fn bipartite_closed_form(a: usize, b: usize, k0_binomial: bool) -> QSymElement {
    let n = a + b;
    let mut e = QSymElement::zero(n, Basis::Psi);
    for k in 0..=b {
        let c = if k == 0 && !k0_binomial { 1.into() } else { binomial(n, k + 1) };
        e.add_term(uniform_index(a, b, k), &ParamPoly::constant(Rational::from_integer(c))).unwrap();
    }
    e
}

/// `omega F(U^r_n)`. The dual basis posets have `n-r` minimal elements below
/// `r` maximal ones, and `|O*| = r! (n-r)! / k!` there; at `k = 0` the
/// factor `z_{1^n} = n!` leaves coefficient 1.
pub fn uniform_closed_form(n: usize, r: usize) -> QSymElement {
    if r == 0 || r == n {
        let mut e = QSymElement::zero(n, Basis::Psi);
        e.add_term(Composition(vec![1; n]), &ParamPoly::one()).unwrap();
        return e;
    }
    bipartite_closed_form(n - r, r, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_parallel_elements() {
        let u = Matroid::uniform(2, 1).unwrap();
        let f = matroid_f(&u);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coeff(&Composition::of(&[1, 1])), ParamPoly::int(2));
        assert!(matroid_psi(&u, true).all_checks_passed());
        assert_eq!(uniform_closed_form(2, 1), matroid_psi(&u, false).element);
        assert_ne!(bipartite_closed_form(1, 1, true), matroid_psi(&u, false).element);
    }

    #[test]
    fn uniform_matroids_match_the_closed_form() {
        for n in 1..=5 {
            for r in 0..=n {
                let r_psi = matroid_psi(&Matroid::uniform(n, r).unwrap(), true);
                assert!(r_psi.all_checks_passed(), "n={} r={}", n, r);
                assert_eq!(uniform_closed_form(n, r), r_psi.element, "n={} r={}", n, r);
            }
        }
        // the roles of r and n-r matter once they differ
        let e = matroid_psi(&Matroid::uniform(3, 1).unwrap(), false).element;
        assert_ne!(bipartite_closed_form(1, 2, false), e);
        assert_eq!(e.coeff(&Composition::of(&[1, 2])), ParamPoly::int(3));
    }

    #[test]
    fn exchange_axiom_is_enforced() {
        assert!(Matroid::new(4, &[vec![0, 1], vec![2, 3]]).is_err());
        assert!(Matroid::new(3, &[vec![0, 1], vec![2]]).is_err());
        assert!(Matroid::new(3, &[vec![0], vec![1]]).is_ok());
    }

    #[test]
    fn coloop_gives_noninjective_generic_map() {
        // element 2 lies in every basis, so its value never matters
        let m = Matroid::new(3, &[vec![0, 2], vec![1, 2]]).unwrap();
        let w = m.generic_noninjective_witness().unwrap();
        assert!(m.is_generic(&w));
        assert!(Matroid::uniform(2, 1).unwrap().generic_noninjective_witness().is_none());
        // a repeated non-minimal value is harmless too
        let w = Matroid::uniform(3, 1).unwrap().generic_noninjective_witness().unwrap();
        assert_eq!(w, vec![1, 2, 2]);
    }
}
