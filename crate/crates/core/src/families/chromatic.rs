//! Chromatic quasisymmetric functions and their k-balanced refinement.

use std::collections::BTreeMap;

use crate::error::{QsymError, Result};
use crate::posets::{orientation_closure, DirectedGraph, LabeledPoset};
use crate::ppartitions::{kp_fundamental, PartitionExpansionReport};
use crate::qsym::{Basis, QSymElement};
use crate::ring::{Mono, ParamPoly, Var};

use super::{add_certs, monomial_by_type, require_small_edge_set, Orientation, OstarCache};

fn asc_of(g: &DirectedGraph, kappa: &[usize]) -> u32 {
    g.edges.iter().filter(|&&(i, j)| kappa[i] < kappa[j]).count() as u32
}

fn is_proper(g: &DirectedGraph, kappa: &[usize]) -> bool {
    g.edges.iter().all(|&(i, j)| kappa[i] != kappa[j])
}

/// `X_G(x;q)` in the monomial basis: proper colorings weighted by `q^asc`,
/// parallel edges counted with multiplicity.
pub fn chromatic_x(g: &DirectedGraph) -> QSymElement {
    monomial_by_type(g.n, |k| is_proper(g, k).then(|| Mono::var(Var::Q, asc_of(g, k))))
}

type ArcVisitor<'a> = dyn FnMut(&Orientation, &[(usize, usize)]) + 'a;

/// Orientations whose closure is a poset and which pass `keep`, with that poset.
fn for_each_acyclic(g: &DirectedGraph, keep: &dyn Fn(&Orientation) -> bool, visit: &mut ArcVisitor) -> Result<()> {
    require_small_edge_set(g)?;
    for theta in Orientation::all(g) {
        let arcs = theta.arcs(g);
        if keep(&theta) && orientation_closure(g.n, &arcs).is_ok() {
            visit(&theta, &arcs);
        }
    }
    Ok(())
}

fn strict_sum(g: &DirectedGraph, keep: &dyn Fn(&Orientation) -> bool) -> Result<QSymElement> {
    let mut out = QSymElement::zero(g.n, Basis::F);
    for_each_acyclic(g, keep, &mut |theta, arcs| {
        let p = orientation_closure(g.n, arcs).unwrap();
        let k = kp_fundamental(&LabeledPoset::reversing(p));
        out = out.add(&k.scale(&ParamPoly::monomial(crate::ring::rat(1), Mono::var(Var::Q, theta.asc())))).unwrap();
    })?;
    Ok(out)
}

fn psi_sum(g: &DirectedGraph, keep: &dyn Fn(&Orientation) -> bool) -> Result<PartitionExpansionReport> {
    let mut cache = OstarCache::default();
    let mut certs = BTreeMap::new();
    for_each_acyclic(g, keep, &mut |theta, arcs| {
        let counts = cache.dual_counts_of_arcs(g.n, arcs).unwrap();
        add_certs(&mut certs, counts, Mono::var(Var::Q, theta.asc()));
    })?;
    Ok(PartitionExpansionReport::from_certificates(g.n, certs))
}

/// `X_G` as `sum over acyclic orientations of q^asc K_{P(theta),w}`, `w`
/// order-reversing, in the fundamental basis.
pub fn chromatic_x_orientations(g: &DirectedGraph) -> Result<QSymElement> {
    strict_sum(g, &|_| true)
}

/// Psi expansion of `omega X_G(x;q)`; the certificate of `alpha` is
/// `sum_theta q^asc |O*_alpha(P(theta)^*)|`. With `check`, the coloring and
/// orientation routes are compared against it.
pub fn chromatic_psi(g: &DirectedGraph, check: bool) -> Result<PartitionExpansionReport> {
    let mut r = psi_sum(g, &|_| true)?;
    if check {
        let colorings = chromatic_x(g);
        let orient = chromatic_x_orientations(g)?;
        r.check("colorings = orientation sum", colorings == orient);
        r.check("omega of colorings = Psi certificates", colorings.omega() == r.element);
        r.check("certificates in N[q]", r.positive);
    }
    Ok(r)
}

/// Every undirected cycle of `g`, traversed either way, has at least `k`
/// edges along and `k` edges against the traversal under `theta`.
pub fn is_k_balanced(theta: &Orientation, g: &DirectedGraph, k: u32) -> bool {
    let arcs = theta.arcs(g);
    g.undirected_cycles().iter().all(|cyc| {
        let len = cyc.len();
        let mut along = 0;
        for t in 0..len {
            let (u, v) = (cyc[t], cyc[(t + 1) % len]);
            if arcs.contains(&(u, v)) {
                along += 1;
            }
        }
        along >= k && len as u32 - along >= k
    })
}

fn require_k_balanced_input(g: &DirectedGraph, k: u32) -> Result<()> {
    if !g.is_simple() {
        return Err(QsymError::Input("k-balanced functions need an oriented graph without multi-edges".into()));
    }
    if k == 0 {
        return Err(QsymError::Input("k must be at least 1".into()));
    }
    Ok(())
}

/// `X^k_G(x;q)`: proper colorings whose induced orientation is k-balanced.
pub fn k_balanced_x(g: &DirectedGraph, k: u32) -> Result<QSymElement> {
    require_k_balanced_input(g, k)?;
    let cycles_free = g.undirected_cycles().is_empty();
    Ok(monomial_by_type(g.n, |kap| {
        if !is_proper(g, kap) {
            return None;
        }
        if !cycles_free && !is_k_balanced(&Orientation::of_coloring(g, kap), g, k) {
            return None;
        }
        Some(Mono::var(Var::Q, asc_of(g, kap)))
    }))
}

/// Psi expansion of `omega X^k_G`, summing over k-balanced orientations.
pub fn k_balanced_psi(g: &DirectedGraph, k: u32, check: bool) -> Result<PartitionExpansionReport> {
    require_k_balanced_input(g, k)?;
    let keep = |theta: &Orientation| is_k_balanced(theta, g, k);
    let mut r = psi_sum(g, &keep)?;
    if check {
        let colorings = k_balanced_x(g, k)?;
        let orient = strict_sum(g, &keep)?;
        r.check("colorings = k-balanced orientation sum", colorings == orient);
        r.check("omega of colorings = Psi certificates", colorings.omega() == r.element);
        r.check("certificates in N[q]", r.positive);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use crate::posets::antichain;
    use crate::ppartitions::kp_monomial_oracle;
    use crate::sym::{to_sym, SymBasis};

    pub(crate) fn graph(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::new(n, edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect()).unwrap()
    }

    fn q(c: &[i64]) -> ParamPoly {
        ParamPoly::from_coeffs(Var::Q, c)
    }

    #[test]
    fn single_edge() {
        let x = chromatic_x(&graph(2, &[(1, 2)]));
        assert_eq!(x.coeff(&Composition::of(&[1, 1])), q(&[1, 1]));
        assert!(x.coeff(&Composition::of(&[2])).is_zero());
        let at1 = x.substitute(Var::Q, &ParamPoly::one());
        let p = to_sym(&at1, SymBasis::P).unwrap();
        assert_eq!(p.coeff(&crate::Partition::of(&[1, 1])), ParamPoly::one());
        assert_eq!(p.coeff(&crate::Partition::of(&[2])), ParamPoly::int(-1));
    }

    #[test]
    fn edgeless_graph_is_e1_power() {
        let x = chromatic_x(&graph(3, &[]));
        assert_eq!(x, kp_monomial_oracle(&antichain(3)));
    }

    #[test]
    fn graph_g_fixture() {
        let g = graph(4, &[(1, 2), (1, 3), (4, 2), (4, 3)]);
        let r = chromatic_psi(&g, true).unwrap();
        assert!(r.all_checks_passed(), "{:?}", r.checks);
        let expect: [(&[u32], &[i64]); 8] = [
            (&[4], &[0, 4, 4, 4]),
            (&[1, 3], &[2, 4, 0, 4, 2]),
            (&[2, 2], &[0, 4, 8, 4]),
            (&[3, 1], &[0, 4, 4, 4]),
            (&[1, 1, 2], &[0, 4, 8, 4]),
            (&[1, 2, 1], &[4, 4, 0, 4, 4]),
            (&[2, 1, 1], &[0, 4, 8, 4]),
            (&[1, 1, 1, 1], &[4, 4, 8, 4, 4]),
        ];
        assert_eq!(r.certificates.len(), expect.len());
        for (a, c) in expect {
            assert_eq!(r.certificates[&Composition::of(a)], q(c), "{:?}", a);
        }
        assert!(!r.certificates[&Composition::of(&[1, 2, 1])].is_unimodal_in(Var::Q));
    }

    #[test]
    fn graph_h_fixture() {
        let h = graph(5, &[(1, 2), (3, 2), (4, 3), (4, 5)]);
        let r = chromatic_psi(&h, true).unwrap();
        assert!(r.all_checks_passed());
        assert_eq!(r.certificates[&Composition::of(&[1, 3, 1])], q(&[2, 5, 4, 5, 2]));
    }

    #[test]
    fn graph_not_isomorphic_to_its_reverse() {
        let g = graph(3, &[(1, 2), (1, 3)]);
        let r = chromatic_psi(&g, true).unwrap();
        assert!(r.all_checks_passed(), "{:?}", r.checks);
        // Psi_3 needs a unique minimum in the dual: 2->1<-3 (asc 0) and the
        // two mixed chains (asc 1), but not 2<-1->3
        assert_eq!(r.certificates[&Composition::of(&[3])], q(&[1, 2]));
    }

    #[test]
    fn k_balanced_specializations() {
        let square = graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(k_balanced_x(&square, 1).unwrap(), chromatic_x(&square));
        let r = k_balanced_psi(&square, 2, true).unwrap();
        assert!(r.all_checks_passed(), "{:?}", r.checks);
        let path = graph(4, &[(1, 2), (3, 2), (3, 4)]);
        assert_eq!(k_balanced_x(&path, 3).unwrap(), chromatic_x(&path));
        assert!(k_balanced_x(&graph(2, &[(1, 2), (1, 2)]), 1).is_err());
    }
}
