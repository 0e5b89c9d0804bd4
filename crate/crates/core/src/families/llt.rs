//! Unicellular and vertical-strip LLT polynomials of directed graphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::composition::{mask_elems, next_permutation, Composition};
use crate::error::{QsymError, Result};
use crate::posets::DirectedGraph;
use crate::ppartitions::PartitionExpansionReport;
use crate::qsym::QSymElement;
use crate::ring::{Mono, ParamPoly, Var};

use super::{add_certs, monomial_by_type, require_small_edge_set, OstarCache};

fn asc_of(g: &DirectedGraph, kappa: &[usize]) -> u32 {
    g.edges.iter().filter(|&&(i, j)| kappa[i] < kappa[j]).count() as u32
}

fn shift_q(e: &QSymElement) -> QSymElement {
    e.substitute(Var::Q, &ParamPoly::from_coeffs(Var::Q, &[1, 1]))
}

/// `G_G(x;q)`: every coloring, weighted by `q^asc`.
pub fn llt_unicellular(g: &DirectedGraph) -> QSymElement {
    monomial_by_type(g.n, |k| Some(Mono::var(Var::Q, asc_of(g, k))))
}

/// `G_{G,S}(x;q)` for the edge-index mask `s`: colorings strictly increasing
/// along the edges of `S`, weighted by `q^{asc - |S|}`.
pub fn llt_vertical(g: &DirectedGraph, s: u64) -> Result<QSymElement> {
    check_subset(g, s)?;
    let strict: Vec<(usize, usize)> = mask_elems(s).map(|e| g.edges[e]).collect();
    let size = s.count_ones();
    Ok(monomial_by_type(g.n, |k| {
        strict.iter().all(|&(i, j)| k[i] < k[j]).then(|| Mono::var(Var::Q, asc_of(g, k) - size))
    }))
}

fn check_subset(g: &DirectedGraph, s: u64) -> Result<()> {
    let m = g.edges.len();
    if m < 64 && s >> m != 0 {
        return Err(QsymError::Input("S is not a subset of the edges".into()));
    }
    Ok(())
}

/// Sum over `A` with `s ⊆ A ⊆ E` of `q^{|A \ S|} |O*(closure of A)^*|`.
fn forward_closure_sum(g: &DirectedGraph, s: u64) -> Result<PartitionExpansionReport> {
    require_small_edge_set(g)?;
    let m = g.edges.len();
    let free = ((1u64 << m) - 1) & !s;
    let mut cache = OstarCache::default();
    let mut certs = BTreeMap::new();
    for a in crate::composition::submasks(free) {
        let arcs: Vec<(usize, usize)> = mask_elems(a | s).map(|e| g.edges[e]).collect();
        if let Some(counts) = cache.dual_counts_of_arcs(g.n, &arcs) {
            add_certs(&mut certs, counts, Mono::var(Var::Q, a.count_ones()));
        }
    }
    Ok(PartitionExpansionReport::from_certificates(g.n, certs))
}

/// Psi expansion of `omega G_G(x;q+1)` as a sum over orientations, keeping
/// the dual of the closure of the edges that point as in `G` (zero when they
/// close a directed cycle).
pub fn llt_psi(g: &DirectedGraph, check: bool) -> Result<PartitionExpansionReport> {
    let mut r = forward_closure_sum(g, 0)?;
    if check {
        let direct = shift_q(&llt_unicellular(g)).omega();
        r.check("omega G_G(q+1) from colorings = orientation sum", direct == r.element);
        r.check("certificates in N[q]", r.positive);
    }
    Ok(r)
}

/// Psi expansion of `omega G_{G,S}(x;q+1)`, summing over orientations that
/// keep the edges of `S` as in `G`.
pub fn llt_vertical_psi(g: &DirectedGraph, s: u64, check: bool) -> Result<PartitionExpansionReport> {
    check_subset(g, s)?;
    let mut r = forward_closure_sum(g, s)?;
    if check {
        let direct = shift_q(&llt_vertical(g, s)?).omega();
        r.check("omega G_{G,S}(q+1) from colorings = orientation sum", direct == r.element);
        r.check("certificates in N[q]", r.positive);
    }
    Ok(r)
}

/// First composition whose certificate is not unimodal in `q`.
pub fn non_unimodal_witness(r: &PartitionExpansionReport) -> Option<Composition> {
    r.certificates.iter().find(|(_, c)| !c.is_unimodal_in(Var::Q)).map(|(a, _)| a.clone())
}

/// One representative per isomorphism class of oriented simple graphs on `n`
/// vertices (each pair: no edge, `i -> j` or `j -> i`).
pub fn oriented_graphs_up_to_iso(n: usize) -> Vec<DirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let code = |arcs: &[(usize, usize)], perm: &[usize]| -> Vec<u8> {
        let mut adj = vec![0u8; n * n];
        for &(i, j) in arcs {
            adj[perm[i] * n + perm[j]] = 1;
        }
        adj
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for idx in 0..total {
        let mut t = idx;
        let mut arcs = Vec::new();
        for &(i, j) in &pairs {
            match t % 3 {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
            t /= 3;
        }
        let canon = perms.iter().map(|perm| code(&arcs, perm)).min().unwrap();
        if seen.insert(canon) {
            out.push(DirectedGraph::new(n, arcs).unwrap());
        }
    }
    out
}

/// Outcome of the unimodality sweep over oriented graphs.
#[derive(Clone, Debug)]
pub struct UnimodalitySweep {
    pub graphs_checked: usize,
    pub counterexample: Option<(DirectedGraph, Composition)>,
}

/// Checks that every certificate of `omega G_G(x;q+1)` is unimodal, for all
/// oriented simple graphs on `1..=n_max` vertices.
pub fn unimodality_sweep(n_max: usize) -> Result<UnimodalitySweep> {
    use rayon::prelude::*;
    let graphs: Vec<DirectedGraph> = (1..=n_max).flat_map(oriented_graphs_up_to_iso).collect();
    let bad: Vec<(usize, Composition)> = graphs
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let r = llt_psi(g, false).ok()?;
            non_unimodal_witness(&r).map(|a| (i, a))
        })
        .collect();
    let counterexample = bad.into_iter().min_by_key(|(i, _)| *i).map(|(i, a)| (graphs[i].clone(), a));
    Ok(UnimodalitySweep { graphs_checked: graphs.len(), counterexample })
}
