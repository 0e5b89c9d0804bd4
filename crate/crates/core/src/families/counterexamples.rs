//! Four posets on four elements whose positive combinations of `K_P` can be
//! symmetric without being h-positive or even Schur-positive, and the
//! positivity test used to find such combinations.

use crate::composition::Partition;
use crate::error::Result;
use crate::posets::{LabeledPoset, Poset};
use crate::ppartitions::kp_fundamental;
use crate::qsym::{Basis, QSymElement};
use crate::ring::ParamPoly;
use crate::sym::{to_sym, SymBasis, SymElement};

/// Three minimal elements below one maximal element.
pub fn poset_a() -> Poset {
    Poset::from_relations(4, &[(0, 3), (1, 3), (2, 3)]).unwrap()
}

/// Two minimal elements each below both maximal ones.
pub fn poset_b() -> Poset {
    Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3), (0, 3)]).unwrap()
}

/// One minimal element below three maximal ones.
pub fn poset_c() -> Poset {
    Poset::from_relations(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// A two-element chain below two maximal elements.
pub fn poset_d() -> Poset {
    Poset::from_relations(4, &[(0, 1), (1, 2), (1, 3)]).unwrap()
}

/// Two minimal elements below a two-element chain; the dual of `poset_d`.
pub fn poset_d_dual() -> Poset {
    poset_d().dual()
}

pub fn four_posets() -> [Poset; 4] {
    [poset_a(), poset_b(), poset_c(), poset_d()]
}

/// `sum_i c_i K_{P_i}` in the fundamental basis, natural labelings.
pub fn combination(posets: &[Poset], coeffs: &[i64]) -> QSymElement {
    let n = posets.first().map_or(0, |p| p.len());
    let mut out = QSymElement::zero(n, Basis::F);
    for (p, &c) in posets.iter().zip(coeffs) {
        let k = kp_fundamental(&LabeledPoset::natural(p.clone()));
        out = out.add(&k.scale(&ParamPoly::int(c))).unwrap();
    }
    out
}

#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub schur: SymElement,
    pub complete: SymElement,
    /// First partition with a negative coefficient, if any.
    pub schur_negative: Option<Partition>,
    pub h_negative: Option<Partition>,
}

fn first_negative(e: &SymElement) -> Option<Partition> {
    e.terms().find(|(_, c)| c.has_negative_coeff()).map(|(l, _)| l.clone())
}

/// Schur and h expansions of a symmetric function; errors if it is not symmetric.
pub fn positivity(e: &QSymElement) -> Result<PositivityReport> {
    let schur = to_sym(e, SymBasis::S)?;
    let complete = to_sym(e, SymBasis::H)?;
    Ok(PositivityReport {
        schur_negative: first_negative(&schur),
        h_negative: first_negative(&complete),
        schur,
        complete,
    })
}
