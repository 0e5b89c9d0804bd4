//! Symmetric functions in the classical bases, obtained from symmetric
//! quasisymmetric functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::composition::{partitions, Composition, Partition};
use crate::error::{QsymError, Result};
use crate::posets::disjoint_chains;
use crate::qsym::{Basis, QSymElement};
use crate::ring::{ParamPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    P,
    H,
    E,
    S,
    M,
}

impl SymBasis {
    pub fn name(&self) -> &'static str {
        match self {
            SymBasis::P => "p",
            SymBasis::H => "h",
            SymBasis::E => "e",
            SymBasis::S => "s",
            SymBasis::M => "m",
        }
    }

    pub fn parse(s: &str) -> Result<SymBasis> {
        match s {
            "p" => Ok(SymBasis::P),
            "h" => Ok(SymBasis::H),
            "e" => Ok(SymBasis::E),
            "s" => Ok(SymBasis::S),
            "m" => Ok(SymBasis::M),
            _ => Err(QsymError::Input(format!("unknown symmetric basis '{}'", s))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymElement {
    degree: usize,
    basis: SymBasis,
    terms: BTreeMap<Partition, ParamPoly>,
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textfmt::sym_to_text(self, false))
    }
}

impl SymElement {
    pub fn zero(degree: usize, basis: SymBasis) -> Self {
        SymElement { degree, basis, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> ParamPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &ParamPoly) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(QsymError::Input(format!("{} does not have degree {}", lambda, self.degree)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
        Ok(())
    }

    /// The same function as a quasisymmetric function in the M basis.
    pub fn to_qsym(&self) -> QSymElement {
        let mut out = QSymElement::zero(self.degree, Basis::M);
        for (lambda, c) in &self.terms {
            let b = sym_basis_element(self.basis, lambda);
            out = out.add(&b.scale(c)).expect("same degree");
        }
        out
    }

    pub fn convert(&self, target: SymBasis) -> SymElement {
        to_sym(&self.to_qsym(), target).expect("symmetric by construction")
    }
}

/// Standard Young tableaux of shape `lambda`, each as the row index of every
/// entry `1..=n`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<usize>> {
    let n = lambda.size();
    let mut out = Vec::new();
    fn rec(lambda: &[u32], fill: &mut Vec<u32>, rows: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if rows.len() == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..lambda.len() {
            if fill[r] < lambda[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                rows.push(r);
                rec(lambda, fill, rows, n, out);
                rows.pop();
                fill[r] -= 1;
            }
        }
    }
    rec(lambda.parts(), &mut vec![0; lambda.len()], &mut Vec::new(), n, &mut out);
    out
}

/// `i` is a descent when `i+1` sits in a lower row.
pub fn tableau_descents(rows: &[usize]) -> u64 {
    (1..rows.len()).filter(|&i| rows[i] > rows[i - 1]).fold(0, |m, i| m | 1 << i)
}

/// `s_lambda = sum_T F_{DES(T)}`.
pub fn schur_f(lambda: &Partition) -> QSymElement {
    let n = lambda.size();
    let mut out = QSymElement::zero(n, Basis::F);
    for t in standard_tableaux(lambda) {
        let s = tableau_descents(&t);
        out.add_term_unchecked(Composition::from_set(n, s), &ParamPoly::one());
    }
    out
}

/// `h_lambda` as the generating function of disjoint chains.
pub fn complete_m(lambda: &Partition) -> QSymElement {
    let p = disjoint_chains(lambda.parts());
    let mut out = QSymElement::zero(lambda.size(), Basis::M);
    for (alpha, (all, _)) in p.surjection_type_counts() {
        out.add_term_unchecked(alpha, &ParamPoly::int(all as i64));
    }
    out
}

fn sym_basis_element(basis: SymBasis, lambda: &Partition) -> QSymElement {
    let n = lambda.size();
    match basis {
        SymBasis::P => {
            let mut e = QSymElement::zero(n, Basis::Psi);
            for a in lambda.rearrangements() {
                e.add_term_unchecked(a, &ParamPoly::one());
            }
            e
        }
        SymBasis::M => {
            let mut e = QSymElement::zero(n, Basis::M);
            for a in lambda.rearrangements() {
                e.add_term_unchecked(a, &ParamPoly::one());
            }
            e
        }
        SymBasis::H => complete_m(lambda),
        SymBasis::E => complete_m(lambda).omega(),
        SymBasis::S => schur_f(lambda),
    }
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let k = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..k {
            a[col][j] /= &d;
            inv[col][j] /= &d;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..k {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Expansion of a symmetric function in `target`. Errors with a witness when
/// the input is not symmetric.
pub fn to_sym(f: &QSymElement, target: SymBasis) -> Result<SymElement> {
    f.check_symmetric()?;
    let n = f.degree();
    let mut out = SymElement::zero(n, target);
    match target {
        SymBasis::P => {
            let psi = f.convert(Basis::Psi);
            for lambda in partitions(n) {
                out.add_term(lambda.clone(), &psi.coeff(&lambda.as_composition()))?;
            }
        }
        SymBasis::M => {
            let m = f.convert(Basis::M);
            for lambda in partitions(n) {
                out.add_term(lambda.clone(), &m.coeff(&lambda.as_composition()))?;
            }
        }
        _ => {
            // row mu: coefficients of m_nu in b_mu
            let parts = partitions(n);
            let rows: Vec<Vec<Rational>> = parts
                .iter()
                .map(|mu| {
                    let b = sym_basis_element(target, mu).convert(Basis::M);
                    parts.iter().map(|nu| b.coeff(&nu.as_composition()).as_constant().unwrap()).collect()
                })
                .collect();
            let inv = invert(rows).ok_or_else(|| QsymError::Domain("singular basis matrix".into()))?;
            let m = f.convert(Basis::M);
            let rhs: Vec<ParamPoly> = parts.iter().map(|nu| m.coeff(&nu.as_composition())).collect();
            // c^T = f^T A^{-1}
            for (j, mu) in parts.iter().enumerate() {
                let mut c = ParamPoly::zero();
                for (i, r) in rhs.iter().enumerate() {
                    c += &r.scale(&inv[i][j]);
                }
                out.add_term(mu.clone(), &c)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn syt_counts() {
        assert_eq!(standard_tableaux(&Partition::of(&[3, 3])).len(), 5);
        assert_eq!(standard_tableaux(&Partition::of(&[3, 2, 1])).len(), 16);
    }

    #[test]
    fn schur_in_p_basis() {
        let s = to_sym(&schur_f(&Partition::of(&[3, 3])), SymBasis::P).unwrap();
        let c = s.coeff(&Partition::of(&[2, 2, 2]));
        // coefficient of p_222 / z_222 is -3
        let z = Partition::of(&[2, 2, 2]).z();
        assert_eq!(c.scale(&Rational::from_integer(z)), ParamPoly::constant(rat(-3)));
    }

    #[test]
    fn h_e_s_roundtrip() {
        for n in 1..=5 {
            for lambda in partitions(n) {
                for b in [SymBasis::H, SymBasis::E, SymBasis::S, SymBasis::P, SymBasis::M] {
                    let q = sym_basis_element(b, &lambda);
                    let back = to_sym(&q, b).unwrap();
                    let mut want = SymElement::zero(n, b);
                    want.add_term(lambda.clone(), &ParamPoly::one()).unwrap();
                    assert_eq!(back, want, "{:?} {}", b, lambda);
                }
            }
        }
    }

    #[test]
    fn h2_is_p2_plus_p11_over_two() {
        let h = to_sym(&complete_m(&Partition::of(&[2])), SymBasis::P).unwrap();
        assert_eq!(h.coeff(&Partition::of(&[2])), ParamPoly::constant(crate::ring::ratio(1, 2)));
        assert_eq!(h.coeff(&Partition::of(&[1, 1])), ParamPoly::constant(crate::ring::ratio(1, 2)));
    }
}
