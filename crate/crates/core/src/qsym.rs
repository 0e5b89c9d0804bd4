//! Homogeneous quasisymmetric functions in the monomial, fundamental and
//! quasisymmetric power sum bases.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::composition::{compositions, full_mask, mask_elems, submasks, Composition, SetMask};
use crate::error::{QsymError, Result};
use crate::ring::{ParamPoly, Rational, Var};
use crate::unimodal::is_alpha_unimodal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    F,
    Psi,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::Psi => "Psi",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "M" | "m" => Ok(Basis::M),
            "F" | "f" => Ok(Basis::F),
            "Psi" | "psi" | "PSI" => Ok(Basis::Psi),
            _ => Err(QsymError::Input(format!("unknown quasisymmetric basis '{}'", s))),
        }
    }
}

/// Equality is equality of functions: elements in different bases compare
/// through their monomial expansions.
#[derive(Clone)]
pub struct QSymElement {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Composition, ParamPoly>,
}

impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis && self.degree == other.degree {
            return self.terms == other.terms;
        }
        self.equals(other)
    }
}

impl Eq for QSymElement {}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textfmt::qsym_to_text(self, false))
    }
}

impl QSymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        QSymElement { degree, basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, alpha: &Composition) -> Self {
        let mut e = Self::zero(alpha.size(), basis);
        e.terms.insert(alpha.clone(), ParamPoly::one());
        e
    }

    /// `F_{n,S}`.
    pub fn fundamental(n: usize, s: SetMask) -> Self {
        Self::basis_element(Basis::F, &Composition::from_set(n, s))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &Composition) -> ParamPoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, alpha: Composition, c: &ParamPoly) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(QsymError::Input(format!("term {} does not have degree {}", alpha, self.degree)));
        }
        self.add_term_unchecked(alpha, c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, alpha: Composition, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(alpha.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (a, c) in &self.terms {
            out.add_term_unchecked(a.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Replace a parameter by a polynomial in the parameters.
    pub fn substitute(&self, v: Var, p: &ParamPoly) -> Self {
        self.map_coeffs(|x| x.substitute(v, p))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(QsymError::Domain(format!("degree mismatch: {} vs {}", self.degree, other.degree)));
        }
        Ok(())
    }

    /// Sum; `other` is converted to the basis of `self` if needed.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let o = other.convert(self.basis);
        let mut out = self.clone();
        for (a, c) in &o.terms {
            out.add_term_unchecked(a.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&ParamPoly::int(-1)))
    }

    /// Equality as functions, independent of basis.
    pub fn equals(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return self.is_zero() && other.is_zero();
        }
        self.convert(Basis::M).terms == other.convert(Basis::M).terms
    }

    /// Expansion of one basis element in the monomial basis.
    fn row_in_m(basis: Basis, alpha: &Composition) -> Vec<(Composition, Rational)> {
        let n = alpha.size();
        let s = alpha.set();
        match basis {
            Basis::M => vec![(alpha.clone(), Rational::one())],
            Basis::F => submasks(full_mask(n) & !s)
                .map(|extra| (Composition::from_set(n, s | extra), Rational::one()))
                .collect(),
            Basis::Psi => {
                let z = alpha.z();
                submasks(s)
                    .map(|sub| {
                        let beta = Composition::from_set(n, sub);
                        let pi = alpha.pi_rel(&beta).expect("beta is coarser");
                        (beta, Rational::new(z.clone(), pi))
                    })
                    .collect()
            }
        }
    }

    pub fn to_m(&self) -> Self {
        if self.basis == Basis::M {
            return self.clone();
        }
        let mut out = Self::zero(self.degree, Basis::M);
        for (a, c) in &self.terms {
            for (b, r) in Self::row_in_m(self.basis, a) {
                out.add_term_unchecked(b, &c.scale(&r));
            }
        }
        out
    }

    /// Solve against the triangular change of basis from M.
    fn from_m(m: &Self, target: Basis) -> Self {
        debug_assert_eq!(m.basis, Basis::M);
        if target == Basis::M {
            return m.clone();
        }
        let mut residual = m.terms.clone();
        let mut out = Self::zero(m.degree, target);
        loop {
            // F rows only reach finer compositions, Psi rows only coarser ones
            let next = match target {
                Basis::F => residual.pop_first(),
                _ => residual.pop_last(),
            };
            let Some((beta, c)) = next else { break };
            let row = Self::row_in_m(target, &beta);
            let diag = row.iter().find(|(g, _)| *g == beta).map(|(_, r)| r.clone()).unwrap();
            let d = c.scale(&(Rational::one() / diag));
            for (g, r) in row {
                if g == beta {
                    continue;
                }
                let e = residual.entry(g.clone()).or_default();
                *e -= &d.scale(&r);
                if e.is_zero() {
                    residual.remove(&g);
                }
            }
            out.add_term_unchecked(beta, &d);
        }
        out
    }

    /// Change of basis. F to Psi uses the unimodal-set expansion; every other
    /// pair goes through the monomial basis.
    pub fn convert(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        if self.basis == Basis::F && target == Basis::Psi {
            return self.f_to_psi_direct();
        }
        Self::from_m(&self.to_m(), target)
    }

    /// Change of basis always routed through the monomial basis.
    pub fn convert_via_m(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        Self::from_m(&self.to_m(), target)
    }

    /// `F_{n,S} = sum_{S alpha-unimodal} (-1)^{|S \ Set(alpha)|} Psi_alpha / z_alpha`.
    fn f_to_psi_direct(&self) -> Self {
        let n = self.degree;
        let comps = compositions(n);
        let mut out = Self::zero(n, Basis::Psi);
        for (a, c) in &self.terms {
            let s = a.set();
            for alpha in &comps {
                if !is_alpha_unimodal(s, alpha) {
                    continue;
                }
                let sign = if (s & !alpha.set()).count_ones() % 2 == 0 { 1 } else { -1 };
                let r = Rational::new(num_bigint::BigInt::from(sign), alpha.z());
                out.add_term_unchecked(alpha.clone(), &c.scale(&r));
            }
        }
        out
    }

    /// The involution `omega`, computed on fundamentals and returned in the
    /// basis of `self`.
    pub fn omega(&self) -> Self {
        let n = self.degree;
        let f = self.convert(Basis::F);
        let mut out = Self::zero(n, Basis::F);
        for (a, c) in &f.terms {
            let flipped = mask_elems(a.set()).fold(0u64, |m, i| m | (1 << (n - i)));
            let s = full_mask(n) & !flipped;
            out.add_term_unchecked(Composition::from_set(n, s), c);
        }
        out.convert(self.basis)
    }

    /// `omega(Psi_alpha) = (-1)^{n - l} Psi_{alpha reversed}`, for Psi-basis input.
    pub fn omega_psi(&self) -> Result<Self> {
        if self.basis != Basis::Psi {
            return Err(QsymError::Domain("omega_psi needs a Psi-basis element".into()));
        }
        let n = self.degree;
        let mut out = Self::zero(n, Basis::Psi);
        for (a, c) in &self.terms {
            let sign = if (n - a.len()).is_multiple_of(2) { 1 } else { -1 };
            out.add_term_unchecked(a.reversed(), &c.scale(&crate::ring::rat(sign)));
        }
        Ok(out)
    }

    /// Symmetric iff Psi coefficients are constant on rearrangement classes.
    pub fn check_symmetric(&self) -> Result<()> {
        let psi = self.convert(Basis::Psi);
        let mut seen: BTreeMap<crate::composition::Partition, (Composition, ParamPoly)> = BTreeMap::new();
        for alpha in compositions(self.degree) {
            let c = psi.coeff(&alpha);
            match seen.get(&alpha.sorted()) {
                Some((first, c0)) if *c0 != c => {
                    return Err(QsymError::NotSymmetric(first.to_string(), alpha.to_string()));
                }
                Some(_) => {}
                None => {
                    seen.insert(alpha.sorted(), (alpha, c));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// `f(x_1^d, x_2^d, ...)`.
    pub fn power_substitution(&self, d: u32) -> Self {
        let m = self.to_m();
        let mut out = Self::zero(self.degree * d as usize, Basis::M);
        for (a, c) in &m.terms {
            out.add_term_unchecked(a.scaled(d), c);
        }
        out.convert(self.basis)
    }

    /// Expansion in `x_1, ..., x_m`.
    pub fn expand_truncated(&self, m: usize) -> XPoly {
        let mono = self.to_m();
        let mut out = XPoly::new(m);
        for (a, c) in &mono.terms {
            let l = a.len();
            if l > m {
                continue;
            }
            for_each_combination(m, l, |idx| {
                let mut exps = vec![0u32; m];
                for (k, &i) in idx.iter().enumerate() {
                    exps[i] = a.0[k];
                }
                out.add_term(exps, c);
            });
        }
        out
    }

    /// Keep only the terms satisfying `pred`.
    pub fn retain(&mut self, pred: impl Fn(&Composition, &ParamPoly) -> bool) {
        self.terms.retain(|a, c| pred(a, c));
    }

    pub(crate) fn from_terms(degree: usize, basis: Basis, terms: BTreeMap<Composition, ParamPoly>) -> Self {
        let mut e = Self::zero(degree, basis);
        for (a, c) in terms {
            e.add_term_unchecked(a, &c);
        }
        e
    }
}

/// Calls `f` with each increasing `l`-subset of `0..m`.
pub fn for_each_combination(m: usize, l: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, m: usize, l: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == l {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < l - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, l, cur, f);
            cur.pop();
        }
    }
    rec(0, m, l, &mut Vec::with_capacity(l), &mut f);
}

/// A polynomial in finitely many variables `x_1..x_m` with parameter
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, ParamPoly>,
}

impl XPoly {
    pub fn new(nvars: usize) -> Self {
        XPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &ParamPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> ParamPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }
}
