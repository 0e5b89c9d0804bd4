//! Generating functions of reverse P-partitions (plain, strict, with forced
//! equalities, weighted) in the Psi basis, each computed along several
//! independent routes that are required to agree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::{compositions, mask_elems, Composition};
use crate::error::{QsymError, Result};
use crate::posets::{des_set, is_alpha_unimodal_perm, Equivalence, LabeledPoset, Poset};
use crate::qsym::{Basis, QSymElement, XPoly};
use crate::ring::{ParamPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    All,
    F,
    LStar,
    OStar,
}

impl Route {
    pub fn parse(s: &str) -> Result<Route> {
        match s {
            "all" => Ok(Route::All),
            "F" => Ok(Route::F),
            "Lstar" => Ok(Route::LStar),
            "Ostar" => Ok(Route::OStar),
            _ => Err(QsymError::Input(format!("unknown route '{}' (all|F|Lstar|Ostar)", s))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteCheck {
    pub name: String,
    pub passed: bool,
}

/// A Psi expansion together with its certificates: the certificate of
/// `alpha` is `z_alpha` times the coefficient of `Psi_alpha`.
#[derive(Clone, Debug)]
pub struct PartitionExpansionReport {
    pub element: QSymElement,
    pub certificates: BTreeMap<Composition, ParamPoly>,
    pub positive: bool,
    pub checks: Vec<RouteCheck>,
    /// Set when the input equivalence had to be closed to a chain congruence.
    pub closure: Option<(LabeledPoset, Equivalence)>,
    pub warnings: Vec<String>,
}

impl PartitionExpansionReport {
    pub fn from_certificates(degree: usize, certificates: BTreeMap<Composition, ParamPoly>) -> Self {
        let element = psi_from_certificates(degree, &certificates);
        let certificates: BTreeMap<_, _> = certificates.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let positive = certificates.values().all(is_nonneg_integral);
        PartitionExpansionReport {
            element,
            certificates,
            positive,
            checks: Vec::new(),
            closure: None,
            warnings: Vec::new(),
        }
    }

    pub fn from_element(element: QSymElement) -> Self {
        let psi = element.convert(Basis::Psi);
        let certificates = psi.terms().map(|(a, c)| (a.clone(), c.scale(&Rational::from_integer(a.z())))).collect();
        let mut r = Self::from_certificates(psi.degree(), certificates);
        r.element = psi;
        r
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(RouteCheck { name: name.to_string(), passed });
    }
}

/// Every coefficient is a nonnegative integer.
pub fn is_nonneg_integral(p: &ParamPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
}

/// `sum_alpha c_alpha Psi_alpha / z_alpha`.
pub fn psi_from_certificates(degree: usize, certs: &BTreeMap<Composition, ParamPoly>) -> QSymElement {
    let mut e = QSymElement::zero(degree, Basis::Psi);
    for (a, c) in certs {
        e.add_term_unchecked(a.clone(), &c.scale(&(Rational::one() / Rational::from_integer(a.z()))));
    }
    e
}

fn int_certs(m: BTreeMap<Composition, BigInt>) -> BTreeMap<Composition, ParamPoly> {
    m.into_iter().map(|(a, c)| (a, ParamPoly::constant(Rational::from_integer(c)))).collect()
}

/// `K_{P,w} = sum over the Jordan-Holder set of F_{DES(sigma)}`; any labeling.
pub fn kp_fundamental(p: &LabeledPoset) -> QSymElement {
    let n = p.len();
    let mut e = QSymElement::zero(n, Basis::F);
    for sigma in p.linear_extensions() {
        e.add_term_unchecked(Composition::from_set(n, des_set(&sigma)), &ParamPoly::one());
    }
    e
}

/// Calls `visit(sigma, alpha)` for every alpha and every sigma in `L*_alpha`.
fn for_each_lstar(p: &LabeledPoset, mut visit: impl FnMut(&[usize], &Composition)) {
    let n = p.len();
    let comps = compositions(n);
    for sigma in p.linear_extensions() {
        for alpha in &comps {
            if is_alpha_unimodal_perm(&sigma, alpha) && p.is_starred(&sigma, alpha) {
                visit(&sigma, alpha);
            }
        }
    }
}

/// `|L*_alpha(P,w)|` for every alpha with a nonzero count.
pub fn lstar_counts(p: &LabeledPoset) -> Result<BTreeMap<Composition, BigInt>> {
    p.require_natural()?;
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    for_each_lstar(p, |_, alpha| *out.entry(alpha.clone()).or_default() += 1);
    Ok(out)
}

/// `|O*_alpha(P)|` for every alpha with a nonzero count.
pub fn ostar_counts(p: &Poset) -> BTreeMap<Composition, BigInt> {
    p.surjection_type_counts()
        .into_iter()
        .filter(|(_, (_, s))| *s > 0)
        .map(|(a, (_, s))| (a, BigInt::from(s)))
        .collect()
}

/// Psi expansion of `K_P` for a naturally labeled poset.
pub fn kp_psi(p: &LabeledPoset, route: Route) -> Result<PartitionExpansionReport> {
    p.require_natural()?;
    let n = p.len();
    let via_f = || PartitionExpansionReport::from_element(kp_fundamental(p).convert(Basis::Psi));
    let via_l = || -> Result<_> { Ok(PartitionExpansionReport::from_certificates(n, int_certs(lstar_counts(p)?))) };
    let via_o = || PartitionExpansionReport::from_certificates(n, int_certs(ostar_counts(&p.poset)));
    match route {
        Route::F => Ok(via_f()),
        Route::LStar => via_l(),
        Route::OStar => Ok(via_o()),
        Route::All => {
            let mut r = via_o();
            let l = via_l()?;
            let f = via_f();
            let agree_l = l.element == r.element;
            let agree_f = f.element == r.element;
            r.check("Lstar = Ostar", agree_l);
            r.check("F = Ostar", agree_f);
            r.check("certificates nonnegative integers", r.positive);
            Ok(r)
        }
    }
}

/// `K_P = sum_{f in O(P)} M_{type(f)}`.
pub fn kp_monomial_oracle(p: &Poset) -> QSymElement {
    let mut e = QSymElement::zero(p.len(), Basis::M);
    for (a, (all, _)) in p.surjection_type_counts() {
        e.add_term_unchecked(a, &ParamPoly::int(all as i64));
    }
    e
}

/// Calls `visit` with every map `P -> [m]` (values 1-based) that passes
/// `accept`, built element by element in index order.
pub fn for_each_coloring(n: usize, m: usize, accept: &dyn Fn(&[usize]) -> bool, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        n: usize,
        m: usize,
        cur: &mut Vec<usize>,
        accept: &dyn Fn(&[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == n {
            if accept(cur) {
                visit(cur);
            }
            return;
        }
        for c in 1..=m {
            cur.push(c);
            rec(n, m, cur, accept, visit);
            cur.pop();
        }
    }
    rec(n, m, &mut Vec::with_capacity(n), accept, visit);
}

/// Truncated `K_{P,w}` in `x_1..x_m` from the defining conditions: weakly
/// increasing along the order, strictly where the labeling decreases.
pub fn kp_coloring_oracle(p: &LabeledPoset, m: usize) -> XPoly {
    let rel = p.poset.relations();
    let strict: Vec<bool> = rel.iter().map(|&(x, y)| p.label(x) > p.label(y)).collect();
    let accept = |f: &[usize]| rel.iter().zip(&strict).all(|(&(x, y), &s)| if s { f[x] < f[y] } else { f[x] <= f[y] });
    let mut out = XPoly::new(m);
    for_each_coloring(p.len(), m, &accept, &mut |f| {
        let mut exps = vec![0u32; m];
        for &c in f {
            exps[c - 1] += 1;
        }
        out.add_term(exps, &ParamPoly::one());
    });
    out
}

/// Psi expansion of `omega K_{P,w}` for an order-reversing `w`. Reading
/// every Jordan-Holder word backwards gives `omega K_{P,w} = K_{P^*,w}`,
/// and `w` is natural on the dual `P^*`. `K_{P,w}` itself is the strict
/// P-partition function.
pub fn kp_omega_strict(p: &LabeledPoset, route: Route) -> Result<PartitionExpansionReport> {
    if !p.is_order_reversing() {
        return Err(QsymError::Domain("labeling is not order-reversing".into()));
    }
    let dual = LabeledPoset::new(p.poset.dual(), p.labels().to_vec())?;
    let mut r = kp_psi(&dual, route)?;
    if route == Route::All {
        let direct = kp_fundamental(p).omega();
        let agree = direct == r.element;
        r.check("omega K_{P,w} = K_{P^*,w}", agree);
    }
    Ok(r)
}

/// Order-preserving surjections constant on the classes of `e`, as
/// `(fibers, star)` pairs.
fn for_each_respecting_surjection(p: &Poset, e: &Equivalence, visit: &mut dyn FnMut(&[u64], bool)) {
    p.for_each_surjection(&mut |fibers| {
        if e.respected_by(fibers) {
            let star = fibers.iter().all(|&f| p.has_unique_min(f));
            visit(fibers, star);
        }
    });
}

/// `K_{P,E}` in the monomial basis from the definition.
pub fn kpe_monomial_oracle(p: &Poset, e: &Equivalence) -> QSymElement {
    let mut out = QSymElement::zero(p.len(), Basis::M);
    for_each_respecting_surjection(p, e, &mut |fibers, _| {
        let t = Composition(fibers.iter().map(|f| f.count_ones()).collect());
        out.add_term_unchecked(t, &ParamPoly::one());
    });
    out
}

fn min_of(p: &Poset, mask: u64) -> usize {
    p.minimal_in(mask).trailing_zeros() as usize
}

/// Certificates of `K_{P,E}` over `O*(P,E)` for a chain congruence.
fn kpe_ostar(p: &Poset, e: &Equivalence) -> BTreeMap<Composition, BigInt> {
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    for_each_respecting_surjection(p, e, &mut |fibers, star| {
        if !star {
            return;
        }
        let t = Composition(fibers.iter().map(|f| f.count_ones()).collect());
        let w: BigInt = fibers.iter().map(|&f| BigInt::from(e.class_of(min_of(p, f)).count_ones())).product();
        *out.entry(t).or_default() += w;
    });
    out
}

/// Certificates of `K_{P,E}` over `L*_alpha(P,w,E)` for a chain congruence.
fn kpe_lstar(p: &LabeledPoset, e: &Equivalence) -> BTreeMap<Composition, BigInt> {
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    for_each_lstar(p, |sigma, alpha| {
        let blocks: Vec<u64> = alpha.blocks().into_iter().map(|(a, b)| p.block_preimage(sigma, a, b)).collect();
        if !e.respected_by(&blocks) {
            return;
        }
        let w: BigInt = blocks.iter().map(|&b| BigInt::from(e.class_of(min_of(&p.poset, b)).count_ones())).product();
        *out.entry(alpha.clone()).or_default() += w;
    });
    out
}

/// Psi expansion of `K_{P,E}`. An equivalence that is not a chain
/// congruence is first closed to one; the closure is kept in the report.
pub fn kpe_psi(p: &LabeledPoset, e: &Equivalence, route: Route) -> Result<PartitionExpansionReport> {
    p.require_natural()?;
    if e.len() != p.len() {
        return Err(QsymError::Input("equivalence and poset have different sizes".into()));
    }
    let (q, eq, closed) = if e.is_chain_congruence(&p.poset) {
        (p.clone(), e.clone(), false)
    } else {
        let (q, eq) = p.chain_congruence_closure(e)?;
        (q, eq, true)
    };
    let n = p.len();
    let mut r = match route {
        Route::LStar => PartitionExpansionReport::from_certificates(n, int_certs(kpe_lstar(&q, &eq))),
        Route::F => PartitionExpansionReport::from_element(kpe_monomial_oracle(&q.poset, &eq)),
        Route::OStar | Route::All => {
            PartitionExpansionReport::from_certificates(n, int_certs(kpe_ostar(&q.poset, &eq)))
        }
    };
    if route == Route::All {
        let l = psi_from_certificates(n, &int_certs(kpe_lstar(&q, &eq)));
        let agree_l = l == r.element;
        r.check("Lstar = Ostar", agree_l);
        let oracle = kpe_monomial_oracle(&p.poset, e);
        let agree_m = oracle == r.element;
        r.check("monomial oracle = Ostar", agree_m);
        let pos = r.positive;
        r.check("certificates nonnegative integers", pos);
    }
    if closed {
        r.closure = Some((q, eq));
    }
    Ok(r)
}

/// The three partitioned posets of the splitting recursion for a class `c`
/// of size at least two: `(E', E'', P')` where `E'` splits off the top of
/// `c`, `E''` splits off its bottom and `P'` forgets the relations below the
/// top.
pub fn kpe_recursion_parts(p: &Poset, e: &Equivalence, c: u64) -> Result<(Equivalence, Equivalence, Poset)> {
    if c.count_ones() < 2 || !e.blocks().contains(&c) {
        return Err(QsymError::Input("need a class with at least two elements".into()));
    }
    if !e.is_chain_congruence(p) {
        return Err(QsymError::Domain("equivalence is not a chain congruence".into()));
    }
    let top = p.maximal_in(c).trailing_zeros() as usize;
    let bottom = p.minimal_in(c).trailing_zeros() as usize;
    let rel: Vec<(usize, usize)> =
        p.relations().into_iter().filter(|&(x, y)| !(y == top && x != top && c >> x & 1 == 1)).collect();
    let p2 = Poset::from_relations(p.len(), &rel)?;
    Ok((e.split_off(top), e.split_off(bottom), p2))
}

/// Checks `K_{P,E} = K_{P,E'} + K_{P,E''} - K_{P',E'}` on every class of
/// size at least two, all sides from the definition.
pub fn kpe_recursion_holds(p: &Poset, e: &Equivalence) -> Result<bool> {
    let lhs = kpe_monomial_oracle(p, e);
    for &c in e.blocks() {
        if c.count_ones() < 2 {
            continue;
        }
        let (e1, e2, p2) = kpe_recursion_parts(p, e, c)?;
        let rhs = kpe_monomial_oracle(p, &e1).add(&kpe_monomial_oracle(p, &e2))?.sub(&kpe_monomial_oracle(&p2, &e1))?;
        if rhs != lhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_weights(p: &Poset, d: &[u32]) -> Result<()> {
    if d.len() != p.len() {
        return Err(QsymError::Input(format!("{} weights for {} elements", d.len(), p.len())));
    }
    Ok(())
}

/// Coefficient of `x_1^{b_1} ... x_l^{b_l}` in `K_P^d` for every
/// composition `b` of `|d|`. This is the monomial expansion whenever `K_P^d`
/// is quasisymmetric, which holds for positive weights.
pub fn kpd_monomial_oracle(p: &Poset, d: &[u32]) -> Result<QSymElement> {
    check_weights(p, d)?;
    let total: usize = d.iter().map(|&x| x as usize).sum();
    let mut out = QSymElement::zero(total, Basis::M);
    if d.iter().all(|&x| x > 0) {
        p.for_each_surjection(&mut |fibers| {
            let b = Composition(fibers.iter().map(|&f| mask_elems(f).map(|x| d[x]).sum()).collect());
            out.add_term_unchecked(b, &ParamPoly::one());
        });
        return Ok(out);
    }
    let rel = p.relations();
    for beta in compositions(total) {
        let l = beta.len();
        let mut count = 0i64;
        let accept = |f: &[usize]| rel.iter().all(|&(x, y)| f[x] <= f[y]);
        for_each_coloring(p.len(), l, &accept, &mut |f| {
            let mut sums = vec![0u32; l];
            for (x, &c) in f.iter().enumerate() {
                sums[c - 1] += d[x];
            }
            if sums == beta.0 {
                count += 1;
            }
        });
        out.add_term_unchecked(beta, &ParamPoly::int(count));
    }
    Ok(out)
}

fn kpd_ostar(p: &Poset, d: &[u32]) -> BTreeMap<Composition, BigInt> {
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    p.for_each_surjection(&mut |fibers| {
        if !fibers.iter().all(|&f| p.has_unique_min(f)) {
            return;
        }
        let beta = Composition(fibers.iter().map(|&f| mask_elems(f).map(|x| d[x]).sum()).collect());
        let w: BigInt = fibers.iter().map(|&f| BigInt::from(d[min_of(p, f)])).product();
        *out.entry(beta).or_default() += w;
    });
    out
}

fn kpd_lstar(p: &LabeledPoset, d: &[u32]) -> BTreeMap<Composition, BigInt> {
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    for_each_lstar(p, |sigma, alpha| {
        let blocks: Vec<u64> = alpha.blocks().into_iter().map(|(a, b)| p.block_preimage(sigma, a, b)).collect();
        let beta = Composition(blocks.iter().map(|&f| mask_elems(f).map(|x| d[x]).sum()).collect());
        let w: BigInt = blocks.iter().map(|&f| BigInt::from(d[min_of(&p.poset, f)])).product();
        *out.entry(beta).or_default() += w;
    });
    out
}

/// Psi expansion of the weighted function `K_P^d`. Zero weights fall back
/// to monomial extraction with a warning: the result need not be
/// quasisymmetric, and it is not Psi-positive in general.
pub fn kpd_psi(p: &LabeledPoset, d: &[u32], route: Route) -> Result<PartitionExpansionReport> {
    p.require_natural()?;
    check_weights(&p.poset, d)?;
    let total: usize = d.iter().map(|&x| x as usize).sum();
    if d.contains(&0) {
        let m = kpd_monomial_oracle(&p.poset, d)?;
        let mut r = PartitionExpansionReport::from_element(m);
        r.warnings.push(
            "zero weight: the positive-weight expansion does not apply; coefficients of x_1^b_1...x_l^b_l shown in the Psi basis"
                .into(),
        );
        return Ok(r);
    }
    let mut r = match route {
        Route::LStar => PartitionExpansionReport::from_certificates(total, int_certs(kpd_lstar(p, d))),
        Route::F => PartitionExpansionReport::from_element(kpd_monomial_oracle(&p.poset, d)?),
        Route::OStar | Route::All => {
            PartitionExpansionReport::from_certificates(total, int_certs(kpd_ostar(&p.poset, d)))
        }
    };
    if route == Route::All {
        let l = psi_from_certificates(total, &int_certs(kpd_lstar(p, d)));
        let agree_l = l == r.element;
        r.check("Lstar = Ostar", agree_l);
        let agree_m = kpd_monomial_oracle(&p.poset, d)? == r.element;
        r.check("monomial oracle = Ostar", agree_m);
        let pos = r.positive;
        r.check("certificates nonnegative integers", pos);
    }
    Ok(r)
}

/// Sum of the certificates; a cheap fingerprint used in reports.
pub fn certificate_total(r: &PartitionExpansionReport) -> Rational {
    r.certificates.values().filter_map(|c| c.as_constant()).fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{antichain, chain, disjoint_chains};
    use crate::ring::{rat, ratio};

    fn comp(p: &[u32]) -> Composition {
        Composition::of(p)
    }

    #[test]
    fn one_element_poset_is_psi_1() {
        let r = kp_psi(&LabeledPoset::natural(chain(1)), Route::All).unwrap();
        assert!(r.all_checks_passed());
        assert_eq!(r.element, QSymElement::basis_element(Basis::Psi, &comp(&[1])));
    }

    #[test]
    fn antichain_of_two_in_monomials() {
        let m = kp_monomial_oracle(&antichain(2));
        assert_eq!(m.coeff(&comp(&[2])), ParamPoly::one());
        assert_eq!(m.coeff(&comp(&[1, 1])), ParamPoly::int(2));
        let c = kp_monomial_oracle(&chain(2));
        assert_eq!(c.coeff(&comp(&[1, 1])), ParamPoly::one());
    }

    #[test]
    fn example_poset_routes() {
        let p = crate::posets::tests::example_poset();
        let r = kp_psi(&p, Route::All).unwrap();
        assert!(r.all_checks_passed(), "{:?}", r.checks);
        assert_eq!(r.certificates[&comp(&[2, 3])], ParamPoly::one());
        assert!(!r.certificates.contains_key(&comp(&[4, 1])));
        assert_eq!(kp_monomial_oracle(&p.poset), r.element);
    }

    #[test]
    fn disjoint_chains_give_h() {
        let lambda = crate::composition::Partition::of(&[2, 1]);
        let r = kp_psi(&LabeledPoset::natural(disjoint_chains(lambda.parts())), Route::All).unwrap();
        assert_eq!(r.element, crate::sym::complete_m(&lambda));
    }

    #[test]
    fn strict_two_chain() {
        let p = LabeledPoset::reversing(chain(2));
        let r = kp_omega_strict(&p, Route::All).unwrap();
        assert!(r.all_checks_passed());
        assert_eq!(r.element, kp_psi(&LabeledPoset::natural(chain(2)), Route::F).unwrap().element);
        assert!(kp_omega_strict(&LabeledPoset::natural(chain(2)), Route::All).is_err());
    }

    #[test]
    fn strict_omega_lands_on_the_dual() {
        // 0 < 1, 0 < 2 is not self-dual; omega of its strict function is the
        // natural function of 1, 2 < 0, not of itself
        let v = Poset::from_relations(3, &[(0, 1), (0, 2)]).unwrap();
        let r = kp_omega_strict(&LabeledPoset::reversing(v.clone()), Route::All).unwrap();
        assert!(r.all_checks_passed(), "{:?}", r.checks);
        assert_eq!(r.element, kp_monomial_oracle(&v.dual()));
        assert_ne!(r.element, kp_monomial_oracle(&v));
    }

    #[test]
    fn full_class_on_a_chain_is_p_n() {
        let p = LabeledPoset::natural(chain(4));
        let e = Equivalence::new(4, &[vec![0, 1, 2, 3]]).unwrap();
        let r = kpe_psi(&p, &e, Route::All).unwrap();
        assert!(r.all_checks_passed());
        assert_eq!(r.element, QSymElement::basis_element(Basis::Psi, &comp(&[4])));
    }

    #[test]
    fn weighted_antichain_is_p_lambda() {
        let p = LabeledPoset::natural(antichain(2));
        let r = kpd_psi(&p, &[2, 1], Route::All).unwrap();
        assert!(r.all_checks_passed());
        let mut want = QSymElement::zero(3, Basis::Psi);
        want.add_term(comp(&[2, 1]), &ParamPoly::one()).unwrap();
        want.add_term(comp(&[1, 2]), &ParamPoly::one()).unwrap();
        assert_eq!(r.element, want);
    }

    #[test]
    fn zero_weight_chain_is_not_positive() {
        let p = LabeledPoset::natural(chain(3));
        let r = kpd_psi(&p, &[1, 0, 2], Route::All).unwrap();
        assert!(!r.positive);
        assert_eq!(r.warnings.len(), 1);
        // M_3 + 2 M_12 = 2 Psi_12 - Psi_3 / 3
        assert_eq!(r.element.coeff(&comp(&[1, 2])), ParamPoly::int(2));
        assert_eq!(r.element.coeff(&comp(&[3])), ParamPoly::constant(ratio(-1, 3)));
        assert_eq!(r.certificates[&comp(&[3])], ParamPoly::constant(rat(-1)));
    }

    #[test]
    fn recursion_on_the_two_chain() {
        let p = chain(3);
        let e = Equivalence::new(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(kpe_recursion_holds(&p, &e).unwrap());
    }
}
