//! Eulerian and cycle Eulerian quasisymmetric functions, with the word
//! models (banners, cyclic words, necklaces) and the zigzag path and cycle
//! posets behind their power sum expansions.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::composition::{compositions, next_permutation, partitions, Composition, Partition};
use crate::posets::{dex_set, exc_set, zigzag_cycle, zigzag_path};
use crate::ppartitions::{ostar_counts, PartitionExpansionReport};
use crate::qsym::{Basis, QSymElement, XPoly};
use crate::ring::{Mono, ParamPoly, Rational, Var};
use crate::special::{divisors, eulerian_poly, number_moebius, q_int};
use crate::sym::{SymBasis, SymElement};

use super::add_certs;

fn q_pow(j: u32) -> ParamPoly {
    ParamPoly::monomial(Rational::from_integer(1.into()), Mono::var(Var::Q, j))
}

/// `sum_j q^j Q_j`.
pub fn q_graded(parts: &[QSymElement]) -> QSymElement {
    let n = parts.first().map_or(0, |e| e.degree());
    let mut out = QSymElement::zero(n, Basis::F);
    for (j, e) in parts.iter().enumerate() {
        out = out.add(&e.scale(&q_pow(j as u32))).unwrap();
    }
    out
}

fn by_exc(n: usize, perms: impl Iterator<Item = Vec<usize>>) -> Vec<QSymElement> {
    let mut out = vec![QSymElement::zero(n, Basis::F); n.max(1)];
    for sigma in perms {
        let j = exc_set(&sigma).count_ones() as usize;
        out[j] = out[j].add(&QSymElement::fundamental(n, dex_set(&sigma))).unwrap();
    }
    out
}

fn all_perms(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let p = cur.take()?;
        let mut next = p.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(p)
    })
}

/// `Q_{n,j}` for `j = 0..n-1`: permutations with `j` excedances, each
/// contributing `F_{DEX(sigma)}`.
pub fn eulerian_q(n: usize) -> Vec<QSymElement> {
    by_exc(n, all_perms(n))
}

/// The long cycles of `S_n` in one-line notation, each written once as
/// `(a_1 ... a_{n-1} n)`.
pub fn long_cycles(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    all_perms(n - 1)
        .map(|a| {
            let mut sigma = vec![0; n];
            let mut cyc = a.clone();
            cyc.push(n);
            for t in 0..n {
                sigma[cyc[t] - 1] = cyc[(t + 1) % n];
            }
            sigma
        })
        .collect()
}

/// `Q_{(n),j}` for `j = 0..n-1`, summing over long cycles.
pub fn cycle_eulerian_q(n: usize) -> Vec<QSymElement> {
    by_exc(n, long_cycles(n).into_iter())
}

/// `sum_{S ⊆ [n-1]} q^|S| K_{P_S}` over zigzag paths, in Psi.
pub fn path_poset_sum(n: usize) -> PartitionExpansionReport {
    let mut certs = BTreeMap::new();
    for s in crate::composition::submasks(crate::composition::full_mask(n)) {
        let p = zigzag_path(s, n).unwrap();
        add_certs(&mut certs, &ostar_counts(&p), Mono::var(Var::Q, s.count_ones()));
    }
    PartitionExpansionReport::from_certificates(n, certs)
}

/// Cycle subsets `0 < |S| < n` of `[n]` as masks over bits `1..=n`.
fn proper_cycle_subsets(n: usize) -> impl Iterator<Item = u64> {
    let full = (1u64 << (n + 1)) - 2;
    crate::composition::submasks(full).filter(move |&s| s != 0 && s != full)
}

/// `p_n + sum_{0<|S|<n} q^|S| K_{P_S}` over zigzag cycles, in Psi.
pub fn cycle_poset_sum(n: usize) -> PartitionExpansionReport {
    let mut certs: BTreeMap<Composition, ParamPoly> = BTreeMap::new();
    certs.insert(Composition(vec![n as u32]), ParamPoly::int(n as i64));
    if n >= 2 {
        for s in proper_cycle_subsets(n) {
            let p = zigzag_cycle(s, n).unwrap();
            add_certs(&mut certs, &ostar_counts(&p), Mono::var(Var::Q, s.count_ones()));
        }
    }
    PartitionExpansionReport::from_certificates(n, certs)
}

fn sym_from_terms(n: usize, terms: impl Iterator<Item = (Partition, ParamPoly)>) -> SymElement {
    let mut out = SymElement::zero(n, SymBasis::P);
    for (l, c) in terms {
        let c = c.scale(&(Rational::from_integer(1.into()) / Rational::from_integer(l.z())));
        out.add_term(l, &c).unwrap();
    }
    out
}

fn prod_q_ints(parts: &[u32], d: u32) -> ParamPoly {
    parts.iter().fold(ParamPoly::one(), |acc, &p| &acc * &q_int((p / d) as usize).power_var(Var::Q, d))
}

/// `sum_lambda p_lambda / z_lambda A_l(q) prod [lambda_i]_q`.
pub fn eulerian_closed_form(n: usize) -> SymElement {
    sym_from_terms(
        n,
        partitions(n).into_iter().map(|l| {
            let c = &eulerian_poly(l.len()) * &prod_q_ints(l.parts(), 1);
            (l, c)
        }),
    )
}

/// `p_n [n]_q + sum_{l >= 2} p_lambda / z_lambda n q A_{l-1}(q) prod [lambda_i]_q`.
pub fn cycle_word_closed_form(n: usize) -> SymElement {
    sym_from_terms(
        n,
        partitions(n).into_iter().map(|l| {
            let c = if l.len() == 1 {
                q_int(n).scale(&Rational::from_integer(n.into()))
            } else {
                let nq = ParamPoly::monomial(Rational::from_integer(n.into()), Mono::var(Var::Q, 1));
                &(&nq * &eulerian_poly(l.len() - 1)) * &prod_q_ints(l.parts(), 1)
            };
            (l, c)
        }),
    )
}

/// Which polynomial stands in for `q^d A_{l-1}(q^d)` when `l = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingleRowTerm {
    /// `q^d A_0(q^d) = q^d`, the uniform formula.
    QTimesA0,
    /// The constant 1.
    One,
}

/// `sum_lambda p_lambda / z_lambda sum_{d | gcd} mu(d) d^{l-1} T_{l-1}(q^d)
/// prod [lambda_i / d]_{q^d}` with `T_k(q) = q A_k(q)`, except that `T_0`
/// is chosen by `single`.
pub fn cycle_eulerian_closed_form(n: usize, single: SingleRowTerm) -> SymElement {
    sym_from_terms(
        n,
        partitions(n).into_iter().map(|l| {
            let len = l.len();
            let mut c = ParamPoly::zero();
            for d in divisors(l.gcd() as u64) {
                let mu = number_moebius(d);
                if mu == 0 {
                    continue;
                }
                let t = if len == 1 && single == SingleRowTerm::One {
                    ParamPoly::one()
                } else {
                    &ParamPoly::q() * &eulerian_poly(len - 1)
                };
                let t = t.power_var(Var::Q, d as u32);
                let scal = Rational::from_integer(BigInt::from(mu) * BigInt::from(d).pow(len as u32 - 1));
                c += &(&t * &prod_q_ints(l.parts(), d as u32)).scale(&scal);
            }
            (l, c)
        }),
    )
}

/// `(1/n) sum_{d | n} mu(d) sum_j q^{dj} F_{n/d,j}(x^d)`, with the cyclic
/// word sums taken from the zigzag cycle posets.
pub fn cycle_eulerian_by_inversion(n: usize) -> QSymElement {
    let mut out = QSymElement::zero(n, Basis::Psi);
    for d in divisors(n as u64) {
        let mu = number_moebius(d);
        if mu == 0 {
            continue;
        }
        let inner = cycle_poset_sum(n / d as usize).element;
        let term = inner.map_coeffs(|c| c.power_var(Var::Q, d as u32)).power_substitution(d as u32);
        out = out.add(&term.scale(&ParamPoly::constant(Rational::new(mu.into(), (n as i64).into())))).unwrap();
    }
    out
}

/// Both sides of `sum_{d|n} mu(d) [n/d]_{q^d} = sum_{d|n} mu(d) q^d [n/d]_{q^d}`.
pub fn moebius_q_int_sides(n: usize) -> (ParamPoly, ParamPoly) {
    let mut lhs = ParamPoly::zero();
    let mut rhs = ParamPoly::zero();
    for d in divisors(n as u64) {
        let mu = ParamPoly::int(number_moebius(d));
        let qi = q_int(n / d as usize).power_var(Var::Q, d as u32);
        lhs += &(&mu * &qi);
        rhs += &(&(&mu * &q_pow(d as u32)) * &qi);
    }
    (lhs, rhs)
}

/// `sum_S q^|S| |O*_alpha(P_S)|` over zigzag paths, for every alpha.
pub fn path_surjection_table(n: usize) -> BTreeMap<Composition, ParamPoly> {
    path_poset_sum(n).certificates
}

/// `A_l(q) prod [alpha_i]_q`.
pub fn path_surjection_closed_form(alpha: &Composition) -> ParamPoly {
    &eulerian_poly(alpha.len()) * &prod_q_ints(alpha.parts(), 1)
}

/// `sum_{0<|S|<n} q^|S| |O*_alpha(P_S)|` over zigzag cycles, for every alpha.
pub fn cycle_surjection_table(n: usize) -> BTreeMap<Composition, ParamPoly> {
    let mut certs = BTreeMap::new();
    if n >= 2 {
        for s in proper_cycle_subsets(n) {
            add_certs(&mut certs, &ostar_counts(&zigzag_cycle(s, n).unwrap()), Mono::var(Var::Q, s.count_ones()));
        }
    }
    certs
}

/// `n q A_{l-1}(q) prod [alpha_i]_q` for `l >= 2`, `n q [n-1]_q` for `alpha = (n)`.
pub fn cycle_surjection_closed_form(alpha: &Composition) -> ParamPoly {
    let n = alpha.size();
    let nq = ParamPoly::monomial(Rational::from_integer(n.into()), Mono::var(Var::Q, 1));
    if alpha.len() == 1 {
        &nq * &q_int(n - 1)
    } else {
        &(&nq * &eulerian_poly(alpha.len() - 1)) * &prod_q_ints(alpha.parts(), 1)
    }
}

/// Words of length `n` over `x_1..x_m`, barred or not, with `|b_i| >= |b_{i+1}|`
/// after a barred letter and `<=` after an unbarred one. `cyclic` also
/// compares the last letter with the first; otherwise the last letter must
/// be unbarred. Calls `visit(letters, bars)`.
fn for_each_word(n: usize, m: usize, cyclic: bool, visit: &mut dyn FnMut(&[usize], u64)) {
    let ok = |a: usize, barred: bool, b: usize| if barred { a >= b } else { a <= b };
    let mut letters = vec![0usize; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        m: usize,
        cyclic: bool,
        bars: u64,
        letters: &mut [usize],
        ok: &dyn Fn(usize, bool, usize) -> bool,
        visit: &mut dyn FnMut(&[usize], u64),
    ) {
        if i == n {
            if cyclic && !ok(letters[n - 1], bars >> (n - 1) & 1 == 1, letters[0]) {
                return;
            }
            visit(letters, bars);
            return;
        }
        for c in 1..=m {
            if i > 0 && !ok(letters[i - 1], bars >> (i - 1) & 1 == 1, c) {
                continue;
            }
            letters[i] = c;
            rec(i + 1, n, m, cyclic, bars, letters, ok, visit);
            if cyclic || i + 1 < n {
                rec(i + 1, n, m, cyclic, bars | 1 << i, letters, ok, visit);
            }
        }
    }
    rec(0, n, m, cyclic, 0, &mut letters, &ok, visit);
}

fn weight_exps(letters: &[usize], m: usize) -> Vec<u32> {
    let mut exps = vec![0u32; m];
    for &c in letters {
        exps[c - 1] += 1;
    }
    exps
}

/// Banners of length `n` in `x_1..x_m`, with `q` marking barred letters.
pub fn banner_oracle(n: usize, m: usize) -> XPoly {
    let mut out = XPoly::new(m);
    for_each_word(n, m, false, &mut |w, bars| out.add_term(weight_exps(w, m), &q_pow(bars.count_ones())));
    out
}

/// Cyclic words with fewer than `n` barred letters.
pub fn cyclic_word_oracle(n: usize, m: usize) -> XPoly {
    let mut out = XPoly::new(m);
    for_each_word(n, m, true, &mut |w, bars| {
        let j = bars.count_ones();
        if (j as usize) < n {
            out.add_term(weight_exps(w, m), &q_pow(j));
        }
    });
    out
}

/// Primitive bicolored necklaces: each appears as exactly `n` primitive words.
pub fn necklace_oracle(n: usize, m: usize) -> XPoly {
    let mut out = XPoly::new(m);
    let share = ParamPoly::constant(Rational::new(1.into(), (n as i64).into()));
    for_each_word(n, m, true, &mut |w, bars| {
        if n == 1 && bars != 0 {
            return;
        }
        let word: Vec<(usize, bool)> = (0..n).map(|i| (w[i], bars >> i & 1 == 1)).collect();
        let primitive = (1..n).all(|k| {
            let rotated: Vec<_> = word[k..].iter().chain(&word[..k]).copied().collect();
            rotated != word
        });
        if primitive {
            out.add_term(weight_exps(w, m), &(&share * &q_pow(bars.count_ones())));
        }
    });
    out
}

/// Every composition of `n` paired with `f(alpha)`, for table comparisons.
pub fn compare_tables(
    n: usize,
    table: &BTreeMap<Composition, ParamPoly>,
    f: impl Fn(&Composition) -> ParamPoly,
) -> Option<Composition> {
    compositions(n).into_iter().find(|a| table.get(a).cloned().unwrap_or_default() != f(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dex_example() {
        assert_eq!(dex_set(&[6, 1, 3, 5, 4, 2]), 1 << 3 | 1 << 5);
    }

    #[test]
    fn degree_one() {
        let q = eulerian_q(1);
        assert_eq!(q.len(), 1);
        assert_eq!(q[0], QSymElement::basis_element(Basis::M, &Composition::of(&[1])));
        assert_eq!(long_cycles(1), vec![vec![1]]);
        assert_eq!(long_cycles(3).len(), 2);
    }

    #[test]
    fn eulerian_routes_agree() {
        for n in 1..=4 {
            let total = q_graded(&eulerian_q(n));
            assert_eq!(total, path_poset_sum(n).element, "n={}", n);
            assert_eq!(total, eulerian_closed_form(n).to_qsym(), "n={}", n);
            assert_eq!(total.expand_truncated(n), banner_oracle(n, n), "n={}", n);
        }
    }

    #[test]
    fn cycle_routes_agree() {
        for n in 1..=4 {
            let words = cycle_poset_sum(n).element;
            assert_eq!(words.expand_truncated(n), cyclic_word_oracle(n, n), "n={}", n);
            assert_eq!(words, cycle_word_closed_form(n).to_qsym(), "n={}", n);
            let total = q_graded(&cycle_eulerian_q(n));
            assert_eq!(total, cycle_eulerian_by_inversion(n), "n={}", n);
            assert_eq!(total.expand_truncated(n), necklace_oracle(n, n), "n={}", n);
            assert_eq!(total, cycle_eulerian_closed_form(n, SingleRowTerm::One).to_qsym(), "n={}", n);
            let uniform = cycle_eulerian_closed_form(n, SingleRowTerm::QTimesA0).to_qsym();
            assert_eq!(total == uniform, n > 1, "n={}", n);
        }
    }

    #[test]
    fn necklaces_of_length_three_with_one_bar() {
        // 11 1bar, 22 2bar, 12 2bar, 11 2bar
        let x = necklace_oracle(3, 2);
        let q1 = |e: Vec<u32>| x.coeff(&e).coeff(&Mono::var(Var::Q, 1));
        let total: Rational = [vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]].into_iter().map(q1).sum();
        assert_eq!(total, Rational::from_integer(4.into()));
    }

    #[test]
    fn moebius_q_int_sides_split_at_one() {
        let (l, r) = moebius_q_int_sides(1);
        assert_ne!(l, r);
        for n in 2..=12 {
            let (l, r) = moebius_q_int_sides(n);
            assert_eq!(l, r, "n={}", n);
        }
    }
}
