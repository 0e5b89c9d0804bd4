//! Unimodal subsets relative to a composition, and consistent permutations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{compositions, full_mask, mask_elems, submasks, Composition, SetMask};
use crate::error::{QsymError, Result};

/// `S` is alpha-unimodal: inside every block `[a, b]` of alpha the elements of
/// `S` among `a, ..., b-1` form an initial segment `a, a+1, ...`.
pub fn is_alpha_unimodal(s: SetMask, alpha: &Composition) -> bool {
    for (a, b) in alpha.blocks() {
        let mut open = true;
        for k in a..b {
            let inside = s >> k & 1 == 1;
            if inside && !open {
                return false;
            }
            open &= inside;
        }
    }
    true
}

/// The local form: `k in S \ Set(alpha)` forces `k-1 in S or Set(alpha) or {0}`.
pub fn is_alpha_unimodal_local(s: SetMask, alpha: &Composition) -> bool {
    let set0 = alpha.set() | 1;
    mask_elems(s & !alpha.set()).all(|k| (s | set0) >> (k - 1) & 1 == 1)
}

/// All alpha-unimodal subsets, ordered by size and then lexicographically.
pub fn enumerate_unimodal(alpha: &Composition) -> Vec<SetMask> {
    let n = alpha.size();
    let mut out: Vec<SetMask> = submasks(full_mask(n)).filter(|&s| is_alpha_unimodal(s, alpha)).collect();
    sort_sets(&mut out);
    out
}

pub fn sort_sets(v: &mut [SetMask]) {
    v.sort_by_key(|&s| (s.count_ones(), mask_elems(s).collect::<Vec<_>>()));
}

/// `2^{l-1} * prod alpha_i`.
pub fn count_unimodal(alpha: &Composition) -> BigInt {
    if alpha.is_empty() {
        return BigInt::one();
    }
    let prod: BigInt = alpha.parts().iter().map(|&p| BigInt::from(p)).product();
    prod << (alpha.len() - 1)
}

/// Mobius function `mu(empty, S)` of the lattice of alpha-unimodal sets.
pub fn moebius_unimodal(alpha: &Composition, s: SetMask) -> Result<i64> {
    if s & !full_mask(alpha.size()) != 0 || !is_alpha_unimodal(s, alpha) {
        return Err(QsymError::Domain(format!("{} is not {}-unimodal", crate::composition::fmt_set(s), alpha)));
    }
    let set0 = alpha.set() | 1;
    let atoms = alpha.set() | (set0 << 1);
    Ok(if s & !atoms == 0 {
        if s.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    })
}

/// `V_alpha = {gamma : Set(alpha) is gamma-unimodal}`, in canonical order.
pub fn enumerate_v(alpha: &Composition) -> Vec<Composition> {
    let s = alpha.set();
    compositions(alpha.size()).into_iter().filter(|g| is_alpha_unimodal(s, g)).collect()
}

/// `2^{n-1} (3/4)^m`, `m = #{i < l : alpha_i > 1}`.
pub fn count_v(alpha: &Composition) -> BigInt {
    let n = alpha.size();
    if n == 0 {
        return BigInt::one();
    }
    let l = alpha.len();
    let m = alpha.parts()[..l - 1].iter().filter(|&&p| p > 1).count();
    (BigInt::from(3).pow(m as u32) << (n - 1)) >> (2 * m)
}

/// Two members of `V_alpha` whose join (common coarsening) is not in `V_alpha`.
pub fn v_non_sublattice_witness(alpha: &Composition) -> Option<(Composition, Composition)> {
    let v = enumerate_v(alpha);
    let n = alpha.size();
    for (i, g) in v.iter().enumerate() {
        for d in &v[i + 1..] {
            let join = Composition::from_set(n, g.set() & d.set());
            if !is_alpha_unimodal(alpha.set(), &join) {
                return Some((g.clone(), d.clone()));
            }
        }
    }
    None
}

/// `f(n) = #{(alpha, S) : alpha |= n, S in U_alpha}` via `f(n) = 4f(n-1) - f(n-2)`.
pub fn unimodal_pair_count(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = BigInt::from(4) * &b - &a;
        a = b;
        b = c;
    }
    b
}

/// Coefficients `[n][|S|][l]` of `tz / (1 - (1+q)(1+t)z + qz^2)` for `n <= nmax`,
/// from `F = zt + (1+q)(1+t)zF - qz^2F`.
pub fn unimodal_gf_coeffs(nmax: usize) -> Vec<Vec<Vec<BigInt>>> {
    let dim = nmax + 2;
    let zero = || vec![vec![BigInt::zero(); dim]; dim];
    let mut f: Vec<Vec<Vec<BigInt>>> = vec![zero()];
    for n in 1..=nmax {
        let mut c = zero();
        if n == 1 {
            c[0][1] += 1;
        }
        let prev = &f[n - 1];
        for i in 0..dim {
            for j in 0..dim {
                let v = &prev[i][j];
                if v.is_zero() {
                    continue;
                }
                // (1 + q + t + qt) * v
                c[i][j] += v;
                if i + 1 < dim {
                    c[i + 1][j] += v;
                }
                if j + 1 < dim {
                    c[i][j + 1] += v;
                }
                if i + 1 < dim && j + 1 < dim {
                    c[i + 1][j + 1] += v;
                }
            }
        }
        if n >= 2 {
            for i in 0..dim - 1 {
                for j in 0..dim {
                    let v = f[n - 2][i][j].clone();
                    c[i + 1][j] -= v;
                }
            }
        }
        f.push(c);
    }
    f
}

/// The same table by enumeration.
pub fn unimodal_gf_coeffs_enum(nmax: usize) -> Vec<Vec<Vec<BigInt>>> {
    let dim = nmax + 2;
    let mut f = vec![vec![vec![BigInt::zero(); dim]; dim]];
    for n in 1..=nmax {
        let mut c = vec![vec![BigInt::zero(); dim]; dim];
        for a in compositions(n) {
            for s in enumerate_unimodal(&a) {
                c[s.count_ones() as usize][a.len()] += 1;
            }
        }
        f.push(c);
    }
    f
}

/// Each alpha-block of `sigma` ends with its maximum, and inside each
/// beta-block these maxima increase.
pub fn is_consistent(sigma: &[usize], alpha: &Composition, beta: &Composition) -> Result<bool> {
    if !alpha.refines(beta) {
        return Err(QsymError::Domain(format!("{} does not refine {}", alpha, beta)));
    }
    if sigma.len() != alpha.size() {
        return Err(QsymError::Input("permutation length differs from |alpha|".into()));
    }
    let bset = beta.set();
    let mut prev_max: Option<usize> = None;
    for (a, b) in alpha.blocks() {
        let block = &sigma[a - 1..b];
        let m = *block.iter().max().unwrap();
        if block[block.len() - 1] != m {
            return Ok(false);
        }
        if let Some(p) = prev_max {
            if p > m {
                return Ok(false);
            }
        }
        // a new beta-block starts after position b
        prev_max = if bset >> b & 1 == 1 { None } else { Some(m) };
    }
    Ok(true)
}

/// Parent pointers of the forest on positions `1..=n`; index 0 unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookForest {
    pub n: usize,
    pub parent: Vec<Option<usize>>,
}

impl HookForest {
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut h = vec![1usize; self.n + 1];
        h[0] = 0;
        // parents always have larger index
        for v in 1..=self.n {
            let mut p = self.parent[v];
            while let Some(u) = p {
                h[u] += 1;
                p = self.parent[u];
            }
        }
        h[1..].to_vec()
    }

    pub fn hook_product(&self) -> BigInt {
        self.hook_lengths().into_iter().map(BigInt::from).product()
    }

    /// The forest as a poset with every vertex below its parent.
    pub fn to_poset(&self) -> crate::posets::Poset {
        let rel: Vec<(usize, usize)> = (1..=self.n).filter_map(|v| self.parent[v].map(|p| (v - 1, p - 1))).collect();
        crate::posets::Poset::from_relations(self.n, &rel).expect("a forest is acyclic")
    }
}

pub fn hook_forest(alpha: &Composition, beta: &Composition) -> Result<HookForest> {
    if !alpha.refines(beta) {
        return Err(QsymError::Domain(format!("{} does not refine {}", alpha, beta)));
    }
    let n = alpha.size();
    let bset = beta.set();
    let mut parent = vec![None; n + 1];
    let blocks = alpha.blocks();
    for (i, &(a, b)) in blocks.iter().enumerate() {
        for slot in &mut parent[a..b] {
            *slot = Some(b);
        }
        if i + 1 < blocks.len() && bset >> b & 1 == 0 {
            parent[b] = Some(blocks[i + 1].1);
        }
    }
    Ok(HookForest { n, parent })
}

/// CONS(alpha, beta) in lexicographic order.
pub fn enumerate_cons(alpha: &Composition, beta: &Composition) -> Result<Vec<Vec<usize>>> {
    let n = alpha.size();
    if n <= 8 {
        enumerate_cons_filter(alpha, beta)
    } else {
        enumerate_cons_forest(alpha, beta)
    }
}

pub fn enumerate_cons_filter(alpha: &Composition, beta: &Composition) -> Result<Vec<Vec<usize>>> {
    let n = alpha.size();
    let mut sigma: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        if is_consistent(&sigma, alpha, beta)? {
            out.push(sigma.clone());
        }
        if !crate::composition::next_permutation(&mut sigma) {
            break;
        }
    }
    Ok(out)
}

/// Linear extensions of the hook forest, read as value assignments.
pub fn enumerate_cons_forest(alpha: &Composition, beta: &Composition) -> Result<Vec<Vec<usize>>> {
    let forest = hook_forest(alpha, beta)?;
    let p = forest.to_poset();
    let mut out: Vec<Vec<usize>> = p
        .linear_extension_orders()
        .into_iter()
        .map(|order| {
            let mut sigma = vec![0; forest.n];
            for (k, &x) in order.iter().enumerate() {
                sigma[x] = k + 1;
            }
            sigma
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `sum_{alpha <= beta, Set(gamma) alpha-unimodal} |CONS(alpha,beta)| (-1)^{|Set(gamma) \ Set(alpha)|}`.
pub fn cons_alternating_sum(beta: &Composition, gamma: &Composition) -> Result<BigInt> {
    let n = beta.size();
    if gamma.size() != n {
        return Err(QsymError::Input("beta and gamma have different sizes".into()));
    }
    let mut total = BigInt::zero();
    let sg = gamma.set();
    for extra in submasks(full_mask(n) & !beta.set()) {
        let alpha = Composition::from_set(n, beta.set() | extra);
        if !is_alpha_unimodal(sg, &alpha) {
            continue;
        }
        let count = BigInt::from(enumerate_cons(&alpha, beta)?.len());
        if (sg & !alpha.set()).count_ones().is_multiple_of(2) {
            total += count;
        } else {
            total -= count;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{fmt_set, mask_from};

    fn c(p: &[u32]) -> Composition {
        Composition::of(p)
    }

    #[test]
    fn the_eighteen_sets_for_33() {
        let sets: Vec<String> = enumerate_unimodal(&c(&[3, 3])).into_iter().map(fmt_set).collect();
        let want = [
            "{}",
            "{1}",
            "{3}",
            "{4}",
            "{1,2}",
            "{1,3}",
            "{1,4}",
            "{3,4}",
            "{4,5}",
            "{1,2,3}",
            "{1,2,4}",
            "{1,3,4}",
            "{1,4,5}",
            "{3,4,5}",
            "{1,2,3,4}",
            "{1,2,4,5}",
            "{1,3,4,5}",
            "{1,2,3,4,5}",
        ];
        assert_eq!(sets, want);
        assert_eq!(count_unimodal(&c(&[3, 3])), BigInt::from(18));
    }

    #[test]
    fn local_criterion_agrees() {
        for n in 1..=8 {
            for a in compositions(n) {
                for s in submasks(full_mask(n)) {
                    assert_eq!(is_alpha_unimodal(s, &a), is_alpha_unimodal_local(s, &a));
                }
            }
        }
    }

    #[test]
    fn moebius_examples() {
        let a = c(&[3, 3]);
        assert_eq!(moebius_unimodal(&a, 0).unwrap(), 1);
        assert_eq!(moebius_unimodal(&a, mask_from(&[3, 4])).unwrap(), 1);
        assert_eq!(moebius_unimodal(&a, mask_from(&[1, 2])).unwrap(), 0);
        assert!(moebius_unimodal(&a, mask_from(&[2])).is_err());
    }

    #[test]
    fn v_counts() {
        assert_eq!(count_v(&c(&[3, 3])), BigInt::from(24));
        assert_eq!(enumerate_v(&c(&[3, 3])).len(), 24);
        assert_eq!(count_v(&c(&[1, 1, 1, 1])), BigInt::from(8));
    }

    #[test]
    fn pair_counts() {
        let f: Vec<BigInt> = (0..=5).map(unimodal_pair_count).collect();
        assert_eq!(f, [0, 1, 4, 15, 56, 209].map(BigInt::from));
        let gf = unimodal_gf_coeffs(3);
        let count = compositions(3)
            .iter()
            .filter(|a| a.len() == 2)
            .flat_map(enumerate_unimodal)
            .filter(|s| s.count_ones() == 1)
            .count();
        assert_eq!(gf[3][1][2], BigInt::from(count));
    }

    #[test]
    fn cons_examples() {
        let (a, b) = (c(&[1, 2, 1, 2, 3]), c(&[3, 1, 5]));
        assert!(is_consistent(&[4, 3, 8, 7, 5, 6, 2, 1, 9], &a, &b).unwrap());
        assert!(!is_consistent(&[4, 3, 8, 7, 6, 5, 2, 1, 9], &a, &b).unwrap());
        assert!(!is_consistent(&[4, 3, 8, 7, 5, 9, 2, 1, 6], &a, &b).unwrap());
        assert!(is_consistent(&[1, 2, 3], &c(&[1, 2]), &c(&[2, 1])).is_err());
    }

    #[test]
    fn hook_forest_of_2312() {
        let f = hook_forest(&c(&[2, 3, 1, 2]), &c(&[6, 2])).unwrap();
        let mut h = f.hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 1, 1, 2, 2, 5, 6]);
        assert_eq!(f.hook_product(), BigInt::from(120));
        assert_eq!(enumerate_cons(&c(&[2, 3, 1, 2]), &c(&[6, 2])).unwrap().len(), 336);
    }

    #[test]
    fn cons_small_cases() {
        // 3!/pi((3),(3)) = 6/3: the words 123 and 213
        assert_eq!(enumerate_cons(&c(&[3]), &c(&[3])).unwrap(), vec![vec![1, 2, 3], vec![2, 1, 3]]);
        assert_eq!(enumerate_cons(&c(&[1, 1, 1]), &c(&[3])).unwrap(), vec![vec![1, 2, 3]]);
        assert_eq!(cons_alternating_sum(&c(&[2, 1]), &c(&[3])).unwrap(), BigInt::from(6));
    }
}
