//! Order-preserving surjections onto chains, and their bijection with the
//! starred Jordan-Holder sets.

use std::collections::BTreeMap;

use super::{LabeledPoset, Poset};
use crate::composition::{mask_elems, submasks, Composition};
use crate::error::{QsymError, Result};

/// `f : P -> [k]` with `values[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    pub values: Vec<usize>,
    pub k: usize,
}

impl Surjection {
    pub fn from_fibers(n: usize, fibers: &[u64]) -> Self {
        let mut values = vec![0; n];
        for (i, &f) in fibers.iter().enumerate() {
            for x in mask_elems(f) {
                values[x] = i + 1;
            }
        }
        Surjection { values, k: fibers.len() }
    }

    pub fn fiber(&self, i: usize) -> u64 {
        self.values.iter().enumerate().filter(|&(_, &v)| v == i).fold(0, |m, (x, _)| m | 1 << x)
    }

    pub fn fibers(&self) -> Vec<u64> {
        (1..=self.k).map(|i| self.fiber(i)).collect()
    }

    /// `(|f^{-1}(1)|, ..., |f^{-1}(k)|)`.
    pub fn type_of(&self) -> Composition {
        Composition(self.fibers().iter().map(|f| f.count_ones()).collect())
    }

    pub fn is_order_preserving(&self, p: &Poset) -> bool {
        p.relations().iter().all(|&(x, y)| self.values[x] <= self.values[y])
    }

    /// Every fiber has a unique minimal element.
    pub fn is_starred(&self, p: &Poset) -> bool {
        self.fibers().into_iter().all(|f| p.has_unique_min(f))
    }
}

impl Poset {
    fn fibers_rec(&self, alpha: &[u32], placed: u64, cur: &mut Vec<u64>, star: bool, out: &mut dyn FnMut(&[u64])) {
        let Some((&size, rest)) = alpha.split_first() else {
            out(cur);
            return;
        };
        let elems: Vec<usize> = mask_elems(self.all() & !placed).collect();
        crate::qsym::for_each_combination(elems.len(), size as usize, |idx| {
            let f = idx.iter().fold(0u64, |m, &i| m | 1 << elems[i]);
            if !self.is_down_set(placed | f) || (star && !self.has_unique_min(f)) {
                return;
            }
            cur.push(f);
            self.fibers_rec(rest, placed | f, cur, star, out);
            cur.pop();
        });
    }

    /// `O_alpha(P)`.
    pub fn surjections(&self, alpha: &Composition) -> Vec<Surjection> {
        self.surjections_impl(alpha, false)
    }

    /// `O*_alpha(P)`: every fiber has a unique minimal element.
    pub fn star_surjections(&self, alpha: &Composition) -> Vec<Surjection> {
        self.surjections_impl(alpha, true)
    }

    fn surjections_impl(&self, alpha: &Composition, star: bool) -> Vec<Surjection> {
        if alpha.size() != self.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let n = self.len();
        self.fibers_rec(alpha.parts(), 0, &mut Vec::new(), star, &mut |f| out.push(Surjection::from_fibers(n, f)));
        out.sort();
        out
    }

    /// Calls `visit` with the fibers of every order-preserving surjection.
    pub fn for_each_surjection(&self, visit: &mut dyn FnMut(&[u64])) {
        fn rec(p: &Poset, placed: u64, cur: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
            let remaining = p.all() & !placed;
            if remaining == 0 {
                visit(cur);
                return;
            }
            for f in submasks(remaining) {
                if f == 0 || !p.is_down_set(placed | f) {
                    continue;
                }
                cur.push(f);
                rec(p, placed | f, cur, visit);
                cur.pop();
            }
        }
        rec(self, 0, &mut Vec::new(), visit);
    }

    /// `(|O_alpha(P)|, |O*_alpha(P)|)` for every type alpha that occurs.
    pub fn surjection_type_counts(&self) -> BTreeMap<Composition, (u64, u64)> {
        let mut out: BTreeMap<Composition, (u64, u64)> = BTreeMap::new();
        self.for_each_surjection(&mut |fibers| {
            let t = Composition(fibers.iter().map(|f| f.count_ones()).collect());
            let e = out.entry(t).or_default();
            e.0 += 1;
            if fibers.iter().all(|&f| self.has_unique_min(f)) {
                e.1 += 1;
            }
        });
        out
    }
}

/// `f_sigma(x) = i` for `x` in the `i`-th block preimage.
pub fn sigma_to_f(sigma: &[usize], alpha: &Composition, p: &LabeledPoset) -> Result<Surjection> {
    p.require_natural()?;
    if !p.linear_extensions().iter().any(|s| s == sigma)
        || !super::is_alpha_unimodal_perm(sigma, alpha)
        || !p.is_starred(sigma, alpha)
    {
        return Err(QsymError::Domain("sigma is not in L*_alpha(P, w)".into()));
    }
    let fibers: Vec<u64> = alpha.blocks().into_iter().map(|(a, b)| p.block_preimage(sigma, a, b)).collect();
    Ok(Surjection::from_fibers(p.len(), &fibers))
}

/// Lists the labels of each fiber in increasing order, fiber by fiber.
pub fn f_to_sigma(f: &Surjection, p: &LabeledPoset) -> Result<Vec<usize>> {
    p.require_natural()?;
    if f.values.len() != p.len() || !f.is_order_preserving(&p.poset) || !f.is_starred(&p.poset) {
        return Err(QsymError::Domain("f is not in O*(P)".into()));
    }
    let mut sigma = Vec::with_capacity(p.len());
    for fib in f.fibers() {
        let mut labels: Vec<usize> = mask_elems(fib).map(|x| p.label(x)).collect();
        labels.sort_unstable();
        sigma.extend(labels);
    }
    Ok(sigma)
}
