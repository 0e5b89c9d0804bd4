//! Seeded search for positive combinations of `K_P` that are symmetric but
//! not Schur-positive or not h-positive.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::composition::{compositions, Composition, Partition};
use crate::error::{QsymError, Result};
use crate::families::counterexamples::{combination, positivity, PositivityReport};
use crate::posets::{LabeledPoset, Poset};
use crate::ppartitions::kp_fundamental;
use crate::qsym::Basis;

/// One `K_P` per distinct function among the posets on `n` elements, with
/// its monomial coefficients as machine integers for fast symmetry tests.
pub struct KpPool {
    pub n: usize,
    pub posets: Vec<Poset>,
    index: Vec<Composition>,
    rows: Vec<Vec<i64>>,
    classes: Vec<Vec<usize>>,
}

impl KpPool {
    pub fn new(n: usize) -> Result<KpPool> {
        if n == 0 || n > 7 {
            return Err(QsymError::Input("the search supports 1 <= n <= 7".into()));
        }
        let index = compositions(n);
        let mut posets = Vec::new();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for p in Poset::all_up_to_iso(n) {
            let m = kp_fundamental(&LabeledPoset::natural(p.clone())).convert(Basis::M);
            let row: Vec<i64> = index
                .iter()
                .map(|a| m.coeff(a).as_constant().and_then(|c| c.to_integer().try_into().ok()).unwrap_or(0))
                .collect();
            if !rows.contains(&row) {
                rows.push(row);
                posets.push(p);
            }
        }
        let mut classes: Vec<(Partition, Vec<usize>)> = Vec::new();
        for (i, a) in index.iter().enumerate() {
            let s = a.sorted();
            match classes.iter_mut().find(|(p, _)| *p == s) {
                Some((_, v)) => v.push(i),
                None => classes.push((s, vec![i])),
            }
        }
        Ok(KpPool { n, posets, index, rows, classes: classes.into_iter().map(|(_, v)| v).collect() })
    }

    pub fn len(&self) -> usize {
        self.posets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.posets.is_empty()
    }

    fn is_symmetric(&self, picks: &[(usize, i64)]) -> bool {
        let v: Vec<i64> =
            (0..self.index.len()).map(|j| picks.iter().map(|&(i, c)| c * self.rows[i][j]).sum()).collect();
        self.classes.iter().all(|cl| cl.iter().all(|&j| v[j] == v[cl[0]]))
    }
}

#[derive(Clone, Debug)]
pub struct Finding {
    /// Indices into the pool with their coefficients.
    pub picks: Vec<(usize, i64)>,
    pub report: PositivityReport,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub pool_size: usize,
    pub symmetric: usize,
    pub not_schur_positive: Option<Finding>,
    pub not_h_positive: Option<Finding>,
}

/// Draws `trials` combinations of 2 to 4 distinct posets with coefficients
/// 1 to 3. Draws come from one ChaCha stream, so the outcome depends only on
/// `(n, trials, seed)`; the first finding in draw order is kept.
pub fn search_positivity(n: usize, trials: usize, seed: u64) -> Result<SearchOutcome> {
    Ok(search_pool(&KpPool::new(n)?, trials, seed))
}

/// [`search_positivity`] over a prebuilt pool.
pub fn search_pool(pool: &KpPool, trials: usize, seed: u64) -> SearchOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(trials);
    for _ in 0..trials {
        let k = rng.gen_range(2..=4usize).min(pool.len());
        let mut picks: Vec<(usize, i64)> = sample(&mut rng, pool.len(), k).into_iter().map(|i| (i, 0)).collect();
        for p in &mut picks {
            p.1 = rng.gen_range(1..=3);
        }
        picks.sort_unstable();
        draws.push(picks);
    }
    let results: Vec<Option<Finding>> = draws
        .par_iter()
        .map(|picks| {
            if !pool.is_symmetric(picks) {
                return None;
            }
            let posets: Vec<Poset> = picks.iter().map(|&(i, _)| pool.posets[i].clone()).collect();
            let coeffs: Vec<i64> = picks.iter().map(|&(_, c)| c).collect();
            let report = positivity(&combination(&posets, &coeffs)).ok()?;
            Some(Finding { picks: picks.clone(), report })
        })
        .collect();
    let symmetric = results.iter().filter(|r| r.is_some()).count();
    let found = results.into_iter().flatten();
    let mut not_schur = None;
    let mut not_h = None;
    for f in found {
        if not_schur.is_none() && f.report.schur_negative.is_some() {
            not_schur = Some(f.clone());
        }
        if not_h.is_none() && f.report.h_negative.is_some() {
            not_h = Some(f);
        }
    }
    SearchOutcome {
        n: pool.n,
        trials,
        seed,
        pool_size: pool.len(),
        symmetric,
        not_schur_positive: not_schur,
        not_h_positive: not_h,
    }
}

/// Schur and h expansions of one fixed combination.
pub fn evaluate_combination(posets: &[Poset], coeffs: &[i64]) -> Result<PositivityReport> {
    if posets.is_empty() || posets.len() != coeffs.len() {
        return Err(QsymError::Input("need one coefficient per poset".into()));
    }
    let n = posets[0].len();
    if posets.iter().any(|p| p.len() != n) {
        return Err(QsymError::Input("posets have different sizes".into()));
    }
    if coeffs.iter().any(|&c| c < 0) {
        return Err(QsymError::Input("coefficients must be nonnegative".into()));
    }
    positivity(&combination(posets, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::counterexamples::four_posets;
    use crate::posets::chain;

    #[test]
    fn pool_sizes() {
        // 1, 2, 5, 16 posets; none share a K_P this small
        let sizes: Vec<usize> = (1..=4).map(|n| KpPool::new(n).unwrap().len()).collect();
        assert_eq!(sizes, [1, 2, 5, 16]);
    }

    #[test]
    fn same_seed_same_outcome() {
        let a = search_positivity(4, 300, 11).unwrap();
        let b = search_positivity(4, 300, 11).unwrap();
        assert_eq!(a.symmetric, b.symmetric);
        assert_eq!(a.not_h_positive.map(|f| f.picks), b.not_h_positive.map(|f| f.picks));
    }

    #[test]
    fn fixed_combinations() {
        let r = evaluate_combination(&four_posets(), &[2, 3, 2, 0]).unwrap();
        assert_eq!(r.h_negative, Some(Partition::of(&[2, 2])));
        let chains = evaluate_combination(&[chain(4)], &[1]).unwrap();
        assert!(chains.schur_negative.is_none() && chains.h_negative.is_none());
        assert!(evaluate_combination(&four_posets(), &[1, 3, 1, 3]).is_err());
    }
}
