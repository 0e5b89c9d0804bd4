//! Permutation statistics. Permutations are one-line words with values `1..=n`.

use crate::composition::{Composition, SetMask};

/// `{i : sigma_i > sigma_{i+1}}`.
pub fn des_set(sigma: &[usize]) -> SetMask {
    (1..sigma.len()).filter(|&i| sigma[i - 1] > sigma[i]).fold(0, |m, i| m | 1 << i)
}

/// `{i in [n-1] : sigma_i > i}`.
pub fn exc_set(sigma: &[usize]) -> SetMask {
    (1..sigma.len()).filter(|&i| sigma[i - 1] > i).fold(0, |m, i| m | 1 << i)
}

/// Descent set after barring the excedance values, with every barred letter
/// smaller than every unbarred one.
pub fn dex_set(sigma: &[usize]) -> SetMask {
    let n = sigma.len();
    let word: Vec<usize> = sigma.iter().enumerate().map(|(i, &v)| if v > i + 1 { v } else { v + n }).collect();
    des_set(&word)
}

pub fn inverse_perm(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Inside every block of alpha, sigma first decreases and then increases.
pub fn is_alpha_unimodal_perm(sigma: &[usize], alpha: &Composition) -> bool {
    alpha.blocks().into_iter().all(|(a, b)| {
        let w = &sigma[a - 1..b];
        let mut i = 0;
        while i + 1 < w.len() && w[i] > w[i + 1] {
            i += 1;
        }
        while i + 1 < w.len() && w[i] < w[i + 1] {
            i += 1;
        }
        i + 1 >= w.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{fmt_set, next_permutation};

    #[test]
    fn excedances_of_613542() {
        let s = [6, 1, 3, 5, 4, 2];
        assert_eq!(fmt_set(exc_set(&s)), "{1,4}");
        assert_eq!(fmt_set(dex_set(&s)), "{3,5}");
    }

    #[test]
    fn identity_has_no_statistics() {
        let id = [1, 2, 3, 4];
        assert_eq!(des_set(&id), 0);
        assert_eq!(exc_set(&id), 0);
    }

    #[test]
    fn descents_over_s3() {
        let mut s = vec![1, 2, 3];
        let mut dist = [0; 3];
        loop {
            dist[des_set(&s).count_ones() as usize] += 1;
            if !next_permutation(&mut s) {
                break;
            }
        }
        assert_eq!(dist, [1, 4, 1]);
    }
}
