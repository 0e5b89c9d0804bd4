//! Eulerian polynomials, q-integers and the number-theoretic Moebius function.

use crate::composition::next_permutation;
use crate::posets::des_set;
use crate::ring::{ParamPoly, Var};

/// `A_k(q) = sum over S_k of q^des`, with `A_0 = 1`.
pub fn eulerian_poly(k: usize) -> ParamPoly {
    // A(k, j) = (j+1) A(k-1, j) + (k-j) A(k-1, j-1)
    let mut row = vec![1i64];
    for m in 1..=k {
        let mut next = vec![0i64; m];
        for (j, slot) in next.iter_mut().enumerate() {
            let stay = if j < row.len() { (j as i64 + 1) * row[j] } else { 0 };
            let up = if j >= 1 && j - 1 < row.len() { (m - j) as i64 * row[j - 1] } else { 0 };
            *slot = stay + up;
        }
        row = next;
    }
    ParamPoly::from_coeffs(Var::Q, &row)
}

/// The same polynomial by running over all permutations.
pub fn eulerian_poly_enum(k: usize) -> ParamPoly {
    let mut coeffs = vec![0i64; k.max(1)];
    let mut sigma: Vec<usize> = (1..=k).collect();
    loop {
        coeffs[des_set(&sigma).count_ones() as usize] += 1;
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    ParamPoly::from_coeffs(Var::Q, &coeffs)
}

/// `[a]_q = 1 + q + ... + q^{a-1}`; `[0]_q = 0`.
pub fn q_int(a: usize) -> ParamPoly {
    ParamPoly::from_coeffs(Var::Q, &vec![1; a])
}

pub fn number_moebius(mut n: u64) -> i64 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(eulerian_poly(0), ParamPoly::one());
        assert_eq!(eulerian_poly(2), ParamPoly::from_coeffs(Var::Q, &[1, 1]));
        assert_eq!(eulerian_poly(3), ParamPoly::from_coeffs(Var::Q, &[1, 4, 1]));
        assert_eq!(q_int(3), ParamPoly::from_coeffs(Var::Q, &[1, 1, 1]));
        assert!(q_int(0).is_zero());
        for k in 0..=7 {
            assert_eq!(eulerian_poly(k), eulerian_poly_enum(k), "k={k}");
        }
        let mu: Vec<i64> = (1..=10).map(number_moebius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
