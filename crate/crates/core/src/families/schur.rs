//! Schur functions through standard Young tableaux, and their power sum
//! coefficients as signed counts of tableaux.

use num_bigint::BigInt;

use crate::composition::{Composition, Partition};
use crate::qsym::QSymElement;
use crate::sym::{schur_f, standard_tableaux, tableau_descents};
use crate::unimodal::is_alpha_unimodal;

/// `s_lambda = sum_{T in SYT(lambda)} F_{DES(T)}`.
pub fn schur(lambda: &Partition) -> QSymElement {
    schur_f(lambda)
}

/// `sum over T with DES(T) mu-unimodal of (-1)^{|DES(T) \ S_mu|}`, which is
/// `z_mu` times the coefficient of `p_mu` in `s_lambda`. `mu` may be any
/// rearrangement, the value does not change.
pub fn roichman_coeff(lambda: &Partition, mu: &Composition) -> BigInt {
    let s_mu = mu.set();
    let mut total = BigInt::from(0);
    if lambda.size() != mu.size() {
        return total;
    }
    for t in standard_tableaux(lambda) {
        let des = tableau_descents(&t);
        if is_alpha_unimodal(des, mu) {
            if (des & !s_mu).count_ones().is_multiple_of(2) {
                total += 1;
            } else {
                total -= 1;
            }
        }
    }
    total
}
