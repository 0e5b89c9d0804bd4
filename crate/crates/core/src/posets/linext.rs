//! Unimodal members of the Jordan-Holder set and the sign-reversing
//! involution on the non-starred ones.

use super::{is_alpha_unimodal_perm, LabeledPoset};
use crate::composition::{mask_elems, Composition};
use crate::error::{QsymError, Result};

impl LabeledPoset {
    /// `L_alpha`: alpha-unimodal members of the Jordan-Holder set.
    pub fn l_alpha(&self, alpha: &Composition) -> Vec<Vec<usize>> {
        self.linear_extensions().into_iter().filter(|s| is_alpha_unimodal_perm(s, alpha)).collect()
    }

    /// Every block preimage has a unique minimal element.
    pub fn is_starred(&self, sigma: &[usize], alpha: &Composition) -> bool {
        alpha.blocks().into_iter().all(|(a, b)| self.poset.has_unique_min(self.block_preimage(sigma, a, b)))
    }

    /// `L*_alpha`; needs a natural labeling.
    pub fn l_star_alpha(&self, alpha: &Composition) -> Result<Vec<Vec<usize>>> {
        self.require_natural()?;
        Ok(self.l_alpha(alpha).into_iter().filter(|s| self.is_starred(s, alpha)).collect())
    }
}

/// The involution pairing elements of `L_alpha \ L*_alpha` whose number of
/// descents outside `Set(alpha)` differ by one.
pub fn involution_phi(sigma: &[usize], alpha: &Composition, p: &LabeledPoset) -> Result<Vec<usize>> {
    p.require_natural()?;
    if sigma.len() != p.len() || alpha.size() != p.len() {
        return Err(QsymError::Input("sizes of sigma, alpha and P differ".into()));
    }
    if !is_alpha_unimodal_perm(sigma, alpha) {
        return Err(QsymError::Domain("sigma is not alpha-unimodal".into()));
    }
    let blocks = alpha.blocks();
    let offending = blocks.iter().find_map(|&(a, b)| {
        let pre = p.block_preimage(sigma, a, b);
        let mins = p.poset.minimal_in(pre);
        (mins.count_ones() >= 2).then_some((a, b, mins))
    });
    let Some((a, b, mins)) = offending else {
        return Err(QsymError::Domain("sigma lies in L*_alpha".into()));
    };
    let m_label = mask_elems(mins).map(|x| p.label(x)).max().unwrap();
    let window: Vec<usize> = (a..=b).filter(|&r| sigma[r - 1] <= m_label).collect();
    let (j, m) = (window[0], *window.last().unwrap());
    let mut out = sigma.to_vec();
    if sigma[j - 1] == m_label {
        out[j - 1..m].rotate_left(1);
    } else {
        out[j - 1..m].rotate_right(1);
    }
    Ok(out)
}
