//! Compositions, partitions and subsets of `[n-1]` encoded as bitmasks.
//!
//! A subset `S` of `{1, ..., n-1}` is a `u64` with bit `i` set when `i` is in
//! `S` (bit 0 is never used).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::QsymError;

pub type SetMask = u64;

pub const MAX_N: usize = 62;

/// Iterator over the elements of a mask, ascending.
pub fn mask_elems(mut m: SetMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn mask_from(elems: &[usize]) -> SetMask {
    elems.iter().fold(0, |m, &i| m | (1 << i))
}

/// Mask of `{1, ..., n-1}`.
pub fn full_mask(n: usize) -> SetMask {
    if n <= 1 {
        0
    } else {
        ((1u64 << n) - 1) & !1
    }
}

pub fn fmt_set(m: SetMask) -> String {
    let v: Vec<String> = mask_elems(m).map(|i| i.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Sub-masks of `m`, including 0 and `m`.
pub fn submasks(m: SetMask) -> impl Iterator<Item = SetMask> {
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & m) };
        Some(c)
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(pub Vec<u32>);

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, QsymError> {
        if parts.contains(&0) {
            return Err(QsymError::Input(format!("composition with a zero part: {:?}", parts)));
        }
        if parts.iter().map(|&p| p as usize).sum::<usize>() > MAX_N {
            return Err(QsymError::Input(format!("composition too large: {:?}", parts)));
        }
        Ok(Composition(parts))
    }

    /// Unchecked constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Composition(parts.to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Partial sums `{a1, a1+a2, ..., a1+...+a_{l-1}}`.
    pub fn set(&self) -> SetMask {
        let mut m = 0;
        let mut s = 0usize;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            s += p as usize;
            m |= 1 << s;
        }
        m
    }

    pub fn from_set(n: usize, s: SetMask) -> Self {
        if n == 0 {
            return Composition::default();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in mask_elems(s) {
            parts.push((i - prev) as u32);
            prev = i;
        }
        parts.push((n - prev) as u32);
        Composition(parts)
    }

    /// `self <= other` in refinement order (self is finer).
    pub fn refines(&self, other: &Composition) -> bool {
        let (a, b) = (self.set(), other.set());
        self.size() == other.size() && b & !a == 0
    }

    /// Blocks as 1-based inclusive position intervals.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut start = 1;
        for &p in &self.0 {
            out.push((start, start + p as usize - 1));
            start += p as usize;
        }
        out
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// `prod_i i^{m_i} m_i!` for the multiplicities of the parts.
    pub fn z(&self) -> BigInt {
        self.sorted().z()
    }

    /// Product of the partial sums.
    pub fn pi(&self) -> BigInt {
        let mut s = 0u64;
        let mut r = BigInt::one();
        for &p in &self.0 {
            s += p as u64;
            r *= s;
        }
        r
    }

    /// Splits `self` into consecutive pieces summing to the parts of `coarser`.
    pub fn split_by(&self, coarser: &Composition) -> Option<Vec<Composition>> {
        if !self.refines(coarser) {
            return None;
        }
        let mut out = Vec::new();
        let mut it = self.0.iter();
        for &b in &coarser.0 {
            let mut piece = Vec::new();
            let mut s = 0;
            while s < b {
                let p = *it.next()?;
                piece.push(p);
                s += p;
            }
            out.push(Composition(piece));
        }
        Some(out)
    }

    /// `pi(self, coarser) = prod_i pi(self^{(i)})`.
    pub fn pi_rel(&self, coarser: &Composition) -> Option<BigInt> {
        Some(self.split_by(coarser)?.iter().map(|c| c.pi()).product())
    }

    /// `self` scaled part-wise by `d`.
    pub fn scaled(&self, d: u32) -> Self {
        Composition(self.0.iter().map(|p| p * d).collect())
    }
}

/// All compositions of `n` in (length, lex) order.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    let mut out: Vec<Composition> = (0..1u64 << (n - 1)).map(|m| Composition::from_set(n, m << 1)).collect();
    out.sort();
    out
}

/// Compositions of `n` with exactly `l` parts, lex order.
pub fn compositions_of_length(n: usize, l: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.len() == l).collect()
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(pub Vec<u32>);

/// Fewer parts first, then reverse lexicographic: `[4] < [3,1] < [2,2] < [2,1,1]`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, QsymError> {
        if parts.contains(&0) {
            return Err(QsymError::Input(format!("partition with a zero part: {:?}", parts)));
        }
        if parts.iter().map(|&p| p as usize).sum::<usize>() > MAX_N {
            return Err(QsymError::Input(format!("partition too large: {:?}", parts)));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn of(parts: &[u32]) -> Self {
        Partition(parts.to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn z(&self) -> BigInt {
        let mut r = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == p {
                m += 1;
                i += 1;
                r *= BigInt::from(p) * BigInt::from(m);
            }
        }
        r
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &p| num_integer::gcd(g, p))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Distinct rearrangements of the parts, in (length, lex) order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut v = self.0.clone();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition(v.clone()));
        }
        out
    }
}

/// Lexicographic successor; false when `v` is the last permutation.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All partitions of `n` in (length, lex) order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_and_blocks() {
        let a = Composition::of(&[2, 3, 1]);
        assert_eq!(fmt_set(a.set()), "{2,5}");
        assert_eq!(Composition::from_set(6, a.set()), a);
        assert_eq!(a.blocks(), vec![(1, 2), (3, 5), (6, 6)]);
        assert_eq!(Composition::from_set(0, 0), Composition::default());
    }

    #[test]
    fn composition_and_partition_orders() {
        let c: Vec<String> = compositions(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c, ["[3]", "[1,2]", "[2,1]", "[1,1,1]"]);
        let p: Vec<String> = partitions(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(p, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn z_and_pi() {
        assert_eq!(Composition::of(&[2, 3, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::of(&[2, 2, 1, 1, 1]).z(), BigInt::from(2 * 2 * 2 * 6));
        assert_eq!(Composition::of(&[2, 3, 1]).pi(), BigInt::from(2 * 5 * 6));
        // (2,3,1) against (2,4): pieces (2) and (3,1)
        let r = Composition::of(&[2, 3, 1]).pi_rel(&Composition::of(&[2, 4])).unwrap();
        assert_eq!(r, BigInt::from(2 * 3 * 4));
        assert!(Composition::of(&[2, 3, 1]).pi_rel(&Composition::of(&[1, 5])).is_none());
    }

    #[test]
    fn refinement() {
        assert!(Composition::of(&[1, 1, 2]).refines(&Composition::of(&[2, 2])));
        assert!(!Composition::of(&[1, 2, 1]).refines(&Composition::of(&[2, 2])));
    }

    #[test]
    fn rearrangements_and_counts() {
        assert_eq!(Partition::of(&[2, 1, 1]).rearrangements().len(), 3);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(compositions(7).len(), 64);
        assert_eq!(submasks(0b1010).count(), 4);
    }
}
