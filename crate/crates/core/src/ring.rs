//! Exact coefficient ring: polynomials in the parameters `q`, `y`, `z`
//! with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parameter names, in exponent-vector order.
pub const VARS: [&str; 3] = ["q", "y", "z"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            _ => None,
        }
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn var(v: Var, e: u32) -> Mono {
        let mut m = Mono::default();
        m.0[v as usize] = e;
        m
    }
    fn mul(&self, other: &Mono) -> Mono {
        Mono([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Mono, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Mono::default())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: Rational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Rational::one(), Mono::var(v, 1))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    /// `sum_i coeffs[i] * v^i`
    pub fn from_coeffs(v: Var, coeffs: &[i64]) -> Self {
        let mut p = ParamPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Mono::var(v, i as u32), rat(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = ParamPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Highest power of `v` occurring.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v as usize]).max().unwrap_or(0)
    }

    /// Coefficient list in `v`, valid when `v` is the only variable present.
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.0[v as usize] {
                return None;
            }
            out[m.0[v as usize] as usize] = c.clone();
        }
        Some(out)
    }

    /// Replace `v` by the polynomial `p`.
    pub fn substitute(&self, v: Var, p: &ParamPoly) -> Self {
        let mut powers: Vec<ParamPoly> = vec![ParamPoly::one()];
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[v as usize] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * p;
                powers.push(next);
            }
            let mut rest = *m;
            rest.0[v as usize] = 0;
            out += &(&ParamPoly::monomial(c.clone(), rest) * &powers[e]);
        }
        out
    }

    /// Replace `v` by `v^d`.
    pub fn power_var(&self, v: Var, d: u32) -> Self {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            m2.0[v as usize] *= d;
            out.add_term(m2, c.clone());
        }
        out
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Coefficients (in `v`) form a unimodal sequence.
    pub fn is_unimodal_in(&self, v: Var) -> bool {
        let Some(cs) = self.univariate_coeffs(v) else {
            return false;
        };
        let mut i = 0;
        while i + 1 < cs.len() && cs[i] <= cs[i + 1] {
            i += 1;
        }
        while i + 1 < cs.len() && cs[i] >= cs[i + 1] {
            i += 1;
        }
        i + 1 >= cs.len()
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        ParamPoly::int(n)
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut r = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }
}

fn fmt_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(VARS[i].to_string()),
            _ => parts.push(format!("{}^{}", VARS[i], e)),
        }
    }
    parts.join("*")
}

/// Writes `|c| * m` without sign; `1` coefficients are dropped unless `m` is 1.
pub(crate) fn fmt_abs_term(c: &Rational, m: &Mono) -> String {
    let a = c.abs();
    let ms = fmt_mono(m);
    if ms.is_empty() {
        a.to_string()
    } else if a.is_one() {
        ms
    } else {
        format!("{}*{}", a, ms)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            write!(f, "{}", fmt_abs_term(c, m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses the output of `Display` for `ParamPoly`.
pub fn parse_param_poly(s: &str) -> Result<ParamPoly, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut out = ParamPoly::zero();
    for (sign, term) in split_signed(s)? {
        let (c, m) = parse_term_factors(&term)?;
        out.add_term(m, if sign { -c } else { c });
    }
    Ok(out)
}

/// Splits at top-level `+`/`-` separators; returns (negative?, body) pairs.
pub(crate) fn split_signed(s: &str) -> Result<Vec<(bool, String)>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() && chars[i] == ' ' {
        i += 1;
    }
    if i < chars.len() && chars[i] == '-' {
        neg = true;
        i += 1;
    }
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && cur.ends_with(' ') {
            let body = cur.trim().to_string();
            if body.is_empty() {
                return Err(format!("dangling sign in '{}'", s));
            }
            out.push((neg, body));
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        i += 1;
    }
    let body = cur.trim().to_string();
    if body.is_empty() {
        return Err(format!("dangling sign in '{}'", s));
    }
    out.push((neg, body));
    Ok(out)
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("bad number '{}'", s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// `c*q^2*y`, `q`, `3/4` and so on.
pub(crate) fn parse_term_factors(t: &str) -> Result<(Rational, Mono), String> {
    let mut c = Rational::one();
    let mut m = Mono::default();
    for f in t.split('*') {
        let f = f.trim();
        let (base, exp) = match f.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().map_err(|_| format!("bad exponent in '{}'", f))?),
            None => (f, 1),
        };
        if let Some(v) = Var::from_name(base) {
            m.0[v as usize] += exp;
        } else {
            let mut n = base.to_string();
            // a rational is split by '*'-free '/', so it arrives whole
            if exp != 1 {
                return Err(format!("exponent on a number in '{}'", f));
            }
            n.retain(|ch| ch != ' ');
            c *= parse_rational(&n)?;
        }
    }
    Ok((c, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = ParamPoly::q();
        let one = ParamPoly::one();
        let a = &q + &one;
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "1 + 2*q + q^2");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.substitute(Var::Q, &(&q - &one)).to_string(), "q^2");
    }

    #[test]
    fn display_roundtrip() {
        let mut p = ParamPoly::zero();
        p.add_term(Mono([2, 0, 0]), ratio(-4, 3));
        p.add_term(Mono([0, 1, 1]), rat(1));
        p.add_term(Mono([0, 0, 0]), rat(-2));
        let s = p.to_string();
        assert_eq!(s, "-2 + y*z - 4/3*q^2");
        assert_eq!(parse_param_poly(&s).unwrap(), p);
    }

    #[test]
    fn unimodality() {
        assert!(ParamPoly::from_coeffs(Var::Q, &[1, 3, 3, 1]).is_unimodal_in(Var::Q));
        assert!(!ParamPoly::from_coeffs(Var::Q, &[1, 0, 1]).is_unimodal_in(Var::Q));
    }
}
