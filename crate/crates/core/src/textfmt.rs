//! Canonical text form, e.g. `4/3*q^2*Psi[2,3,1] - F[1,2]`.
//!
//! With `normalized` set, Psi and p terms show `c * z` followed by `/z`, so
//! `-3*p[2,2,2]/z` means `-3 p_{222} / z_{222}`.

use num_traits::{One, Signed};

use crate::composition::{Composition, Partition};
use crate::error::{QsymError, Result};
use crate::qsym::{Basis, QSymElement};
use crate::ring::{fmt_abs_term, parse_param_poly, parse_term_factors, split_signed, ParamPoly, Rational};
use crate::sym::{SymBasis, SymElement};

fn fmt_index(parts: &[u32]) -> String {
    let v: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("[{}]", v.join(","))
}

/// One signed term; returns (negative, body).
fn fmt_term(c: &ParamPoly, name: &str, idx: &[u32], suffix: &str) -> (bool, String) {
    let basis = format!("{}{}{}", name, fmt_index(idx), suffix);
    if c.num_terms() == 1 {
        let (m, r) = c.terms().next().unwrap();
        let neg = r.is_negative();
        if m.degree() == 0 && r.abs().is_one() {
            return (neg, basis);
        }
        return (neg, format!("{}*{}", fmt_abs_term(r, m), basis));
    }
    (false, format!("({})*{}", c, basis))
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

pub fn qsym_to_text(e: &QSymElement, normalized: bool) -> String {
    let norm = normalized && e.basis() == Basis::Psi;
    let terms = e
        .terms()
        .map(|(a, c)| {
            if norm {
                let zc = c.scale(&Rational::from_integer(a.z()));
                fmt_term(&zc, "Psi", a.parts(), "/z")
            } else {
                fmt_term(c, e.basis().name(), a.parts(), "")
            }
        })
        .collect();
    join_terms(terms)
}

pub fn sym_to_text(e: &SymElement, normalized: bool) -> String {
    let norm = normalized && e.basis() == SymBasis::P;
    let terms = e
        .terms()
        .map(|(l, c)| {
            if norm {
                let zc = c.scale(&Rational::from_integer(l.z()));
                fmt_term(&zc, "p", l.parts(), "/z")
            } else {
                fmt_term(c, e.basis().name(), l.parts(), "")
            }
        })
        .collect();
    join_terms(terms)
}

struct ParsedTerm {
    name: String,
    index: Vec<u32>,
    coeff: ParamPoly,
    over_z: bool,
}

fn parse_term(neg: bool, body: &str) -> Result<ParsedTerm> {
    let bad = |m: &str| QsymError::Input(format!("cannot parse term '{}': {}", body, m));
    let mut t = body.trim();
    let over_z = t.ends_with("/z");
    if over_z {
        t = &t[..t.len() - 2];
    }
    let open = t.rfind('[').ok_or_else(|| bad("missing index"))?;
    if !t.ends_with(']') {
        return Err(bad("index must close the term"));
    }
    let inner = &t[open + 1..t.len() - 1];
    let index: Vec<u32> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| bad("bad part"))).collect::<Result<_>>()?
    };
    let head = &t[..open];
    let name_start = head.rfind(|ch: char| !ch.is_ascii_alphabetic()).map_or(0, |i| i + 1);
    let name = head[name_start..].to_string();
    let prefix = head[..name_start].trim();
    let coeff = if prefix.is_empty() {
        ParamPoly::one()
    } else {
        let prefix = prefix.strip_suffix('*').ok_or_else(|| bad("expected '*' before basis"))?.trim();
        if let Some(inner) = prefix.strip_prefix('(').and_then(|p| p.strip_suffix(')')) {
            parse_param_poly(inner).map_err(|e| bad(&e))?
        } else {
            let (c, m) = parse_term_factors(prefix).map_err(|e| bad(&e))?;
            ParamPoly::monomial(c, m)
        }
    };
    let coeff = if neg { -&coeff } else { coeff };
    Ok(ParsedTerm { name, index, coeff, over_z })
}

fn parse_terms(s: &str) -> Result<Vec<ParsedTerm>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    split_signed(s).map_err(QsymError::Input)?.into_iter().map(|(neg, body)| parse_term(neg, &body)).collect()
}

/// Parses `qsym_to_text` output (either view). The zero element `0` needs
/// `degree`.
pub fn parse_qsym_text(s: &str, degree: Option<usize>) -> Result<QSymElement> {
    let terms = parse_terms(s)?;
    let Some(first) = terms.first() else {
        return Ok(QSymElement::zero(degree.unwrap_or(0), Basis::M));
    };
    let basis = Basis::parse(&first.name)?;
    let n = first.index.iter().map(|&p| p as usize).sum();
    let mut e = QSymElement::zero(n, basis);
    for t in terms {
        if Basis::parse(&t.name)? != basis {
            return Err(QsymError::Input("mixed bases in one expression".into()));
        }
        let alpha = Composition::new(t.index)?;
        let c = if t.over_z { t.coeff.scale(&(Rational::one() / Rational::from_integer(alpha.z()))) } else { t.coeff };
        e.add_term(alpha, &c)?;
    }
    Ok(e)
}

pub fn parse_sym_text(s: &str, degree: Option<usize>) -> Result<SymElement> {
    let terms = parse_terms(s)?;
    let Some(first) = terms.first() else {
        return Ok(SymElement::zero(degree.unwrap_or(0), SymBasis::P));
    };
    let basis = SymBasis::parse(&first.name)?;
    let n = first.index.iter().map(|&p| p as usize).sum();
    let mut e = SymElement::zero(n, basis);
    for t in terms {
        if SymBasis::parse(&t.name)? != basis {
            return Err(QsymError::Input("mixed bases in one expression".into()));
        }
        let lambda = Partition::new(t.index)?;
        let c = if t.over_z { t.coeff.scale(&(Rational::one() / Rational::from_integer(lambda.z()))) } else { t.coeff };
        e.add_term(lambda, &c)?;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ratio, Mono};

    #[test]
    fn canonical_form_of_mixed_terms() {
        let mut e = QSymElement::zero(6, Basis::Psi);
        e.add_term(Composition::of(&[2, 3, 1]), &ParamPoly::monomial(ratio(4, 3), Mono([2, 0, 0]))).unwrap();
        e.add_term(Composition::of(&[6]), &ParamPoly::int(-1)).unwrap();
        e.add_term(Composition::of(&[1, 5]), &ParamPoly::from_coeffs(crate::ring::Var::Q, &[2, 5])).unwrap();
        let s = qsym_to_text(&e, false);
        assert_eq!(s, "-Psi[6] + (2 + 5*q)*Psi[1,5] + 4/3*q^2*Psi[2,3,1]");
        assert_eq!(parse_qsym_text(&s, None).unwrap(), e);
        let z = qsym_to_text(&e, true);
        assert_eq!(z, "-6*Psi[6]/z + (10 + 25*q)*Psi[1,5]/z + 8*q^2*Psi[2,3,1]/z");
        assert_eq!(parse_qsym_text(&z, None).unwrap(), e);
    }

    #[test]
    fn zero_and_errors() {
        assert_eq!(qsym_to_text(&QSymElement::zero(3, Basis::F), false), "0");
        assert!(parse_qsym_text("3*G[1]", None).is_err());
        assert!(parse_qsym_text("F[1] + M[1]", None).is_err());
        assert!(parse_qsym_text("F[1,0]", None).is_err());
    }
}
