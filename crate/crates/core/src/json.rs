//! JSON encodings of elements, posets, graphs, equivalences and matroids.
//! Element indices are 1-based in every external format.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::composition::{Composition, Partition};
use crate::error::{QsymError, Result};
use crate::families::matroid::Matroid;
use crate::posets::{DirectedGraph, Equivalence, LabeledPoset, Poset};
use crate::qsym::{Basis, QSymElement};
use crate::ring::{Mono, ParamPoly, Rational, Var, VARS};
use crate::sym::{SymBasis, SymElement};

fn bad(msg: impl Into<String>) -> QsymError {
    QsymError::Input(msg.into())
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("expected an integer, got {}", n))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("bad integer '{}'", s))),
        _ => Err(bad(format!("expected an integer, got {}", v))),
    }
}

pub fn param_poly_to_json(p: &ParamPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mut exps = Map::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps.insert(VARS[i].to_string(), json!(e));
                }
            }
            json!({"exps": exps, "num": int_value(c.numer()), "den": int_value(c.denom())})
        })
        .collect();
    json!({ "terms": terms })
}

pub fn param_poly_from_json(v: &Value) -> Result<ParamPoly> {
    if v.is_number() || v.is_string() {
        return match v {
            Value::String(s) => crate::ring::parse_param_poly(s).map_err(bad),
            _ => Ok(ParamPoly::constant(Rational::from_integer(parse_bigint(v)?))),
        };
    }
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("coefficient needs a 'terms' array"))?;
    let mut p = ParamPoly::zero();
    for t in terms {
        let mut m = Mono::default();
        if let Some(exps) = t.get("exps") {
            let exps = exps.as_object().ok_or_else(|| bad("'exps' must be an object"))?;
            for (k, e) in exps {
                let var = Var::from_name(k).ok_or_else(|| bad(format!("unknown parameter '{}'", k)))?;
                let e = e.as_u64().ok_or_else(|| bad("exponents must be non-negative integers"))?;
                m.0[var as usize] += e as u32;
            }
        }
        let num = parse_bigint(t.get("num").ok_or_else(|| bad("term needs 'num'"))?)?;
        let den = match t.get("den") {
            Some(d) => parse_bigint(d)?,
            None => BigInt::from(1),
        };
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        p.add_term(m, Rational::new(num, den));
    }
    Ok(p)
}

fn parts_from_json(v: &Value) -> Result<Vec<u32>> {
    v.as_array()
        .ok_or_else(|| bad("index must be an array"))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("parts must be positive integers")))
        .collect()
}

pub fn qsym_to_json(e: &QSymElement) -> Value {
    let terms: Vec<Value> =
        e.terms().map(|(a, c)| json!({"index": a.parts(), "coeff": param_poly_to_json(c)})).collect();
    json!({"basis": e.basis().name(), "degree": e.degree(), "terms": terms})
}

pub fn qsym_from_json(v: &Value) -> Result<QSymElement> {
    let basis = Basis::parse(v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("missing 'basis'"))?)?;
    let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("missing 'degree'"))? as usize;
    if degree > crate::composition::MAX_N {
        return Err(bad("degree too large"));
    }
    let mut e = QSymElement::zero(degree, basis);
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing 'terms'"))?;
    for t in terms {
        let alpha = if let Some(idx) = t.get("index") {
            Composition::new(parts_from_json(idx)?)?
        } else if let Some(set) = t.get("set") {
            if basis != Basis::F {
                return Err(bad("'set' indices are only allowed for the F basis"));
            }
            let elems = parts_from_json(set)?;
            let mut mask = 0u64;
            for s in elems {
                if s == 0 || s as usize >= degree {
                    return Err(bad(format!("set element {} outside [n-1]", s)));
                }
                mask |= 1 << s;
            }
            Composition::from_set(degree, mask)
        } else {
            return Err(bad("term needs 'index' or 'set'"));
        };
        let c = param_poly_from_json(t.get("coeff").ok_or_else(|| bad("term needs 'coeff'"))?)?;
        e.add_term(alpha, &c)?;
    }
    Ok(e)
}

pub fn sym_to_json(e: &SymElement) -> Value {
    let terms: Vec<Value> =
        e.terms().map(|(l, c)| json!({"index": l.parts(), "coeff": param_poly_to_json(c)})).collect();
    json!({"basis": e.basis().name(), "degree": e.degree(), "terms": terms})
}

pub fn sym_from_json(v: &Value) -> Result<SymElement> {
    let basis = SymBasis::parse(v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("missing 'basis'"))?)?;
    let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("missing 'degree'"))? as usize;
    let mut e = SymElement::zero(degree, basis);
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing 'terms'"))? {
        let lambda = Partition::new(parts_from_json(t.get("index").ok_or_else(|| bad("term needs 'index'"))?)?)?;
        let c = param_poly_from_json(t.get("coeff").ok_or_else(|| bad("term needs 'coeff'"))?)?;
        e.add_term(lambda, &c)?;
    }
    Ok(e)
}

fn pairs_from_json(v: Option<&Value>, n: usize, what: &str) -> Result<Vec<(usize, usize)>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    v.as_array()
        .ok_or_else(|| bad(format!("'{}' must be an array", what)))?
        .iter()
        .map(|p| {
            let a = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad(format!("{} entries are pairs", what)))?;
            let i = a[0].as_u64().unwrap_or(0) as usize;
            let j = a[1].as_u64().unwrap_or(0) as usize;
            if i == 0 || j == 0 || i > n || j > n {
                return Err(bad(format!("{} entry [{}, {}] outside 1..{}", what, i, j, n)));
            }
            Ok((i - 1, j - 1))
        })
        .collect()
}

fn n_from_json(v: &Value) -> Result<usize> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing 'n'"))? as usize;
    if n > crate::posets::MAX_ELEMENTS {
        return Err(bad("too many elements"));
    }
    Ok(n)
}

/// `{"n":N,"covers":[[i,j],...],"labels":[...]}`; labels default to the
/// canonical natural labeling.
pub fn poset_from_json(v: &Value) -> Result<LabeledPoset> {
    let n = n_from_json(v)?;
    let rel = pairs_from_json(v.get("covers"), n, "covers")?;
    let p = Poset::from_relations(n, &rel)?;
    match v.get("labels") {
        None | Some(Value::Null) => Ok(LabeledPoset::natural(p)),
        Some(l) => {
            let labels = parts_from_json(l)?.into_iter().map(|x| x as usize).collect();
            LabeledPoset::new(p, labels)
        }
    }
}

pub fn poset_to_json(p: &LabeledPoset) -> Value {
    let covers: Vec<[usize; 2]> = p.poset.covers().into_iter().map(|(x, y)| [x + 1, y + 1]).collect();
    json!({"n": p.len(), "covers": covers, "labels": p.labels()})
}

pub fn graph_from_json(v: &Value) -> Result<DirectedGraph> {
    let n = n_from_json(v)?;
    let edges = pairs_from_json(v.get("edges"), n, "edges")?;
    DirectedGraph::new(n, edges)
}

pub fn graph_to_json(g: &DirectedGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
    json!({"n": g.n, "edges": edges})
}

pub fn equivalence_from_json(v: &Value, n: usize) -> Result<Equivalence> {
    let blocks = v.get("blocks").and_then(Value::as_array).ok_or_else(|| bad("missing 'blocks'"))?;
    let blocks: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            parts_from_json(b)?
                .into_iter()
                .map(|x| if x == 0 { Err(bad("elements are 1-based")) } else { Ok(x as usize - 1) })
                .collect()
        })
        .collect::<Result<_>>()?;
    Equivalence::new(n, &blocks)
}

pub fn equivalence_to_json(e: &Equivalence) -> Value {
    let blocks: Vec<Vec<usize>> = e.block_lists().into_iter().map(|b| b.into_iter().map(|x| x + 1).collect()).collect();
    json!({ "blocks": blocks })
}

pub fn matroid_from_json(v: &Value) -> Result<Matroid> {
    let n = n_from_json(v)?;
    let bases = v.get("bases").and_then(Value::as_array).ok_or_else(|| bad("missing 'bases'"))?;
    let bases: Vec<Vec<usize>> =
        bases
            .iter()
            .map(|b| {
                parts_from_json(b)?
                    .into_iter()
                    .map(|x| {
                        if x == 0 || x as usize > n {
                            Err(bad("basis element outside 1..n"))
                        } else {
                            Ok(x as usize - 1)
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
    Matroid::new(n, &bases)
}

pub fn matroid_to_json(m: &Matroid) -> Value {
    let bases: Vec<Vec<usize>> =
        m.bases().iter().map(|&b| crate::composition::mask_elems(b).map(|x| x + 1).collect()).collect();
    json!({"n": m.n(), "bases": bases})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn qsym_roundtrip() {
        let mut e = QSymElement::zero(3, Basis::F);
        e.add_term(Composition::of(&[1, 2]), &ParamPoly::monomial(ratio(-4, 3), Mono([2, 1, 0]))).unwrap();
        e.add_term(Composition::of(&[3]), &ParamPoly::int(7)).unwrap();
        let v = qsym_to_json(&e);
        assert_eq!(qsym_from_json(&v).unwrap(), e);
        let alt = json!({"basis":"F","degree":3,"terms":[{"set":[1],"coeff":{"terms":[{"exps":{},"num":2,"den":1}]}}]});
        let f = qsym_from_json(&alt).unwrap();
        assert_eq!(f.coeff(&Composition::of(&[1, 2])), ParamPoly::int(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(qsym_from_json(&json!({"basis":"X","degree":1,"terms":[]})).is_err());
        assert!(qsym_from_json(&json!({"basis":"M","degree":2,"terms":[{"index":[1],"coeff":1}]})).is_err());
        assert!(poset_from_json(&json!({"n":2,"covers":[[1,2],[2,1]]})).is_err());
        assert!(graph_from_json(&json!({"n":2,"edges":[[1,1]]})).is_err());
        assert!(equivalence_from_json(&json!({"blocks":[[1],[1,2]]}), 2).is_err());
    }

    #[test]
    fn poset_roundtrip() {
        let v = json!({"n":3,"covers":[[1,3],[2,3]],"labels":[2,1,3]});
        let p = poset_from_json(&v).unwrap();
        assert_eq!(poset_from_json(&poset_to_json(&p)).unwrap(), p);
    }
}
