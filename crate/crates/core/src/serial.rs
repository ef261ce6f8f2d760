//! JSON wire formats. Rationals travel as "p/q" strings.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::hochschild::{self, Cochain, Kind};
use crate::rational::{from_wire, to_wire};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireMonomial {
    pub coeff: String,
    /// Arrow names in order, or a single "e<i>" for a trivial path.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireElem {
    pub monomials: Vec<WireMonomial>,
}

pub fn elem_to_wire(alg: &Algebra, x: &Elem) -> WireElem {
    let monomials = x
        .terms()
        .map(|(i, c)| {
            let m = alg.mono(i);
            let path = if m.word.is_empty() {
                vec![format!("e{}", m.src + 1)]
            } else {
                m.word.iter().map(|&a| alg.quiver.arrows[a].name.clone()).collect()
            };
            WireMonomial { coeff: to_wire(c), path }
        })
        .collect();
    WireElem { monomials }
}

pub fn elem_from_wire(alg: &Algebra, w: &WireElem) -> Result<Elem> {
    let bad = |msg: String| Error::Parse { pos: 0, msg };
    let mut out = Elem::zero();
    for m in &w.monomials {
        let c = from_wire(&m.coeff).ok_or_else(|| bad(format!("bad coefficient {:?}", m.coeff)))?;
        let term = match m.path.as_slice() {
            [e] if e.starts_with('e') => {
                let v: usize = e[1..].parse().map_err(|_| bad(format!("bad vertex {e}")))?;
                if v == 0 || v > alg.quiver.num_vertices() {
                    return Err(bad(format!("no vertex {e}")));
                }
                alg.vertex(v - 1)
            }
            names => {
                let word = names
                    .iter()
                    .map(|n| alg.quiver.arrow_by_name(n).ok_or_else(|| bad(format!("no arrow {n}"))))
                    .collect::<Result<Vec<_>>>()?;
                let first = *word.first().ok_or_else(|| bad("empty path".into()))?;
                alg.reduce_word(alg.quiver.arrows[first].src, &word)?
            }
        };
        out.add_scaled(&term, &c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireValue {
    /// Arrow whose generator carries this value, for the per-arrow indices.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub arrow: Option<String>,
    pub value: WireElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireCochain {
    pub index: usize,
    pub values: Vec<WireValue>,
}

pub fn cochain_to_wire(alg: &Algebra, x: &Cochain) -> WireCochain {
    let per_arrow = matches!(hochschild::kind(x.index), Kind::Arrows | Kind::TwistedArrows);
    let values = x
        .values
        .iter()
        .enumerate()
        .map(|(c, v)| WireValue {
            arrow: per_arrow.then(|| alg.quiver.arrows[c].name.clone()),
            value: elem_to_wire(alg, v),
        })
        .collect();
    WireCochain { index: x.index, values }
}

pub fn cochain_from_wire(alg: &Algebra, w: &WireCochain) -> Result<Cochain> {
    let mut x = Cochain::zero(alg, w.index);
    if w.values.len() != x.values.len() {
        return Err(Error::Parse { pos: 0, msg: format!("C^{} needs {} values", w.index, x.values.len()) });
    }
    for (k, v) in w.values.iter().enumerate() {
        x.values[k] = elem_from_wire(alg, &v.value)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;
    use crate::quiver::{Family, QuiverId};

    #[test]
    fn element_round_trip() {
        let alg = Algebra::build(QuiverId::new(Family::E, 6).unwrap()).unwrap();
        let x = parse_element(&alg, "1/2 a3* a3 - 3 e2 + a2 a3*").unwrap();
        let w = elem_to_wire(&alg, &x);
        let text = serde_json::to_string(&w).unwrap();
        let back: WireElem = serde_json::from_str(&text).unwrap();
        assert_eq!(elem_from_wire(&alg, &back).unwrap(), x);
        assert!(text.contains("\"coeff\":\"-3/1\""));
    }
}
