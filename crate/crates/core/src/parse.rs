//! Text entry for algebra elements.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := ['+'|'-'] product (('+'|'-') product)*
//! product := power+                      juxtaposition multiplies
//! power   := atom ('^' digits)?
//! atom    := rational | 'e'N | 'a'N ['*'] | 'x'N | 'w'N | '(' expr ')'
//! ```
//!
//! `xN` abbreviates `aN* aN` and `wN` is the top element of e_N A e_nu(N)
//! on which the trace is 1. A tensor form `gen '|' product` (with optional
//! rational factors and brackets) describes cochains valued on arrows.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::rational::{one, Q};
use num_bigint::BigInt;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Q),
    E(usize),
    A(String),
    X(usize),
    W(usize),
    Plus,
    Minus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Caret,
    Bar,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> Option<String> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then(|| chars[start..*i].iter().collect())
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '^' => Some(Tok::Caret),
            '|' => Some(Tok::Bar),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((pos, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let n: BigInt = digits(&mut i).unwrap().parse().unwrap();
            let mut d = BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                d = digits(&mut i)
                    .ok_or(Error::Parse { pos: i, msg: "expected denominator".into() })?
                    .parse()
                    .unwrap();
                if d == BigInt::from(0) {
                    return Err(Error::Parse { pos, msg: "zero denominator".into() });
                }
            }
            out.push((pos, Tok::Num(Q::new(n, d))));
            continue;
        }
        if matches!(c, 'e' | 'a' | 'x' | 'w') {
            i += 1;
            let n = digits(&mut i).ok_or(Error::Parse { pos, msg: format!("expected index after '{c}'") })?;
            let tok = match c {
                'a' => {
                    let starred = i < chars.len() && chars[i] == '*';
                    if starred {
                        i += 1;
                    }
                    Tok::A(format!("a{n}{}", if starred { "*" } else { "" }))
                }
                _ => {
                    let k: usize = n.parse().map_err(|_| Error::Parse { pos, msg: "index too large".into() })?;
                    match c {
                        'e' => Tok::E(k),
                        'x' => Tok::X(k),
                        _ => Tok::W(k),
                    }
                }
            };
            out.push((pos, tok));
            continue;
        }
        return Err(Error::Parse { pos, msg: format!("unexpected character {c:?}") });
    }
    Ok(out)
}

/// A parsed value: the element plus the (src, dst) pairs its syntactic
/// paths run between. `None` means a scalar, composable with anything.
#[derive(Clone, Debug)]
struct Val {
    elem: Elem,
    ends: Option<BTreeSet<(usize, usize)>>,
    text: String,
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {t:?}"))
        }
    }

    fn expr(&mut self) -> Result<Val> {
        let mut acc: Option<Val> = None;
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    one()
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    -one()
                }
                _ if first => one(),
                _ => break,
            };
            first = false;
            let p = self.product()?;
            let p = Val { elem: p.elem.scale(&sign), ends: p.ends, text: p.text };
            acc = Some(match acc {
                None => p,
                Some(a) => self.add(a, p),
            });
        }
        acc.map_or_else(|| self.err("empty expression"), Ok)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::E(_) | Tok::A(_) | Tok::X(_) | Tok::W(_) | Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Val> {
        if !self.starts_atom() {
            return self.err("expected a term");
        }
        let mut acc = self.power()?;
        while self.starts_atom() {
            let rhs = self.power()?;
            acc = self.multiply(acc, rhs)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Val> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let k = match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() && *n >= Q::from_integer(0.into()) => {
                crate::rational::to_i64(n).unwrap() as usize
            }
            _ => return self.err("expected a nonnegative integer exponent"),
        };
        self.pos += 1;
        let mut acc = scalar(one());
        for _ in 0..k {
            acc = self.multiply(acc, base.clone())?;
        }
        acc.text = format!("({})^{k}", base.text);
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Val> {
        let alg = self.alg;
        let r = alg.quiver.num_vertices();
        let tok = self.peek().cloned().map_or_else(|| self.err("unexpected end of input"), Ok)?;
        let vertex = |k: usize, p: &Self| -> Result<usize> {
            if (1..=r).contains(&k) {
                Ok(k - 1)
            } else {
                p.err(format!("vertex {k} out of range 1..{r}"))
            }
        };
        let arrow = |name: &str, p: &Self| -> Result<usize> {
            alg.quiver.arrow_by_name(name).map_or_else(|| p.err(format!("no arrow {name}")), Ok)
        };
        let v = match tok {
            Tok::Num(n) => scalar(n),
            Tok::E(k) => {
                let v = vertex(k, self)?;
                Val { elem: alg.vertex(v), ends: Some([(v, v)].into()), text: format!("e{k}") }
            }
            Tok::A(name) => {
                let a = arrow(&name, self)?;
                let ar = &alg.quiver.arrows[a];
                Val { elem: alg.arrow(a), ends: Some([(ar.src, ar.dst)].into()), text: name }
            }
            Tok::X(k) => {
                let a = arrow(&format!("a{k}"), self)?;
                let ar = &alg.quiver.arrows[a];
                let elem = alg.mul(&alg.arrow(ar.star), &alg.arrow(a));
                Val { elem, ends: Some([(ar.dst, ar.dst)].into()), text: format!("x{k}") }
            }
            Tok::W(k) => {
                let v = vertex(k, self)?;
                if alg.trace_values().is_err() {
                    return self.err("w<k> needs the normalised trace");
                }
                Val { elem: alg.omega(v), ends: Some([(v, alg.nu(v))].into()), text: format!("w{k}") }
            }
            Tok::LParen => {
                self.pos += 1;
                let mut inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner.text = format!("({})", inner.text);
                return Ok(inner);
            }
            _ => return self.err("expected an atom"),
        };
        self.pos += 1;
        Ok(v)
    }

    fn add(&self, a: Val, b: Val) -> Val {
        let text = format!("{} + {}", a.text, b.text);
        match (a.ends, b.ends) {
            (None, None) => Val { elem: a.elem.add(&b.elem), ends: None, text },
            (ea, eb) => {
                let r = self.alg.quiver.num_vertices();
                let lift = |e: Elem, ends: Option<BTreeSet<(usize, usize)>>| match ends {
                    Some(x) => (finish(self.alg, Val { elem: e, ends: None, text: String::new() }), x),
                    None => (finish(self.alg, Val { elem: e, ends: None, text: String::new() }), (0..r).map(|v| (v, v)).collect()),
                };
                let (x, ex) = lift(a.elem, ea);
                let (y, ey) = lift(b.elem, eb);
                Val { elem: x.add(&y), ends: Some(ex.union(&ey).copied().collect()), text }
            }
        }
    }

    fn multiply(&self, a: Val, b: Val) -> Result<Val> {
        let ends = match (&a.ends, &b.ends) {
            (None, e) | (e, None) => e.clone(),
            (Some(x), Some(y)) => {
                let prod: BTreeSet<_> =
                    x.iter().flat_map(|&(s, m)| y.iter().filter(move |&&(m2, _)| m2 == m).map(move |&(_, t)| (s, t))).collect();
                if prod.is_empty() {
                    return Err(Error::Incomposable(format!("{} followed by {}", a.text, b.text)));
                }
                Some(prod)
            }
        };
        let elem = match (&a.ends, &b.ends) {
            (None, _) => b.elem.scale(&scalar_of(&a)),
            (_, None) => a.elem.scale(&scalar_of(&b)),
            _ => self.alg.mul(&a.elem, &b.elem),
        };
        let text = if a.ends.is_none() && a.text == "1" { b.text } else { format!("{} {}", a.text, b.text) };
        Ok(Val { elem, ends, text })
    }
}

fn scalar(n: Q) -> Val {
    // Scalars live under a sentinel index until they meet a path.
    Val { elem: Elem::term(usize::MAX, n.clone()), ends: None, text: crate::rational::display(&n) }
}

fn scalar_of(v: &Val) -> Q {
    v.elem.coeff(usize::MAX)
}

fn finish(alg: &Algebra, v: Val) -> Elem {
    // A bare scalar (or a sum mixing scalars) means scalar times the unit.
    let c = v.elem.coeff(usize::MAX);
    let mut e = v.elem.filter(|i| i != usize::MAX);
    e.add_scaled(&alg.unit(), &c);
    e
}

pub fn parse_element(alg: &Algebra, text: &str) -> Result<Elem> {
    let mut p = Parser { alg, toks: lex(text)?, pos: 0, len: text.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(finish(alg, v))
}

/// Parses `sum of [coeff] gen | product` terms, with `coeff [ ... ]` groups,
/// into one element per arrow of the double quiver.
pub fn parse_tensor(alg: &Algebra, text: &str) -> Result<Vec<Elem>> {
    let mut p = Parser { alg, toks: lex(text)?, pos: 0, len: text.len() };
    let mut out = vec![Elem::zero(); alg.quiver.arrows.len()];
    tensor_sum(&mut p, &one(), &mut out)?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

fn tensor_sum(p: &mut Parser, scale: &Q, out: &mut [Elem]) -> Result<()> {
    let mut first = true;
    loop {
        let sign = match p.peek() {
            Some(Tok::Plus) => {
                p.pos += 1;
                one()
            }
            Some(Tok::Minus) => {
                p.pos += 1;
                -one()
            }
            _ if first => one(),
            _ => return Ok(()),
        };
        first = false;
        let mut c = sign * scale;
        while let Some(Tok::Num(n)) = p.peek() {
            c *= n;
            p.pos += 1;
        }
        match p.peek() {
            Some(Tok::LBracket) => {
                p.pos += 1;
                tensor_sum(p, &c, out)?;
                p.expect(Tok::RBracket)?;
            }
            Some(Tok::A(name)) => {
                let name = name.clone();
                let a = p.alg.quiver.arrow_by_name(&name).map_or_else(|| p.err(format!("no arrow {name}")), Ok)?;
                p.pos += 1;
                p.expect(Tok::Bar)?;
                let v = p.product()?;
                let e = finish(p.alg, v);
                out[a].add_scaled(&e, &c);
            }
            _ => return p.err("expected a generator followed by '|'"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::lex;

    #[test]
    fn lexer_positions() {
        let toks = lex("a3* a3 (x2)^2 - 1/2 e1").unwrap();
        let pos: Vec<usize> = toks.iter().map(|t| t.0).collect();
        assert_eq!(pos, [0, 4, 7, 8, 10, 11, 12, 14, 16, 20]);
        assert_eq!(toks[8].1, super::Tok::Num(crate::rational::qf(1, 2)));
        assert!(lex("a3 $").is_err());
        assert!(lex("1/0").is_err());
    }
}
