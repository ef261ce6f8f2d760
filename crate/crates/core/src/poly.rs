//! Integer polynomials in t and the closed-form Hilbert series matrix.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn new(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn monomial(coeff: i64, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = coeff;
        Poly::new(c)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Parses "1+2t^3+t-4t^10" style text; `t^{10}` braces are accepted.
    pub fn parse(s: &str) -> Option<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        if s.is_empty() || s == "0" {
            return Some(Poly::default());
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut terms = Vec::new();
        let mut start = 0;
        let b = s.as_bytes();
        for i in 1..b.len() {
            if (b[i] == b'+' || b[i] == b'-') && b[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes().first()? {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ => (1, term),
            };
            let (c, deg) = match body.find('t') {
                None => (body.parse::<i64>().ok()?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().ok()? };
                    let rest = &body[pos + 1..];
                    let d = if rest.is_empty() { 1 } else { rest.strip_prefix('^')?.parse::<usize>().ok()? };
                    (c, d)
                }
            };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += sign * c;
        }
        Some(Poly::new(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Square matrix of polynomials, indexed by vertices (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix(pub Vec<Vec<Poly>>);

impl PolyMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.0[i][j]
    }

    /// Integer matrix of values at t = x.
    pub fn eval(&self, x: i64) -> Vec<Vec<i64>> {
        self.0.iter().map(|r| r.iter().map(|p| p.eval(x)).collect()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        self.0.iter().map(|r| r[j].clone()).collect()
    }

    /// Coefficient matrix of t^d.
    pub fn coeff_matrix(&self, d: usize) -> Vec<Vec<i64>> {
        self.0.iter().map(|r| r.iter().map(|p| p.coeff(d)).collect()).collect()
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

/// Coefficients M_k of (1 - C t + t^2)^{-1} = sum M_k t^k, for k < len.
pub fn inverse_series(c: &[Vec<i64>], len: usize) -> Vec<Vec<Vec<i64>>> {
    let n = c.len();
    let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut out: Vec<Vec<Vec<i64>>> = Vec::with_capacity(len);
    for k in 0..len {
        let m = match k {
            0 => id.clone(),
            1 => c.to_vec(),
            _ => {
                let cm = mat_mul(c, &out[k - 1]);
                let prev = &out[k - 2];
                (0..n).map(|i| (0..n).map(|j| cm[i][j] - prev[i][j]).collect()).collect()
            }
        };
        out.push(m);
    }
    out
}

/// Series coefficients of (1 + P t^h)(1 - C t + t^2)^{-1} through degree `upto`.
pub fn closed_form_coeffs(c: &[Vec<i64>], p: &[Vec<i64>], h: usize, upto: usize) -> Vec<Vec<Vec<i64>>> {
    let m = inverse_series(c, upto + 1);
    let n = c.len();
    (0..=upto)
        .map(|k| {
            if k < h {
                m[k].clone()
            } else {
                let pm = mat_mul(p, &m[k - h]);
                (0..n).map(|i| (0..n).map(|j| m[k][i][j] + pm[i][j]).collect()).collect()
            }
        })
        .collect()
}

/// The closed-form Hilbert matrix truncated to degree h-2.
pub fn closed_form_hilbert(c: &[Vec<i64>], p: &[Vec<i64>], h: usize) -> PolyMatrix {
    let coeffs = closed_form_coeffs(c, p, h, h - 2);
    let n = c.len();
    PolyMatrix(
        (0..n)
            .map(|i| (0..n).map(|j| Poly::new(coeffs.iter().map(|m| m[i][j]).collect())).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["1+t^6", "t+2t^3+2t^5", "1+t^{10}", "0", "3-t"] {
            let p = Poly::parse(s).unwrap();
            assert_eq!(Poly::parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(Poly::parse("1+t^{10}").unwrap().coeff(10), 1);
        assert_eq!(Poly::parse("t+t").unwrap(), Poly(vec![0, 2]));
        assert!(Poly::parse("1+x").is_none());
    }

    #[test]
    fn a2_series_is_finite() {
        // A_2: one edge, h = 3, nu swaps the two vertices.
        let c = vec![vec![0, 1], vec![1, 0]];
        let p = vec![vec![0, 1], vec![1, 0]];
        let coeffs = closed_form_coeffs(&c, &p, 3, 8);
        for k in 2..=8 {
            assert!(coeffs[k].iter().flatten().all(|&x| x == 0), "degree {k}");
        }
        assert_eq!(coeffs[1], c);
    }
}
