//! Star, Nakayama automorphism, Frobenius trace and the dual basis.

use super::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{DynkinQuiver, Family};
use crate::rational::{one, zero, Q};
use num_traits::Zero;

/// Signed arrow permutation defining eta on generators.
pub(super) fn eta_table(q: &DynkinQuiver) -> Vec<(i64, usize)> {
    let idx = |name: &str| q.arrow_by_name(name).expect("arrow name");
    // Unstarred label pairs (k, l) with eta(a_k) = -a_l and eta(a_k^*) = a_l^*.
    let swaps: Vec<(usize, usize)> = match (q.family, q.rank_param) {
        (Family::D, n) if n % 2 == 0 => vec![(n - 1, n), (n, n - 1)],
        (Family::E, 6) => vec![(1, 4), (4, 1), (2, 3), (3, 2)],
        _ => vec![],
    };
    q.arrows
        .iter()
        .map(|a| {
            let label: usize = a.name[1..].trim_end_matches('*').parse().unwrap();
            let target = swaps.iter().find(|(k, _)| *k == label).map_or(label, |(_, l)| *l);
            if a.starred {
                (1, idx(&format!("a{target}*")))
            } else {
                (-1, idx(&format!("a{target}")))
            }
        })
        .collect()
}

impl Algebra {
    pub(super) fn check_eta_is_automorphism(&self) -> Result<()> {
        let q = &self.quiver;
        for (k, &(s, l)) in self.eta_table.iter().enumerate() {
            let (a, b) = (&q.arrows[k], &q.arrows[l]);
            if b.src != self.nu(a.src) || b.dst != self.nu(a.dst) {
                return Err(Error::Internal(format!("eta({}) does not cover nu", a.name)));
            }
            let (s2, back) = self.eta_table[l];
            if back != k || s * s2 != 1 {
                return Err(Error::Internal(format!("eta is not an involution on {}", a.name)));
            }
            if self.eta_table[a.star].1 != b.star {
                return Err(Error::Internal(format!("eta does not commute with star on {}", a.name)));
            }
        }
        for v in 0..q.num_vertices() {
            let mut image = Elem::zero();
            for c in q.arrows_from(v) {
                let (s1, c1) = self.eta_table[c];
                let (s2, c2) = self.eta_table[q.arrows[c].star];
                let path = self.reduce_word(self.nu(v), &[c1, c2])?;
                image.add_scaled(&path, &Q::from_integer((q.arrows[c].sign() * s1 * s2).into()));
            }
            if !image.is_zero() {
                return Err(Error::Internal(format!("eta does not preserve the relation at vertex {}", v + 1)));
            }
        }
        Ok(())
    }

    pub fn eta_basis(&self, i: usize) -> Elem {
        let m = &self.basis.monos[i];
        let mut sign = 1;
        let word: Vec<usize> = m
            .word
            .iter()
            .map(|&a| {
                let (s, b) = self.eta_table[a];
                sign *= s;
                b
            })
            .collect();
        let e = self.reduce_word(self.nu(m.src), &word).expect("eta preserves composability");
        if sign < 0 {
            e.neg()
        } else {
            e
        }
    }

    pub fn eta(&self, x: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&self.eta_basis(i), c);
        }
        out
    }

    pub fn star_basis(&self, i: usize) -> Elem {
        let m = &self.basis.monos[i];
        let word: Vec<usize> = m.word.iter().rev().map(|&a| self.quiver.arrows[a].star).collect();
        self.reduce_word(m.dst, &word).expect("star preserves composability")
    }

    pub fn star(&self, x: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&self.star_basis(i), c);
        }
        out
    }

    pub fn anchor_vertex(&self) -> usize {
        match (self.quiver.family, self.quiver.rank_param) {
            (Family::D, _) => 0,
            (Family::E, 6) => 2,
            (Family::E, 7) => 3,
            _ => 4,
        }
    }

    /// The monomial whose trace is normalised to 1.
    pub fn anchor_text(&self) -> String {
        match (self.quiver.family, self.quiver.rank_param) {
            (Family::D, n) => {
                let up: Vec<String> = (1..n).map(|i| format!("a{i}*")).collect();
                let down: Vec<String> = (1..n).rev().map(|i| format!("a{i}")).collect();
                format!("{} {}", up.join(" "), down.join(" "))
            }
            (Family::E, 6) => "a3* a3 (a2* a2 a3* a3)^2".into(),
            (Family::E, 7) => "(a4* a4 a3* a3)^4".into(),
            _ => "(a4* a4 a3* a3)^7".into(),
        }
    }

    /// Solves for f on each top line from f(a y) = f(y eta(a)) and the anchor.
    pub(super) fn solve_trace(&self) -> Result<Vec<Q>> {
        let r = self.quiver.num_vertices();
        let top = self.top();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut rhs: Vec<Q> = Vec::new();
        for (a, arrow) in self.quiver.arrows.iter().enumerate() {
            let (s, ea) = self.eta_table[a];
            for &y in self.basis.block(top - 1, arrow.dst, self.nu(arrow.src)) {
                let ay = self.left[a][y].coeff(self.top_mono(arrow.src));
                let yea = self.basis.right[y][ea]
                    .iter()
                    .find(|(j, _)| *j == self.top_mono(arrow.dst))
                    .map_or_else(zero, |(_, c)| c.clone())
                    * Q::from_integer(s.into());
                let mut row = vec![zero(); r];
                row[arrow.src] += ay;
                row[arrow.dst] -= yea;
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    rhs.push(zero());
                }
            }
        }
        let anchor = crate::parse::parse_element(self, &self.anchor_text())?;
        let v = self.anchor_vertex();
        let c = anchor
            .as_multiple_of(self.top_mono(v))
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("anchor is not a nonzero top-degree monomial".into()))?;
        let mut row = vec![zero(); r];
        row[v] = c;
        rows.push(row);
        rhs.push(one());
        let m = Matrix::from_rows(rows);
        if m.rank() != r {
            return Err(Error::Internal("trace is not determined by the Nakayama constraints".into()));
        }
        let sol = m.solve(&rhs).ok_or_else(|| Error::Internal("Nakayama constraints are inconsistent".into()))?;
        if sol.iter().any(Zero::is_zero) {
            return Err(Error::Internal("trace vanishes on a top line".into()));
        }
        Ok(sol)
    }

    /// Values f(t_v) on the top basis monomials, per vertex.
    pub fn trace_values(&self) -> Result<&[Q]> {
        self.trace_values.as_deref().ok_or_else(|| Error::Internal("trace requested before normalisation".into()))
    }

    pub fn trace(&self, x: &Elem) -> Result<Q> {
        let tv = self.trace_values()?;
        let mut s = zero();
        for v in 0..tv.len() {
            let c = x.coeff(self.top_mono(v));
            if !c.is_zero() {
                s += c * &tv[v];
            }
        }
        Ok(s)
    }

    /// f, for an algebra that is known to be normalised.
    pub fn f(&self, x: &Elem) -> Q {
        self.trace(x).expect("normalised trace")
    }

    /// (x, y) = f(xy).
    pub fn pair(&self, x: &Elem, y: &Elem) -> Q {
        self.f(&self.mul(x, y))
    }

    /// omega_v: the top element of e_v A e_nu(v) with f(omega_v) = 1.
    pub fn omega(&self, v: usize) -> Elem {
        let tv = &self.trace_values().expect("normalised trace")[v];
        Elem::term(self.top_mono(v), tv.recip())
    }

    /// Dual partner block of (d, u, w) is (top - d, w, nu(u)).
    pub(super) fn compute_dual(&self) -> Result<Vec<Elem>> {
        let mut dual = vec![Elem::zero(); self.dim()];
        for (&(d, u, w), xs) in &self.basis.blocks {
            let ys = self.basis.block(self.top() - d, w, self.nu(u));
            if ys.len() != xs.len() {
                return Err(Error::Internal(format!("pairing blocks of unequal size at degree {d}")));
            }
            let g = Matrix::from_rows(
                xs.iter().map(|&x| ys.iter().map(|&y| self.f(&self.mul_basis(x, y))).collect()).collect(),
            );
            let gi = g
                .inverse()
                .ok_or_else(|| Error::Internal(format!("singular Gram matrix in degree {d}, block ({}, {})", u + 1, w + 1)))?;
            for (i, &x) in xs.iter().enumerate() {
                dual[x] = Elem::from_terms(ys.iter().enumerate().map(|(j, &y)| (y, gi.data[j][i].clone())));
            }
        }
        Ok(dual)
    }

    /// x_i^* with f(x_i x_j^*) = delta_ij.
    pub fn dual(&self, i: usize) -> &Elem {
        &self.dual[i]
    }
}
