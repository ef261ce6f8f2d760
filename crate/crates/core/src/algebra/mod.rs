//! The preprojective algebra as a finite-dimensional graded algebra.

pub mod basis;
pub mod element;
mod frobenius;

pub use basis::{compute_basis, GradedBasis, Mono};
pub use element::Elem;

use crate::error::{Error, Result};
use crate::poly::{closed_form_hilbert, Poly, PolyMatrix};
use crate::quiver::{build_quiver, root_data, DynkinQuiver, QuiverId, RootData};
use crate::rational::{one, Q};
use num_traits::Zero;

pub struct Algebra {
    pub quiver: DynkinQuiver,
    pub roots: RootData,
    pub basis: GradedBasis,
    /// eta(arrow k) = sign * arrow.
    pub eta_table: Vec<(i64, usize)>,
    trace_values: Option<Vec<Q>>,
    dual: Vec<Elem>,
    left: Vec<Vec<Elem>>,
}

impl Algebra {
    pub fn build(id: QuiverId) -> Result<Self> {
        let quiver = build_quiver(id.family, id.rank_param)?;
        quiver.validate()?;
        let roots = root_data(&quiver);
        let basis = compute_basis(&quiver, roots.h - 2);
        Self::from_parts(quiver, roots, basis)
    }

    /// Finishes construction from a (possibly cached) basis.
    pub fn from_parts(quiver: DynkinQuiver, roots: RootData, basis: GradedBasis) -> Result<Self> {
        let eta_table = frobenius::eta_table(&quiver);
        let mut alg =
            Algebra { quiver, roots, basis, eta_table, trace_values: None, dual: Vec::new(), left: Vec::new() };
        alg.left = (0..alg.quiver.arrows.len())
            .map(|a| {
                let ai = alg.arrow_index(a);
                (0..alg.basis.len()).map(|b| alg.mul_basis(ai, b)).collect()
            })
            .collect();
        alg.check_eta_is_automorphism()?;
        alg.trace_values = Some(alg.solve_trace()?);
        alg.dual = alg.compute_dual()?;
        Ok(alg)
    }

    pub fn id(&self) -> QuiverId {
        self.quiver.id()
    }

    pub fn h(&self) -> usize {
        self.roots.h
    }

    pub fn top(&self) -> usize {
        self.basis.top
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nu(&self, v: usize) -> usize {
        self.roots.nu[v]
    }

    pub fn mono(&self, i: usize) -> &Mono {
        &self.basis.monos[i]
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.basis.monos[i].degree()
    }

    pub fn vertex(&self, v: usize) -> Elem {
        Elem::basis(v)
    }

    pub fn unit(&self) -> Elem {
        Elem::from_terms((0..self.quiver.num_vertices()).map(|v| (v, one())))
    }

    pub fn arrow_index(&self, a: usize) -> usize {
        let src = self.quiver.arrows[a].src;
        self.basis.right[src][a][0].0
    }

    pub fn arrow(&self, a: usize) -> Elem {
        Elem::basis(self.arrow_index(a))
    }

    /// The top-degree basis monomial spanning e_v A^top e_nu(v).
    pub fn top_mono(&self, v: usize) -> usize {
        self.basis.block(self.top(), v, self.nu(v))[0]
    }

    pub fn right_arrow(&self, x: &Elem, a: usize) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            for (j, d) in &self.basis.right[i][a] {
                out.add_term(*j, &(c * d));
            }
        }
        out
    }

    pub fn left_arrow(&self, a: usize, x: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&self.left[a][i], c);
        }
        out
    }

    /// Normal form of the path `word` starting at `src`; zero if it vanishes.
    pub fn reduce_word(&self, src: usize, word: &[usize]) -> Result<Elem> {
        let mut cur = Elem::basis(src);
        let mut at = src;
        for (k, &a) in word.iter().enumerate() {
            let arrow = &self.quiver.arrows[a];
            if arrow.src != at {
                let prev = if k == 0 { format!("e{}", src + 1) } else { self.quiver.arrows[word[k - 1]].name.clone() };
                return Err(Error::Incomposable(format!("{prev} followed by {}", arrow.name)));
            }
            at = arrow.dst;
            cur = self.right_arrow(&cur, a);
        }
        Ok(cur)
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> Elem {
        let (mx, my) = (&self.basis.monos[x], &self.basis.monos[y]);
        if mx.dst != my.src || mx.degree() + my.degree() > self.top() {
            return Elem::zero();
        }
        let mut cur = Elem::basis(x);
        for &a in &my.word {
            cur = self.right_arrow(&cur, a);
            if cur.is_zero() {
                break;
            }
        }
        cur
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            for (j, d) in y.terms() {
                let p = self.mul_basis(i, j);
                if !p.is_zero() {
                    out.add_scaled(&p, &(c * d));
                }
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[&Elem]) -> Elem {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, x: &Elem, k: usize) -> Elem {
        (0..k).fold(self.unit(), |acc, _| self.mul(&acc, x))
    }

    pub fn commutator(&self, x: &Elem, y: &Elem) -> Elem {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn is_central(&self, z: &Elem) -> bool {
        (0..self.quiver.arrows.len()).all(|a| {
            let ae = self.arrow(a);
            self.commutator(z, &ae).is_zero()
        })
    }

    /// e_u x e_w.
    pub fn corner(&self, u: usize, x: &Elem, w: usize) -> Elem {
        x.filter(|i| self.basis.monos[i].src == u && self.basis.monos[i].dst == w)
    }

    pub fn homogeneous_part(&self, x: &Elem, d: usize) -> Elem {
        x.filter(|i| self.basis.monos[i].degree() == d)
    }

    /// Degree if homogeneous and nonzero.
    pub fn degree(&self, x: &Elem) -> Option<usize> {
        let mut ds = x.terms().map(|(i, _)| self.degree_of(i));
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    /// Number of arrows of Q^* in a basis monomial.
    pub fn star_count(&self, i: usize) -> usize {
        self.basis.monos[i].word.iter().filter(|&&a| self.quiver.arrows[a].starred).count()
    }

    pub fn hilbert_matrix(&self) -> PolyMatrix {
        let r = self.quiver.num_vertices();
        let mut m = vec![vec![vec![0i64; self.top() + 1]; r]; r];
        for (&(d, s, t), b) in &self.basis.blocks {
            m[s][t][d] = b.len() as i64;
        }
        PolyMatrix(m.into_iter().map(|row| row.into_iter().map(Poly::new).collect()).collect())
    }

    pub fn closed_form_hilbert(&self) -> PolyMatrix {
        closed_form_hilbert(&self.roots.c, &self.roots.p, self.h())
    }

    /// Hilbert matrix evaluated at t = 1.
    pub fn dimension_matrix(&self) -> Vec<Vec<i64>> {
        self.hilbert_matrix().eval(1)
    }

    pub fn display_elem(&self, x: &Elem) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in x.terms() {
            let m = &self.basis.monos[i];
            let word = if m.word.is_empty() {
                format!("e{}", m.src + 1)
            } else {
                m.word.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join(" ")
            };
            let neg = c < &Q::zero();
            let a = crate::rational::abs(c);
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if a != one() {
                s.push_str(&crate::rational::display(&a));
                s.push(' ');
            }
            s.push_str(&word);
        }
        s
    }
}
