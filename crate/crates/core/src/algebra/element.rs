//! Sparse exact linear combinations of basis monomials.

use crate::rational::Q;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Elem(BTreeMap<usize, Q>);

impl Elem {
    pub fn zero() -> Self {
        Elem(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, crate::rational::one())
    }

    pub fn term(i: usize, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(i, &c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Q)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.0.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &Elem, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.terms() {
            self.add_term(i, &(x * c));
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut e = self.clone();
        e.add_scaled(other, &crate::rational::one());
        e
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let mut e = self.clone();
        e.add_scaled(other, &-crate::rational::one());
        e
    }

    pub fn scale(&self, c: &Q) -> Elem {
        if c.is_zero() {
            return Elem::zero();
        }
        Elem(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn neg(&self) -> Elem {
        Elem(self.0.iter().map(|(i, x)| (*i, -x.clone())).collect())
    }

    /// Keeps only terms whose index satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Elem {
        Elem(self.0.iter().filter(|(i, _)| keep(**i)).map(|(i, c)| (*i, c.clone())).collect())
    }

    /// Dense coordinates over an ordered index list; terms outside are dropped.
    pub fn dense(&self, indices: &[usize]) -> Vec<Q> {
        indices.iter().map(|&i| self.coeff(i)).collect()
    }

    pub fn from_dense(indices: &[usize], v: &[Q]) -> Elem {
        Elem::from_terms(indices.iter().copied().zip(v.iter().cloned()))
    }

    /// If the element is c times a single basis vector.
    pub fn as_multiple_of(&self, i: usize) -> Option<Q> {
        match self.0.len() {
            0 => Some(Q::zero()),
            1 => self.0.get(&i).cloned(),
            _ => None,
        }
    }
}
