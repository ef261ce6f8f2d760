//! Dense exact linear algebra over Q.

use crate::rational::{one, zero, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    #[serde(with = "wire_rows")]
    pub data: Vec<Vec<Q>>,
}

mod wire_rows {
    use crate::rational::{from_wire, to_wire, Q};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(data: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = data.iter().map(|r| r.iter().map(to_wire).collect()).collect();
        serde::Serialize::serialize(&rows, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        rows.into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| from_wire(&x).ok_or_else(|| D::Error::custom(format!("bad rational {x:?}"))))
                    .collect()
            })
            .collect()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Q>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| crate::rational::q(x)).collect()).collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i][j] = c[i].clone();
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|r| {
                let mut s = zero();
                for (a, b) in r.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        let data = self.data.iter().map(|r| r.iter().map(|x| x * c).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-one())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        *self == self.transpose().neg()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    /// Pivots are taken on the leftmost available column.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].recip();
            if !inv.is_one() {
                for x in self.data[r][c..].iter_mut() {
                    *x *= &inv;
                }
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for (x, y) in self.data[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![zero(); self.cols];
            v[free] = one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m.data[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some x with M x = b, if one exists.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i][..self.cols].clone_from_slice(&self.data[i]);
            aug.data[i][self.cols] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.data[row][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            aug.data[i][..n].clone_from_slice(&self.data[i]);
            aug.data[i][n + i] = one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = aug.data.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix { rows: n, cols: n, data })
    }

    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let mut m = self.data.clone();
        let n = self.rows;
        let mut det = one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] * &inv;
                let (top, bottom) = m.split_at_mut(i);
                for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                    *x -= &f * y;
                }
            }
        }
        det
    }

    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.data.iter().map(|r| r.iter().map(crate::rational::to_i64).collect()).collect()
    }
}

/// Incremental echelon basis that remembers how each stored row was
/// built from the inserted vectors, so reductions yield coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    inserted: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`; returns the residual and minus the combination used.
    fn reduce(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut r = v.to_vec();
        let mut c = vec![zero(); self.inserted];
        for (p, row, coeffs) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in c.iter_mut().zip(coeffs) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        (r, c)
    }

    /// Inserts `v` under the next id if it is independent; returns whether it was.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut r, mut c) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let id = self.inserted;
        self.inserted += 1;
        for (_, _, coeffs) in self.rows.iter_mut() {
            coeffs.push(zero());
        }
        c.push(one());
        let inv = r[p].recip();
        for x in r.iter_mut().chain(c.iter_mut()) {
            *x *= &inv;
        }
        debug_assert_eq!(id + 1, c.len());
        self.rows.push((p, r, c));
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Coefficients of `v` in the independent inserted vectors, if in the span.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (r, c) = self.reduce(v);
        if r.iter().all(Zero::is_zero) {
            Some(c.into_iter().map(|x| -x).collect())
        } else {
            None
        }
    }
}

/// Chosen complement of an image inside a kernel, with a projection
/// sending a kernel vector to its coordinates modulo the image.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub dim_ambient: usize,
    pub reps: Vec<Vec<Q>>,
    ech: Echelon,
    n_image: usize,
}

impl Subquotient {
    /// `cycles` spans the kernel, `boundaries` spans the image (a subspace of it).
    /// `preferred` vectors are tried first as representatives.
    pub fn new(dim: usize, cycles: &[Vec<Q>], boundaries: &[Vec<Q>], preferred: &[Vec<Q>]) -> Self {
        let mut ech = Echelon::new(dim);
        for b in boundaries {
            ech.insert(b);
        }
        let n_image = ech.rank();
        let mut reps = Vec::new();
        for v in preferred.iter().chain(cycles) {
            if ech.insert(v) {
                reps.push(v.clone());
            }
        }
        Subquotient { dim_ambient: dim, reps, ech, n_image }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of `v` in the representatives modulo boundaries;
    /// `None` if `v` is outside cycles + boundaries.
    pub fn project(&self, v: &[Q]) -> Option<Vec<Q>> {
        self.ech.coords(v).map(|c| c[self.n_image..].to_vec())
    }

    pub fn is_boundary(&self, v: &[Q]) -> bool {
        self.project(v).is_some_and(|c| c.iter().all(Zero::is_zero))
    }
}

/// Greedy maximal independent subset of `vs`, in order.
pub fn independent_subset(dim: usize, vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut ech = Echelon::new(dim);
    vs.iter().filter(|v| ech.insert(v)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn kernel_and_rank() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.det(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let s = Matrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.det(), q(0));
        let h = Matrix::from_rows(vec![vec![qf(1, 2), q(1)], vec![q(0), q(3)]]);
        assert_eq!(h.det(), qf(3, 2));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(m.solve(&[q(1), q(2)]).is_none());
        assert!(m.solve(&[q(2), q(2)]).is_some());
    }

    #[test]
    fn subquotient_projects_modulo_image() {
        // cycles: all of Q^2, boundaries: span(e1)
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        let sq = Subquotient::new(2, &[e1.clone(), e2.clone()], &[e1.clone()], &[]);
        assert_eq!(sq.dim(), 1);
        assert_eq!(sq.project(&[q(5), q(3)]).unwrap(), vec![q(3)]);
        assert!(sq.is_boundary(&e1));
    }
}
