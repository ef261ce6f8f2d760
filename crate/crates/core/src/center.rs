//! The center Z = HH^0(A): degreewise kernels, named generators, products.

use crate::algebra::{Algebra, Elem};
use crate::catalog::{self, CentralSpec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::parse::parse_element;
use crate::rational::Q;
use crate::table::{Combination, NamedElem, ProductEntry, ProductTable, Provenance};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Basis monomials of the diagonal corners e_v A(d) e_v.
pub fn diagonal_indices(alg: &Algebra, d: usize) -> Vec<usize> {
    (0..alg.quiver.num_vertices()).flat_map(|v| alg.basis.block(d, v, v).iter().copied()).collect()
}

/// Kernel of z -> ([z, a])_a on the diagonal part of degree d.
pub fn central_kernel(alg: &Algebra, d: usize) -> Vec<Elem> {
    let vars = diagonal_indices(alg, d);
    if vars.is_empty() {
        return vec![];
    }
    let mut row_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cols: Vec<Elem> = Vec::new();
    for &x in &vars {
        let xe = Elem::basis(x);
        let mut img = Elem::zero();
        for a in 0..alg.quiver.arrows.len() {
            // Tag each arrow's output so different arrows never cancel.
            let c = alg.right_arrow(&xe, a).sub(&alg.left_arrow(a, &xe));
            for (i, coeff) in c.terms() {
                img.add_term(i * alg.quiver.arrows.len() + a, coeff);
            }
        }
        for (i, _) in img.terms() {
            let n = row_of.len();
            row_of.entry(i).or_insert(n);
        }
        cols.push(img);
    }
    let mut m = Matrix::zeros(row_of.len(), vars.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, coeff) in c.terms() {
            m.data[row_of[&i]][j] = coeff.clone();
        }
    }
    m.kernel().into_iter().map(|v| Elem::from_dense(&vars, &v)).collect()
}

/// Predicted dimension of Z(d): one per exponent with 2m - 2 = d < h - 2, and |F| on top.
pub fn predicted_dim(alg: &Algebra, d: usize) -> usize {
    let small = alg.roots.small_exponents().iter().filter(|&&m| 2 * m - 2 == d).count();
    if d == alg.top() {
        small + alg.roots.fixed.len()
    } else {
        small
    }
}

#[derive(Clone, Debug)]
pub struct CenterBasis {
    pub elements: Vec<NamedElem>,
}

impl CenterBasis {
    pub fn get(&self, name: &str) -> Option<&NamedElem> {
        self.elements.iter().find(|e| e.name == name)
    }

    pub fn by_degree(&self, d: usize) -> Vec<&NamedElem> {
        self.elements.iter().filter(|e| e.degree == d).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.name.clone()).collect()
    }

    /// Positive-degree central elements below the top, i.e. z_k with k > 0.
    pub fn z_names(&self) -> Vec<String> {
        self.elements.iter().filter(|e| e.name.starts_with('z')).map(|e| e.name.clone()).collect()
    }

    /// Coordinates of a central element in the named basis.
    pub fn express(&self, alg: &Algebra, x: &Elem) -> Result<Combination> {
        let mut pairs = Vec::new();
        let mut rest = x.clone();
        for d in (0..=alg.top()).rev() {
            let part = alg.homogeneous_part(&rest, d);
            if part.is_zero() {
                continue;
            }
            let gens = self.by_degree(d);
            let idx = diagonal_indices(alg, d);
            let m = Matrix::from_cols(idx.len(), &gens.iter().map(|g| g.elem.dense(&idx)).collect::<Vec<_>>());
            let coords = m
                .solve(&part.dense(&idx))
                .filter(|_| part.terms().all(|(i, _)| idx.contains(&i)))
                .ok_or_else(|| Error::Verification(format!("element of degree {d} is not in the center span")))?;
            for (g, c) in gens.iter().zip(coords) {
                pairs.push((g.name.clone(), c));
            }
            rest = rest.sub(&part);
        }
        Ok(Combination::from_pairs(pairs))
    }
}

/// Echelon center basis with names z_d below the top and w_i on top.
pub fn center_basis(alg: &Algebra) -> Result<CenterBasis> {
    let mut elements = Vec::new();
    for d in 0..=alg.top() {
        let ker = central_kernel(alg, d);
        if ker.len() != predicted_dim(alg, d) {
            return Err(Error::Verification(format!(
                "{}: dim Z({d}) = {}, expected {}",
                alg.id(),
                ker.len(),
                predicted_dim(alg, d)
            )));
        }
        if d == alg.top() {
            for &v in &alg.roots.fixed {
                elements.push(NamedElem { name: format!("w{}", v + 1), degree: d, elem: alg.omega(v) });
            }
        } else {
            for (k, z) in ker.into_iter().enumerate() {
                let name = if k == 0 { format!("z{d}") } else { format!("z{d}_{k}") };
                elements.push(NamedElem { name, degree: d, elem: z });
            }
        }
    }
    Ok(CenterBasis { elements })
}

#[derive(Clone, Debug)]
pub struct MatchReport {
    pub name: String,
    pub degree: usize,
    pub text: String,
    pub central: bool,
    /// c with (reference expression) = c * (echelon generator).
    pub scalar: Option<Q>,
}

/// Replaces echelon generators by the reference expressions and reports
/// how each one compares.
pub fn match_reference_generators(alg: &Algebra, basis: &CenterBasis) -> Result<(CenterBasis, Vec<MatchReport>)> {
    let mut named = basis.clone();
    let mut reports = Vec::new();
    if let Some(z0) = named.elements.iter_mut().find(|e| e.name == "z0") {
        z0.elem = alg.unit();
    }
    for (d, spec) in catalog::central_elements(alg.id()) {
        let name = format!("z{d}");
        let (text, elem) = match &spec {
            CentralSpec::Text(t) => (t.clone(), parse_element(alg, t)?),
            CentralSpec::SquareOf(k) => {
                let base = named
                    .get(&format!("z{k}"))
                    .ok_or_else(|| Error::Internal(format!("z{k} missing")))?
                    .elem
                    .clone();
                (format!("z{k}^2"), alg.mul(&base, &base))
            }
        };
        let central = alg.is_central(&elem);
        let target = basis.get(&name).ok_or_else(|| Error::Verification(format!("{}: no central element of degree {d}", alg.id())))?;
        let scalar = proportional(&elem, &target.elem);
        if let (true, Some(c)) = (central, &scalar) {
            if !c.is_zero() {
                named.elements.iter_mut().find(|e| e.name == name).unwrap().elem = elem.clone();
            }
        }
        reports.push(MatchReport { name, degree: d, text, central, scalar });
    }
    for (v, text) in catalog::top_central_elements(alg.id()) {
        let elem = parse_element(alg, &text)?;
        let central = alg.is_central(&elem);
        let scalar = proportional(&elem, &alg.omega(v - 1));
        reports.push(MatchReport { name: format!("w{v}"), degree: alg.top(), text, central, scalar });
    }
    Ok((named, reports))
}

/// c with x = c * y, if any.
pub fn proportional(x: &Elem, y: &Elem) -> Option<Q> {
    let (i, yc) = y.terms().next()?;
    let c = x.coeff(i) / yc;
    (y.scale(&c) == *x).then_some(c)
}

/// The center with reference-scaled generators; fails if any reference
/// expression is not central or not a nonzero multiple of the computed one.
pub fn named_center(alg: &Algebra) -> Result<CenterBasis> {
    let basis = center_basis(alg)?;
    let (named, reports) = match_reference_generators(alg, &basis)?;
    for r in &reports {
        if r.degree < alg.top() && (!r.central || r.scalar.as_ref().is_none_or(Zero::is_zero)) {
            return Err(Error::Verification(format!("{}: {} = {} is not a nonzero central element", alg.id(), r.name, r.text)));
        }
    }
    Ok(named)
}

/// Multiplication table of Z on the named basis (all ordered pairs of
/// positive-degree generators).
pub fn center_products(alg: &Algebra, basis: &CenterBasis) -> Result<ProductTable> {
    let mut table = ProductTable::default();
    let gens: Vec<&NamedElem> = basis.elements.iter().filter(|e| e.degree > 0).collect();
    for x in &gens {
        for y in &gens {
            let p = alg.mul(&x.elem, &y.elem);
            let result = basis.express(alg, &p)?;
            let provenance = if x.degree + y.degree > alg.top() { Provenance::DegreeZero } else { Provenance::ChainFormula };
            table.push(ProductEntry { i: 0, j: 0, left: x.name.clone(), right: y.name.clone(), result, provenance });
        }
    }
    Ok(table)
}

/// Hilbert series of Z as (degree, dimension) pairs.
pub fn hilbert_series(basis: &CenterBasis) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for e in &basis.elements {
        *h.entry(e.degree).or_insert(0) += 1;
    }
    h
}

/// Predicted h_Z(t) from the exponents and the fixed vertices.
pub fn predicted_series(alg: &Algebra) -> BTreeMap<usize, usize> {
    (0..=alg.top()).map(|d| (d, predicted_dim(alg, d))).filter(|(_, n)| *n > 0).collect()
}
