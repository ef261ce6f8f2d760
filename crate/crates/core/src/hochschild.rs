//! The Hochschild cochain complex of the Schofield resolution and its
//! cohomology, degree by degree.
//!
//! A cochain is stored by its values on the bimodule generators of P_i: one
//! element of A for P_0, P_2, P_3, P_5, P_6 and one per arrow of the double
//! quiver for P_1, P_4. For i = 4 the per-arrow values are the coefficients
//! x_c of the tensor sum c (x) x_c, with x_c in e_t(c) A e_nu(s(c)).

use crate::algebra::{Algebra, Elem};
use crate::catalog;
use crate::center::{self, CenterBasis};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subquotient};
use crate::parse::{parse_element, parse_tensor};
use crate::rational::{q, Q};
use crate::table::Combination;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Highest cochain index built; HH^7 is used for the periodicity check.
pub const MAX_INDEX: usize = 8;

/// Which corners the values of C^i live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// One value in the sum of e_v A e_v.
    Diagonal,
    /// One value in the sum of e_v A e_nu(v).
    Twisted,
    /// A value in e_s(c) A e_t(c) for each arrow c.
    Arrows,
    /// A value in e_t(c) A e_nu(s(c)) for each arrow c.
    TwistedArrows,
}

/// Position of C^i in the 6-periodic pattern, 1..=6 (0 for C^0).
pub fn base_index(i: usize) -> usize {
    if i == 0 {
        0
    } else {
        (i - 1) % 6 + 1
    }
}

pub fn kind(i: usize) -> Kind {
    match base_index(i) {
        0 | 2 | 6 => Kind::Diagonal,
        1 => Kind::Arrows,
        3 | 5 => Kind::Twisted,
        _ => Kind::TwistedArrows,
    }
}

/// Internal degree of a cochain = degree of its values - shift(i).
pub fn shift(h: usize, i: usize) -> i64 {
    let h = h as i64;
    let base = [0, 1, 2, h, h + 1, h + 2, 2 * h][base_index(i)];
    if i == 0 {
        0
    } else {
        base + 2 * h * ((i as i64 - 1) / 6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub index: usize,
    pub values: Vec<Elem>,
}

impl Cochain {
    pub fn zero(alg: &Algebra, index: usize) -> Self {
        let n = match kind(index) {
            Kind::Arrows | Kind::TwistedArrows => alg.quiver.arrows.len(),
            _ => 1,
        };
        Cochain { index, values: vec![Elem::zero(); n] }
    }

    pub fn single(index: usize, value: Elem) -> Self {
        Cochain { index, values: vec![value] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Elem::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Cochain { index: self.index, values: self.values.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn add(&self, other: &Cochain) -> Self {
        assert_eq!(self.index, other.index);
        Cochain { index: self.index, values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Cochain) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    /// Internal degrees present, with the homogeneous parts.
    pub fn homogeneous_parts(&self, alg: &Algebra) -> BTreeMap<i64, Cochain> {
        let s = shift(alg.h(), self.index);
        let mut out: BTreeMap<i64, Cochain> = BTreeMap::new();
        for (k, v) in self.values.iter().enumerate() {
            for (i, c) in v.terms() {
                let g = alg.degree_of(i) as i64 - s;
                let entry = out.entry(g).or_insert_with(|| Cochain::zero(alg, self.index));
                entry.values[k].add_term(i, c);
            }
        }
        out
    }

    /// The single internal degree, if homogeneous and nonzero.
    pub fn degree(&self, alg: &Algebra) -> Option<i64> {
        let parts = self.homogeneous_parts(alg);
        (parts.len() == 1).then(|| *parts.keys().next().unwrap())
    }
}

/// Coordinates of C^i in one internal degree.
#[derive(Clone, Debug)]
pub struct Layout {
    pub index: usize,
    pub degree: i64,
    pub slots: Vec<(usize, usize)>,
    pos: HashMap<(usize, usize), usize>,
}

impl Layout {
    pub fn new(alg: &Algebra, index: usize, degree: i64) -> Self {
        let d = degree + shift(alg.h(), index);
        let mut slots = Vec::new();
        if d >= 0 && d as usize <= alg.top() {
            let d = d as usize;
            let r = alg.quiver.num_vertices();
            match kind(index) {
                Kind::Diagonal => {
                    for v in 0..r {
                        slots.extend(alg.basis.block(d, v, v).iter().map(|&m| (0, m)));
                    }
                }
                Kind::Twisted => {
                    for v in 0..r {
                        slots.extend(alg.basis.block(d, v, alg.nu(v)).iter().map(|&m| (0, m)));
                    }
                }
                Kind::Arrows => {
                    for (c, a) in alg.quiver.arrows.iter().enumerate() {
                        slots.extend(alg.basis.block(d, a.src, a.dst).iter().map(|&m| (c, m)));
                    }
                }
                Kind::TwistedArrows => {
                    for (c, a) in alg.quiver.arrows.iter().enumerate() {
                        slots.extend(alg.basis.block(d, a.dst, alg.nu(a.src)).iter().map(|&m| (c, m)));
                    }
                }
            }
        }
        let pos = slots.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        Layout { index, degree, slots, pos }
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn basis_cochain(&self, alg: &Algebra, k: usize) -> Cochain {
        let (c, m) = self.slots[k];
        let mut x = Cochain::zero(alg, self.index);
        x.values[c] = Elem::basis(m);
        x
    }

    /// None if some term of `x` lies outside this space.
    pub fn coords(&self, x: &Cochain) -> Option<Vec<Q>> {
        let mut v = vec![Q::zero(); self.dim()];
        for (c, val) in x.values.iter().enumerate() {
            for (m, coeff) in val.terms() {
                v[*self.pos.get(&(c, m))?] = coeff.clone();
            }
        }
        Some(v)
    }

    pub fn cochain(&self, alg: &Algebra, v: &[Q]) -> Cochain {
        let mut x = Cochain::zero(alg, self.index);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (slot, m) = self.slots[k];
                x.values[slot].add_term(m, c);
            }
        }
        x
    }
}

fn eps(alg: &Algebra, c: usize) -> Q {
    q(alg.quiver.arrows[c].sign())
}

/// Sum over the basis of x_j g y_j where y_j is the dual x_j^*, or
/// eta(x_j^*) when `twist` is set.
fn casimir(alg: &Algebra, g: &Elem, twist: bool) -> Elem {
    let mut out = Elem::zero();
    let Some(dg) = alg.degree(g) else {
        return out;
    };
    if dg > 0 {
        // x_j g x_j^* has degree top + deg g.
        return out;
    }
    for j in 0..alg.dim() {
        let left = alg.mul(&Elem::basis(j), g);
        if left.is_zero() {
            continue;
        }
        let d = alg.dual(j);
        let right = if twist { alg.eta(d) } else { d.clone() };
        out = out.add(&alg.mul(&left, &right));
    }
    out
}

/// The differential d_i : C^{i-1} -> C^i applied to one cochain.
pub fn differential(alg: &Algebra, i: usize, x: &Cochain) -> Cochain {
    assert_eq!(x.index + 1, i);
    let arrows = &alg.quiver.arrows;
    let n = arrows.len();
    let mut out = Cochain::zero(alg, i);
    match base_index(i) {
        1 => {
            let z = &x.values[0];
            for c in 0..n {
                out.values[c] = alg.left_arrow(c, z).sub(&alg.right_arrow(z, c));
            }
        }
        2 => {
            let mut s = Elem::zero();
            for c in 0..n {
                let cs = arrows[c].star;
                let t = alg.left_arrow(c, &x.values[cs]).add(&alg.right_arrow(&x.values[c], cs));
                s.add_scaled(&t, &eps(alg, c));
            }
            out.values[0] = s;
        }
        3 => out.values[0] = casimir(alg, &x.values[0], false),
        4 => {
            let g = &x.values[0];
            for c in 0..n {
                let cs = arrows[c].star;
                let (sgn, ec) = alg.eta_table[cs];
                let t = alg.left_arrow(cs, g).sub(&alg.right_arrow(g, ec).scale(&q(sgn)));
                out.values[c] = t.scale(&eps(alg, c));
            }
        }
        5 => {
            let mut s = Elem::zero();
            for c in 0..n {
                let (sgn, ec) = alg.eta_table[c];
                s = s.add(&alg.left_arrow(c, &x.values[c]));
                s = s.sub(&alg.right_arrow(&x.values[c], ec).scale(&q(sgn)));
            }
            out.values[0] = s;
        }
        _ => out.values[0] = casimir(alg, &x.values[0], true),
    }
    out
}

/// Matrix of d_i in internal degree g, columns indexed by C^{i-1}(g).
pub fn differential_matrix(alg: &Algebra, i: usize, g: i64) -> Result<Matrix> {
    let src = Layout::new(alg, i - 1, g);
    let dst = Layout::new(alg, i, g);
    let mut cols = Vec::with_capacity(src.dim());
    for k in 0..src.dim() {
        let y = differential(alg, i, &src.basis_cochain(alg, k));
        let v = dst
            .coords(&y)
            .ok_or_else(|| Error::Internal(format!("d{i} leaves C^{i} in degree {g}")))?;
        cols.push(v);
    }
    Ok(Matrix::from_cols(dst.dim(), &cols))
}

/// Range of internal degrees in which C^i is nonzero.
pub fn cochain_degrees(alg: &Algebra, i: usize) -> std::ops::RangeInclusive<i64> {
    let s = shift(alg.h(), i);
    -s..=alg.top() as i64 - s
}

/// A class with a name and a chosen cocycle.
#[derive(Clone, Debug)]
pub struct NamedClass {
    pub name: String,
    pub index: usize,
    pub degree: i64,
    pub cochain: Cochain,
}

/// HH^i in one internal degree.
#[derive(Clone, Debug)]
pub struct DegreePiece {
    pub layout: Layout,
    pub cycles: usize,
    pub boundaries: usize,
    pub quotient: Subquotient,
    /// Names of the representatives, in order.
    pub names: Vec<String>,
}

impl DegreePiece {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// The complex with all cohomology spaces up to HH^7 and the named classes.
pub struct Hochschild<'a> {
    pub alg: &'a Algebra,
    pub center: CenterBasis,
    pub pieces: BTreeMap<(usize, i64), DegreePiece>,
    pub named: Vec<NamedClass>,
    /// Degree bound of a partial build.
    pub window: Option<i64>,
    /// Factors applied to reference expressions so that z_k zeta_k = zeta_0
    /// and z_k psi_k = psi_0 hold; 1 where the reference already satisfies it.
    pub normalizations: Vec<(String, Q)>,
    /// dim C^i(g) for i in 0..=6, used by the Euler check.
    pub cochain_dims: BTreeMap<(usize, i64), usize>,
    /// Rank of d_i in degree g.
    pub ranks: BTreeMap<(usize, i64), usize>,
}

/// Dimensions of HH^i predicted from the exponents and the fixed vertices.
pub fn predicted_dims(alg: &Algebra, i: usize) -> BTreeMap<i64, usize> {
    let roots = &alg.roots;
    let h = roots.h as i64;
    let mut out: BTreeMap<i64, usize> = BTreeMap::new();
    let mut add = |g: i64, n: usize| {
        if n > 0 {
            *out.entry(g).or_insert(0) += n;
        }
    };
    let small: Vec<i64> = roots.small_exponents().iter().map(|&m| m as i64).collect();
    let r_minus = roots.r_minus;
    let period = 2 * h * ((i.max(1) as i64 - 1) / 6);
    match base_index(i) {
        0 => {
            for d in center::predicted_series(alg) {
                add(d.0 as i64, d.1);
            }
        }
        1 => small.iter().for_each(|m| add(2 * m - 2 - period, 1)),
        2 | 3 => add(-2 - period, r_minus),
        4 => small.iter().for_each(|m| add(-2 * m - 2 - period, 1)),
        5 => {
            small.iter().for_each(|m| add(-2 * m - 2 - period, 1));
            add(-h - 2 - period, roots.dim_y());
        }
        _ => {
            small.iter().for_each(|m| add(2 * m - 2 - 2 * h - period, 1));
            add(-h - 2 - period, roots.dim_y());
        }
    }
    out
}

impl<'a> Hochschild<'a> {
    /// Builds every HH^i(g) for i <= 7 with the named classes as preferred
    /// representatives; fails if d o d != 0 or a named class is not a
    /// nonzero cocycle.
    pub fn build(alg: &'a Algebra) -> Result<Self> {
        Self::build_window(alg, None)
    }

    /// As `build`, restricted to internal degrees g with |g| <= max_degree;
    /// named classes outside the window are left out.
    pub fn build_window(alg: &'a Algebra, max_degree: Option<i64>) -> Result<Self> {
        let center = center::named_center(alg)?;
        let mut named = named_classes(alg, &center)?;
        if let Some(m) = max_degree {
            named.retain(|c| c.degree.abs() <= m);
        }
        let mut hs = Hochschild {
            alg,
            center,
            window: max_degree,
            pieces: BTreeMap::new(),
            named,
            normalizations: Vec::new(),
            cochain_dims: BTreeMap::new(),
            ranks: BTreeMap::new(),
        };
        hs.build_pieces()?;
        let scalars = hs.relation_scalars()?;
        if scalars.iter().any(|(_, c)| !c.is_one()) {
            for (name, c) in &scalars {
                let inv = c.recip();
                let class = hs.named.iter_mut().find(|x| x.name == *name).expect("named class");
                class.cochain = class.cochain.scale(&inv);
            }
            hs.build_pieces()?;
            let again = hs.relation_scalars()?;
            if let Some((name, c)) = again.iter().find(|(_, c)| !c.is_one()) {
                return Err(Error::Verification(format!("{name}: defining relation off by {c} after rescaling")));
            }
        }
        hs.normalizations = scalars.into_iter().map(|(n, c)| (n, c.recip())).collect();
        Ok(hs)
    }

    fn build_pieces(&mut self) -> Result<()> {
        self.pieces.clear();
        let lo = -shift(self.alg.h(), MAX_INDEX);
        let hi = self.alg.top() as i64;
        for g in lo..=hi {
            if self.window.is_some_and(|m| g.abs() > m) {
                continue;
            }
            self.build_degree(g)?;
        }
        for c in &self.named {
            let piece = self
                .pieces
                .get(&(c.index, c.degree))
                .ok_or_else(|| Error::Verification(format!("{}: no HH^{} in degree {}", c.name, c.index, c.degree)))?;
            if !piece.names.contains(&c.name) {
                return Err(Error::Verification(format!("{} is zero or dependent in HH^{}", c.name, c.index)));
            }
        }
        Ok(())
    }

    /// For zeta_k and psi_k (k > 0) the scalar c with z_k zeta_k = c zeta_0,
    /// z_k psi_k = c psi_0; fails if the product is not a nonzero multiple.
    fn relation_scalars(&self) -> Result<Vec<(String, Q)>> {
        let mut out = Vec::new();
        for c in &self.named {
            let (base, k) = match c.name.strip_prefix("zeta").or_else(|| c.name.strip_prefix("psi")) {
                Some(k) if k != "0" => (c.name.trim_end_matches(k), k),
                _ => continue,
            };
            let z = self
                .center
                .get(&format!("z{k}"))
                .ok_or_else(|| Error::Internal(format!("no z{k} for {}", c.name)))?;
            let target = format!("{base}0");
            if self.class(&target).is_none() {
                continue;
            }
            let prod = self.express(&times_central(self.alg, &z.elem, &c.cochain))?;
            let s = prod.coeff(&target);
            if s.is_zero() || prod != Combination::single(&target, s.clone()) {
                return Err(Error::Verification(format!("{}: z{k} {} = {prod}, not a multiple of {target}", self.alg.id(), c.name)));
            }
            out.push((c.name.clone(), s));
        }
        Ok(out)
    }

    fn build_degree(&mut self, g: i64) -> Result<()> {
        let alg = self.alg;
        let mut mats: Vec<Option<Matrix>> = vec![None; MAX_INDEX + 1];
        for (i, slot) in mats.iter_mut().enumerate().skip(1) {
            let m = differential_matrix(alg, i, g)?;
            self.ranks.insert((i, g), m.rank());
            *slot = Some(m);
        }
        for i in 1..MAX_INDEX {
            let (a, b) = (mats[i].as_ref().unwrap(), mats[i + 1].as_ref().unwrap());
            if a.rows > 0 && a.cols > 0 && b.rows > 0 && !b.mul(a).is_zero() {
                return Err(Error::Verification(format!("{}: d{} o d{} != 0 in degree {g}", alg.id(), i + 1, i)));
            }
        }
        for i in 0..MAX_INDEX {
            let layout = Layout::new(alg, i, g);
            if i <= 6 {
                self.cochain_dims.insert((i, g), layout.dim());
            }
            if layout.dim() == 0 {
                continue;
            }
            let next = mats[i + 1].as_ref().unwrap();
            let cycles = if next.rows == 0 { identity_vectors(layout.dim()) } else { next.kernel() };
            let boundaries: Vec<Vec<Q>> = if i == 0 {
                Vec::new()
            } else {
                let m = mats[i].as_ref().unwrap();
                (0..m.cols).map(|j| m.col(j)).collect()
            };
            let mut pref_names = Vec::new();
            let mut preferred = Vec::new();
            for c in self.named.iter().filter(|c| c.index == i && c.degree == g) {
                let v = layout
                    .coords(&c.cochain)
                    .ok_or_else(|| Error::Internal(format!("{} does not fit C^{i}({g})", c.name)))?;
                if !next.apply(&v).iter().all(Zero::is_zero) {
                    return Err(Error::Verification(format!("{}: {} is not a cocycle", alg.id(), c.name)));
                }
                pref_names.push(c.name.clone());
                preferred.push(v);
            }
            let quotient = Subquotient::new(layout.dim(), &cycles, &boundaries, &preferred);
            if quotient.dim() == 0 {
                continue;
            }
            let mut names = Vec::new();
            let mut k = 0;
            for (name, v) in pref_names.iter().zip(&preferred) {
                if k < quotient.reps.len() && quotient.reps[k] == *v {
                    names.push(name.clone());
                    k += 1;
                }
            }
            for extra in k..quotient.dim() {
                names.push(format!("HH{i}[{g}]#{}", extra - k + 1));
            }
            let cyc = cycles.len();
            let bnd = if i == 0 { 0 } else { self.ranks[&(i, g)] };
            self.pieces.insert((i, g), DegreePiece { layout, cycles: cyc, boundaries: bnd, quotient, names });
        }
        Ok(())
    }

    /// Degreewise dimensions of HH^i.
    pub fn dims(&self, i: usize) -> BTreeMap<i64, usize> {
        self.pieces.iter().filter(|((j, _), p)| *j == i && p.dim() > 0).map(|((_, g), p)| (*g, p.dim())).collect()
    }

    pub fn class(&self, name: &str) -> Option<&NamedClass> {
        self.named.iter().find(|c| c.name == name)
    }

    pub fn names(&self, i: usize) -> Vec<String> {
        self.pieces.iter().filter(|((j, _), _)| *j == i).flat_map(|(_, p)| p.names.clone()).collect()
    }

    /// Class of a cocycle in the named basis; fails on non-cocycles.
    pub fn express(&self, x: &Cochain) -> Result<Combination> {
        let mut pairs = Vec::new();
        for (g, part) in x.homogeneous_parts(self.alg) {
            let Some(piece) = self.pieces.get(&(x.index, g)) else {
                let layout = Layout::new(self.alg, x.index, g);
                let next = differential(self.alg, x.index + 1, &part);
                if layout.coords(&part).is_none() || !next.is_zero() {
                    return Err(Error::Verification(format!("not a cocycle in C^{}({g})", x.index)));
                }
                continue;
            };
            let v = piece
                .layout
                .coords(&part)
                .ok_or_else(|| Error::Verification(format!("cochain outside C^{}({g})", x.index)))?;
            let c = piece
                .quotient
                .project(&v)
                .ok_or_else(|| Error::Verification(format!("not a cocycle in C^{}({g})", x.index)))?;
            pairs.extend(piece.names.iter().cloned().zip(c));
        }
        Ok(Combination::from_pairs(pairs))
    }

    /// Euler characteristic per degree: cochains versus cohomology, with the
    /// last term C^6/im d6 of the truncated complex.
    pub fn euler_check(&self) -> Result<()> {
        let degrees: std::collections::BTreeSet<i64> = self.cochain_dims.keys().map(|(_, g)| *g).collect();
        for g in degrees {
            let mut lhs = 0i64;
            let mut rhs = 0i64;
            for i in 0..=6usize {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let dc = *self.cochain_dims.get(&(i, g)).unwrap_or(&0) as i64;
                lhs += sign * dc;
                let dh = if i < 6 {
                    self.pieces.get(&(i, g)).map_or(0, |p| p.dim()) as i64
                } else {
                    dc - *self.ranks.get(&(6, g)).unwrap_or(&0) as i64
                };
                rhs += sign * dh;
            }
            if lhs != rhs {
                return Err(Error::Verification(format!("Euler characteristic mismatch in degree {g}: {lhs} vs {rhs}")));
            }
        }
        Ok(())
    }

    /// Compares every HH^i with the predicted dimensions and degree ranges.
    pub fn check_dimensions(&self) -> Result<()> {
        for i in 0..MAX_INDEX {
            let got = self.dims(i);
            let want = predicted_dims(self.alg, i);
            if got != want {
                return Err(Error::Verification(format!(
                    "{}: HH^{i} dimensions {:?}, expected {:?}",
                    self.alg.id(),
                    got,
                    want
                )));
            }
            let (lo, hi) = self.alg.roots.degree_range(i);
            if let Some(g) = got.keys().find(|&&g| g < lo || g > hi) {
                return Err(Error::Verification(format!("HH^{i} has degree {g} outside [{lo}, {hi}]")));
            }
        }
        Ok(())
    }

    /// Relations among the classes [omega_v] in the bottom degree of HH^3
    /// (named h_v, all vertices) or HH^6 (named phi0(w_v), v fixed by nu):
    /// the image of d3 or d6 in reduced echelon form.
    pub fn top_relations(&self, index: usize) -> Vec<Combination> {
        let alg = self.alg;
        let (g, verts, name): (i64, Vec<usize>, fn(usize) -> String) = match index {
            3 => (-2, (0..alg.quiver.num_vertices()).collect(), |v| format!("h{}", v + 1)),
            6 => (-(alg.h() as i64) - 2, alg.roots.fixed.clone(), |v| format!("phi0(w{})", v + 1)),
            _ => panic!("relations only in HH^3 and HH^6"),
        };
        let src = Layout::new(alg, index - 1, g);
        let rows: Vec<Vec<Q>> = (0..src.dim())
            .map(|k| {
                let y = differential(alg, index, &src.basis_cochain(alg, k));
                verts.iter().map(|&v| y.values[0].coeff(alg.top_mono(v)) / alg.omega(v).coeff(alg.top_mono(v))).collect()
            })
            .collect();
        if rows.is_empty() {
            return Vec::new();
        }
        let mut m = Matrix::from_rows(rows);
        let rank = m.rref().len();
        let names: Vec<String> = verts.iter().map(|&v| name(v)).collect();
        m.data[..rank].iter().map(|r| Combination::from_coords(&names, r)).collect()
    }

    pub fn hh6_relations(&self) -> Vec<Combination> {
        self.top_relations(6)
    }
}

fn identity_vectors(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|k| {
            let mut v = vec![Q::zero(); n];
            v[k] = q(1);
            v
        })
        .collect()
}

/// Builds every named class from its defining formula or reference expression.
pub fn named_classes(alg: &Algebra, center: &CenterBasis) -> Result<Vec<NamedClass>> {
    let id = alg.id();
    let h = alg.h() as i64;
    let mut out = Vec::new();
    let mut push = |name: String, x: Cochain| -> Result<()> {
        let degree = x.degree(alg).ok_or_else(|| Error::Verification(format!("{name} is not homogeneous")))?;
        out.push(NamedClass { name, index: x.index, degree, cochain: x });
        Ok(())
    };
    for z in &center.elements {
        push(z.name.clone(), Cochain::single(0, z.elem.clone()))?;
    }
    let below_top: Vec<_> = center.elements.iter().filter(|z| z.degree < alg.top()).collect();
    for z in &below_top {
        push(format!("theta{}", z.degree), theta(alg, &z.elem))?;
    }
    for i in catalog::f_labels(id) {
        let v = i - 1;
        push(format!("f{i}"), Cochain::single(2, alg.vertex(v).sub(&alg.vertex(alg.nu(v)))))?;
        push(format!("h{i}"), Cochain::single(3, alg.omega(v)))?;
    }
    for (k, text) in catalog::zetas(id) {
        push(format!("zeta{k}"), Cochain { index: 4, values: parse_tensor(alg, &text)? })?;
    }
    for (k, text) in catalog::psis(id) {
        push(format!("psi{k}"), Cochain::single(5, parse_element(alg, &text)?))?;
    }
    for (i, terms) in catalog::epsilons(id) {
        let mut e = Elem::zero();
        for (v, c) in terms {
            e.add_scaled(&alg.vertex(v - 1), &q(c));
        }
        push(format!("eps{i}"), Cochain::single(5, e))?;
    }
    for z in &below_top {
        push(format!("phi0({})", z.name), Cochain::single(6, z.elem.clone()))?;
    }
    for (i, _) in catalog::epsilons(id) {
        push(format!("phi0(w{i})"), Cochain::single(6, alg.omega(i - 1)))?;
    }
    debug_assert!(out.iter().all(|c| c.degree >= -2 * h - 2));
    Ok(out)
}

/// theta_z: zero on arrows of Q, a^* z on a^*.
pub fn theta(alg: &Algebra, z: &Elem) -> Cochain {
    let mut x = Cochain::zero(alg, 1);
    for (c, a) in alg.quiver.arrows.iter().enumerate() {
        if a.starred {
            x.values[c] = alg.mul(&alg.arrow(c), z);
        }
    }
    x
}

/// Left multiplication of every value by a central element.
pub fn times_central(alg: &Algebra, z: &Elem, x: &Cochain) -> Cochain {
    Cochain { index: x.index, values: x.values.iter().map(|v| alg.mul(z, v)).collect() }
}

/// Trace of eta on e_k A e_l (k, l fixed by nu), restricted to a star count
/// when `stars` is given.
pub fn eta_trace(alg: &Algebra, k: usize, l: usize, stars: Option<usize>) -> Q {
    let mut t = Q::zero();
    for d in 0..=alg.top() {
        for &m in alg.basis.block(d, k, l) {
            if stars.is_none_or(|s| alg.star_count(m) == s) {
                t += alg.eta_basis(m).coeff(m);
            }
        }
    }
    t
}

/// The signed truncated dimension matrix over F x F.
pub fn eta_signed_matrix(alg: &Algebra) -> Matrix {
    let f = &alg.roots.fixed;
    Matrix::from_rows(f.iter().map(|&k| f.iter().map(|&l| eta_trace(alg, k, l, None)).collect()).collect())
}
