//! Cup products on the named basis: chain-level formulas where they exist,
//! associativity and degree arguments elsewhere.

use crate::algebra::{Algebra, Elem};
use crate::catalog;
use crate::error::{Error, Result};
use crate::hochschild::{self, Cochain, Hochschild};
use crate::linalg::{Echelon, Matrix};
use crate::rational::{q, Q};
use crate::table::{Combination, ProductEntry, ProductTable, Provenance};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Product of a central element with a named class, by multiplying the
/// representative's values and projecting back.
pub fn cup_hh0(hs: &Hochschild, z: &str, x: &str) -> Result<Combination> {
    let ze = &hs.center.get(z).ok_or_else(|| Error::Internal(format!("no central element {z}")))?.elem;
    let xc = hs.class(x).ok_or_else(|| Error::Internal(format!("no class {x}")))?;
    hs.express(&hochschild::times_central(hs.alg, ze, &xc.cochain))
        .map_err(|e| Error::Verification(format!("{z} * {x}: {e}")))
}

/// Sum over monomials x in A e_i of s(x) x x^*, s = number of starred arrows.
fn weighted_casimir(alg: &Algebra, i: usize) -> Elem {
    let mut out = Elem::zero();
    for m in 0..alg.dim() {
        let s = alg.star_count(m);
        if s > 0 && alg.mono(m).dst == i {
            out.add_scaled(&alg.mul(&Elem::basis(m), alg.dual(m)), &q(s as i64));
        }
    }
    out
}

fn class<'a>(hs: &'a Hochschild, name: &str) -> Result<&'a hochschild::NamedClass> {
    hs.class(name).ok_or_else(|| Error::Internal(format!("no class {name}")))
}

fn central<'a>(hs: &'a Hochschild, name: &str) -> Result<&'a Elem> {
    Ok(&hs.center.get(name).ok_or_else(|| Error::Internal(format!("no central element {name}")))?.elem)
}

/// theta_k f_i as a class in HH^3, from the lift of f_i through Omega^2.
pub fn theta_times_f(hs: &Hochschild, k: usize, i: usize) -> Result<Combination> {
    let alg = hs.alg;
    let v = i - 1;
    let w = weighted_casimir(alg, v).sub(&weighted_casimir(alg, alg.nu(v)));
    let value = alg.mul(central(hs, &format!("z{k}"))?, &w);
    hs.express(&Cochain::single(3, value))
}

/// M_alpha: row i holds theta_0 f_i in the basis (h_j).
pub fn m_alpha(hs: &Hochschild) -> Result<Matrix> {
    let labels = catalog::f_labels(hs.alg.id());
    let mut rows = Vec::new();
    for &i in &labels {
        let c = theta_times_f(hs, 0, i)?;
        rows.push(labels.iter().map(|j| c.coeff(&format!("h{j}"))).collect());
    }
    Ok(Matrix::from_rows(rows))
}

/// theta_0 . x = sum over a in Q of a^* x_{a^*}, for x in C^4.
pub fn theta0_dot(alg: &Algebra, x: &Cochain) -> Cochain {
    let mut s = Elem::zero();
    for a in alg.quiver.arrows.iter().filter(|a| !a.starred) {
        s = s.add(&alg.left_arrow(a.star, &x.values[a.star]));
    }
    Cochain::single(5, s)
}

/// theta_k zeta_l = z_k (theta_0 zeta_l).
pub fn theta_times_zeta(hs: &Hochschild, k: usize, l: usize) -> Result<Combination> {
    let y = theta0_dot(hs.alg, &class(hs, &format!("zeta{l}"))?.cochain);
    hs.express(&hochschild::times_central(hs.alg, central(hs, &format!("z{k}"))?, &y))
}

/// zeta_k(theta_k) = f(sum over a in Q of a^* z_k zeta_{k,a^*}).
pub fn zeta_on_theta(hs: &Hochschild, k: usize) -> Result<Q> {
    let y = theta0_dot(hs.alg, &class(hs, &format!("zeta{k}"))?.cochain);
    Ok(hs.alg.f(&hs.alg.mul(central(hs, &format!("z{k}"))?, &y.values[0])))
}

/// theta_0 psi for psi with values sum lambda_i e_i (i fixed by nu):
/// sum over i, x_j in A e_i of lambda_i s(x_j) eta(x_j) x_j^*.
pub fn theta0_times_bottom(alg: &Algebra, psi: &Elem) -> Cochain {
    let lambdas: Vec<Q> = (0..alg.quiver.num_vertices()).map(|v| alg.pair(&alg.vertex(v), &alg.mul(psi, &alg.omega(v)))).collect();
    let mut out = Elem::zero();
    for m in 0..alg.dim() {
        let lambda = lambdas[alg.mono(m).dst].clone();
        let s = alg.star_count(m);
        if s == 0 || lambda.is_zero() {
            continue;
        }
        let t = alg.mul(&alg.eta_basis(m), alg.dual(m));
        out.add_scaled(&t, &(lambda * q(s as i64)));
    }
    Cochain::single(6, out)
}

/// The theta_0 eps_j classes, in the basis phi0(w_i).
pub fn theta_times_eps(hs: &Hochschild, j: usize) -> Result<Combination> {
    let e = &class(hs, &format!("eps{j}"))?.cochain.values[0];
    hs.express(&theta0_times_bottom(hs.alg, e))
}

fn eps_labels(alg: &Algebra) -> Vec<usize> {
    catalog::epsilons(alg.id()).into_iter().map(|(i, _)| i).collect()
}

/// M_beta with theta_0 eps_j = sum_i (M_beta)_{ij} phi0(w_i).
pub fn m_beta(hs: &Hochschild) -> Result<Matrix> {
    let labels = eps_labels(hs.alg);
    let mut cols = Vec::new();
    for &j in &labels {
        let c = theta_times_eps(hs, j)?;
        if c.0.iter().any(|(n, _)| !labels.iter().any(|i| *n == format!("phi0(w{i})"))) {
            return Err(Error::Verification(format!("theta0 eps{j} = {c} leaves the phi0(w) span")));
        }
        cols.push(labels.iter().map(|i| c.coeff(&format!("phi0(w{i})"))).collect());
    }
    Ok(Matrix::from_cols(labels.len(), &cols))
}

/// Signed adjacency matrix on the epsilon labels: +1 where the arrow i -> j
/// is starred, -1 where it lies in Q.
pub fn signed_adjacency(alg: &Algebra) -> Matrix {
    let labels = eps_labels(alg);
    let mut m = Matrix::zeros(labels.len(), labels.len());
    for (r, &i) in labels.iter().enumerate() {
        for (c, &j) in labels.iter().enumerate() {
            for a in alg.quiver.arrows.iter().filter(|a| a.src == i - 1 && a.dst == j - 1) {
                m.data[r][c] = q(if a.starred { 1 } else { -1 });
            }
        }
    }
    m
}

/// (h/2) times the inverse of the signed adjacency matrix.
pub fn m_beta_closed_form(alg: &Algebra) -> Result<Matrix> {
    let inv = signed_adjacency(alg)
        .inverse()
        .ok_or_else(|| Error::Verification("signed adjacency matrix is singular".into()))?;
    Ok(inv.scale(&q(alg.h() as i64 / 2)))
}

/// An eta-eigenvector x +- eta(x) of a block e_k A e_l.
#[derive(Clone, Debug)]
pub struct EtaVector {
    pub elem: Elem,
    pub eigenvalue: i64,
    pub stars: usize,
}

/// Eigenbasis of eta on e_k A e_l (k, l fixed by nu) from symmetrized
/// monomials; fails if a vector mixes star counts.
pub fn eta_eigenbasis(alg: &Algebra, k: usize, l: usize) -> Result<Vec<EtaVector>> {
    let mut out = Vec::new();
    for d in 0..=alg.top() {
        let block = alg.basis.block(d, k, l);
        if block.is_empty() {
            continue;
        }
        for sign in [1i64, -1] {
            let mut ech = Echelon::new(block.len());
            for &m in block {
                let v = Elem::basis(m).add(&alg.eta_basis(m).scale(&q(sign)));
                if v.is_zero() || !ech.insert(&v.dense(block)) {
                    continue;
                }
                let stars: Vec<usize> = v.terms().map(|(i, _)| alg.star_count(i)).collect();
                if stars.iter().any(|&s| s != stars[0]) {
                    return Err(Error::Verification(format!(
                        "eta eigenvector in e{}Ae{} mixes star counts",
                        k + 1,
                        l + 1
                    )));
                }
                out.push(EtaVector { elem: v, eigenvalue: sign, stars: stars[0] });
            }
        }
        let n = out.iter().filter(|e| alg.degree(&e.elem) == Some(d)).count();
        if n != block.len() {
            return Err(Error::Internal(format!("eta eigenbasis of e{}Ae{} incomplete in degree {d}", k + 1, l + 1)));
        }
    }
    Ok(out)
}

/// kappa_{k,l} = sum over the eigenbasis of eigenvalue * star count, on F x F.
pub fn kappa_matrix(alg: &Algebra) -> Result<Matrix> {
    let f = &alg.roots.fixed;
    let mut m = Matrix::zeros(f.len(), f.len());
    for (r, &k) in f.iter().enumerate() {
        for (c, &l) in f.iter().enumerate() {
            let s: i64 = eta_eigenbasis(alg, k, l)?.iter().map(|e| e.eigenvalue * e.stars as i64).sum();
            m.data[r][c] = q(s);
        }
    }
    Ok(m)
}

/// H^eta from the eigenbasis: eigenvalue counts on each e_k A e_l.
pub fn eta_matrix_from_eigenbasis(alg: &Algebra) -> Result<Matrix> {
    let f = &alg.roots.fixed;
    let mut m = Matrix::zeros(f.len(), f.len());
    for (r, &k) in f.iter().enumerate() {
        for (c, &l) in f.iter().enumerate() {
            m.data[r][c] = q(eta_eigenbasis(alg, k, l)?.iter().map(|e| e.eigenvalue).sum());
        }
    }
    Ok(m)
}

/// Unique path k -> l in the underlying tree, as (length, arrows of Q used).
fn tree_path(alg: &Algebra, k: usize, l: usize) -> (usize, usize) {
    let r = alg.quiver.num_vertices();
    let mut prev: Vec<Option<usize>> = vec![None; r];
    let mut seen = vec![false; r];
    let mut queue = std::collections::VecDeque::from([k]);
    seen[k] = true;
    while let Some(v) = queue.pop_front() {
        for c in alg.quiver.arrows_from(v) {
            let w = alg.quiver.arrows[c].dst;
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some(c);
                queue.push_back(w);
            }
        }
    }
    let (mut len, mut in_q, mut v) = (0, 0, l);
    while let Some(c) = prev[v] {
        len += 1;
        in_q += usize::from(!alg.quiver.arrows[c].starred);
        v = alg.quiver.arrows[c].src;
    }
    (len, in_q)
}

/// Gaussian-integer value of sum c_j t^(j - d) and of t d/dt of it at t = i.
fn eval_at_i(coeffs: &[i64], d: usize) -> ((i64, i64), (i64, i64)) {
    let powers = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let (mut val, mut der) = ((0, 0), (0, 0));
    for (j, &c) in coeffs.iter().enumerate().skip(d) {
        let e = (j - d) as i64;
        let (re, im) = powers[(j - d) % 4];
        val = (val.0 + c * re, val.1 + c * im);
        der = (der.0 + c * e * re, der.1 + c * e * im);
    }
    (val, der)
}

/// H^eta and kappa from the Hilbert series at t = sqrt(-1), valid when eta
/// acts by a sign on each monomial. None if a value is not real.
pub fn analytic_eta_kappa(alg: &Algebra) -> Option<(Matrix, Matrix)> {
    let hm = alg.hilbert_matrix();
    let f = &alg.roots.fixed;
    let mut heta = Matrix::zeros(f.len(), f.len());
    let mut kappa = Matrix::zeros(f.len(), f.len());
    for (r, &k) in f.iter().enumerate() {
        for (c, &l) in f.iter().enumerate() {
            let (d, n) = tree_path(alg, k, l);
            let (val, der) = eval_at_i(&hm.entry(k, l).0, d);
            if val.1 != 0 || der.1 != 0 {
                return None;
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            heta.data[r][c] = q(sign * val.0);
            kappa.data[r][c] = q(sign) * (q((d - n) as i64 * val.0) + Q::new(der.0.into(), 2.into()));
        }
    }
    Some((heta, kappa))
}

/// f_i h_j = [(e_i - e_nu(i)) omega_j] in HH^5.
pub fn f_times_h(hs: &Hochschild, i: usize, j: usize) -> Result<Combination> {
    let f = &class(hs, &format!("f{i}"))?.cochain.values[0];
    let h = &class(hs, &format!("h{j}"))?.cochain.values[0];
    hs.express(&Cochain::single(5, hs.alg.mul(f, h)))
}

/// Pairing of an HH^5 class with an HH^6 class: f(psi * phi).
pub fn pair_5_6(hs: &Hochschild, psi: &str, phi: &str) -> Result<Q> {
    let a = &class(hs, psi)?.cochain.values[0];
    let b = &class(hs, phi)?.cochain.values[0];
    Ok(hs.alg.pair(a, b))
}

/// Pairing of HH^3 against HH^2: h_i(f_j) = f(f_j * h_i).
pub fn pair_3_2(hs: &Hochschild, h: &str, f: &str) -> Result<Q> {
    let a = &class(hs, f)?.cochain.values[0];
    let b = &class(hs, h)?.cochain.values[0];
    Ok(hs.alg.pair(a, b))
}

/// Why a block HH^i x HH^j is (or is not) zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ZeroByDegree,
    #[serde(rename = "zero-by-paper-argument")]
    ZeroByArgument,
    NonzeroWithFormula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroVerdict {
    pub i: usize,
    pub j: usize,
    pub verdict: Verdict,
    pub reason: String,
    /// True when no degree of HH^i + HH^j is a degree of HH^{i+j}.
    pub degree_forced: bool,
}

/// Degreewise dimensions of HH^n, computed up to the largest built index
/// and by periodicity beyond.
fn dims_any(hs: &Hochschild, n: usize) -> BTreeMap<i64, usize> {
    if n < hochschild::MAX_INDEX {
        hs.dims(n)
    } else {
        hochschild::predicted_dims(hs.alg, n)
    }
}

fn degree_forced(hs: &Hochschild, i: usize, j: usize) -> bool {
    let (a, b, t) = (dims_any(hs, i), dims_any(hs, j), dims_any(hs, i + j));
    a.keys().all(|g1| b.keys().all(|g2| !t.contains_key(&(g1 + g2))))
}

/// Classification of every block 1 <= i <= j <= 5.
pub fn zero_verdicts(hs: &Hochschild) -> Result<Vec<ZeroVerdict>> {
    let mut out = Vec::new();
    for i in 1..=5 {
        for j in i..=5 {
            let forced = degree_forced(hs, i, j);
            let (verdict, reason) = match (i, j) {
                (1, 5) => (Verdict::NonzeroWithFormula, "theta0 on Y*: skew pairing beta".to_string()),
                (5, 5) => (Verdict::NonzeroWithFormula, "eps_i eps_j = -(M_beta)_ij phi4(zeta0)".to_string()),
                (1, 2) => (Verdict::NonzeroWithFormula, "theta0 f_i: symmetric pairing alpha".to_string()),
                (1, 4) => (Verdict::NonzeroWithFormula, "theta_k zeta_l = z_k psi_l".to_string()),
                (2, 2) => (Verdict::NonzeroWithFormula, "f_i f_j = (M_alpha)_ij zeta0".to_string()),
                (2, 3) => (Verdict::NonzeroWithFormula, "f_i h_j = delta_ij psi0".to_string()),
                (2, 4) => (Verdict::ZeroByArgument, "Batalin-Vilkovisky structure".to_string()),
                (2, 5) => (Verdict::ZeroByArgument, "factors through HH^2 x HH^4 = 0".to_string()),
                (4, 5) => (Verdict::ZeroByArgument, "associativity with theta and HH^4 x HH^4".to_string()),
                _ => (Verdict::ZeroByDegree, format!("degrees of HH^{i} + HH^{j} miss HH^{}", i + j)),
            };
            if verdict == Verdict::ZeroByDegree && !forced {
                return Err(Error::Verification(format!("{}: HH^{i} x HH^{j} is not forced to vanish by degree", hs.alg.id())));
            }
            out.push(ZeroVerdict { i, j, verdict, reason, degree_forced: forced });
        }
    }
    Ok(out)
}

/// True when the internal degree g carries no HH^n.
fn empty_in_degree(hs: &Hochschild, n: usize, g: i64) -> bool {
    !dims_any(hs, n).contains_key(&g)
}

struct Named {
    name: String,
    index: usize,
    degree: i64,
}

fn named_of(hs: &Hochschild, index: usize) -> Vec<Named> {
    hs.named
        .iter()
        .filter(|c| c.index == index)
        .map(|c| Named { name: c.name.clone(), index, degree: c.degree })
        .collect()
}

/// The number in a name such as "theta8" or "eps3".
fn suffix(name: &str) -> usize {
    name.trim_start_matches(|c: char| !c.is_ascii_digit()).parse().expect("numbered class")
}

/// Every product HH^0 x HH^j (j <= 6) and HH^i x HH^j (1 <= i <= j <= 5).
pub fn full_product_table(hs: &Hochschild) -> Result<ProductTable> {
    let alg = hs.alg;
    let mut table = ProductTable::default();
    let ma = if catalog::f_labels(alg.id()).is_empty() { None } else { Some(m_alpha(hs)?) };
    let mb = m_beta(hs)?;
    let f_labels = catalog::f_labels(alg.id());
    let e_labels = eps_labels(alg);

    for z in &hs.center.elements {
        for j in 0..=6 {
            for x in named_of(hs, j) {
                let result = cup_hh0(hs, &z.name, &x.name)?;
                let provenance = if result.is_zero() && empty_in_degree(hs, j, z.degree as i64 + x.degree) {
                    Provenance::DegreeZero
                } else {
                    Provenance::ChainFormula
                };
                table.push(ProductEntry { i: 0, j, left: z.name.clone(), right: x.name, result, provenance });
            }
        }
    }

    for i in 1..=5 {
        for j in i..=5 {
            for a in named_of(hs, i) {
                let rights = named_of(hs, j);
                for b in rights {
                    if i == j && j != 2 && j != 5 && a.name > b.name {
                        continue;
                    }
                    let (result, provenance) = product(hs, &a, &b, ma.as_ref(), &mb, &f_labels, &e_labels)?;
                    table.push(ProductEntry { i, j, left: a.name.clone(), right: b.name, result, provenance });
                }
            }
        }
    }
    Ok(table)
}

fn product(
    hs: &Hochschild,
    a: &Named,
    b: &Named,
    ma: Option<&Matrix>,
    mb: &Matrix,
    f_labels: &[usize],
    e_labels: &[usize],
) -> Result<(Combination, Provenance)> {
    let g = a.degree + b.degree;
    let n = a.index + b.index;
    let zero_by_degree = empty_in_degree(hs, n, g);
    let chain = |c: Result<Combination>| -> Result<(Combination, Provenance)> {
        let c = c?;
        if !c.is_zero() && zero_by_degree {
            return Err(Error::Verification(format!("{} {} is nonzero in an empty degree", a.name, b.name)));
        }
        Ok((c, Provenance::ChainFormula))
    };
    let pos = |labels: &[usize], name: &str| labels.iter().position(|&l| l == suffix(name)).expect("label");
    match (a.index, b.index) {
        (1, 2) => chain(theta_times_f(hs, suffix(&a.name), suffix(&b.name))),
        (1, 4) => chain(theta_times_zeta(hs, suffix(&a.name), suffix(&b.name))),
        (1, 5) if a.name == "theta0" && b.name.starts_with("eps") => chain(theta_times_eps(hs, suffix(&b.name))),
        (2, 2) => {
            let m = ma.expect("HH^2 nonzero");
            let c = m.data[pos(f_labels, &a.name)][pos(f_labels, &b.name)].clone();
            Ok((Combination::single("zeta0", c), Provenance::Associativity))
        }
        (2, 3) => chain(f_times_h(hs, suffix(&a.name), suffix(&b.name))),
        (5, 5) if a.name.starts_with("eps") && b.name.starts_with("eps") => {
            let c = -mb.data[pos(e_labels, &a.name)][pos(e_labels, &b.name)].clone();
            Ok((Combination::single("phi4(zeta0)", c), Provenance::Associativity))
        }
        (2, 4) | (2, 5) | (4, 5) => Ok((Combination::zero(), Provenance::Asserted)),
        _ if zero_by_degree => Ok((Combination::zero(), Provenance::DegreeZero)),
        _ => Err(Error::Internal(format!("no rule for {} {}", a.name, b.name))),
    }
}

/// Entries (a, b) and (b, a) present in the table must agree up to (-1)^{ij}.
pub fn check_graded_commutativity(table: &ProductTable) -> Result<usize> {
    let mut checked = 0;
    for e in &table.entries {
        if let Some(r) = table.get(&e.right, &e.left) {
            let sign = if e.i * e.j % 2 == 1 { q(-1) } else { Q::one() };
            if e.result != r.result.scale(&sign) {
                return Err(Error::Verification(format!("{} {} vs {} {}", e.left, e.right, r.left, r.right)));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// theta0 (f_i f_j) = (theta0 f_i) f_j: both sides as multiples of psi0.
pub fn spot_check_theta_ff(hs: &Hochschild) -> Result<()> {
    let labels = catalog::f_labels(hs.alg.id());
    if labels.is_empty() {
        return Ok(());
    }
    let ma = m_alpha(hs)?;
    let t0z0 = hs.express(&theta0_dot(hs.alg, &class(hs, "zeta0")?.cochain))?;
    for (r, &i) in labels.iter().enumerate() {
        for (c, &j) in labels.iter().enumerate() {
            let lhs = t0z0.scale(&ma.data[r][c]);
            let mut rhs = Combination::zero();
            for (k, &l) in labels.iter().enumerate() {
                rhs = rhs.add(&f_times_h(hs, j, l)?.scale(&ma.data[r][k]));
            }
            if lhs != rhs {
                return Err(Error::Verification(format!("theta0(f{i} f{j}) = {lhs} but (theta0 f{i}) f{j} = {rhs}")));
            }
        }
    }
    Ok(())
}

/// z_k (theta0 zeta_l) = theta0 (z_k zeta_l) on chains.
pub fn spot_check_z_theta_zeta(hs: &Hochschild) -> Result<()> {
    let alg = hs.alg;
    for z in hs.center.elements.iter().filter(|z| z.degree < alg.top()) {
        for (l, _) in catalog::zetas(alg.id()) {
            let x = &class(hs, &format!("zeta{l}"))?.cochain;
            let lhs = hs.express(&hochschild::times_central(alg, &z.elem, &theta0_dot(alg, x)))?;
            let rhs = hs.express(&theta0_dot(alg, &hochschild::times_central(alg, &z.elem, x)))?;
            if lhs != rhs {
                return Err(Error::Verification(format!("{} (theta0 zeta{l}) = {lhs}, theta0 ({} zeta{l}) = {rhs}", z.name, z.name)));
            }
        }
    }
    Ok(())
}

/// (theta0 eps_i) eps_j against theta0 (eps_i eps_j) = -(M_beta)_ij psi0,
/// using phi0(w_k) eps_j = phi0(w_k eps_j). Returns Omega.
pub fn spot_check_theta_eps_eps(hs: &Hochschild) -> Result<Matrix> {
    let alg = hs.alg;
    let labels = eps_labels(alg);
    let mb = m_beta(hs)?;
    let t0z0 = hs.express(&theta0_dot(alg, &class(hs, "zeta0")?.cochain))?.coeff("psi0");
    let mut omega = Matrix::zeros(labels.len(), labels.len());
    for (r, &i) in labels.iter().enumerate() {
        for (c, &j) in labels.iter().enumerate() {
            let e = &class(hs, &format!("eps{j}"))?.cochain.values[0];
            let mut lhs = Q::zero();
            for (k, &l) in labels.iter().enumerate() {
                let wk = alg.omega(l - 1);
                let pc = hs.express(&Cochain::single(5, alg.mul(&wk, e)))?.coeff("psi0");
                lhs += &mb.data[k][r] * pc;
            }
            let rhs = -mb.data[r][c].clone() * &t0z0;
            if lhs != rhs {
                return Err(Error::Verification(format!("(theta0 eps{i}) eps{j} = {lhs}, expected {rhs}")));
            }
            omega.data[r][c] = lhs;
        }
    }
    Ok(omega)
}
