//! The verification suite: every check the CLI `verify` command replays,
//! grouped by criterion number (1 to 11).

use crate::algebra::{Algebra, Elem};
use crate::catalog;
use crate::center;
use crate::error::Result;
use crate::hochschild::{self, Cochain, Hochschild};
use crate::linalg::Matrix;
use crate::parse::parse_element;
use crate::poly::{Poly, PolyMatrix};
use crate::products as pr;
use crate::quiver::Family;
use crate::rational::{q, Q};
use crate::serial;
use crate::table::{Combination, ProductTable, Provenance};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub criterion: u8,
    pub quiver: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub quiver: String,
    /// True when run with a degree cap; criteria 5 to 10 are then skipped.
    pub partial: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Suite {
    quiver: String,
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, criterion: u8, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { criterion, quiver: self.quiver.clone(), name: name.into(), pass, detail: detail.into() });
    }

    /// Runs a check that may error; an error counts as a failure.
    fn run(&mut self, criterion: u8, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((pass, detail)) => self.push(criterion, name, pass, detail),
            Err(e) => self.push(criterion, name, false, format!("error: {e}")),
        }
    }

    /// Compares two values, recording both on mismatch.
    fn eq<T: PartialEq + std::fmt::Display>(&mut self, criterion: u8, name: &str, got: &T, want: &T) {
        let pass = got == want;
        let detail = if pass { format!("{got}") } else { format!("got {got}, expected {want}") };
        self.push(criterion, name, pass, detail);
    }
}

/// Runs every check that applies to `alg`. With `max_degree`, the
/// cohomology is only built for internal degrees |g| <= max_degree and the
/// checks that need the full groups are skipped.
pub fn verify(alg: &Algebra, max_degree: Option<i64>) -> Report {
    let mut s = Suite { quiver: alg.id().to_string(), checks: Vec::new() };
    hilbert_checks(&mut s, alg, max_degree);
    center_checks(&mut s, alg, max_degree);
    let hs = match Hochschild::build_window(alg, max_degree) {
        Ok(hs) => hs,
        Err(e) => {
            s.push(3, "complex builds (d o d = 0, named classes are cocycles)", false, e.to_string());
            property_checks(&mut s, alg, None);
            return Report { quiver: s.quiver, partial: max_degree.is_some(), checks: s.checks };
        }
    };
    s.push(3, "complex builds (d o d = 0, named classes are cocycles)", true, format!("{} nonzero pieces", hs.pieces.len()));
    dimension_checks(&mut s, &hs, max_degree);
    hh23_checks(&mut s, &hs);
    let mut table = None;
    if max_degree.is_none() {
        eta_checks(&mut s, alg);
        alpha_checks(&mut s, &hs);
        beta_checks(&mut s, &hs);
        relation_checks(&mut s, &hs);
        table = match pr::full_product_table(&hs) {
            Ok(t) => Some(t),
            Err(e) => {
                s.push(9, "full product table", false, e.to_string());
                None
            }
        };
        if let Some(t) = &table {
            pairing_checks(&mut s, &hs, t);
            verdict_checks(&mut s, &hs, t);
        }
    }
    property_checks(&mut s, alg, Some((&hs, table.as_ref())));
    Report { quiver: s.quiver, partial: max_degree.is_some(), checks: s.checks }
}

fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

pub fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m.data.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join(" / "))
}

struct M<'a>(&'a Matrix);

impl std::fmt::Display for M<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&fmt_matrix(self.0))
    }
}

impl PartialEq for M<'_> {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

/// Same row space.
fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let rank = |vs: &[Vec<Q>]| if vs.is_empty() { 0 } else { Matrix::from_rows(vs.to_vec()).rank() };
    let both: Vec<Vec<Q>> = a.iter().chain(b).cloned().collect();
    rank(a) == rank(b) && rank(a) == rank(&both)
}

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

// ---------------------------------------------------------------- criterion 1

/// Reference Hilbert columns, as printed, for e6, e7 and e8.
pub fn golden_columns() -> BTreeMap<String, Vec<Vec<String>>> {
    serde_json::from_str(include_str!("../data/hilbert_columns.json")).expect("bundled golden columns")
}

/// Entries (row, column, printed, computed) where the printed columns
/// disagree with `hm`, 1-based.
pub fn golden_mismatches(hm: &PolyMatrix, cols: &[Vec<String>]) -> Vec<(usize, usize, String, String)> {
    let mut out = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        for (i, text) in col.iter().enumerate() {
            let ok = Poly::parse(text).is_some_and(|p| &p == hm.entry(i, j));
            if !ok {
                out.push((i + 1, j + 1, text.clone(), hm.entry(i, j).to_string()));
            }
        }
    }
    out
}

fn truncate(m: &PolyMatrix, d: usize) -> PolyMatrix {
    PolyMatrix(m.0.iter().map(|r| r.iter().map(|p| Poly::new(p.0.iter().take(d + 1).copied().collect())).collect()).collect())
}

fn hilbert_checks(s: &mut Suite, alg: &Algebra, max_degree: Option<i64>) {
    let hm = alg.hilbert_matrix();
    let cf = alg.closed_form_hilbert();
    let (a, b) = match max_degree {
        Some(d) => (truncate(&hm, d.max(0) as usize), truncate(&cf, d.max(0) as usize)),
        None => (hm.clone(), cf),
    };
    let bad = (0..a.size()).flat_map(|i| (0..a.size()).map(move |j| (i, j))).find(|&(i, j)| a.entry(i, j) != b.entry(i, j));
    match bad {
        None => s.push(1, "H_A(t) equals (1 + P t^h)(1 - C t + t^2)^-1", true, format!("{}x{} entries", a.size(), a.size())),
        Some((i, j)) => s.push(
            1,
            "H_A(t) equals (1 + P t^h)(1 - C t + t^2)^-1",
            false,
            format!("entry ({}, {}): computed {}, closed form {}", i + 1, j + 1, a.entry(i, j), b.entry(i, j)),
        ),
    }
    if let Some(cols) = golden_columns().get(&alg.id().to_string()) {
        let bad = golden_mismatches(&hm, cols);
        let n = cols.iter().map(Vec::len).sum::<usize>();
        let detail = if bad.is_empty() {
            format!("{n} printed entries")
        } else {
            bad.iter()
                .map(|(i, j, p, c)| format!("col {j} row {i}: printed {p}, computed {c}"))
                .collect::<Vec<_>>()
                .join("; ")
        };
        s.push(1, "H_A(t) equals the printed columns entry for entry", bad.is_empty(), detail);
    }
}

// ---------------------------------------------------------------- criterion 2

fn center_checks(s: &mut Suite, alg: &Algebra, max_degree: Option<i64>) {
    let cap = max_degree.map_or(alg.top(), |d| (d.max(0) as usize).min(alg.top()));
    let mut got = BTreeMap::new();
    for d in 0..=cap {
        let n = center::central_kernel(alg, d).len();
        if n > 0 {
            got.insert(d, n);
        }
    }
    let want: BTreeMap<usize, usize> = center::predicted_series(alg).into_iter().filter(|(d, _)| *d <= cap).collect();
    s.push(2, "h_Z(t) matches the exponents and fixed vertices", got == want, format!("{got:?} vs {want:?}"));

    let basis = match center::center_basis(alg) {
        Ok(b) => b,
        Err(e) => return s.push(2, "center basis", false, e.to_string()),
    };
    match center::match_reference_generators(alg, &basis) {
        Ok((_, reports)) => {
            for r in reports.iter().filter(|r| r.degree < alg.top()) {
                let nonzero = r.scalar.as_ref().is_some_and(|c| !c.is_zero());
                s.push(2, format!("{} is a nonzero central element", r.name), r.central && nonzero, r.text.clone());
            }
            let tops: Vec<_> = reports.iter().filter(|r| r.degree == alg.top()).collect();
            for r in tops {
                let ok = r.central && r.scalar.as_ref().is_some_and(|c| c.is_one());
                s.push(2, format!("{} is the top element w of its vertex", r.name), ok, r.text.clone());
            }
        }
        Err(e) => s.push(2, "reference central elements", false, e.to_string()),
    }
    if max_degree.is_some() {
        return;
    }
    let named = match center::named_center(alg) {
        Ok(n) => n,
        Err(e) => return s.push(2, "named center", false, e.to_string()),
    };
    let prod = |x: &str, y: &str| -> Result<Combination> {
        let a = &named.get(x).expect("generator").elem;
        let b = &named.get(y).expect("generator").elem;
        named.express(alg, &alg.mul(a, b))
    };
    let mut expected: Vec<(String, String, Combination)> = Vec::new();
    let id = alg.id();
    let w = |v: usize| format!("w{v}");
    let one = Q::one();
    match (id.family, id.rank_param) {
        (Family::D, n) => {
            let top = alg.top();
            for j in 1..=top / 4 {
                for k in j..=top / 4 {
                    let d = 4 * (j + k);
                    let want = if d < top {
                        Combination::single(&format!("z{d}"), one.clone())
                    } else if d == top {
                        Combination::from_pairs(vec![(w(n), one.clone()), (w(n + 1), -one.clone())])
                    } else {
                        Combination::zero()
                    };
                    if 4 * j < top && 4 * k < top {
                        expected.push((format!("z{}", 4 * j), format!("z{}", 4 * k), want));
                    }
                }
            }
        }
        (Family::E, 6) => {
            for (x, y) in [("z6", "z6"), ("z6", "z8"), ("z8", "z8")] {
                expected.push((x.into(), y.into(), Combination::zero()));
            }
        }
        (Family::E, 7) => {
            let z8sq = Combination::from_pairs(vec![(w(1), one.clone()), (w(3), one.clone()), (w(7), -one.clone())]);
            expected.push(("z8".into(), "z8".into(), z8sq));
            expected.push(("z8".into(), "z12".into(), Combination::zero()));
            expected.push(("z12".into(), "z12".into(), Combination::zero()));
        }
        _ => {
            expected.push(("z12".into(), "z12".into(), Combination::single("z24", one.clone())));
            for (x, y) in [("z12", "z20"), ("z12", "z24"), ("z20", "z20"), ("z20", "z24"), ("z24", "z24")] {
                expected.push((x.into(), y.into(), Combination::zero()));
            }
        }
    }
    for (x, y, want) in expected {
        match prod(&x, &y) {
            Ok(got) => s.eq(2, &format!("{x} {y}"), &got, &want),
            Err(e) => s.push(2, format!("{x} {y}"), false, e.to_string()),
        }
    }
    if id.family == Family::E && id.rank_param == 8 {
        // x4 x3 z12^2 lands on the top of the branch vertex.
        s.run(2, "x4 x3 z12^2 = w at the branch vertex", || {
            let z = &named.get("z12").expect("z12").elem;
            let lhs = alg.mul_all(&[&parse_element(alg, "x4 x3")?, z, z]);
            let c = center::proportional(&lhs, &alg.omega(4));
            Ok((c.as_ref().is_some_and(One::is_one), format!("scalar {c:?} against w5 = omega(5)")))
        });
    }
}

// ---------------------------------------------------------------- criterion 3

fn dimension_checks(s: &mut Suite, hs: &Hochschild, max_degree: Option<i64>) {
    let alg = hs.alg;
    for i in 0..hochschild::MAX_INDEX {
        let got = hs.dims(i);
        let want: BTreeMap<i64, usize> =
            hochschild::predicted_dims(alg, i).into_iter().filter(|(g, _)| max_degree.is_none_or(|m| g.abs() <= m)).collect();
        s.push(3, format!("dim HH^{i} by degree"), got == want, format!("{got:?} vs {want:?}"));
        if i <= 6 {
            let (lo, hi) = alg.roots.degree_range(i);
            let outside: Vec<i64> = got.keys().copied().filter(|&g| g < lo || g > hi).collect();
            s.push(3, format!("HH^{i} lives in degrees [{lo}, {hi}]"), outside.is_empty(), format!("outside: {outside:?}"));
        }
    }
    s.run(3, "Euler characteristic per degree", || hs.euler_check().map(|_| (true, String::new())));
}

// ---------------------------------------------------------------- criterion 4

fn hh23_checks(s: &mut Suite, hs: &Hochschild) {
    let alg = hs.alg;
    let id = alg.id();
    let r = alg.quiver.num_vertices();
    let unit = |v: usize| -> Vec<i64> { (0..r).map(|k| i64::from(k + 1 == v)).collect() };
    let diff = |a: usize, b: usize| -> Vec<Q> { unit(a).iter().zip(unit(b)).map(|(x, y)| q(x - y)).collect() };
    let want_kernel: Vec<Vec<Q>> = match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 0 => vec![diff(n, n + 1)],
        (Family::E, 6) => vec![diff(1, 5), diff(2, 4)],
        _ => vec![],
    };
    let h1 = Matrix::from_i64(&alg.dimension_matrix());
    let kernel = h1.kernel();
    s.push(
        4,
        "ker H_A(1)",
        same_span(&kernel, &want_kernel),
        format!("dim {} (expected {})", kernel.len(), want_kernel.len()),
    );

    // d3 on the cochain e_j is sum_i H_A(1)_ij omega_i.
    let dm = alg.dimension_matrix();
    let bad: Vec<usize> = (0..r)
        .filter(|&j| {
            let got = hochschild::differential(alg, 3, &Cochain::single(2, alg.vertex(j)));
            let mut want = Elem::zero();
            for (i, row) in dm.iter().enumerate() {
                want.add_scaled(&alg.omega(i), &q(row[j]));
            }
            got.values[0] != want
        })
        .map(|j| j + 1)
        .collect();
    s.push(4, "d3(e_j) = sum_i H_A(1)_ij w_i", bad.is_empty(), format!("failing vertices {bad:?}"));

    let names: Vec<String> = (1..=r).map(|v| format!("h{v}")).collect();
    let to_vec = |c: &Combination| -> Vec<Q> { names.iter().map(|n| c.coeff(n)).collect() };
    let want_rel: Vec<Vec<Q>> = match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 0 => {
            let mut v: Vec<Vec<Q>> = (1..n).map(|i| qv(&unit(i))).collect();
            v.push(unit(n).iter().zip(unit(n + 1)).map(|(a, b)| q(a + b)).collect());
            v
        }
        (Family::E, 6) => {
            let sum = |a: usize, b: usize| unit(a).iter().zip(unit(b)).map(|(x, y)| q(x + y)).collect::<Vec<Q>>();
            vec![qv(&unit(3)), qv(&unit(6)), sum(1, 5), sum(2, 4)]
        }
        _ => (1..=r).map(|v| qv(&unit(v))).collect(),
    };
    let got_rel: Vec<Vec<Q>> = hs.top_relations(3).iter().map(to_vec).collect();
    let shown: Vec<String> = hs.top_relations(3).iter().map(ToString::to_string).collect();
    s.push(4, "relations among [w_v] in HH^3", same_span(&got_rel, &want_rel), shown.join(", "));

    let labels = catalog::f_labels(id);
    if !labels.is_empty() {
        s.run(4, "h_i(f_j) = delta_ij", || {
            let mut bad = Vec::new();
            for &i in &labels {
                for &j in &labels {
                    let v = pr::pair_3_2(hs, &format!("h{i}"), &format!("f{j}"))?;
                    if v != q(i64::from(i == j)) {
                        bad.push(format!("h{i}(f{j}) = {v}"));
                    }
                }
            }
            Ok((bad.is_empty(), bad.join(", ")))
        });
    }
}

// ---------------------------------------------------------------- criterion 5

/// Expected H^eta on F x F for the D series, entry by entry.
pub fn d_series_eta(n: usize) -> Matrix {
    let f: Vec<usize> = if n % 2 == 1 { (1..=n + 1).collect() } else { (1..n).collect() };
    let entry = |k: usize, l: usize| -> i64 {
        let tip = |v: usize| v >= n;
        match (tip(k), tip(l)) {
            (false, false) => 2 * i64::from(k % 2 == 1 && l % 2 == 1),
            (false, true) => i64::from(k % 2 == 1),
            (true, false) => i64::from(l % 2 == 1),
            (true, true) if k == l => (n as i64 + 1) / 2,
            (true, true) => -(n as i64 - 1) / 2,
        }
    };
    Matrix::from_rows(f.iter().map(|&k| f.iter().map(|&l| q(entry(k, l))).collect()).collect())
}

/// True when eta sends every monomial of e_k A e_l (k, l fixed) to a signed monomial.
pub fn eta_acts_by_signs(alg: &Algebra) -> bool {
    let f = &alg.roots.fixed;
    f.iter().all(|&k| {
        f.iter().all(|&l| {
            alg.basis.between(k, l).iter().all(|&m| {
                let e = alg.eta_basis(m);
                e.len() == 1 && e.coeff(m) != Q::zero()
            })
        })
    })
}

fn eta_checks(s: &mut Suite, alg: &Algebra) {
    let id = alg.id();
    let heta = hochschild::eta_signed_matrix(alg);
    let want = match (id.family, id.rank_param) {
        (Family::D, n) => Some(d_series_eta(n)),
        (Family::E, 7) => Some(mat(&[
            &[3, 0, 3, 0, 0, 0, -3],
            &[0; 7],
            &[3, 0, 3, 0, 0, 0, -3],
            &[0; 7],
            &[0; 7],
            &[0; 7],
            &[-3, 0, -3, 0, 0, 0, 3],
        ])),
        _ => Some(Matrix::zeros(alg.roots.fixed.len(), alg.roots.fixed.len())),
    };
    if let Some(w) = want {
        s.eq(5, "H^eta", &M(&heta), &M(&w));
    }
    s.run(5, "H^eta from the eta eigenbasis", || {
        let e = pr::eta_matrix_from_eigenbasis(alg)?;
        Ok((e == heta, fmt_matrix(&e)))
    });

    // The kernel is spanned by the eps vectors (all of R^F when H^eta = 0).
    let f = &alg.roots.fixed;
    let eps: Vec<Vec<Q>> = catalog::epsilons(id)
        .into_iter()
        .map(|(_, terms)| {
            let mut v = vec![Q::zero(); f.len()];
            for (vert, c) in terms {
                v[f.iter().position(|&x| x == vert - 1).expect("fixed vertex")] += q(c);
            }
            v
        })
        .collect();
    let ker = heta.kernel();
    s.push(5, "ker H^eta = span of the eps vectors", same_span(&ker, &eps), format!("dim {}", ker.len()));
    if heta.is_zero() {
        s.push(5, "Y* is all of R^F", ker.len() == f.len(), format!("{} of {}", ker.len(), f.len()));
    }

    // d6 on e_i is sum_k H^eta_ki omega_k.
    let bad: Vec<usize> = f
        .iter()
        .enumerate()
        .filter(|&(c, &i)| {
            let got = hochschild::differential(alg, 6, &Cochain::single(5, alg.vertex(i)));
            let mut want = Elem::zero();
            for (r, &k) in f.iter().enumerate() {
                want.add_scaled(&alg.omega(k), &heta.data[r][c]);
            }
            got.values[0] != want
        })
        .map(|(_, &i)| i + 1)
        .collect();
    s.push(5, "d6(e_i) = sum_k H^eta_ki w_k", bad.is_empty(), format!("failing vertices {bad:?}"));

    if id.family == Family::E {
        let premise = eta_acts_by_signs(alg);
        s.run(5, "analytic formula at t = i matches the eigenbasis", || {
            let kappa = pr::kappa_matrix(alg)?;
            let (h, k) = pr::analytic_eta_kappa(alg)
                .ok_or_else(|| crate::Error::Verification("value at t = i is not real".into()))?;
            let pass = h == heta && k == kappa;
            Ok((
                pass,
                format!(
                    "eta acts by signs on monomials: {premise}; analytic H^eta {} kappa {}, eigenbasis kappa {}",
                    fmt_matrix(&h),
                    fmt_matrix(&k),
                    fmt_matrix(&kappa)
                ),
            ))
        });
    }
    if id.family == Family::E && id.rank_param == 7 {
        s.run(5, "kappa (E7)", || {
            let k = pr::kappa_matrix(alg)?;
            let want = mat(&[
                &[12, 6, 9, 3, 0, 3, -9],
                &[-6, 0, 3, 0, 0, 0, -3],
                &[15, -3, 12, 3, 0, 3, -12],
                &[-3, 0, -3, 0, 0, 0, -6],
                &[0, 0, 0, 0, 0, -9, 0],
                &[-3, 0, -3, 0, 9, 0, -6],
                &[-15, 3, -12, 6, 0, 6, 12],
            ]);
            Ok((k == want, fmt_matrix(&k)))
        });
    }
}

// ---------------------------------------------------------------- criterion 6

fn alpha_checks(s: &mut Suite, hs: &Hochschild) {
    let id = hs.alg.id();
    let labels = catalog::f_labels(id);
    if labels.is_empty() {
        s.push(6, "HH^2 = 0, no alpha", hs.dims(2).is_empty(), format!("{:?}", hs.dims(2)));
        return;
    }
    let ma = match pr::m_alpha(hs) {
        Ok(m) => m,
        Err(e) => return s.push(6, "M_alpha", false, e.to_string()),
    };
    let want = match id.family {
        Family::D => mat(&[&[-(id.rank_param as i64)]]),
        Family::E => mat(&[&[-8, -4], &[-4, -8]]),
    };
    s.eq(6, "M_alpha", &M(&ma), &M(&want));
    s.push(6, "M_alpha symmetric", ma.is_symmetric(), "");
    s.push(6, "M_alpha nondegenerate", !ma.det().is_zero(), format!("det {}", ma.det()));
    s.run(6, "theta_k f_i = 0 for deg z_k > 0", || {
        let mut bad = Vec::new();
        for z in hs.center.z_names() {
            let k: usize = z[1..].parse().unwrap_or(0);
            if k == 0 {
                continue;
            }
            for &i in &labels {
                let c = pr::theta_times_f(hs, k, i)?;
                if !c.is_zero() {
                    bad.push(format!("theta{k} f{i} = {c}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    });
}

// ---------------------------------------------------------------- criterion 7

/// The tridiagonal matrix with +1 above and -1 below the diagonal.
pub fn tridiagonal(size: usize) -> Matrix {
    let mut m = Matrix::zeros(size, size);
    for i in 0..size.saturating_sub(1) {
        m.data[i][i + 1] = q(1);
        m.data[i + 1][i] = q(-1);
    }
    m
}

/// Printed signed adjacency matrices of the E types.
fn printed_signed_adjacency(rank: usize) -> Matrix {
    match rank {
        6 => mat(&[&[0, 1], &[-1, 0]]),
        7 => mat(&[
            &[0, -1, 0, 0, 0, 0],
            &[1, 0, -1, 0, 0, 0],
            &[0, 1, 0, -1, 0, 0],
            &[0, 0, 1, 0, 1, 0],
            &[0, 0, 0, -1, 0, 1],
            &[0, 0, 0, 0, -1, 0],
        ]),
        _ => mat(&[
            &[0, -1, 0, 0, 0, 0, 0, 0],
            &[1, 0, -1, 0, 0, 0, 0, 0],
            &[0, 1, 0, -1, 0, 0, 0, 0],
            &[0, 0, 1, 0, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 1, 0, 1],
            &[0, 0, 0, 0, -1, 0, 1, 0],
            &[0, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, -1, 0, 0, 0],
        ]),
    }
}

fn printed_m_beta(rank: usize) -> Matrix {
    match rank {
        6 => mat(&[&[0, -6], &[6, 0]]),
        7 => mat(&[
            &[0, 9, 0, 9, 0, 9],
            &[-9, 0, 0, 0, 0, 0],
            &[0, 0, 0, 9, 0, 9],
            &[-9, 0, -9, 0, 0, 0],
            &[0, 0, 0, 0, 0, -9],
            &[-9, 0, -9, 0, 9, 0],
        ]),
        _ => mat(&[
            &[0, 15, 0, 15, 0, 0, 0, -15],
            &[-15, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 15, 0, 0, 0, -15],
            &[-15, 0, -15, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, -15],
            &[0, 0, 0, 0, 0, 0, -15, 0],
            &[0, 0, 0, 0, 0, 15, 0, -15],
            &[15, 0, 15, 0, 15, 0, 15, 0],
        ]),
    }
}

fn beta_checks(s: &mut Suite, hs: &Hochschild) {
    let alg = hs.alg;
    let id = alg.id();
    let mb = match pr::m_beta(hs) {
        Ok(m) => m,
        Err(e) => return s.push(7, "M_beta", false, e.to_string()),
    };
    let (want, adj) = match id.family {
        Family::D => {
            let t = tridiagonal(mb.rows);
            let inv = t.inverse().map(|i| i.scale(&q(id.rank_param as i64)));
            (inv, t)
        }
        Family::E => (Some(printed_m_beta(id.rank_param)), printed_signed_adjacency(id.rank_param)),
    };
    match want {
        Some(w) => s.eq(7, "M_beta against the reference", &M(&mb), &M(&w)),
        None => s.push(7, "M_beta against the reference", false, "reference matrix is singular"),
    }
    s.push(7, "M_beta skew-symmetric", mb.is_skew(), "");
    s.push(7, "M_beta nondegenerate", !mb.det().is_zero(), format!("det {}", mb.det()));
    s.eq(7, "signed adjacency matrix", &M(&pr::signed_adjacency(alg)), &M(&adj));
    s.run(7, "M_beta = (h/2) (C')^-1", || {
        let c = pr::m_beta_closed_form(alg)?;
        Ok((c == mb, fmt_matrix(&c)))
    });
}

// ---------------------------------------------------------------- criterion 8

fn relation_checks(s: &mut Suite, hs: &Hochschild) {
    let alg = hs.alg;
    let zetas: Vec<usize> = catalog::zetas(alg.id()).into_iter().map(|(k, _)| k).collect();
    for &k in &zetas {
        if let Some(z) = hs.class(&format!("zeta{k}")) {
            let d = hochschild::differential(alg, 5, &z.cochain);
            s.push(8, format!("zeta{k} is a cocycle"), d.is_zero(), "");
        }
        s.run(8, &format!("zeta{k}(theta{k}) = 1"), || {
            let v = pr::zeta_on_theta(hs, k)?;
            Ok((v.is_one(), v.to_string()))
        });
        s.run(8, &format!("theta0 zeta{k} = psi{k}"), || {
            let c = pr::theta_times_zeta(hs, 0, k)?;
            Ok((c == Combination::single(&format!("psi{k}"), Q::one()), c.to_string()))
        });
        if k > 0 {
            for base in ["zeta", "psi"] {
                s.run(8, &format!("z{k} {base}{k} = {base}0"), || {
                    let c = pr::cup_hh0(hs, &format!("z{k}"), &format!("{base}{k}"))?;
                    Ok((c == Combination::single(&format!("{base}0"), Q::one()), c.to_string()))
                });
            }
        }
    }
    s.run(8, "psi0(phi0(z0)) = 1", || {
        let v = pr::pair_5_6(hs, "psi0", "phi0(z0)")?;
        Ok((v.is_one(), v.to_string()))
    });
    s.run(8, "eps_i(phi0(w_j)) = delta_ij", || {
        let labels: Vec<usize> = catalog::epsilons(alg.id()).into_iter().map(|(i, _)| i).collect();
        let mut bad = Vec::new();
        for &i in &labels {
            for &j in &labels {
                let v = pr::pair_5_6(hs, &format!("eps{i}"), &format!("phi0(w{j})"))?;
                if v != q(i64::from(i == j)) {
                    bad.push(format!("eps{i}(phi0(w{j})) = {v}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    });
    // The printed representatives of some zeta_k, psi_k are off by a scalar;
    // the classes are rescaled so the relations above hold. The scalars seen
    // must be exactly the known ones.
    let got: Vec<(String, Q)> = hs.normalizations.iter().filter(|(_, c)| !c.is_one()).cloned().collect();
    let want = known_normalizations(alg);
    let shown = |v: &[(String, Q)]| v.iter().map(|(n, c)| format!("{n} x {c}")).collect::<Vec<_>>().join(", ");
    s.push(
        8,
        "printed zeta/psi representatives differ only by the known scalars",
        got == want,
        format!("rescaled: [{}], known: [{}]", shown(&got), shown(&want)),
    );
}

/// Scalars applied to printed zeta/psi representatives so that
/// z_k zeta_k = zeta_0 and z_k psi_k = psi_0.
pub fn known_normalizations(alg: &Algebra) -> Vec<(String, Q)> {
    let id = alg.id();
    let v: Vec<(&str, Q)> = match (id.family, id.rank_param) {
        (Family::E, 6) => vec![("zeta6", q(-1)), ("psi6", q(-1)), ("psi8", crate::rational::qf(1, 2))],
        (Family::E, 7) => vec![("zeta12", q(-1)), ("psi12", q(-1))],
        _ => vec![],
    };
    v.into_iter().map(|(n, c)| (n.to_string(), c)).collect()
}

// ---------------------------------------------------------------- criterion 9

fn pairing_checks(s: &mut Suite, hs: &Hochschild, table: &ProductTable) {
    let alg = hs.alg;
    let id = alg.id();
    let f_labels = catalog::f_labels(id);
    s.run(9, "f_i h_j = delta_ij psi0", || {
        let mut bad = Vec::new();
        for &i in &f_labels {
            for &j in &f_labels {
                let c = pr::f_times_h(hs, i, j)?;
                let want = if i == j { Combination::single("psi0", Q::one()) } else { Combination::zero() };
                if c != want {
                    bad.push(format!("f{i} h{j} = {c}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    });
    if !f_labels.is_empty() {
        s.run(9, "f_i f_j = (M_alpha)_ij zeta0", || {
            let ma = pr::m_alpha(hs)?;
            let mut bad = Vec::new();
            for (r, &i) in f_labels.iter().enumerate() {
                for (c, &j) in f_labels.iter().enumerate() {
                    let got = table.get(&format!("f{i}"), &format!("f{j}")).map(|e| e.result.clone());
                    if got != Some(Combination::single("zeta0", ma.data[r][c].clone())) {
                        bad.push(format!("f{i} f{j} = {got:?}"));
                    }
                }
            }
            Ok((bad.is_empty(), bad.join(", ")))
        });
    }
    s.run(9, "theta0 (f_i f_j) = (theta0 f_i) f_j", || pr::spot_check_theta_ff(hs).map(|_| (true, String::new())));
    s.run(9, "z (theta0 zeta) = theta0 (z zeta)", || pr::spot_check_z_theta_zeta(hs).map(|_| (true, String::new())));
    s.run(9, "eps_i eps_j = -(M_beta)_ij phi4(zeta0)", || {
        let mb = pr::m_beta(hs)?;
        let labels: Vec<usize> = catalog::epsilons(id).into_iter().map(|(i, _)| i).collect();
        let mut bad = Vec::new();
        for (r, &i) in labels.iter().enumerate() {
            for (c, &j) in labels.iter().enumerate() {
                let got = table.get(&format!("eps{i}"), &format!("eps{j}")).map(|e| e.result.clone());
                if got != Some(Combination::single("phi4(zeta0)", -mb.data[r][c].clone())) {
                    bad.push(format!("eps{i} eps{j} = {got:?}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    });
    s.run(9, "theta0 (eps_i eps_j) = (theta0 eps_i) eps_j", || {
        let omega = pr::spot_check_theta_eps_eps(hs)?;
        let mb = pr::m_beta(hs)?;
        Ok((omega == mb.neg(), fmt_matrix(&omega)))
    });
    s.run(9, "graded commutativity", || pr::check_graded_commutativity(table).map(|n| (true, format!("{n} pairs"))));
    if id.family == Family::E && id.rank_param == 6 {
        let want = Combination::from_pairs(vec![("h1".into(), q(-8)), ("h2".into(), q(-4))]);
        let got = table.get("theta0", "f1").map(|e| e.result.clone()).unwrap_or_default();
        s.eq(9, "theta0 f1 = -8 h1 - 4 h2", &got, &want);
    }
    if id.family == Family::D && id.rank_param % 2 == 1 {
        let n = id.rank_param;
        let mut bad = Vec::new();
        for k in 1..=(n - 1) / 2 {
            let mut pairs: Vec<(String, Q)> =
                (2 * k + 1..=n - 2).step_by(2).map(|i| (format!("phi0(w{i})"), q(n as i64))).collect();
            pairs.push((format!("phi0(w{n})"), q(n as i64)));
            let want = Combination::from_pairs(pairs);
            let got = table.get("theta0", &format!("eps{}", 2 * k)).map(|e| e.result.clone()).unwrap_or_default();
            if got != want {
                bad.push(format!("theta0 eps{} = {got}, expected {want}", 2 * k));
            }
        }
        s.push(9, "theta0 eps_2k = n (sum of odd phi0(w_i), i >= 2k+1) + n phi0(w_n)", bad.is_empty(), bad.join("; "));
    }
    s.run(9, "identity row 1 x = x", || {
        let mut bad = Vec::new();
        for c in &hs.named {
            if c.index > 6 {
                continue;
            }
            let got = table.get("z0", &c.name).map(|e| e.result.clone());
            if got != Some(Combination::single(&c.name, Q::one())) {
                bad.push(c.name.clone());
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    });
}

// ---------------------------------------------------------------- criterion 10

fn verdict_checks(s: &mut Suite, hs: &Hochschild, table: &ProductTable) {
    let verdicts = match pr::zero_verdicts(hs) {
        Ok(v) => v,
        Err(e) => return s.push(10, "zero-product verdicts", false, e.to_string()),
    };
    let nonzero = [(1, 2), (1, 4), (1, 5), (2, 2), (2, 3), (5, 5)];
    let asserted = [(2, 4), (2, 5), (4, 5)];
    let mut bad = Vec::new();
    for i in 1..=5 {
        for j in i..=5 {
            let want = if nonzero.contains(&(i, j)) {
                pr::Verdict::NonzeroWithFormula
            } else if asserted.contains(&(i, j)) {
                pr::Verdict::ZeroByArgument
            } else {
                pr::Verdict::ZeroByDegree
            };
            match verdicts.iter().find(|v| (v.i, v.j) == (i, j)) {
                Some(v) if v.verdict == want && (want != pr::Verdict::ZeroByDegree || v.degree_forced) => {}
                other => bad.push(format!("({i},{j}): {:?}", other.map(|v| v.verdict))),
            }
        }
    }
    s.push(10, "every block 1 <= i <= j <= 5 classified", bad.is_empty() && verdicts.len() == 15, bad.join(", "));

    let mut bad = Vec::new();
    for e in table.entries.iter().filter(|e| e.i >= 1) {
        let block = (e.i.min(e.j), e.i.max(e.j));
        let want_tag = asserted.contains(&block);
        if want_tag != (e.provenance == Provenance::Asserted) {
            bad.push(format!("{} {} tagged {:?}", e.left, e.right, e.provenance));
        }
        if !nonzero.contains(&block) && !e.result.is_zero() {
            bad.push(format!("{} {} = {} in a zero block", e.left, e.right, e.result));
        }
        if e.provenance == Provenance::DegreeZero && !e.result.is_zero() {
            bad.push(format!("{} {} tagged degree-zero but nonzero", e.left, e.right));
        }
    }
    s.push(10, "table provenance matches the verdicts", bad.is_empty(), bad.join(", "));
}

// ---------------------------------------------------------------- criterion 11

fn random_elem(alg: &Algebra, rng: &mut ChaCha8Rng) -> Elem {
    let mut x = Elem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(0..alg.dim());
        x.add_term(i, &q(rng.gen_range(-3..=3)));
    }
    x
}

/// Fixed seed so every run sees the same samples.
pub const PROPERTY_SEED: u64 = 0x5eed;

fn property_checks(s: &mut Suite, alg: &Algebra, hs: Option<(&Hochschild, Option<&ProductTable>)>) {
    let top = alg.top();
    let r = alg.quiver.num_vertices();
    // Pairing blocks e_u A_d e_v x e_v A_{top-d} e_nu(u).
    let mut singular = Vec::new();
    let mut asym = 0usize;
    let mut pairs = 0usize;
    for d in 0..=top {
        for u in 0..r {
            for v in 0..r {
                let left = alg.basis.block(d, u, v);
                let right = alg.basis.block(top - d, v, alg.nu(u));
                if left.len() != right.len() {
                    singular.push(format!("deg {d} e{}Ae{}", u + 1, v + 1));
                    continue;
                }
                if left.is_empty() {
                    continue;
                }
                let mut g = Matrix::zeros(left.len(), right.len());
                for (a, &x) in left.iter().enumerate() {
                    for (b, &y) in right.iter().enumerate() {
                        let (xe, ye) = (Elem::basis(x), Elem::basis(y));
                        let p = alg.pair(&xe, &ye);
                        pairs += 1;
                        if p != alg.pair(&ye, &alg.eta_basis(x)) {
                            asym += 1;
                        }
                        g.data[a][b] = p;
                    }
                }
                if g.det().is_zero() {
                    singular.push(format!("deg {d} e{}Ae{}", u + 1, v + 1));
                }
            }
        }
    }
    s.push(11, "Frobenius pairing nondegenerate in complementary degrees", singular.is_empty(), singular.join(", "));
    s.push(11, "(x, y) = (y, eta(x)) on basis monomials", asym == 0, format!("{pairs} pairs, {asym} failures"));
    let eta2 = (0..alg.dim()).filter(|&m| alg.eta(&alg.eta_basis(m)) != Elem::basis(m)).count();
    s.push(11, "eta^2 = id", eta2 == 0, format!("{} monomials, {eta2} failures", alg.dim()));

    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let mut star_bad = 0;
    for _ in 0..1000 {
        let (x, y) = (random_elem(alg, &mut rng), random_elem(alg, &mut rng));
        if alg.star(&alg.mul(&x, &y)) != alg.mul(&alg.star(&y), &alg.star(&x)) {
            star_bad += 1;
        }
    }
    s.push(11, "(xy)* = y* x* on 1000 random pairs", star_bad == 0, format!("{star_bad} failures"));
    let mut assoc_bad = 0;
    for _ in 0..1000 {
        let (x, y, z) = (random_elem(alg, &mut rng), random_elem(alg, &mut rng), random_elem(alg, &mut rng));
        if alg.mul(&alg.mul(&x, &y), &z) != alg.mul(&x, &alg.mul(&y, &z)) {
            assoc_bad += 1;
        }
    }
    s.push(11, "(xy)z = x(yz) on 1000 random triples", assoc_bad == 0, format!("{assoc_bad} failures"));

    s.run(11, "JSON round trip", || {
        let mut failed: Vec<&str> = Vec::new();
        let hm = alg.hilbert_matrix();
        if serde_json::from_str::<PolyMatrix>(&serde_json::to_string(&hm)?)? != hm {
            failed.push("hilbert matrix");
        }
        for m in 0..alg.dim().min(200) {
            let x = Elem::basis(m).scale(&crate::rational::qf(-3, 7));
            let w = serial::elem_to_wire(alg, &x);
            let back: serial::WireElem = serde_json::from_str(&serde_json::to_string(&w)?)?;
            if serial::elem_from_wire(alg, &back)? != x {
                failed.push("element");
                break;
            }
        }
        if let Some((hs, table)) = hs {
            for c in &hs.named {
                let w = serial::cochain_to_wire(alg, &c.cochain);
                let back: serial::WireCochain = serde_json::from_str(&serde_json::to_string(&w)?)?;
                if serial::cochain_from_wire(alg, &back)? != c.cochain {
                    failed.push("cochain");
                    break;
                }
            }
            if let Some(t) = table {
                let w = t.to_wire();
                let back: Vec<crate::table::WireEntry> = serde_json::from_str(&serde_json::to_string(&w)?)?;
                if ProductTable::from_wire(&back).as_ref() != Some(t) {
                    failed.push("product table");
                }
            }
            for m in [pr::m_beta(hs).ok(), pr::kappa_matrix(alg).ok(), pr::m_alpha(hs).ok()].into_iter().flatten() {
                if serde_json::from_str::<Matrix>(&serde_json::to_string(&m)?)? != m {
                    failed.push("matrix");
                }
            }
        }
        Ok((failed.is_empty(), failed.join(", ")))
    });
}
