//! Acceptance criteria 1 to 11, one line each.
//!
//! Oracles here are independent of the library code paths they check:
//! Hilbert series come from the recursion H_k = C H_{k-1} - H_{k-2},
//! dimensions from the exponent formulas, and reference matrices are typed
//! in literally. A criterion whose reference values are misprinted or whose
//! premise does not hold is reported as FAIL; those discrepancies are pinned
//! below, and the run only exits nonzero when something else fails or a
//! pinned discrepancy stops reproducing.

use num_traits::{One, Zero};
use preproj::algebra::{Algebra, Elem};
use preproj::hochschild::{self, Cochain, Hochschild};
use preproj::linalg::Matrix;
use preproj::poly::Poly;
use preproj::products::{self as pr, Verdict};
use preproj::rational::{q, qf, Q};
use preproj::table::{Combination, ProductTable, Provenance};
use preproj::{center, parse::parse_element, report, verify, QuiverId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

const QUIVERS: [&str; 8] = ["d4", "d5", "d6", "d7", "d8", "e6", "e7", "e8"];

/// A failed expectation; `pinned` marks a documented discrepancy.
struct Miss {
    msg: String,
    pinned: bool,
}

fn miss(msg: impl Into<String>) -> Miss {
    Miss { msg: msg.into(), pinned: false }
}

fn pinned(msg: impl Into<String>) -> Miss {
    Miss { msg: msg.into(), pinned: true }
}

/// Independent description of each diagram.
struct Diagram {
    h: usize,
    exponents: Vec<usize>,
    /// 1-based undirected edges.
    edges: Vec<(usize, usize)>,
    /// 1-based nu.
    nu: Vec<usize>,
}

fn diagram(name: &str) -> Diagram {
    let k: usize = name[1..].parse().unwrap();
    if name.starts_with('d') {
        let n = k - 1;
        let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, n));
        edges.push((n - 1, n + 1));
        let mut nu: Vec<usize> = (1..=n + 1).collect();
        if n % 2 == 0 {
            nu.swap(n - 1, n);
        }
        let mut exponents: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
        exponents.push(n);
        exponents.sort();
        return Diagram { h: 2 * n, exponents, edges, nu };
    }
    match k {
        6 => Diagram {
            h: 12,
            exponents: vec![1, 4, 5, 7, 8, 11],
            edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
            nu: vec![5, 4, 3, 2, 1, 6],
        },
        7 => Diagram {
            h: 18,
            exponents: vec![1, 5, 7, 9, 11, 13, 17],
            edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
            nu: (1..=7).collect(),
        },
        _ => Diagram {
            h: 30,
            exponents: vec![1, 7, 11, 13, 17, 19, 23, 29],
            edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
            nu: (1..=8).collect(),
        },
    }
}

impl Diagram {
    fn r(&self) -> usize {
        self.nu.len()
    }

    fn fixed(&self) -> Vec<usize> {
        (1..=self.r()).filter(|&v| self.nu[v - 1] == v).collect()
    }

    fn small(&self) -> Vec<usize> {
        self.exponents.iter().copied().filter(|&m| 2 * m < self.h).collect()
    }

    fn dim_y(&self) -> usize {
        self.fixed().len() - self.exponents.iter().filter(|&&m| 2 * m == self.h).count()
    }

    fn r_minus(&self) -> usize {
        (self.r() - self.fixed().len()) / 2
    }

    /// Hilbert matrix from (1 + P t^h) sum_k H_k t^k, H_0 = I, H_1 = C,
    /// H_k = C H_{k-1} - H_{k-2}, cut at the top degree h - 2.
    fn hilbert(&self) -> Vec<Vec<Vec<i64>>> {
        let r = self.r();
        let mut c = vec![vec![0i64; r]; r];
        for &(a, b) in &self.edges {
            c[a - 1][b - 1] = 1;
            c[b - 1][a - 1] = 1;
        }
        let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| x[i][k] * y[k][j]).sum()).collect()).collect()
        };
        let id: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let top = self.h - 2;
        let mut hk = vec![id.clone(), c.clone()];
        for k in 2..=top {
            let next = mul(&c, &hk[k - 1]);
            hk.push((0..r).map(|i| (0..r).map(|j| next[i][j] - hk[k - 2][i][j]).collect()).collect());
        }
        // Terms P t^h H_k have degree >= h > top, so only sum_k H_k t^k survives.
        (0..r).map(|i| (0..r).map(|j| (0..=top).map(|k| hk[k][i][j]).collect()).collect()).collect()
    }

    fn adjacent_path(&self, k: usize, l: usize) -> Vec<usize> {
        let mut prev = vec![0usize; self.r() + 1];
        let mut seen = vec![false; self.r() + 1];
        let mut queue = std::collections::VecDeque::from([k]);
        seen[k] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        prev[y] = v;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut path = vec![l];
        while *path.last().unwrap() != k {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// Predicted degreewise dimensions of HH^i, 0 <= i <= 6.
    fn hh_dims(&self, i: usize) -> BTreeMap<i64, usize> {
        let h = self.h as i64;
        let mut out = BTreeMap::new();
        let mut add = |g: i64, n: usize| {
            if n > 0 {
                *out.entry(g).or_insert(0) += n;
            }
        };
        let small = self.small();
        match i {
            0 => {
                small.iter().for_each(|&m| add(2 * m as i64 - 2, 1));
                add(h - 2, self.fixed().len());
            }
            1 => small.iter().for_each(|&m| add(2 * m as i64 - 2, 1)),
            2 | 3 => add(-2, self.r_minus()),
            4 => small.iter().for_each(|&m| add(-2 * m as i64 - 2, 1)),
            5 => {
                small.iter().for_each(|&m| add(-2 * m as i64 - 2, 1));
                add(-h - 2, self.dim_y());
            }
            _ => {
                small.iter().for_each(|&m| add(2 * m as i64 - 2 - 2 * h, 1));
                add(-h - 2, self.dim_y());
            }
        }
        out
    }

    /// Degrees of HH^i for any i >= 1 by 6-periodicity with shift -2h.
    fn hh_degrees(&self, i: usize) -> BTreeSet<i64> {
        let base = (i - 1) % 6 + 1;
        let shift = 2 * self.h as i64 * ((i as i64 - 1) / 6);
        self.hh_dims(base).keys().map(|g| g - shift).collect()
    }

    fn ranges(&self) -> Vec<(i64, i64)> {
        let h = self.h as i64;
        vec![(0, h - 2), (0, h - 4), (-2, -2), (-2, -2), (-h, -4), (-h - 2, -4), (-2 * h, -h - 2)]
    }
}

fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn span_eq(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let rank = |v: &[Vec<Q>]| if v.is_empty() { 0 } else { Matrix::from_rows(v.to_vec()).rank() };
    let both: Vec<Vec<Q>> = a.iter().chain(b).cloned().collect();
    rank(a) == rank(b) && rank(a) == rank(&both)
}

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn unit(r: usize, v: usize) -> Vec<i64> {
    (1..=r).map(|k| i64::from(k == v)).collect()
}

fn comb(pairs: &[(&str, i64)]) -> Combination {
    Combination::from_pairs(pairs.iter().map(|(n, c)| (n.to_string(), q(*c))).collect())
}

struct Ctx<'a> {
    name: &'static str,
    d: Diagram,
    alg: &'a Algebra,
    hs: Hochschild<'a>,
    table: ProductTable,
}

impl Ctx<'_> {
    fn is_d(&self) -> bool {
        self.name.starts_with('d')
    }

    /// n for D_{n+1}.
    fn n(&self) -> usize {
        self.d.r() - 1
    }
}

// ------------------------------------------------------------------ criteria

fn c1_hilbert(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    let golden: BTreeMap<String, Vec<Vec<String>>> =
        serde_json::from_str(include_str!("../data/hilbert_columns.json")).unwrap();
    // (quiver, column, row), 1-based: printed entries known to be misprinted.
    let known: BTreeSet<(&str, usize, usize)> =
        [("e7", 3, 3), ("e7", 3, 4), ("e7", 3, 5), ("e7", 3, 6), ("e7", 3, 7), ("e8", 2, 5), ("e8", 6, 6)].into();
    let mut seen = BTreeSet::new();
    for c in cx {
        let hm = c.alg.hilbert_matrix();
        let oracle = c.d.hilbert();
        for i in 0..c.d.r() {
            for j in 0..c.d.r() {
                if hm.entry(i, j) != &Poly::new(oracle[i][j].clone()) {
                    out.push(miss(format!("{} ({},{}) {} vs recursion", c.name, i + 1, j + 1, hm.entry(i, j))));
                }
            }
        }
        if let Some(cols) = golden.get(c.name) {
            for (j, col) in cols.iter().enumerate() {
                for (i, text) in col.iter().enumerate() {
                    let printed = Poly::parse(text).expect("printed polynomial");
                    if &printed != hm.entry(i, j) {
                        let key = (c.name, j + 1, i + 1);
                        let m = format!("{} col {} row {} printed {text}, computed {}", c.name, j + 1, i + 1, hm.entry(i, j));
                        if known.contains(&key) {
                            seen.insert(key);
                            out.push(pinned(m));
                        } else {
                            out.push(miss(m));
                        }
                    }
                }
            }
        }
    }
    for k in known.difference(&seen) {
        out.push(miss(format!("pinned misprint {k:?} no longer differs")));
    }
    out
}

fn c2_center(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let alg = c.alg;
        let mut want = BTreeMap::new();
        for &m in &c.d.small() {
            *want.entry(2 * m - 2).or_insert(0usize) += 1;
        }
        *want.entry(c.d.h - 2).or_insert(0) += c.d.fixed().len();
        let got: BTreeMap<usize, usize> =
            (0..=alg.top()).map(|d| (d, center::central_kernel(alg, d).len())).filter(|(_, n)| *n > 0).collect();
        if got != want {
            out.push(miss(format!("{}: h_Z {got:?} vs {want:?}", c.name)));
        }
        let z = &c.hs.center;
        for e in &z.elements {
            if !alg.is_central(&e.elem) || e.elem.is_zero() {
                out.push(miss(format!("{}: {} not a nonzero central element", c.name, e.name)));
            }
        }
        let prod = |x: &str, y: &str| z.express(alg, &alg.mul(&z.get(x).unwrap().elem, &z.get(y).unwrap().elem)).unwrap();
        let mut expect: Vec<(String, String, Combination)> = Vec::new();
        if c.is_d() {
            let n = c.n();
            let top = alg.top();
            let zs: Vec<usize> = (1..).map(|j| 4 * j).take_while(|&d| d < top).collect();
            for &a in &zs {
                for &b in &zs {
                    let want = match (a + b).cmp(&top) {
                        std::cmp::Ordering::Less => comb(&[(&format!("z{}", a + b), 1)]),
                        std::cmp::Ordering::Equal => comb(&[(&format!("w{n}"), 1), (&format!("w{}", n + 1), -1)]),
                        std::cmp::Ordering::Greater => Combination::zero(),
                    };
                    expect.push((format!("z{a}"), format!("z{b}"), want));
                }
            }
        } else {
            match c.name {
                "e6" => {
                    for (x, y) in [("z6", "z6"), ("z6", "z8"), ("z8", "z8")] {
                        expect.push((x.into(), y.into(), Combination::zero()));
                    }
                }
                "e7" => {
                    expect.push(("z8".into(), "z8".into(), comb(&[("w1", 1), ("w3", 1), ("w7", -1)])));
                    expect.push(("z8".into(), "z12".into(), Combination::zero()));
                    expect.push(("z12".into(), "z12".into(), Combination::zero()));
                }
                _ => {
                    expect.push(("z12".into(), "z12".into(), comb(&[("z24", 1)])));
                    for (x, y) in [("z12", "z20"), ("z20", "z20"), ("z12", "z24"), ("z20", "z24"), ("z24", "z24")] {
                        expect.push((x.into(), y.into(), Combination::zero()));
                    }
                    let z12 = &z.get("z12").unwrap().elem;
                    let lhs = alg.mul_all(&[&parse_element(alg, "a4* a4 a3* a3").unwrap(), z12, z12]);
                    // Top of the branch vertex (5 in 1-based labels), trace 1.
                    if lhs != alg.omega(4) {
                        out.push(miss(format!("e8: x4 x3 z12^2 = {}", alg.display_elem(&lhs))));
                    }
                }
            }
        }
        for (x, y, want) in expect {
            let got = prod(&x, &y);
            if got != want {
                out.push(miss(format!("{}: {x} {y} = {got}, expected {want}", c.name)));
            }
        }
    }
    out
}

fn c3_dimensions(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let alg = c.alg;
        for i in 0..=6 {
            let got = c.hs.dims(i);
            let want = c.d.hh_dims(i);
            if got != want {
                out.push(miss(format!("{} HH^{i}: {got:?} vs {want:?}", c.name)));
            }
            let (lo, hi) = c.d.ranges()[i];
            if got.keys().any(|&g| g < lo || g > hi) {
                out.push(miss(format!("{} HH^{i} outside [{lo}, {hi}]", c.name)));
            }
        }
        // HH^7 repeats HH^1 shifted by -2h.
        let h7: BTreeSet<i64> = c.hs.dims(7).keys().copied().collect();
        if h7 != c.d.hh_degrees(7) {
            out.push(miss(format!("{} HH^7 degrees {h7:?}", c.name)));
        }
        let h = c.d.h as i64;
        for g in (-2 * h - 2 - 2 * h)..=(h - 2) {
            for i in 1..hochschild::MAX_INDEX {
                let a = hochschild::differential_matrix(alg, i, g).unwrap();
                let b = hochschild::differential_matrix(alg, i + 1, g).unwrap();
                if a.rows > 0 && a.cols > 0 && b.rows > 0 && !b.mul(&a).is_zero() {
                    out.push(miss(format!("{}: d{} d{i} != 0 in degree {g}", c.name, i + 1)));
                }
            }
        }
    }
    out
}

fn c4_hh23(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let r = c.d.r();
        let oracle = c.d.hilbert();
        let h1: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| oracle[i][j].iter().sum()).collect()).collect();
        let ker = Matrix::from_i64(&h1).kernel();
        let diff = |a: usize, b: usize| -> Vec<Q> { unit(r, a).iter().zip(unit(r, b)).map(|(x, y)| q(x - y)).collect() };
        let want: Vec<Vec<Q>> = match c.name {
            "d5" | "d7" => vec![diff(c.n(), c.n() + 1)],
            "e6" => vec![diff(1, 5), diff(2, 4)],
            _ => vec![],
        };
        if !span_eq(&ker, &want) {
            out.push(miss(format!("{}: ker H_A(1) has dim {}", c.name, ker.len())));
        }
        for j in 0..r {
            let got = hochschild::differential(c.alg, 3, &Cochain::single(2, c.alg.vertex(j)));
            let mut w = Elem::zero();
            for (i, row) in h1.iter().enumerate() {
                w.add_scaled(&c.alg.omega(i), &q(row[j]));
            }
            if got.values[0] != w {
                out.push(miss(format!("{}: d3(e{}) differs from sum H_A(1)_ij w_i", c.name, j + 1)));
            }
        }
        let names: Vec<String> = (1..=r).map(|v| format!("h{v}")).collect();
        let got: Vec<Vec<Q>> = c.hs.top_relations(3).iter().map(|x| names.iter().map(|n| x.coeff(n)).collect()).collect();
        let sum = |a: usize, b: usize| -> Vec<Q> { unit(r, a).iter().zip(unit(r, b)).map(|(x, y)| q(x + y)).collect() };
        let want: Vec<Vec<Q>> = match c.name {
            "d5" | "d7" => {
                let mut v: Vec<Vec<Q>> = (1..c.n()).map(|i| qv(&unit(r, i))).collect();
                v.push(sum(c.n(), c.n() + 1));
                v
            }
            "e6" => vec![qv(&unit(r, 3)), qv(&unit(r, 6)), sum(1, 5), sum(2, 4)],
            _ => (1..=r).map(|v| qv(&unit(r, v))).collect(),
        };
        if !span_eq(&got, &want) {
            out.push(miss(format!("{}: HH^3 relations differ", c.name)));
        }
        for &i in &preproj::catalog::f_labels(c.alg.id()) {
            for &j in &preproj::catalog::f_labels(c.alg.id()) {
                let v = pr::pair_3_2(&c.hs, &format!("h{i}"), &format!("f{j}")).unwrap();
                if v != q(i64::from(i == j)) {
                    out.push(miss(format!("{}: h{i}(f{j}) = {v}", c.name)));
                }
            }
        }
    }
    out
}

/// eta trace on e_k A e_l counted monomial by monomial.
fn eta_trace(alg: &Algebra, k: usize, l: usize) -> Q {
    alg.basis.between(k, l).iter().map(|&m| alg.eta_basis(m).coeff(m)).fold(Q::zero(), |a, b| a + b)
}

/// Gaussian-integer evaluation at t = i of sum c_j t^(j - d) and of t d/dt.
fn at_i(coeffs: &[i64], d: usize) -> (Q, Q, bool) {
    let (mut re, mut im, mut dre, mut dim) = (0i64, 0i64, 0i64, 0i64);
    for (j, &c) in coeffs.iter().enumerate().skip(d) {
        let e = (j - d) as i64;
        let (a, b) = [(1, 0), (0, 1), (-1, 0), (0, -1)][(j - d) % 4];
        re += c * a;
        im += c * b;
        dre += c * e * a;
        dim += c * e * b;
    }
    (q(re), q(dre), im == 0 && dim == 0)
}

fn c5_eta(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let alg = c.alg;
        let f = c.d.fixed();
        let heta = Matrix::from_rows(f.iter().map(|&k| f.iter().map(|&l| eta_trace(alg, k - 1, l - 1)).collect()).collect());
        let want = if c.is_d() {
            let n = c.n();
            Matrix::from_rows(
                f.iter()
                    .map(|&k| {
                        f.iter()
                            .map(|&l| {
                                let v = match (k >= n, l >= n) {
                                    (false, false) => 2 * i64::from(k % 2 == 1 && l % 2 == 1),
                                    (false, true) => i64::from(k % 2 == 1),
                                    (true, false) => i64::from(l % 2 == 1),
                                    (true, true) if k == l => (n as i64 + 1) / 2,
                                    (true, true) => -(n as i64 - 1) / 2,
                                };
                                q(v)
                            })
                            .collect()
                    })
                    .collect(),
            )
        } else if c.name == "e7" {
            let z = [0i64; 7];
            mat(&[&[3, 0, 3, 0, 0, 0, -3], &z, &[3, 0, 3, 0, 0, 0, -3], &z, &z, &z, &[-3, 0, -3, 0, 0, 0, 3]])
        } else {
            Matrix::zeros(f.len(), f.len())
        };
        if heta != want {
            out.push(miss(format!("{}: H^eta {heta:?}", c.name)));
        }
        if hochschild::eta_signed_matrix(alg) != heta || pr::eta_matrix_from_eigenbasis(alg).unwrap() != heta {
            out.push(miss(format!("{}: library H^eta disagrees with the monomial count", c.name)));
        }
        // Kernels as stated: D odd <e_{2k-1}-e_1, e_{2k}, e_n+e_{n+1}-e_1>,
        // D even <e_{2k+1}-e_1, e_{2k}>, E7 listed, E6/E8 everything.
        let pos = |v: usize| f.iter().position(|&x| x == v).unwrap();
        let vec_of = |terms: &[(usize, i64)]| {
            let mut v = vec![Q::zero(); f.len()];
            for &(x, c) in terms {
                v[pos(x)] += q(c);
            }
            v
        };
        let kernel_want: Vec<Vec<Q>> = match c.name {
            "d4" | "d6" | "d8" => {
                let n = c.n();
                let mut v: Vec<Vec<Q>> = (2..n).map(|i| if i % 2 == 0 { vec_of(&[(i, 1)]) } else { vec_of(&[(i, 1), (1, -1)]) }).collect();
                v.push(vec_of(&[(n, 1), (n + 1, 1), (1, -1)]));
                v
            }
            "d5" | "d7" => (2..c.n()).map(|i| if i % 2 == 0 { vec_of(&[(i, 1)]) } else { vec_of(&[(i, 1), (1, -1)]) }).collect(),
            "e7" => vec![
                vec_of(&[(1, 1), (7, 1)]),
                vec_of(&[(2, 1)]),
                vec_of(&[(3, 1), (7, 1)]),
                vec_of(&[(4, 1)]),
                vec_of(&[(5, 1)]),
                vec_of(&[(6, 1)]),
            ],
            _ => f.iter().map(|&v| vec_of(&[(v, 1)])).collect(),
        };
        if !span_eq(&heta.kernel(), &kernel_want) {
            out.push(miss(format!("{}: ker H^eta differs", c.name)));
        }
        for (col, &i) in f.iter().enumerate() {
            let got = hochschild::differential(alg, 6, &Cochain::single(5, alg.vertex(i - 1)));
            let mut w = Elem::zero();
            for (row, &k) in f.iter().enumerate() {
                w.add_scaled(&alg.omega(k - 1), &heta.data[row][col]);
            }
            if got.values[0] != w {
                out.push(miss(format!("{}: d6(e{i}) differs from sum H^eta_ki w_k", c.name)));
            }
        }
        if !c.is_d() {
            // kappa_{k,j} = (-1)^n ((d - n) H/t^d + 1/2 t d/dt H/t^d) at t = i,
            // n = arrows of Q on the path from k to j.
            let oracle = c.d.hilbert();
            let kappa = pr::kappa_matrix(alg).unwrap();
            let mut analytic = Matrix::zeros(f.len(), f.len());
            let mut real = true;
            for (r, &k) in f.iter().enumerate() {
                for (s, &j) in f.iter().enumerate() {
                    let path = c.d.adjacent_path(k, j);
                    let d = path.len() - 1;
                    let n = path
                        .windows(2)
                        .filter(|w| alg.quiver.arrows.iter().any(|a| !a.starred && a.src == w[0] - 1 && a.dst == w[1] - 1))
                        .count();
                    let (val, der, ok) = at_i(&oracle[k - 1][j - 1], d);
                    real &= ok;
                    let sign = if n % 2 == 0 { q(1) } else { q(-1) };
                    analytic.data[r][s] = sign * (q((d - n) as i64) * val + der * qf(1, 2));
                }
            }
            if !real || analytic != kappa {
                let m = format!("{}: analytic kappa {} vs eigenbasis {}", c.name, verify::fmt_matrix(&analytic), verify::fmt_matrix(&kappa));
                // On E6, eta swaps the two arms, so monomials are not eigenvectors.
                if c.name == "e6" && !verify::eta_acts_by_signs(alg) {
                    out.push(pinned(m));
                } else {
                    out.push(miss(m));
                }
            } else if c.name == "e6" {
                out.push(miss("e6: pinned analytic-formula failure no longer reproduces"));
            }
        }
        if c.name == "e7" {
            let want = mat(&[
                &[12, 6, 9, 3, 0, 3, -9],
                &[-6, 0, 3, 0, 0, 0, -3],
                &[15, -3, 12, 3, 0, 3, -12],
                &[-3, 0, -3, 0, 0, 0, -6],
                &[0, 0, 0, 0, 0, -9, 0],
                &[-3, 0, -3, 0, 9, 0, -6],
                &[-15, 3, -12, 6, 0, 6, 12],
            ]);
            if pr::kappa_matrix(alg).unwrap() != want {
                out.push(miss("e7: kappa differs from the printed matrix"));
            }
        }
    }
    out
}

fn c6_alpha(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let labels = preproj::catalog::f_labels(c.alg.id());
        if labels.is_empty() {
            if !c.hs.dims(2).is_empty() {
                out.push(miss(format!("{}: HH^2 nonzero without f classes", c.name)));
            }
            continue;
        }
        let ma = pr::m_alpha(&c.hs).unwrap();
        let want = if c.is_d() { mat(&[&[-(c.n() as i64)]]) } else { mat(&[&[-8, -4], &[-4, -8]]) };
        if ma != want || !ma.is_symmetric() || ma.det().is_zero() {
            out.push(miss(format!("{}: M_alpha {:?}", c.name, ma.data)));
        }
        for z in c.hs.center.elements.iter().filter(|z| z.degree > 0 && z.degree < c.alg.top()) {
            for &i in &labels {
                let p = pr::theta_times_f(&c.hs, z.degree, i).unwrap();
                if !p.is_zero() {
                    out.push(miss(format!("{}: theta{} f{i} = {p}", c.name, z.degree)));
                }
            }
        }
    }
    out
}

fn c7_beta(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let mb = pr::m_beta(&c.hs).unwrap();
        let k = mb.rows;
        let (adj, half) = if c.is_d() {
            let mut t = Matrix::zeros(k, k);
            for i in 0..k.saturating_sub(1) {
                t.data[i][i + 1] = q(1);
                t.data[i + 1][i] = q(-1);
            }
            (t, c.n() as i64)
        } else {
            let adj = match c.name {
                "e6" => mat(&[&[0, 1], &[-1, 0]]),
                "e7" => mat(&[
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
            };
            (adj, c.d.h as i64 / 2)
        };
        // M_beta = (h/2) C'^-1, i.e. M_beta C' = (h/2) I.
        if mb.mul(&adj) != Matrix::identity(k).scale(&q(half)) {
            out.push(miss(format!("{}: M_beta C' != {half} I", c.name)));
        }
        let printed = match c.name {
            "e6" => Some(mat(&[&[0, -6], &[6, 0]])),
            "e7" => Some(mat(&[
                &[0, 9, 0, 9, 0, 9],
                &[-9, 0, 0, 0, 0, 0],
                &[0, 0, 0, 9, 0, 9],
                &[-9, 0, -9, 0, 0, 0],
                &[0, 0, 0, 0, 0, -9],
                &[-9, 0, -9, 0, 9, 0],
            ])),
            "e8" => Some(mat(&[
                &[0, 15, 0, 15, 0, 0, 0, -15],
                &[-15, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 15, 0, 0, 0, -15],
                &[-15, 0, -15, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, -15],
                &[0, 0, 0, 0, 0, 0, -15, 0],
                &[0, 0, 0, 0, 0, 15, 0, -15],
                &[15, 0, 15, 0, 15, 0, 15, 0],
            ])),
            _ => None,
        };
        if let Some(p) = printed {
            if mb != p {
                out.push(miss(format!("{}: M_beta {:?}", c.name, mb.data)));
            }
        }
        if !mb.is_skew() || mb.det().is_zero() {
            out.push(miss(format!("{}: M_beta not skew or singular", c.name)));
        }
    }
    out
}

fn c8_relations(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let hs = &c.hs;
        for (k, _) in preproj::catalog::zetas(c.alg.id()) {
            let zeta = hs.class(&format!("zeta{k}")).unwrap();
            if !hochschild::differential(c.alg, 5, &zeta.cochain).is_zero() {
                out.push(miss(format!("{}: zeta{k} not a cocycle", c.name)));
            }
            if !pr::zeta_on_theta(hs, k).unwrap().is_one() {
                out.push(miss(format!("{}: zeta{k}(theta{k}) != 1", c.name)));
            }
            // theta0 . x = sum over a in Q of a^* x_{a^*}, evaluated here directly.
            let mut s = Elem::zero();
            for (i, a) in c.alg.quiver.arrows.iter().enumerate() {
                if a.starred {
                    s = s.add(&c.alg.mul(&c.alg.arrow(i), &zeta.cochain.values[i]));
                }
            }
            let got = hs.express(&Cochain::single(5, s)).unwrap();
            if got != comb(&[(&format!("psi{k}"), 1)]) {
                out.push(miss(format!("{}: theta0 zeta{k} = {got}", c.name)));
            }
            if k > 0 {
                for base in ["zeta", "psi"] {
                    let z = &hs.center.get(&format!("z{k}")).unwrap().elem;
                    let x = &hs.class(&format!("{base}{k}")).unwrap().cochain;
                    let p = hs.express(&hochschild::times_central(c.alg, z, x)).unwrap();
                    if p != comb(&[(&format!("{base}0"), 1)]) {
                        out.push(miss(format!("{}: z{k} {base}{k} = {p}", c.name)));
                    }
                }
            }
        }
        let pair = |a: &str, b: &str| -> Q {
            c.alg.pair(&hs.class(a).unwrap().cochain.values[0], &hs.class(b).unwrap().cochain.values[0])
        };
        if !pair("psi0", "phi0(z0)").is_one() {
            out.push(miss(format!("{}: psi0(phi0(z0)) != 1", c.name)));
        }
        let labels: Vec<usize> = preproj::catalog::epsilons(c.alg.id()).into_iter().map(|(i, _)| i).collect();
        for &i in &labels {
            for &j in &labels {
                if pair(&format!("eps{i}"), &format!("phi0(w{j})")) != q(i64::from(i == j)) {
                    out.push(miss(format!("{}: eps{i}(phi0(w{j})) != delta", c.name)));
                }
            }
        }
    }
    out
}

fn c9_pairings(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    for c in cx {
        let hs = &c.hs;
        let id = c.alg.id();
        let f = preproj::catalog::f_labels(id);
        for &i in &f {
            for &j in &f {
                let got = pr::f_times_h(hs, i, j).unwrap();
                let want = if i == j { comb(&[("psi0", 1)]) } else { Combination::zero() };
                if got != want {
                    out.push(miss(format!("{}: f{i} h{j} = {got}", c.name)));
                }
            }
        }
        if !f.is_empty() {
            let ma = pr::m_alpha(hs).unwrap();
            for (r, &i) in f.iter().enumerate() {
                for (s, &j) in f.iter().enumerate() {
                    let e = c.table.get(&format!("f{i}"), &format!("f{j}")).unwrap();
                    if e.result != Combination::single("zeta0", ma.data[r][s].clone()) {
                        out.push(miss(format!("{}: f{i} f{j} = {}", c.name, e.result)));
                    }
                }
            }
        }
        if let Err(e) = pr::spot_check_theta_ff(hs) {
            out.push(miss(format!("{}: {e}", c.name)));
        }
        let mb = pr::m_beta(hs).unwrap();
        let e_labels: Vec<usize> = preproj::catalog::epsilons(id).into_iter().map(|(i, _)| i).collect();
        for (r, &i) in e_labels.iter().enumerate() {
            for (s, &j) in e_labels.iter().enumerate() {
                let e = c.table.get(&format!("eps{i}"), &format!("eps{j}")).unwrap();
                if e.result != Combination::single("phi4(zeta0)", -mb.data[r][s].clone()) {
                    out.push(miss(format!("{}: eps{i} eps{j} = {}", c.name, e.result)));
                }
            }
        }
        match pr::spot_check_theta_eps_eps(hs) {
            Ok(omega) if omega == mb.neg() => {}
            Ok(omega) => out.push(miss(format!("{}: Omega {:?}", c.name, omega.data))),
            Err(e) => out.push(miss(format!("{}: {e}", c.name))),
        }
        if c.name == "e6" {
            let got = &c.table.get("theta0", "f1").unwrap().result;
            if *got != comb(&[("h1", -8), ("h2", -4)]) {
                out.push(miss(format!("e6: theta0 f1 = {got}")));
            }
        }
        if c.is_d() && c.n() % 2 == 1 {
            let n = c.n();
            for k in 1..=(n - 1) / 2 {
                let mut pairs: Vec<(String, Q)> =
                    (2 * k + 1..=n - 2).step_by(2).map(|i| (format!("phi0(w{i})"), q(n as i64))).collect();
                pairs.push((format!("phi0(w{n})"), q(n as i64)));
                let got = &c.table.get("theta0", &format!("eps{}", 2 * k)).unwrap().result;
                if *got != Combination::from_pairs(pairs) {
                    out.push(miss(format!("{}: theta0 eps{} = {got}", c.name, 2 * k)));
                }
            }
        }
        if let Err(e) = pr::check_graded_commutativity(&c.table) {
            out.push(miss(format!("{}: {e}", c.name)));
        }
    }
    out
}

fn c10_verdicts(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    let nonzero = [(1, 2), (1, 4), (1, 5), (2, 2), (2, 3), (5, 5)];
    let asserted = [(2, 4), (2, 5), (4, 5)];
    for c in cx {
        let verdicts = pr::zero_verdicts(&c.hs).unwrap();
        if verdicts.len() != 15 {
            out.push(miss(format!("{}: {} blocks classified", c.name, verdicts.len())));
        }
        for v in &verdicts {
            let want = if nonzero.contains(&(v.i, v.j)) {
                Verdict::NonzeroWithFormula
            } else if asserted.contains(&(v.i, v.j)) {
                Verdict::ZeroByArgument
            } else {
                Verdict::ZeroByDegree
            };
            if v.verdict != want {
                out.push(miss(format!("{}: ({},{}) {:?}", c.name, v.i, v.j, v.verdict)));
            }
            // Range arithmetic: no sum of degrees lands in HH^{i+j}.
            let (a, b, t) = (c.d.hh_degrees(v.i), c.d.hh_degrees(v.j), c.d.hh_degrees(v.i + v.j));
            let forced = a.iter().all(|x| b.iter().all(|y| !t.contains(&(x + y))));
            if want == Verdict::ZeroByDegree && !forced {
                out.push(miss(format!("{}: ({},{}) not forced by degrees", c.name, v.i, v.j)));
            }
        }
        for e in c.table.entries.iter().filter(|e| e.i >= 1) {
            let block = (e.i.min(e.j), e.i.max(e.j));
            if asserted.contains(&block) != (e.provenance == Provenance::Asserted) {
                out.push(miss(format!("{}: {} {} tagged {:?}", c.name, e.left, e.right, e.provenance)));
            }
            if !nonzero.contains(&block) && !e.result.is_zero() {
                out.push(miss(format!("{}: {} {} nonzero", c.name, e.left, e.right)));
            }
        }
    }
    out
}

fn c11_properties(cx: &[Ctx]) -> Vec<Miss> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20_261_015);
    for c in cx {
        let alg = c.alg;
        let top = alg.top();
        let r = c.d.r();
        for deg in 0..=top {
            for u in 0..r {
                for v in 0..r {
                    let left = alg.basis.block(deg, u, v);
                    let right = alg.basis.block(top - deg, v, c.d.nu[u] - 1);
                    if left.len() != right.len() {
                        out.push(miss(format!("{}: block sizes differ at deg {deg}", c.name)));
                        continue;
                    }
                    if left.is_empty() {
                        continue;
                    }
                    let g = Matrix::from_rows(
                        left.iter()
                            .map(|&x| {
                                right
                                    .iter()
                                    .map(|&y| {
                                        let (xe, ye) = (Elem::basis(x), Elem::basis(y));
                                        let p = alg.pair(&xe, &ye);
                                        if p != alg.pair(&ye, &alg.eta(&xe)) {
                                            out.push(miss(format!("{}: (x,y) != (y,eta x)", c.name)));
                                        }
                                        p
                                    })
                                    .collect()
                            })
                            .collect(),
                    );
                    if g.det().is_zero() {
                        out.push(miss(format!("{}: degenerate pairing at deg {deg}", c.name)));
                    }
                }
            }
        }
        for m in 0..alg.dim() {
            if alg.eta(&alg.eta(&Elem::basis(m))) != Elem::basis(m) {
                out.push(miss(format!("{}: eta^2 != id", c.name)));
            }
        }
        let rand_elem = |rng: &mut ChaCha8Rng| {
            let mut x = Elem::zero();
            for _ in 0..rng.gen_range(1..=4) {
                x.add_term(rng.gen_range(0..alg.dim()), &q(rng.gen_range(-5..=5)));
            }
            x
        };
        for _ in 0..1000 {
            let (x, y) = (rand_elem(&mut rng), rand_elem(&mut rng));
            if alg.star(&alg.mul(&x, &y)) != alg.mul(&alg.star(&y), &alg.star(&x)) {
                out.push(miss(format!("{}: (xy)* != y* x*", c.name)));
            }
        }
        for _ in 0..1000 {
            let (x, y, z) = (rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng));
            if alg.mul(&alg.mul(&x, &y), &z) != alg.mul(&x, &alg.mul(&y, &z)) {
                out.push(miss(format!("{}: (xy)z != x(yz)", c.name)));
            }
        }
        out.extend(round_trips(c).into_iter().map(|m| miss(format!("{}: {m} does not round-trip", c.name))));
    }
    out
}

fn rt<T: serde::Serialize + serde::de::DeserializeOwned + PartialEq>(x: &T) -> bool {
    serde_json::from_str::<T>(&serde_json::to_string(x).unwrap()).is_ok_and(|y| &y == x)
}

fn round_trips(c: &Ctx) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let id = c.alg.id();
    if !rt(&report::info(id).unwrap()) {
        bad.push("info report");
    }
    if !rt(&report::basis(c.alg)) {
        bad.push("basis report");
    }
    let hr = report::hilbert(c.alg);
    if !rt(&hr) || hr.rows.iter().flatten().any(|p| Poly::parse(p).map(|x| x.to_string()) != Some(p.clone())) {
        bad.push("hilbert report");
    }
    if !rt(&report::center(c.alg).unwrap()) {
        bad.push("center report");
    }
    if !rt(&report::hh(&c.hs)) {
        bad.push("hh report");
    }
    let pr_report = report::products(&c.hs).unwrap();
    if !rt(&pr_report) || ProductTable::from_wire(&pr_report.table).as_ref() != Some(&c.table) {
        bad.push("products report");
    }
    for x in &c.hs.named {
        let w = preproj::serial::cochain_to_wire(c.alg, &x.cochain);
        if !rt(&w) || preproj::serial::cochain_from_wire(c.alg, &w).ok().as_ref() != Some(&x.cochain) {
            bad.push("cochain");
            break;
        }
    }
    for z in &c.hs.center.elements {
        let w = preproj::serial::elem_to_wire(c.alg, &z.elem);
        if !rt(&w) || preproj::serial::elem_from_wire(c.alg, &w).ok().as_ref() != Some(&z.elem) {
            bad.push("element");
            break;
        }
    }
    bad
}

fn main() {
    let algs: Vec<Algebra> = QUIVERS.iter().map(|s| Algebra::build(QuiverId::parse(s).unwrap()).unwrap()).collect();
    let cx: Vec<Ctx> = QUIVERS
        .iter()
        .zip(&algs)
        .map(|(&name, alg)| {
            let hs = Hochschild::build(alg).unwrap();
            let table = pr::full_product_table(&hs).unwrap();
            Ctx { name, d: diagram(name), alg, hs, table }
        })
        .collect();

    type Criterion = fn(&[Ctx]) -> Vec<Miss>;
    let criteria: [(&str, Criterion); 11] = [
        ("Hilbert series: closed form and printed columns", c1_hilbert),
        ("center: h_Z, generators, products", c2_center),
        ("HH^0..HH^7 dimensions, d o d = 0, degree ranges", c3_dimensions),
        ("HH^2/HH^3: ker H_A(1), relations, duality", c4_hh23),
        ("H^eta: matrices, kernels, analytic formula", c5_eta),
        ("M_alpha", c6_alpha),
        ("M_beta", c7_beta),
        ("named-element relations", c8_relations),
        ("pairings and associativity spot checks", c9_pairings),
        ("zero-product classification", c10_verdicts),
        ("property suites and JSON round trips", c11_properties),
    ];
    let mut unexpected = 0;
    let mut failed = Vec::new();
    for (k, (title, f)) in criteria.iter().enumerate() {
        let misses = f(&cx);
        let n = k + 1;
        if misses.is_empty() {
            println!("criterion {n:>2}: PASS  {title}");
            continue;
        }
        failed.push(n);
        let open = misses.iter().filter(|m| !m.pinned).count();
        let note = if open == 0 { "documented discrepancy" } else { "UNEXPECTED" };
        println!("criterion {n:>2}: FAIL  {title} ({} mismatches, {note})", misses.len());
        for m in &misses {
            println!("      {}{}", if m.pinned { "[pinned] " } else { "" }, m.msg);
        }
        unexpected += open;
    }
    println!(
        "{} of 11 criteria pass; failing: {:?}; unexpected mismatches: {unexpected}",
        11 - failed.len(),
        failed
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
