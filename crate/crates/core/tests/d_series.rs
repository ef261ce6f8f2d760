//! Closed forms along the D series, D_4 through D_10.

use preproj::hochschild::{self, Cochain, Hochschild};
use preproj::linalg::Matrix;
use preproj::products as pr;
use preproj::rational::q;
use preproj::table::Combination;
use preproj::{Algebra, Elem, QuiverId};

fn build(n: usize) -> Algebra {
    Algebra::build(QuiverId::parse(&format!("d{}", n + 1)).unwrap()).unwrap()
}

/// Runs `f` on D_{n+1} for n = 3..=9, passing n.
fn each(f: impl Fn(usize, &Hochschild)) {
    for n in 3..=9 {
        let alg = build(n);
        let hs = Hochschild::build(&alg).unwrap();
        f(n, &hs);
    }
}

#[test]
fn dimension_and_top_degree() {
    for n in 3..=9 {
        let alg = build(n);
        // dim = r h (h + 1) / 6 with r = n + 1, h = 2n.
        assert_eq!(alg.dim(), (n + 1) * 2 * n * (2 * n + 1) / 6);
        assert_eq!(alg.top(), 2 * n - 2);
        assert_eq!(alg.h(), 2 * n);
    }
}

#[test]
fn m_alpha_is_minus_n() {
    each(|n, hs| {
        let labels = preproj::catalog::f_labels(hs.alg.id());
        if n % 2 == 0 {
            assert_eq!(labels, vec![n]);
            assert_eq!(pr::m_alpha(hs).unwrap(), Matrix::from_i64(&[vec![-(n as i64)]]));
        } else {
            assert!(labels.is_empty());
            assert!(hs.dims(2).is_empty());
        }
    });
}

#[test]
fn m_beta_inverts_the_tridiagonal_matrix() {
    each(|n, hs| {
        let mb = pr::m_beta(hs).unwrap();
        let k = mb.rows;
        let mut t = Matrix::zeros(k, k);
        for i in 0..k - 1 {
            t.data[i][i + 1] = q(1);
            t.data[i + 1][i] = q(-1);
        }
        assert_eq!(mb.mul(&t), Matrix::identity(k).scale(&q(n as i64)), "d{}", n + 1);
        assert_eq!(mb, pr::m_beta_closed_form(hs.alg).unwrap());
        assert!(mb.is_skew());
        assert!(mb.to_i64().is_some());
    });
}

#[test]
fn eta_matrix_closed_form() {
    each(|n, hs| {
        let alg = hs.alg;
        let fixed: Vec<usize> = alg.roots.fixed.iter().map(|v| v + 1).collect();
        let h = hochschild::eta_signed_matrix(alg);
        for (r, &k) in fixed.iter().enumerate() {
            for (s, &l) in fixed.iter().enumerate() {
                let want = match (k >= n, l >= n) {
                    (false, false) if k % 2 == 1 && l % 2 == 1 => 2,
                    (false, false) => 0,
                    (false, true) => i64::from(k % 2 == 1),
                    (true, false) => i64::from(l % 2 == 1),
                    (true, true) if k == l => (n as i64 + 1) / 2,
                    (true, true) => -(n as i64 - 1) / 2,
                };
                assert_eq!(h.data[r][s], q(want), "d{} ({k},{l})", n + 1);
            }
        }
    });
}

#[test]
fn d3_on_vertex_cochains() {
    each(|_, hs| {
        let alg = hs.alg;
        let hm = alg.hilbert_matrix();
        for j in 0..alg.quiver.num_vertices() {
            let got = hochschild::differential(alg, 3, &Cochain::single(2, alg.vertex(j)));
            let mut w = Elem::zero();
            for i in 0..alg.quiver.num_vertices() {
                let h1 = hm.entry(i, j).eval(1);
                w.add_scaled(&alg.omega(i), &q(h1));
            }
            assert_eq!(got.values[0], w);
        }
    });
}

#[test]
fn center_products_follow_the_degree_rule() {
    for n in 3..=9 {
        let alg = build(n);
        let z = preproj::center::named_center(&alg).unwrap();
        let top = alg.top();
        for a in (4..top).step_by(4) {
            for b in (4..top).step_by(4) {
                let p = z.express(&alg, &alg.mul(&z.get(&format!("z{a}")).unwrap().elem, &z.get(&format!("z{b}")).unwrap().elem)).unwrap();
                let want = if a + b < top {
                    Combination::from_pairs(vec![(format!("z{}", a + b), q(1))])
                } else if a + b == top {
                    Combination::from_pairs(vec![(format!("w{n}"), q(1)), (format!("w{}", n + 1), q(-1))])
                } else {
                    Combination::zero()
                };
                assert_eq!(p, want, "d{}: z{a} z{b}", n + 1);
            }
        }
    }
}

#[test]
fn hh_dimensions_match_prediction() {
    each(|_, hs| {
        hs.check_dimensions().unwrap();
        hs.euler_check().unwrap();
    });
}
