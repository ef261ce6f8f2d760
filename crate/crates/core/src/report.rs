//! Serializable reports behind the CLI subcommands and the Python module.
//! Rationals are "p/q" strings, polynomials are written out in t.

use crate::algebra::Algebra;
use crate::center;
use crate::error::Result;
use crate::hochschild::{self, Hochschild};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::products::{self as pr, ZeroVerdict};
use crate::quiver::{build_quiver, root_data, QuiverId};
use crate::rational::to_wire;
use crate::serial::{elem_to_wire, WireElem};
use crate::table::{WireEntry, WireTerm};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRange {
    pub index: usize,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub quiver: String,
    pub vertices: usize,
    pub h: usize,
    pub exponents: Vec<usize>,
    /// 1-based image of each vertex under nu.
    pub nu: Vec<usize>,
    pub r_plus: usize,
    pub r_minus: usize,
    /// 1-based vertices fixed by nu.
    pub fixed: Vec<usize>,
    pub top_degree: usize,
    pub degree_ranges: Vec<DegreeRange>,
    pub arrows: serde_json::Value,
}

/// Root data only; does not build the algebra.
pub fn info(id: QuiverId) -> Result<InfoReport> {
    let q = build_quiver(id.family, id.rank_param)?;
    let r = root_data(&q);
    Ok(InfoReport {
        quiver: id.to_string(),
        vertices: q.num_vertices(),
        h: r.h,
        exponents: r.exponents.clone(),
        nu: r.nu.iter().map(|v| v + 1).collect(),
        r_plus: r.r_plus,
        r_minus: r.r_minus,
        fixed: r.fixed.iter().map(|v| v + 1).collect(),
        top_degree: r.h - 2,
        degree_ranges: (0..=6)
            .map(|i| {
                let (lo, hi) = r.degree_range(i);
                DegreeRange { index: i, lo, hi }
            })
            .collect(),
        arrows: q.descriptor()["arrows"].clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisBlock {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub quiver: String,
    pub dim: usize,
    pub blocks: Vec<BasisBlock>,
}

pub fn basis(alg: &Algebra) -> BasisReport {
    let blocks = alg
        .basis
        .blocks
        .iter()
        .filter(|(_, b)| !b.is_empty())
        .map(|(&(degree, s, t), b)| BasisBlock {
            degree,
            source: s + 1,
            target: t + 1,
            monomials: b.iter().map(|&m| alg.display_elem(&crate::Elem::basis(m))).collect(),
        })
        .collect();
    BasisReport { quiver: alg.id().to_string(), dim: alg.dim(), blocks }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub quiver: String,
    /// rows[i][j] = sum over d of dim e_i A_d e_j t^d, 1-based in the text.
    pub rows: Vec<Vec<String>>,
    pub closed_form_equal: bool,
}

pub fn hilbert(alg: &Algebra) -> HilbertReport {
    let hm = alg.hilbert_matrix();
    HilbertReport {
        quiver: alg.id().to_string(),
        rows: hm.0.iter().map(|r| r.iter().map(Poly::to_string).collect()).collect(),
        closed_form_equal: hm == alg.closed_form_hilbert(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: usize,
}

fn degree_dims<I: IntoIterator<Item = (i64, usize)>>(it: I) -> Vec<DegreeDim> {
    it.into_iter().map(|(degree, dim)| DegreeDim { degree, dim }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    pub text: String,
    pub element: WireElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub quiver: String,
    pub series: Vec<DegreeDim>,
    pub predicted: Vec<DegreeDim>,
    pub generators: Vec<Generator>,
    pub products: Vec<WireEntry>,
}

pub fn center(alg: &Algebra) -> Result<CenterReport> {
    let named = center::named_center(alg)?;
    let products = center::center_products(alg, &named)?;
    let to_i = |m: std::collections::BTreeMap<usize, usize>| degree_dims(m.into_iter().map(|(d, n)| (d as i64, n)));
    Ok(CenterReport {
        quiver: alg.id().to_string(),
        series: to_i(center::hilbert_series(&named)),
        predicted: to_i(center::predicted_series(alg)),
        generators: named
            .elements
            .iter()
            .map(|e| Generator {
                name: e.name.clone(),
                degree: e.degree,
                text: alg.display_elem(&e.elem),
                element: elem_to_wire(alg, &e.elem),
            })
            .collect(),
        products: products.to_wire(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhGroup {
    pub index: usize,
    pub dims: Vec<DegreeDim>,
    pub predicted: Vec<DegreeDim>,
    pub classes: Vec<ClassInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhReport {
    pub quiver: String,
    /// Degree cap of a partial run.
    pub max_degree: Option<i64>,
    pub groups: Vec<HhGroup>,
    pub hh3_relations: Vec<Vec<WireTerm>>,
    pub hh6_relations: Vec<Vec<WireTerm>>,
    /// Scalars applied to printed representatives, as (class, "p/q").
    pub normalizations: Vec<(String, String)>,
}

pub fn hh(hs: &Hochschild) -> HhReport {
    let alg = hs.alg;
    let window = |g: &i64| hs.window.is_none_or(|m| g.abs() <= m);
    let groups = (0..hochschild::MAX_INDEX)
        .map(|i| HhGroup {
            index: i,
            dims: degree_dims(hs.dims(i)),
            predicted: degree_dims(hochschild::predicted_dims(alg, i).into_iter().filter(|(g, _)| window(g))),
            classes: hs.named.iter().filter(|c| c.index == i).map(|c| ClassInfo { name: c.name.clone(), degree: c.degree }).collect(),
        })
        .collect();
    let rel = |index: usize, g: i64| -> Vec<Vec<WireTerm>> {
        if window(&g) {
            hs.top_relations(index).iter().map(|c| c.to_wire()).collect()
        } else {
            Vec::new()
        }
    };
    HhReport {
        quiver: alg.id().to_string(),
        max_degree: hs.window,
        groups,
        hh3_relations: rel(3, -2),
        hh6_relations: rel(6, -(alg.h() as i64) - 2),
        normalizations: hs.normalizations.iter().map(|(n, c)| (n.clone(), to_wire(c))).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductsReport {
    pub quiver: String,
    /// Labels i of f_i, h_i (rows and columns of M_alpha).
    pub f_labels: Vec<usize>,
    /// Labels i of eps_i, phi0(w_i) (rows and columns of M_beta).
    pub eps_labels: Vec<usize>,
    /// 1-based vertices indexing kappa and H^eta.
    pub fixed: Vec<usize>,
    pub m_alpha: Option<Matrix>,
    pub m_beta: Matrix,
    pub kappa: Matrix,
    pub h_eta: Matrix,
    pub verdicts: Vec<ZeroVerdict>,
    pub table: Vec<WireEntry>,
}

pub fn products(hs: &Hochschild) -> Result<ProductsReport> {
    let alg = hs.alg;
    let id = alg.id();
    let f_labels = crate::catalog::f_labels(id);
    Ok(ProductsReport {
        quiver: id.to_string(),
        m_alpha: if f_labels.is_empty() { None } else { Some(pr::m_alpha(hs)?) },
        f_labels,
        eps_labels: crate::catalog::epsilons(id).into_iter().map(|(i, _)| i).collect(),
        fixed: alg.roots.fixed.iter().map(|v| v + 1).collect(),
        m_beta: pr::m_beta(hs)?,
        kappa: pr::kappa_matrix(alg)?,
        h_eta: hochschild::eta_signed_matrix(alg),
        verdicts: pr::zero_verdicts(hs)?,
        table: pr::full_product_table(hs)?.to_wire(),
    })
}
