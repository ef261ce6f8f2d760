//! Text and LaTeX renderings of the reports.

use preproj::linalg::Matrix;
use preproj::rational::display;
use preproj::report::*;
use preproj::table::WireTerm;
use preproj::verify::Report;
use std::fmt::Write;

fn terms(t: &[WireTerm]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, w) in t.iter().enumerate() {
        let c = preproj::rational::from_wire(&w.coeff).expect("wire coefficient");
        let neg = c < num_traits::Zero::zero();
        let a = preproj::rational::abs(&c);
        s += match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        if a != preproj::rational::one() {
            s += &display(&a);
            s += " ";
        }
        s += &w.name;
    }
    s
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.data.iter().map(|r| r.iter().map(display).collect()).collect()
}

fn text_matrix(rows: &[Vec<String>], indent: &str) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "{indent}[ {} ]", cells.join(" "));
    }
    s
}

/// Exponents of two or more digits need braces.
fn tex_poly(p: &str) -> String {
    let mut out = String::new();
    let mut chars = p.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            if digits.len() > 1 {
                let _ = write!(out, "{{{digits}}}");
            } else {
                out += &digits;
            }
        }
    }
    out
}

fn tex_matrix(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let mut s = format!("\\left(\n\\begin{{array}}{{{}}}\n", "c".repeat(cols.max(1)));
    let body: Vec<String> = rows.iter().map(|r| r.join("&")).collect();
    s += &body.join("\\\\\n");
    s += "\n\\end{array}\n\\right)";
    s
}

fn tex_name(n: &str) -> String {
    // theta0 -> \theta_{0}, phi0(w3) -> \varphi_0(\omega_{3}), zeta12 -> \zeta_{12}
    let greek = [("theta", "\\theta"), ("zeta", "\\zeta"), ("psi", "\\psi"), ("eps", "\\varepsilon"), ("phi", "\\varphi")];
    for (g, t) in greek {
        if let Some(rest) = n.strip_prefix(g) {
            let (idx, tail) = rest.split_at(rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len()));
            return format!("{t}_{{{idx}}}{}", tex_name_tail(tail));
        }
    }
    for (p, t) in [("z", "z"), ("w", "\\omega"), ("f", "f"), ("h", "h")] {
        if let Some(rest) = n.strip_prefix(p) {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                return format!("{t}_{{{rest}}}");
            }
        }
    }
    format!("\\mathrm{{{n}}}")
}

fn tex_name_tail(tail: &str) -> String {
    match tail.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(inner) => format!("({})", tex_name(inner)),
        None => tail.to_string(),
    }
}

fn tex_terms(t: &[WireTerm]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, w) in t.iter().enumerate() {
        let c = preproj::rational::from_wire(&w.coeff).expect("wire coefficient");
        let neg = c < num_traits::Zero::zero();
        let a = preproj::rational::abs(&c);
        s += match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => "-",
            (_, false) => "+",
        };
        if a != preproj::rational::one() {
            s += &display(&a);
        }
        s += &tex_name(&w.name);
    }
    s
}

fn dims(d: &[DegreeDim]) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter().map(|x| format!("{}@{}", x.dim, x.degree)).collect::<Vec<_>>().join(" ")
}

pub fn info_text(r: &InfoReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {} vertices, h = {}, top degree {}", r.quiver, r.vertices, r.h, r.top_degree);
    let _ = writeln!(s, "  exponents: {:?}", r.exponents);
    let _ = writeln!(s, "  nu: {:?} ({})", r.nu, if r.nu.iter().enumerate().all(|(i, &v)| v == i + 1) { "trivial" } else { "nontrivial" });
    let _ = writeln!(s, "  r+ = {}, r- = {}, fixed vertices F = {:?}", r.r_plus, r.r_minus, r.fixed);
    let _ = writeln!(s, "  degree ranges of HH^i:");
    for d in &r.degree_ranges {
        let _ = writeln!(s, "    HH^{}: [{}, {}]", d.index, d.lo, d.hi);
    }
    s
}

pub fn info_latex(r: &InfoReport) -> String {
    let mut s = format!("% {}\nh={},\\quad m_i\\in\\{{{}\\}}\n\\[\n\\begin{{array}}{{c|", r.quiver, r.h, join(&r.exponents));
    s += &"c".repeat(r.degree_ranges.len());
    s += "}\ni";
    for d in &r.degree_ranges {
        let _ = write!(s, "&{}", d.index);
    }
    s += "\\\\\\hline\n\\deg HH^i";
    for d in &r.degree_ranges {
        if d.lo == d.hi {
            let _ = write!(s, "&{}", d.lo);
        } else {
            let _ = write!(s, "&[{},{}]", d.lo, d.hi);
        }
    }
    s += "\n\\end{array}\n\\]\n";
    s
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn basis_text(r: &BasisReport) -> String {
    let mut s = format!("{}: dim A = {}\n", r.quiver, r.dim);
    for b in &r.blocks {
        let _ = writeln!(s, "  deg {} e{} A e{}: {}", b.degree, b.source, b.target, b.monomials.join(", "));
    }
    s
}

pub fn basis_latex(r: &BasisReport) -> String {
    let mut s = format!("% {}: dim A = {}\n\\begin{{itemize}}\n", r.quiver, r.dim);
    for b in &r.blocks {
        let mons: Vec<String> = b.monomials.iter().map(|m| m.replace('*', "^*")).collect();
        let _ = writeln!(s, "\\item $e_{{{}}}A_{{{}}}e_{{{}}}$: ${}$", b.source, b.degree, b.target, mons.join(",\\ "));
    }
    s += "\\end{itemize}\n";
    s
}

pub fn hilbert_text(r: &HilbertReport) -> String {
    let mut s = format!("{}: H_A(t), closed form {}\n", r.quiver, if r.closed_form_equal { "agrees" } else { "DISAGREES" });
    for (i, row) in r.rows.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let _ = writeln!(s, "  ({}, {}): {p}", i + 1, j + 1);
        }
    }
    s
}

/// One column vector per vertex.
pub fn hilbert_latex(r: &HilbertReport) -> String {
    let n = r.rows.len();
    let mut s = format!("% {}: columns of H_A(t)\n", r.quiver);
    for j in 0..n {
        let col: Vec<Vec<String>> = (0..n).map(|i| vec![tex_poly(&r.rows[i][j])]).collect();
        let _ = writeln!(s, "\\[\nH_A(t)_{{-,{}}}={}\n\\]", j + 1, tex_matrix(&col));
    }
    s
}

pub fn center_text(r: &CenterReport) -> String {
    let mut s = format!("{}: h_Z(t) = ", r.quiver);
    let series: Vec<String> = r.series.iter().map(|d| format!("{}t^{}", d.dim, d.degree)).collect();
    s += &series.join(" + ");
    s += if r.series == r.predicted { " (as predicted)\n" } else { " (DIFFERS from prediction)\n" };
    for g in &r.generators {
        let _ = writeln!(s, "  {} (deg {}) = {}", g.name, g.degree, g.text);
    }
    for e in r.products.iter().filter(|e| !e.result.is_empty()) {
        let _ = writeln!(s, "  {} {} = {}", e.left, e.right, terms(&e.result));
    }
    s
}

pub fn center_latex(r: &CenterReport) -> String {
    let mut s = format!("% {}\n\\begin{{eqnarray*}}\n", r.quiver);
    let series: Vec<String> = r.series.iter().map(|d| format!("{}t^{{{}}}", if d.dim == 1 { String::new() } else { d.dim.to_string() }, d.degree)).collect();
    let _ = writeln!(s, "h_Z(t)&=&{}\\\\", series.join("+"));
    for e in r.products.iter().filter(|e| !e.result.is_empty()) {
        let _ = writeln!(s, "{}{}&=&{}\\\\", tex_name(&e.left), tex_name(&e.right), tex_terms(&e.result));
    }
    s += "\\end{eqnarray*}\n";
    s
}

pub fn hh_text(r: &HhReport) -> String {
    let mut s = format!("{}:{}\n", r.quiver, r.max_degree.map_or(String::new(), |m| format!(" partial, |degree| <= {m}")));
    for g in &r.groups {
        let ok = if g.dims == g.predicted { "" } else { "  DIFFERS from prediction" };
        let _ = writeln!(s, "  HH^{}: {} (dim@degree){ok}", g.index, dims(&g.dims));
        if !g.classes.is_empty() {
            let names: Vec<String> = g.classes.iter().map(|c| format!("{}[{}]", c.name, c.degree)).collect();
            let _ = writeln!(s, "    classes: {}", names.join(", "));
        }
    }
    for (i, rels) in [(3, &r.hh3_relations), (6, &r.hh6_relations)] {
        if !rels.is_empty() {
            let shown: Vec<String> = rels.iter().map(|t| format!("{} = 0", terms(t))).collect();
            let _ = writeln!(s, "  relations in HH^{i}: {}", shown.join(", "));
        }
    }
    let norms: Vec<String> = r.normalizations.iter().filter(|(_, c)| c != "1/1").map(|(n, c)| format!("{n} x {c}")).collect();
    if !norms.is_empty() {
        let _ = writeln!(s, "  rescaled printed representatives: {}", norms.join(", "));
    }
    s
}

pub fn hh_latex(r: &HhReport) -> String {
    let mut s = format!("% {}\n\\begin{{eqnarray*}}\n", r.quiver);
    for g in &r.groups {
        let parts: Vec<String> = g.dims.iter().map(|d| format!("{}t^{{{}}}", d.dim, d.degree)).collect();
        let _ = writeln!(s, "h_{{HH^{}}}(t)&=&{}\\\\", g.index, if parts.is_empty() { "0".into() } else { parts.join("+") });
    }
    s += "\\end{eqnarray*}\n";
    s
}

pub fn products_text(r: &ProductsReport) -> String {
    let mut s = format!("{}:\n", r.quiver);
    if let Some(m) = &r.m_alpha {
        let _ = writeln!(s, "  M_alpha (f_i over h_j, i, j in {:?}):", r.f_labels);
        s += &text_matrix(&matrix_rows(m), "    ");
    }
    let _ = writeln!(s, "  M_beta (columns theta0 eps_j over phi0(w_i), i, j in {:?}):", r.eps_labels);
    s += &text_matrix(&matrix_rows(&r.m_beta), "    ");
    let _ = writeln!(s, "  kappa on F = {:?}:", r.fixed);
    s += &text_matrix(&matrix_rows(&r.kappa), "    ");
    let _ = writeln!(s, "  H^eta on F:");
    s += &text_matrix(&matrix_rows(&r.h_eta), "    ");
    let _ = writeln!(s, "  blocks HH^i x HH^j:");
    for v in &r.verdicts {
        let _ = writeln!(s, "    ({}, {}) {:?}: {}", v.i, v.j, v.verdict, v.reason);
    }
    let _ = writeln!(s, "  nonzero products:");
    for e in r.table.iter().filter(|e| !e.result.is_empty()) {
        let _ = writeln!(s, "    {} {} = {}", e.left, e.right, terms(&e.result));
    }
    s
}

pub fn products_latex(r: &ProductsReport) -> String {
    let mut s = format!("% {}\n", r.quiver);
    if let Some(m) = &r.m_alpha {
        let _ = writeln!(s, "\\[\nM_\\alpha={}\n\\]", tex_matrix(&matrix_rows(m)));
    }
    let _ = writeln!(s, "\\[\nM_\\beta={}\n\\]", tex_matrix(&matrix_rows(&r.m_beta)));
    let _ = writeln!(s, "\\[\n(\\kappa_{{k,l}})_{{k,l}}={}\n\\]", tex_matrix(&matrix_rows(&r.kappa)));
    let _ = writeln!(s, "\\[\nH_A^\\eta={}\n\\]", tex_matrix(&matrix_rows(&r.h_eta)));
    s += "\\begin{eqnarray*}\n";
    for e in r.table.iter().filter(|e| e.i > 0 && !e.result.is_empty()) {
        let _ = writeln!(s, "{}{}&=&{}\\\\", tex_name(&e.left), tex_name(&e.right), tex_terms(&e.result));
    }
    s += "\\end{eqnarray*}\n";
    s
}

pub fn verify_text(r: &Report) -> String {
    let mut s = String::new();
    let failed = r.failures().count();
    let _ = writeln!(
        s,
        "{}: {} checks, {} failed{}",
        r.quiver,
        r.checks.len(),
        failed,
        if r.partial { " (partial)" } else { "" }
    );
    for c in &r.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.pass {
            let _ = writeln!(s, "  {status} [{:>2}] {}", c.criterion, c.name);
        } else {
            let _ = writeln!(s, "  {status} [{:>2}] {}\n         {}", c.criterion, c.name, c.detail);
        }
    }
    s
}

pub fn verify_summary(rs: &[Report]) -> String {
    let mut s = String::from("summary:\n");
    for r in rs {
        let failed = r.failures().count();
        let _ = writeln!(
            s,
            "  {:<4} {:>3} checks  {}{}",
            r.quiver,
            r.checks.len(),
            if failed == 0 { "all pass".to_string() } else { format!("{failed} FAILED") },
            if r.partial { "  (partial)" } else { "" }
        );
    }
    s
}
