//! Reference expressions for named elements, per quiver, in parser syntax.

use crate::quiver::{Family, QuiverId};

/// How a named central element is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralSpec {
    Text(String),
    /// Square of the central element of the given degree.
    SquareOf(usize),
}

fn join_words(words: impl IntoIterator<Item = String>) -> String {
    words.into_iter().collect::<Vec<_>>().join(" ")
}

fn up(i: usize, j: usize) -> String {
    join_words((i..=j).map(|k| format!("a{k}*")))
}

fn down(j: usize, i: usize) -> String {
    join_words((i..=j).rev().map(|k| format!("a{k}")))
}

/// The D-series building blocks; `None` where the element is declared zero.
pub mod dseries {
    use super::{down, up};

    pub fn b(n: usize, i: usize, j: usize) -> Option<String> {
        if j == 0 {
            return Some(format!("e{i}"));
        }
        let max = (i - 1).min((n - 1).saturating_sub(i));
        (j <= max).then(|| format!("{} {}", up(i, i + j - 1), super::down(i + j - 1, i)))
    }

    pub fn c(n: usize, i: usize, j: usize) -> Option<String> {
        let loops = format!("(a{m} a{m}*)^{j}", m = n - 2);
        if i == n - 1 {
            return (1..=n - 2).contains(&j).then_some(loops);
        }
        ((1..=n - 2).contains(&i) && (1..i).contains(&j)).then(|| format!("{} {loops} {}", up(i, n - 2), down(n - 2, i)))
    }

    /// c'_i, the top-degree element at vertex i < n; the path returns to i.
    pub fn c_prime(n: usize, i: usize) -> String {
        let head = if i <= n - 2 { up(i, n - 2) + " " } else { String::new() };
        let tail = if i <= n - 2 { " ".to_string() + &down(n - 2, i) } else { String::new() };
        format!("{head}a{p}* a{p} (a{m} a{m}*)^{e}{tail}", p = n - 1, m = n - 2, e = i - 1)
    }

    pub fn d(n: usize, j: usize) -> String {
        if j == 0 {
            format!("e{n}")
        } else {
            format!("(a{p} a{n}* a{n} a{p}*)^{j}", p = n - 1)
        }
    }

    pub fn d_prime(n: usize, j: usize) -> String {
        if j == 0 {
            format!("e{}", n + 1)
        } else {
            format!("(a{n} a{p}* a{p} a{n}*)^{j}", p = n - 1)
        }
    }

    /// z_{4j} as a sum of the blocks above.
    pub fn z(n: usize, j: usize) -> String {
        let mut terms: Vec<String> = Vec::new();
        for i in 2 * j + 1..=n - 1 - 2 * j {
            terms.extend(b(n, i, 2 * j));
        }
        for i in 0..2 * j {
            terms.extend(c(n, n - 1 - i, 2 * j - i));
        }
        terms.push(d(n, j));
        terms.push(d_prime(n, j));
        terms.join(" + ")
    }
}

/// Central generators below the top degree, by degree.
pub fn central_elements(id: QuiverId) -> Vec<(usize, CentralSpec)> {
    let t = |s: &str| CentralSpec::Text(s.to_string());
    match (id.family, id.rank_param) {
        (Family::D, n) => (0..)
            .map(|j| 4 * j)
            .take_while(|&d| d < 2 * n - 2)
            .map(|d| (d, CentralSpec::Text(dseries::z(n, d / 4))))
            .collect(),
        (Family::E, 6) => vec![
            (6, t("a1 a2 x3 a2* a1* - a2 x3^2 a2* - x5 x3 x5 + a3 x2^2 a3* - a4 a3 x2 a3* a4*")),
            (8, t("-a2 x5 x3 x5 a2* - x5 x3^2 x5 - a3 x5 x2 x5 a3*")),
        ],
        (Family::E, 7) => vec![
            (
                8,
                t("-a1 a2 a3 x6 a3* a2* a1* - a2 a3 x4^2 a3* a2* - a3 x6 x4 x6 a3* - x4 x3^2 x4 \
                   - a4 x4 x6 x4 a4* + a6 x4 x6 x4 a6*"),
            ),
            (
                12,
                t("-a3 x4 x6 x4 x6 x4 a3* - x4 x6 x4^2 x6 x4 + a4 x6 x4 x6 x4 x6 a4* + a6 x4 x6 x4 x6 x4 a6*"),
            ),
        ],
        _ => vec![
            (
                12,
                t("a1 a2 a3 x6 x4 x6 a3* a2* a1* + a2 a3 x4 x3^2 x4 a3* a2* + a3 (x4 x6)^2 x4 a3* \
                   + (x3 x4 x3)^2 - a4 (x6 x4)^2 x6 a4* + a5 a4 x6 x4^2 x6 a4* a5* - a6 (x4 x6)^2 x4 a6*"),
            ),
            (
                20,
                t("-a1 a2 a3 x4^2 x3^3 x4^2 a3* a2* a1* - a2 a3 (x6 x4)^2 (x4 x6)^2 a3* a2* \
                   + a3 (x6 x4)^4 x6 a3* - (x4 x6)^5 + (x6 x4^2)^3 x6 - (x6 x4)^5 \
                   - a4 (x4 x6 x4)^3 a4* - a6 (x4 x6)^4 x4 a6*"),
            ),
            (24, CentralSpec::SquareOf(12)),
        ],
    }
}

/// Reference expressions for top-degree central elements, as (vertex, text).
/// For D these are c'_i and the tips; E quivers only fix the anchor.
pub fn top_central_elements(id: QuiverId) -> Vec<(usize, String)> {
    match (id.family, id.rank_param) {
        (Family::D, n) => {
            let mut v: Vec<(usize, String)> = (1..n).map(|i| (i, dseries::c_prime(n, i))).collect();
            if n % 2 == 1 {
                let m = (n - 1) / 2;
                v.push((n, dseries::d(n, m)));
                v.push((n + 1, format!("-{}", dseries::d_prime(n, m))));
            }
            v
        }
        (Family::E, 6) => vec![(3, "a3* a3 (a2* a2 a3* a3)^2".into())],
        (Family::E, 7) => vec![(4, "(a4* a4 a3* a3)^4".into())],
        _ => vec![(5, "(a4* a4 a3* a3)^7".into())],
    }
}

/// zeta_k, keyed by the degree k of the matching central element, as tensors.
pub fn zetas(id: QuiverId) -> Vec<(usize, String)> {
    // E7 and E8 share one shape; `long` pairs a degree with its exponent.
    let e78 = |top: usize, long: &[(usize, usize)]| -> Vec<(usize, String)> {
        let mut v = vec![(
            0,
            format!("a4* | a4 a3* a3 (a4* a4 a3* a3)^{top} + a4 | a3* a3 a4* (a4 a3* a3 a4*)^{top}"),
        )];
        for &(k, e) in long {
            v.push((
                k,
                format!(
                    "1/2 [ a4* | a4 a3* a3 (a4* a4 a3* a3)^{e} + a4 | a3* a3 a4* (a4 a3* a3 a4*)^{e} \
                     - a3* | a3 a4* a4 (a3* a3 a4* a4)^{e} - a3 | a4* a4 a3* (a3 a4* a4 a3*)^{e} ]"
                ),
            ));
        }
        v
    };
    match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 1 => (0..(n - 1) / 2)
            .map(|k| {
                let e = (n - 3) / 2 - k;
                let (p, q) = (n - 1, n);
                let head = format!(
                    "a{p}* | a{p} a{q}* a{q} (a{p}* a{p} a{q}* a{q})^{e} + a{p} | a{q}* a{q} a{p}* (a{p} a{q}* a{q} a{p}*)^{e}"
                );
                if k == 0 {
                    (0, head)
                } else {
                    let tail = format!(
                        "a{q}* | a{q} a{p}* a{p} (a{q}* a{q} a{p}* a{p})^{e} + a{q} | a{p}* a{p} a{q}* (a{q} a{p}* a{p} a{q}*)^{e}"
                    );
                    (4 * k, format!("1/2 [ {head} - [ {tail} ] ]"))
                }
            })
            .collect(),
        (Family::D, n) => (0..n / 2)
            .map(|k| {
                let e = (n - 2) / 2 - k;
                let (p, q) = (n - 1, n);
                let head = format!("a{p}* | a{p} (a{q}* a{q} a{p}* a{p})^{e} + a{p} | a{q}* (a{q} a{p}* a{p} a{q}*)^{e}");
                if k == 0 {
                    (0, head)
                } else {
                    let tail =
                        format!("a{q}* | a{q} (a{p}* a{p} a{q}* a{q})^{e} + a{q} | a{p}* (a{p} a{q}* a{q} a{p}*)^{e}");
                    (4 * k, format!("1/2 [ {head} - [ {tail} ] ]"))
                }
            })
            .collect(),
        (Family::E, 6) => vec![
            (0, "a3* | a3 (a2* a2 a3* a3)^2 + a3 | a2* (a2 a3* a3 a2*)^2".into()),
            (
                6,
                "1/4 [ - a3* | a3 a2* a2 - a3 | a2* a2 a2* + a2* | a2 a2* a2 + a2 | a2* a2 a3* \
                 - a2* | a2 a3* a3 - a2 | a3* a3 a3* + a3* | a3 a3* a3 + a3 | a3* a3 a2* ]"
                    .into(),
            ),
            (8, "1/2 [ a3* | a3 + a3 | a2* - a2* | a2 - a2 | a3* ]".into()),
        ],
        (Family::E, 7) => e78(3, &[(8, 1), (12, 0)]),
        _ => e78(6, &[(12, 3), (20, 1), (24, 0)]),
    }
}

/// psi_k, keyed by k, as elements of e_v A e_nu(v).
pub fn psis(id: QuiverId) -> Vec<(usize, String)> {
    match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 1 => (0..(n - 1) / 2)
            .map(|k| (4 * k, format!("(a{p}* a{p} a{n}* a{n})^{e}", p = n - 1, e = (n - 1) / 2 - k)))
            .collect(),
        (Family::D, n) => (0..n / 2)
            .map(|k| (4 * k, format!("a{p}* a{p} (a{n}* a{n} a{p}* a{p})^{e}", p = n - 1, e = (n - 2) / 2 - k)))
            .collect(),
        (Family::E, 6) => vec![
            (0, "a3* a3 (a2* a2 a3* a3)^2".into()),
            (6, "-a3* a3 a2* a2".into()),
            (8, "a3* a3 - a2* a2".into()),
        ],
        (Family::E, 7) => vec![
            (0, "(a4* a4 a3* a3)^4".into()),
            (8, "(a4* a4 a3* a3)^2".into()),
            (12, "a4* a4 a3* a3".into()),
        ],
        _ => vec![
            (0, "(a4* a4 a3* a3)^7".into()),
            (12, "(a4* a4 a3* a3)^4".into()),
            (20, "(a4* a4 a3* a3)^2".into()),
            (24, "a4* a4 a3* a3".into()),
        ],
    }
}

/// epsilon_i as combinations of fixed vertices: (label i, [(vertex, coeff)]), 1-based.
pub fn epsilons(id: QuiverId) -> Vec<(usize, Vec<(usize, i64)>)> {
    match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 1 => {
            let mut v: Vec<(usize, Vec<(usize, i64)>)> = (2..n)
                .map(|i| if i % 2 == 0 { (i, vec![(i, 1)]) } else { (i, vec![(i, 1), (1, -1)]) })
                .collect();
            v.push((n, vec![(n, 1), (n + 1, 1), (1, -1)]));
            v
        }
        (Family::D, n) => {
            (2..n).map(|i| if i % 2 == 0 { (i, vec![(i, 1)]) } else { (i, vec![(i, 1), (1, -1)]) }).collect()
        }
        (Family::E, 6) => vec![(3, vec![(3, 1)]), (6, vec![(6, 1)])],
        (Family::E, 7) => vec![
            (1, vec![(1, 1), (7, 1)]),
            (2, vec![(2, 1)]),
            (3, vec![(3, 1), (7, 1)]),
            (4, vec![(4, 1)]),
            (5, vec![(5, 1)]),
            (6, vec![(6, 1)]),
        ],
        _ => (1..=8).map(|i| (i, vec![(i, 1)])).collect(),
    }
}

/// Labels i of the HH^2 classes f_i = [e_i - e_nu(i)].
pub fn f_labels(id: QuiverId) -> Vec<usize> {
    match (id.family, id.rank_param) {
        (Family::D, n) if n % 2 == 0 => vec![n],
        (Family::E, 6) => vec![1, 2],
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_blocks() {
        assert_eq!(dseries::b(5, 2, 1).unwrap(), "a2* a2");
        assert!(dseries::b(5, 1, 1).is_none());
        assert_eq!(dseries::c(5, 4, 2).unwrap(), "(a3 a3*)^2");
        assert_eq!(dseries::c(5, 2, 1).unwrap(), "a2* a3* (a3 a3*)^1 a3 a2");
        assert_eq!(dseries::c_prime(3, 2), "a2* a2 (a1 a1*)^1");
    }

    #[test]
    fn e7_zeta_exponents() {
        let z = zetas(QuiverId::new(Family::E, 7).unwrap());
        assert!(z[1].1.contains(")^1"));
        assert!(z[2].1.contains(")^0"));
    }
}
