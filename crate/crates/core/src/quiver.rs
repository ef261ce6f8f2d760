//! Dynkin quivers of types D and E, their doubles and root-system constants.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    D,
    E,
}

/// An arrow of the double quiver. Vertices are 0-based; labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub starred: bool,
    pub star: usize,
}

impl Arrow {
    /// +1 on Q, -1 on Q^*.
    pub fn sign(&self) -> i64 {
        if self.starred {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinQuiver {
    pub family: Family,
    /// n for D_{n+1}, 6/7/8 for E.
    pub rank_param: usize,
    pub vertices: Vec<String>,
    /// a_k then a_k^*, in increasing k.
    pub arrows: Vec<Arrow>,
}

/// Which quiver, e.g. `d5` (meaning D_5, n = 4) or `e7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuiverId {
    pub family: Family,
    pub rank_param: usize,
}

impl QuiverId {
    pub fn new(family: Family, rank_param: usize) -> Result<Self> {
        let ok = match family {
            Family::D => rank_param >= 3,
            Family::E => (6..=8).contains(&rank_param),
        };
        if !ok {
            return Err(Error::Unsupported(format!(
                "{family:?} with parameter {rank_param}; supported: D_{{n+1}} with n >= 3 (d4, d5, ...) and E6, E7, E8"
            )));
        }
        Ok(QuiverId { family, rank_param })
    }

    /// Accepts `d4`..`dN` (the diagram D_{n+1} is written `d<n+1>`) and `e6`..`e8`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Unsupported(format!("quiver {s:?}; expected d<k> with k >= 4, or e6, e7, e8"));
        let (fam, num) = s.split_at(s.chars().next().map_or(0, |c| c.len_utf8()));
        let k: usize = num.parse().map_err(|_| bad())?;
        match fam {
            "d" if k >= 4 => Self::new(Family::D, k - 1),
            "e" => Self::new(Family::E, k).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }

    pub fn num_vertices(&self) -> usize {
        match self.family {
            Family::D => self.rank_param + 1,
            Family::E => self.rank_param,
        }
    }
}

impl fmt::Display for QuiverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::D => write!(f, "d{}", self.rank_param + 1),
            Family::E => write!(f, "e{}", self.rank_param),
        }
    }
}

pub fn build_quiver(family: Family, rank_param: usize) -> Result<DynkinQuiver> {
    let id = QuiverId::new(family, rank_param)?;
    let r = id.num_vertices();
    // (label, src, dst) with 1-based vertices.
    let unstarred: Vec<(usize, usize, usize)> = match family {
        Family::D => {
            let n = rank_param;
            let mut v: Vec<_> = (1..=n - 2).map(|i| (i, i + 1, i)).collect();
            v.push((n - 1, n, n - 1));
            v.push((n, n + 1, n - 1));
            v
        }
        Family::E => match rank_param {
            6 => vec![(1, 1, 2), (2, 2, 3), (3, 4, 3), (4, 5, 4), (5, 6, 3)],
            7 => vec![(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 5, 4), (5, 6, 5), (6, 7, 4)],
            _ => vec![(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 6, 5), (5, 7, 6), (6, 8, 5)],
        },
    };
    let mut arrows = Vec::new();
    for (label, s, t) in unstarred {
        let k = arrows.len();
        arrows.push(Arrow { name: format!("a{label}"), src: s - 1, dst: t - 1, starred: false, star: k + 1 });
        arrows.push(Arrow { name: format!("a{label}*"), src: t - 1, dst: s - 1, starred: true, star: k });
    }
    Ok(DynkinQuiver { family, rank_param, vertices: (1..=r).map(|i| i.to_string()).collect(), arrows })
}

impl DynkinQuiver {
    pub fn id(&self) -> QuiverId {
        QuiverId { family: self.family, rank_param: self.rank_param }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.src == v).map(|(i, _)| i)
    }

    /// Adjacency matrix of the double quiver (symmetric).
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let r = self.num_vertices();
        let mut c = vec![vec![0; r]; r];
        for a in &self.arrows {
            c[a.src][a.dst] += 1;
        }
        c
    }

    /// Structural checks: involutive star, tree shape, valences.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Internal(format!("{}: {m}", self.id())));
        for (i, a) in self.arrows.iter().enumerate() {
            let b = &self.arrows[a.star];
            if b.star != i || b.src != a.dst || b.dst != a.src || b.starred == a.starred {
                return fail("star pairing broken");
            }
        }
        let r = self.num_vertices();
        if self.arrows.len() != 2 * (r - 1) || self.arrows.iter().filter(|a| a.starred).count() != r - 1 {
            return fail("edge count");
        }
        // Connected with r-1 edges means tree.
        let adj = self.adjacency();
        let mut seen = vec![false; r];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend((0..r).filter(|&w| adj[v][w] > 0));
        }
        if seen.iter().any(|s| !s) {
            return fail("not connected");
        }
        let mut valences: Vec<i64> = adj.iter().map(|row| row.iter().sum()).collect();
        valences.sort();
        let branch = valences.iter().filter(|&&d| d == 3).count();
        if branch != 1 || valences.iter().any(|&d| d > 3) {
            return fail("expected exactly one trivalent vertex");
        }
        Ok(())
    }

    /// JSON descriptor {family, rank, vertices, arrows:[{id,src,dst,star_of}]}.
    pub fn descriptor(&self) -> serde_json::Value {
        serde_json::json!({
            "family": format!("{:?}", self.family),
            "rank": self.rank_param,
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "id": a.name,
                "src": self.vertices[a.src],
                "dst": self.vertices[a.dst],
                "star_of": if a.starred { serde_json::Value::String(self.arrows[a.star].name.clone()) } else { serde_json::Value::Null },
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootData {
    pub h: usize,
    pub exponents: Vec<usize>,
    /// 0-based involution of the vertices.
    pub nu: Vec<usize>,
    pub p: Vec<Vec<i64>>,
    pub r_plus: usize,
    pub r_minus: usize,
    /// 0-based fixed vertices of nu.
    pub fixed: Vec<usize>,
    pub c: Vec<Vec<i64>>,
}

pub fn root_data(q: &DynkinQuiver) -> RootData {
    let r = q.num_vertices();
    let (h, mut exponents, nu1): (usize, Vec<usize>, Vec<usize>) = match (q.family, q.rank_param) {
        (Family::D, n) => {
            let mut e: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
            e.push(n);
            let mut nu: Vec<usize> = (1..=n + 1).collect();
            if n % 2 == 0 {
                nu.swap(n - 1, n);
            }
            (2 * n, e, nu)
        }
        (Family::E, 6) => (12, vec![1, 4, 5, 7, 8, 11], vec![5, 4, 3, 2, 1, 6]),
        (Family::E, 7) => (18, vec![1, 5, 7, 9, 11, 13, 17], (1..=7).collect()),
        (Family::E, _) => (30, vec![1, 7, 11, 13, 17, 19, 23, 29], (1..=8).collect()),
    };
    exponents.sort();
    let nu: Vec<usize> = nu1.iter().map(|v| v - 1).collect();
    let mut p = vec![vec![0; r]; r];
    for i in 0..r {
        p[i][nu[i]] = 1;
    }
    let fixed: Vec<usize> = (0..r).filter(|&i| nu[i] == i).collect();
    let r_minus = (r - fixed.len()) / 2;
    RootData { h, exponents, nu, p, r_plus: r - r_minus, r_minus, fixed, c: q.adjacency() }
}

impl RootData {
    /// Exponents m with m < h/2.
    pub fn small_exponents(&self) -> Vec<usize> {
        self.exponents.iter().copied().filter(|&m| 2 * m < self.h).collect()
    }

    pub fn count_half(&self) -> usize {
        self.exponents.iter().filter(|&&m| 2 * m == self.h).count()
    }

    /// dim Y = |F| - #{m_i = h/2}.
    pub fn dim_y(&self) -> usize {
        self.fixed.len() - self.count_half()
    }

    /// Internal-degree range [lo, hi] of HH^i for 0 <= i <= 6.
    pub fn degree_range(&self, i: usize) -> (i64, i64) {
        let h = self.h as i64;
        match i {
            0 => (0, h - 2),
            1 => (0, h - 4),
            2 | 3 => (-2, -2),
            4 => (-h, -4),
            5 => (-h - 2, -4),
            6 => (-2 * h, -h - 2),
            _ => {
                let (lo, hi) = self.degree_range((i - 1) % 6 + 1);
                let shift = 2 * h * ((i as i64 - 1) / 6);
                (lo - shift, hi - shift)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(QuiverId::parse("d4").unwrap().rank_param, 3);
        assert_eq!(QuiverId::parse("E7").unwrap().family, Family::E);
        assert!(QuiverId::parse("a5").is_err());
        assert!(QuiverId::parse("d3").is_err());
        assert!(QuiverId::parse("e9").is_err());
        assert_eq!(QuiverId::parse("d6").unwrap().to_string(), "d6");
    }

    #[test]
    fn periodic_ranges() {
        let q = build_quiver(Family::E, 6).unwrap();
        let rd = root_data(&q);
        assert_eq!(rd.degree_range(7), (-24, -16));
        assert_eq!(rd.degree_range(10), (-12 - 24, -4 - 24));
    }
}
