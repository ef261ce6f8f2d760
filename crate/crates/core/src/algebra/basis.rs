//! Degree-by-degree monomial basis of the preprojective algebra.
//!
//! A(d) is the quotient of A(d-1) (x) arrows by the span of x * rho_v for
//! x in A(d-2). Within each (src, dst) block the candidate monomials are
//! ordered lexicographically by arrow index and the lex-smallest ones are
//! eliminated, so the surviving basis is prefix-closed.

use crate::linalg::Matrix;
use crate::quiver::DynkinQuiver;
use crate::rational::{one, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Sparse = Vec<(usize, Q)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mono {
    pub word: Vec<usize>,
    pub src: usize,
    pub dst: usize,
}

impl Mono {
    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBasis {
    pub top: usize,
    pub monos: Vec<Mono>,
    /// (degree, src, dst) -> global indices, in lex order of words.
    #[serde(with = "block_list")]
    pub blocks: BTreeMap<(usize, usize, usize), Vec<usize>>,
    /// right[b][a]: coordinates of b * a (empty when zero or incomposable).
    #[serde(with = "sparse_table")]
    pub right: Vec<Vec<Sparse>>,
}

/// JSON object keys must be strings, so the block map travels as a list.
mod block_list {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    type Key = (usize, usize, usize);

    pub fn serialize<S: Serializer>(m: &BTreeMap<Key, Vec<usize>>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Key, Vec<usize>>, D::Error> {
        Ok(Vec::<(Key, Vec<usize>)>::deserialize(d)?.into_iter().collect())
    }
}

mod sparse_table {
    use super::Sparse;
    use crate::rational::{from_wire, to_wire};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    type Wire = Vec<Vec<Vec<(usize, String)>>>;

    pub fn serialize<S: Serializer>(t: &[Vec<Sparse>], s: S) -> Result<S::Ok, S::Error> {
        let w: Wire = t
            .iter()
            .map(|row| row.iter().map(|sp| sp.iter().map(|(i, c)| (*i, to_wire(c))).collect()).collect())
            .collect();
        serde::Serialize::serialize(&w, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Sparse>>, D::Error> {
        let w: Wire = Wire::deserialize(d)?;
        w.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|sp| {
                        sp.into_iter()
                            .map(|(i, c)| from_wire(&c).map(|c| (i, c)).ok_or_else(|| D::Error::custom("bad rational")))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn block(&self, deg: usize, src: usize, dst: usize) -> &[usize] {
        self.blocks.get(&(deg, src, dst)).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self, deg: usize, src: usize, dst: usize) -> usize {
        self.block(deg, src, dst).len()
    }

    /// All basis indices from `src` to `dst`, any degree.
    pub fn between(&self, src: usize, dst: usize) -> Vec<usize> {
        (0..=self.top).flat_map(|d| self.block(d, src, dst).iter().copied()).collect()
    }

    pub fn of_degree(&self, deg: usize) -> Vec<usize> {
        self.blocks.range((deg, 0, 0)..(deg + 1, 0, 0)).flat_map(|(_, v)| v.iter().copied()).collect()
    }

    pub fn index_of_word(&self, src: usize, word: &[usize]) -> Option<usize> {
        let mut cur = src;
        for (k, &a) in word.iter().enumerate() {
            let sp = self.right[cur].get(a)?;
            match sp.as_slice() {
                [(i, c)] if *c == one() && self.monos[*i].word == word[..=k] => cur = *i,
                _ => return None,
            }
        }
        Some(cur)
    }
}

pub fn compute_basis(q: &DynkinQuiver, top: usize) -> GradedBasis {
    let r = q.num_vertices();
    let na = q.arrows.len();
    let mut monos: Vec<Mono> = (0..r).map(|v| Mono { word: vec![], src: v, dst: v }).collect();
    let mut blocks = BTreeMap::new();
    for v in 0..r {
        blocks.insert((0, v, v), vec![v]);
    }
    let mut right: Vec<Vec<Sparse>> = vec![vec![Vec::new(); na]; r];
    let mut by_degree: Vec<Vec<usize>> = vec![(0..r).collect()];

    for d in 1..=top + 1 {
        // Candidates (b, a) grouped by (src, dst) block.
        let mut cand: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for &b in &by_degree[d - 1] {
            for a in q.arrows_from(monos[b].dst) {
                cand.entry((monos[b].src, q.arrows[a].dst)).or_default().push((b, a));
            }
        }
        let mut layer = Vec::new();
        for ((src, dst), mut cols) in cand {
            cols.sort_by(|x, y| word_cmp(&monos, *x, *y));
            let col_of: BTreeMap<(usize, usize), usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            if d >= 2 {
                for &x in by_degree[d - 2].iter().filter(|&&x| monos[x].src == src) {
                    let v = monos[x].dst;
                    let mut row = vec![Q::zero(); cols.len()];
                    let mut nonzero = false;
                    for c in q.arrows_from(v) {
                        let cs = q.arrows[c].star;
                        if q.arrows[cs].dst != dst {
                            continue;
                        }
                        let sign = Q::from_integer(q.arrows[c].sign().into());
                        for (b, coeff) in &right[x][c] {
                            let j = col_of[&(*b, cs)];
                            row[j] += &sign * coeff;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
            let ncols = cols.len();
            let (pivots, reduced) = if rows.is_empty() {
                (vec![], Matrix::zeros(0, ncols))
            } else {
                let mut m = Matrix::from_rows(rows);
                let p = m.rref();
                (p, m)
            };
            let mut is_pivot = vec![None; ncols];
            for (row, &p) in pivots.iter().enumerate() {
                is_pivot[p] = Some(row);
            }
            let mut new_index = vec![usize::MAX; ncols];
            let mut block = Vec::new();
            for j in 0..ncols {
                if is_pivot[j].is_none() {
                    let (b, a) = cols[j];
                    let mut word = monos[b].word.clone();
                    word.push(a);
                    let idx = monos.len();
                    monos.push(Mono { word, src, dst });
                    right.push(vec![Vec::new(); na]);
                    new_index[j] = idx;
                    block.push(idx);
                }
            }
            for j in 0..ncols {
                let (b, a) = cols[j];
                right[b][a] = match is_pivot[j] {
                    None => vec![(new_index[j], one())],
                    Some(row) => (0..ncols)
                        .filter(|&k| is_pivot[k].is_none() && !reduced.data[row][k].is_zero())
                        .map(|k| (new_index[k], -reduced.data[row][k].clone()))
                        .collect(),
                };
            }
            if !block.is_empty() {
                layer.extend(block.iter().copied());
                blocks.insert((d, src, dst), block);
            }
        }
        by_degree.push(layer);
    }
    assert!(by_degree[top + 1].is_empty(), "degree h-1 should vanish");
    GradedBasis { top, monos, blocks, right }
}

fn word_cmp(monos: &[Mono], x: (usize, usize), y: (usize, usize)) -> std::cmp::Ordering {
    monos[x.0].word.iter().chain([&x.1]).cmp(monos[y.0].word.iter().chain([&y.1]))
}
