//! Named elements, linear combinations of them, and product tables.

use crate::algebra::Elem;
use crate::rational::{from_wire, to_wire, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A linear combination of named classes, in a fixed name order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination(pub Vec<(String, Q)>);

impl Combination {
    pub fn zero() -> Self {
        Combination(Vec::new())
    }

    pub fn single(name: &str, c: Q) -> Self {
        Combination::from_pairs(vec![(name.to_string(), c)])
    }

    /// Drops zero coefficients and merges repeated names (first position wins).
    pub fn from_pairs(pairs: Vec<(String, Q)>) -> Self {
        let mut out: Vec<(String, Q)> = Vec::new();
        for (n, c) in pairs {
            match out.iter_mut().find(|(m, _)| *m == n) {
                Some((_, d)) => *d += c,
                None => out.push((n, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Combination(out)
    }

    pub fn from_coords(names: &[String], coords: &[Q]) -> Self {
        Combination::from_pairs(names.iter().cloned().zip(coords.iter().cloned()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, name: &str) -> Q {
        self.0.iter().find(|(n, _)| n == name).map_or_else(Q::zero, |(_, c)| c.clone())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Combination::from_pairs(self.0.iter().map(|(n, x)| (n.clone(), x * c)).collect())
    }

    pub fn add(&self, other: &Combination) -> Self {
        Combination::from_pairs(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn to_wire(&self) -> Vec<WireTerm> {
        self.0.iter().map(|(n, c)| WireTerm { name: n.clone(), coeff: to_wire(c) }).collect()
    }

    pub fn from_wire(terms: &[WireTerm]) -> Option<Self> {
        let pairs = terms.iter().map(|t| from_wire(&t.coeff).map(|c| (t.name.clone(), c))).collect::<Option<Vec<_>>>()?;
        Some(Combination::from_pairs(pairs))
    }
}

impl std::fmt::Display for Combination {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (n, c)) in self.0.iter().enumerate() {
            let neg = *c < Q::zero();
            let a = crate::rational::abs(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if a != crate::rational::one() {
                write!(f, "{}", crate::rational::display(&a))?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub name: String,
    pub coeff: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ChainFormula,
    Associativity,
    DegreeZero,
    /// Zero by an argument outside the chain computation.
    #[serde(rename = "paper-asserted")]
    Asserted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub left: String,
    pub right: String,
    pub result: Combination,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireEntry {
    pub i: usize,
    pub j: usize,
    pub left: String,
    pub right: String,
    pub result: Vec<WireTerm>,
    pub provenance: Provenance,
}

impl ProductEntry {
    pub fn to_wire(&self) -> WireEntry {
        WireEntry {
            i: self.i,
            j: self.j,
            left: self.left.clone(),
            right: self.right.clone(),
            result: self.result.to_wire(),
            provenance: self.provenance,
        }
    }

    pub fn from_wire(w: &WireEntry) -> Option<Self> {
        Some(ProductEntry {
            i: w.i,
            j: w.j,
            left: w.left.clone(),
            right: w.right.clone(),
            result: Combination::from_wire(&w.result)?,
            provenance: w.provenance,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductTable {
    pub entries: Vec<ProductEntry>,
}

impl ProductTable {
    pub fn get(&self, left: &str, right: &str) -> Option<&ProductEntry> {
        self.entries.iter().find(|e| e.left == left && e.right == right)
    }

    pub fn push(&mut self, e: ProductEntry) {
        self.entries.push(e);
    }

    pub fn to_wire(&self) -> Vec<WireEntry> {
        self.entries.iter().map(ProductEntry::to_wire).collect()
    }

    pub fn from_wire(w: &[WireEntry]) -> Option<Self> {
        Some(ProductTable { entries: w.iter().map(ProductEntry::from_wire).collect::<Option<Vec<_>>>()? })
    }
}

/// An algebra element with a name and a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedElem {
    pub name: String,
    pub degree: usize,
    pub elem: Elem,
}
