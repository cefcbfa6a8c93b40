use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition; trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 0-based, padded with zeros.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as i64)
            .collect();
        Partition { parts }
    }

    /// Whether the Young diagram of `other` lies inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The parts padded with zeros to exactly `k` entries.
    pub fn padded(&self, k: usize) -> Result<Vec<i64>> {
        if self.len() > k {
            return Err(Error::Dimension(format!("{self} has more than {k} rows")));
        }
        let mut v = self.parts.clone();
        v.resize(k, 0);
        Ok(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, by
/// increasing size and then reverse lexicographically.
pub fn partitions_in_box(rows: usize, cols: i64) -> Vec<Partition> {
    fn rec(rows: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if !cur.is_empty() {
            out.push(Partition { parts: cur.clone() });
        }
        if cur.len() == rows {
            return;
        }
        for p in (1..=cap).rev() {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![Partition::empty()];
    rec(rows, cols.max(0), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
    out
}

/// Summands `(γ, γ′)` of `⋀(V₀* ⊗ V₁) = ⊕_γ S_γ(V₀)* ⊗ S_{γ′}(V₁)`: every
/// `γ` in the `m × n` box with its conjugate.
pub fn cauchy_summands(m: usize, n: usize) -> Vec<(Partition, Partition)> {
    partitions_in_box(m, n as i64)
        .into_iter()
        .map(|g| {
            let c = g.conjugate();
            (g, c)
        })
        .collect()
}
