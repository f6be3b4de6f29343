//! Integer partitions and their Young diagrams (English notation).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
///
/// Serialized as a bare JSON array, e.g. `[3,2,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Hook `(base, 1^arm)`.
    pub fn hook(base: usize, arm: usize) -> Result<Self> {
        let mut parts = vec![base];
        parts.extend(std::iter::repeat_n(1, arm));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `r`, or 0 past the last row.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// The partition with its first part removed.
    pub fn star(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Containment of Young diagrams: every row of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(r, &len)| self.part(r) >= len)
    }

    /// Rows whose last box is removable (a corner of the diagram).
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows())
            .filter(|&r| self.parts[r] > self.part(r + 1))
            .collect()
    }

    /// Rows where a box may be appended and keep the diagram a partition.
    /// Includes the (empty) row just below the last one.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.rows())
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .collect()
    }

    pub fn with_box_removed(&self, row: usize) -> Result<Partition> {
        if row >= self.rows() || self.parts[row] <= self.part(row + 1) {
            return Err(Error::InvalidPartition(format!(
                "no removable box in row {row} of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn with_box_added(&self, row: usize) -> Result<Partition> {
        if row > self.rows() || (row > 0 && self.part(row - 1) <= self.part(row)) {
            return Err(Error::InvalidPartition(format!(
                "cannot add a box in row {row} of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Ok(Partition { parts })
    }

    /// The unique row where `self` has one more box than `smaller`, if the
    /// two shapes differ by exactly one box.
    pub fn single_box_difference(&self, smaller: &Partition) -> Option<usize> {
        if self.size() != smaller.size() + 1 || !self.contains(smaller) {
            return None;
        }
        (0..self.rows()).find(|&r| self.part(r) == smaller.part(r) + 1)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Hook length of the box at `(row, col)` (0-indexed).
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = (row + 1..self.rows()).filter(|&r| self.parts[r] > col).count();
        arm + leg + 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
