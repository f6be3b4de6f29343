//! The multiset-tableau bijection: sends a sequence in `[n]^k` to a
//! standard Young tableau and a standard multiset tableau of the same shape
//! via Knuth RSK on a two-line array of position blocks.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::di::IntegerSequence;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rsk::{inverse_rsk, rsk, TwoLineArray};
use crate::tableau::StandardYoungTableau;

/// A cell label: a (possibly empty) subset of `[k]`. Ordered by maximum with
/// the empty set first; disjoint nonempty cells always compare strictly.
/// Equal maxima break ties lexicographically so the order is total.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultisetCell {
    elements: BTreeSet<usize>,
}

impl MultisetCell {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        MultisetCell {
            elements: elements.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        MultisetCell {
            elements: BTreeSet::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.elements.last().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
}

impl Ord for MultisetCell {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.max(), other.max()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.elements.cmp(&other.elements)),
        }
    }
}

impl PartialOrd for MultisetCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for MultisetCell {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        let cell = MultisetCell::new(v.iter().copied());
        if cell.len() != v.len() {
            return Err(Error::InvalidTableau("repeated element in a cell".into()));
        }
        Ok(cell)
    }
}

impl From<MultisetCell> for Vec<usize> {
    fn from(c: MultisetCell) -> Vec<usize> {
        c.elements.into_iter().collect()
    }
}

impl fmt::Debug for MultisetCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A filling of a Young diagram by disjoint subsets of `[k]` covering `[k]`,
/// weakly increasing along rows (ties only between empty cells) and strictly
/// increasing down columns.
///
/// Serialized as `{"rows": [[[..], ..], ..]}` with `[]` for the empty cell.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MtRepr", into = "MtRepr")]
pub struct MultisetTableau {
    rows: Vec<Vec<MultisetCell>>,
}

#[derive(Serialize, Deserialize)]
struct MtRepr {
    rows: Vec<Vec<MultisetCell>>,
}

impl MultisetTableau {
    pub fn new(rows: Vec<Vec<MultisetCell>>) -> Result<Self> {
        let t = MultisetTableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for row in &self.rows {
            for cell in row {
                for e in cell.elements() {
                    if !seen.insert(e) {
                        return Err(Error::InvalidTableau(format!(
                            "element {e} occurs in two cells"
                        )));
                    }
                    total += 1;
                }
            }
        }
        let k = total;
        if seen.iter().any(|&e| e == 0 || e > k) {
            return Err(Error::InvalidTableau(format!(
                "cell elements must cover exactly 1..={k}"
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    let prev = &row[c - 1];
                    let ok = prev < cell || (prev.is_empty() && cell.is_empty());
                    if !ok {
                        return Err(Error::InvalidTableau(format!(
                            "row {r} not increasing at column {c}"
                        )));
                    }
                }
            }
            if r > 0 {
                if self.rows[r - 1].len() < row.len() {
                    return Err(Error::InvalidTableau(
                        "row lengths must weakly decrease".into(),
                    ));
                }
                for (c, cell) in row.iter().enumerate() {
                    if &self.rows[r - 1][c] >= cell {
                        return Err(Error::InvalidTableau(format!(
                            "column {c} not strictly increasing at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<MultisetCell>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("validated row lengths weakly decrease")
    }

    /// Total number of elements, i.e. the `k` of the content `[k]`.
    pub fn content_size(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(MultisetCell::len)
            .sum()
    }
}

impl TryFrom<MtRepr> for MultisetTableau {
    type Error = Error;
    fn try_from(r: MtRepr) -> Result<Self> {
        MultisetTableau::new(r.rows)
    }
}

impl From<MultisetTableau> for MtRepr {
    fn from(t: MultisetTableau) -> MtRepr {
        MtRepr { rows: t.rows }
    }
}

impl fmt::Debug for MultisetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:?}")?;
            }
        }
        Ok(())
    }
}

/// The two-line array of a sequence: empty blocks paired with the unused
/// values in increasing order, then the position blocks `M_r` paired with
/// their value `r`, sorted by block maximum.
fn two_line_array(seq: &IntegerSequence) -> TwoLineArray<MultisetCell> {
    let n = seq.n();
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (j, &v) in seq.entries().iter().enumerate() {
        positions[v].push(j + 1);
    }
    let mut pairs: Vec<(MultisetCell, usize)> = Vec::with_capacity(n);
    for r in 1..=n {
        if positions[r].is_empty() {
            pairs.push((MultisetCell::empty(), r));
        }
    }
    let mut blocks: Vec<(MultisetCell, usize)> = (1..=n)
        .filter(|&r| !positions[r].is_empty())
        .map(|r| (MultisetCell::new(positions[r].iter().copied()), r))
        .collect();
    blocks.sort_by(|a, b| a.0.cmp(&b.0));
    pairs.extend(blocks);
    TwoLineArray::new(pairs).expect("blocks sorted by maximum with distinct bottoms")
}

/// Forward map: Knuth RSK on the block array. Returns the insertion tableau
/// (an SYT of content `[n]`) and the recording multiset tableau of content
/// `[k]`.
pub fn cossz_forward(seq: &IntegerSequence) -> (StandardYoungTableau, MultisetTableau) {
    let array = two_line_array(seq);
    let (p, recording) = rsk(&array);
    let s = StandardYoungTableau::from_partial(p).expect("bottom line is a permutation of 1..n");
    let t = MultisetTableau::new(recording).expect("RSK recordings are standard");
    (s, t)
}

/// Inverse map: un-insert the recording cells in decreasing order to recover
/// the block array, then place each block's value at its positions.
pub fn cossz_inverse(
    s: &StandardYoungTableau,
    t: &MultisetTableau,
) -> Result<IntegerSequence> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "insertion shape {} vs recording shape {}",
            s.shape(),
            t.shape()
        )));
    }
    let array = inverse_rsk(s.as_partial(), t.rows())?;
    let n = array.pairs().len();
    let k = t.content_size();
    let mut entries = vec![0usize; k];
    for (cell, value) in array.pairs() {
        for pos in cell.elements() {
            entries[pos - 1] = *value;
        }
    }
    IntegerSequence::new(n, entries)
}

/// Does the image shape have first row exactly `n - k`? Holds precisely for
/// the suffixes of member permutations; any repeated value rules it out.
pub fn cossz_maxshape(seq: &IntegerSequence) -> bool {
    let (s, _) = cossz_forward(seq);
    s.shape().first() + seq.k() == seq.n()
}
