//! Partial and standard Young tableaux, with enumeration and hook-length counting.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on `|shape|` for exhaustive tableau enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

#[derive(Serialize, Deserialize)]
struct RowsRepr {
    rows: Vec<Vec<usize>>,
}

/// A filling of a Young diagram with distinct positive integers that
/// increases along rows and down columns.
///
/// Serialized as `{"rows": [[...], ...]}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RowsRepr", into = "RowsRepr")]
pub struct PartialTableau {
    rows: Vec<Vec<usize>>,
}

impl PartialTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = PartialTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        PartialTableau { rows: Vec::new() }
    }

    /// The single-row tableau `1, 2, ..., n`.
    pub fn row_tableau(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            PartialTableau {
                rows: vec![(1..=n).collect()],
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for row in &self.rows {
            for &e in row {
                if e == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if !seen.insert(e) {
                    return Err(Error::InvalidTableau(format!("duplicate entry {e}")));
                }
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} not increasing")));
            }
            if r > 0 {
                if self.rows[r - 1].len() < row.len() {
                    return Err(Error::InvalidTableau(
                        "row lengths must weakly decrease".into(),
                    ));
                }
                for (c, &e) in row.iter().enumerate() {
                    if self.rows[r - 1][c] >= e {
                        return Err(Error::InvalidTableau(format!(
                            "column {c} not increasing at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau row lengths weakly decrease")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn content(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.find(x).is_some()
    }

    /// Position `(row, col)` of entry `x`.
    pub fn find(&self, x: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Ok(c) = row.binary_search(&x) {
                return Some((r, c));
            }
        }
        None
    }

    #[cfg(debug_assertions)]
    pub(crate) fn debug_validate(&self) {
        self.validate().expect("tableau invariant broken");
    }
    #[cfg(not(debug_assertions))]
    pub(crate) fn debug_validate(&self) {}
}

impl TryFrom<RowsRepr> for PartialTableau {
    type Error = Error;
    fn try_from(r: RowsRepr) -> Result<Self> {
        PartialTableau::new(r.rows)
    }
}

impl From<PartialTableau> for RowsRepr {
    fn from(t: PartialTableau) -> RowsRepr {
        RowsRepr { rows: t.rows }
    }
}

impl fmt::Debug for PartialTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A partial tableau whose content is exactly `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RowsRepr", into = "RowsRepr")]
pub struct StandardYoungTableau {
    inner: PartialTableau,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_partial(PartialTableau::new(rows)?)
    }

    pub fn from_partial(t: PartialTableau) -> Result<Self> {
        let n = t.size();
        if !t.content().iter().copied().eq(1..=n) {
            return Err(Error::InvalidTableau(format!(
                "content must be exactly 1..={n}"
            )));
        }
        Ok(StandardYoungTableau { inner: t })
    }

    pub fn as_partial(&self) -> &PartialTableau {
        &self.inner
    }

    pub fn into_partial(self) -> PartialTableau {
        self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.inner.rows()
    }

    pub fn shape(&self) -> Partition {
        self.inner.shape()
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    /// Shape spanned by entries `1..=m`.
    pub fn prefix_shape(&self, m: usize) -> Partition {
        Partition::new(
            self.rows()
                .iter()
                .map(|row| row.iter().take_while(|&&e| e <= m).count())
                .take_while(|&len| len > 0)
                .collect(),
        )
        .expect("prefix of an SYT is a partition")
    }
}

impl TryFrom<RowsRepr> for StandardYoungTableau {
    type Error = Error;
    fn try_from(r: RowsRepr) -> Result<Self> {
        StandardYoungTableau::new(r.rows)
    }
}

impl From<StandardYoungTableau> for RowsRepr {
    fn from(t: StandardYoungTableau) -> RowsRepr {
        RowsRepr {
            rows: t.inner.rows,
        }
    }
}

impl fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.inner, f)
    }
}

/// Number of standard Young tableaux of the given shape, by the hook length
/// formula. `f^∅ = 1`.
pub fn count_syt(shape: &Partition) -> u64 {
    let n = shape.size();
    let mut numerator: u128 = 1;
    for v in 1..=n as u128 {
        numerator *= v;
    }
    let mut hooks: u128 = 1;
    for row in 0..shape.rows() {
        for col in 0..shape.parts()[row] {
            hooks *= shape.hook_length(row, col) as u128;
        }
    }
    u64::try_from(numerator / hooks).expect("SYT count fits in u64 at supported sizes")
}

/// All standard Young tableaux of the given shape, in lexicographic order of
/// their row readings. Enumerates by growing the diagram one entry at a time.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardYoungTableau>> {
    enumerate_syt_with_bound(shape, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_syt_with_bound(
    shape: &Partition,
    bound: usize,
) -> Result<Vec<StandardYoungTableau>> {
    if shape.size() > bound {
        return Err(Error::BoundExceeded(format!(
            "|{shape}| = {} exceeds enumeration bound {bound}",
            shape.size()
        )));
    }
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    fill(shape, n, 1, &mut rows, &mut out);
    out.sort_by(|a, b| a.rows().cmp(b.rows()));
    Ok(out)
}

fn fill(
    shape: &Partition,
    n: usize,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardYoungTableau>,
) {
    if next > n {
        out.push(
            StandardYoungTableau::new(rows.clone()).expect("growth by addable boxes is standard"),
        );
        return;
    }
    for r in 0..=rows.len() {
        let len = rows.get(r).map_or(0, Vec::len);
        let above = if r == 0 { usize::MAX } else { rows[r - 1].len() };
        // next goes at the end of row r if the diagram stays a partition
        // inside `shape`.
        if len < shape.part(r) && len < above {
            if r == rows.len() {
                rows.push(vec![next]);
                fill(shape, n, next + 1, rows, out);
                rows.pop();
            } else {
                rows[r].push(next);
                fill(shape, n, next + 1, rows, out);
                rows[r].pop();
            }
        }
    }
}
