//! Direct characterizations of the sequences whose image shape is `(n)`, a
//! hook `(n-k, 1^k)`, or a two-row partition `(n-k, k)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::di::IntegerSequence;
use crate::error::{Error, Result};
use crate::set_partition::{set_partition_blocks, SetPartition};
use crate::tableau::StandardYoungTableau;

/// One-row test: every value `m < n` appearing at position `r` must be
/// followed by an occurrence of `m + 1`. In particular the sequence ends in
/// `n`.
pub fn is_one_row(seq: &IntegerSequence) -> bool {
    let n = seq.n();
    let entries = seq.entries();
    entries.iter().enumerate().all(|(r, &m)| {
        m == n || entries[r + 1..].contains(&(m + 1))
    })
}

/// The set partition carried by a one-row sequence: positions share a block
/// iff they hold equal values.
pub fn one_row_to_set_partition(seq: &IntegerSequence) -> Result<SetPartition> {
    if !is_one_row(seq) {
        return Err(Error::Precondition(format!(
            "{seq:?} does not satisfy the one-row condition"
        )));
    }
    Ok(set_partition_blocks(seq))
}

/// Inverse of [`one_row_to_set_partition`]: the block with the `j`-th
/// largest maximum is filled with the value `n - j + 1`.
pub fn set_partition_to_one_row(p: &SetPartition, n: usize) -> Result<IntegerSequence> {
    if p.num_blocks() > n {
        return Err(Error::Precondition(format!(
            "{} blocks exceed n = {n}",
            p.num_blocks()
        )));
    }
    let k = p.ground_size();
    let mut entries = vec![0; k];
    for (j, block) in p.blocks_by_max_desc().into_iter().enumerate() {
        for &pos in block {
            entries[pos - 1] = n - j;
        }
    }
    IntegerSequence::new(n, entries)
}

/// Hook test: strictly decreasing with `i_1 < n`.
pub fn is_hook_sequence(seq: &IntegerSequence) -> bool {
    let entries = seq.entries();
    !entries.is_empty()
        && entries[0] < seq.n()
        && entries.windows(2).all(|w| w[0] > w[1])
}

/// A lattice path from `(0,0)` to `(width, height)` staying weakly below
/// `y = x`. Serialized as a string of `E`/`N` steps.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LatticePath {
    steps: Vec<PathStep>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathStep {
    East,
    North,
}

impl LatticePath {
    pub fn new(steps: Vec<PathStep>) -> Result<Self> {
        let (mut x, mut y) = (0usize, 0usize);
        for s in &steps {
            match s {
                PathStep::East => x += 1,
                PathStep::North => y += 1,
            }
            if y > x {
                return Err(Error::Precondition(
                    "path rises above the diagonal".into(),
                ));
            }
        }
        Ok(LatticePath { steps })
    }

    /// Build the path whose `j`-th north step sits at `x = v[j]`, padded
    /// with east steps out to `(width, v.len())`.
    pub fn from_north_coordinates(v: &[usize], width: usize) -> Result<Self> {
        let mut steps = Vec::with_capacity(width + v.len());
        let mut x = 0;
        for &vx in v {
            if vx < x || vx > width {
                return Err(Error::Precondition(format!(
                    "north-step coordinates {v:?} are not weakly increasing within 0..={width}"
                )));
            }
            steps.extend(std::iter::repeat_n(PathStep::East, vx - x));
            steps.push(PathStep::North);
            x = vx;
        }
        steps.extend(std::iter::repeat_n(PathStep::East, width - x));
        LatticePath::new(steps)
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn width(&self) -> usize {
        self.steps.iter().filter(|s| **s == PathStep::East).count()
    }

    pub fn height(&self) -> usize {
        self.steps.len() - self.width()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == PathStep::East { 'E' } else { 'N' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<String> for LatticePath {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(PathStep::East),
                'N' | 'n' => Ok(PathStep::North),
                other => Err(Error::Precondition(format!("bad path step '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

impl From<LatticePath> for String {
    fn from(p: LatticePath) -> String {
        p.to_string()
    }
}

/// The sequence attached to a two-row standard tableau: split the second row
/// into maximal runs of consecutive integers and replace each run
/// `a, a+1, ..., a+l-1` by `l` copies of `a - 1`.
pub fn two_row_from_syt(p: &StandardYoungTableau) -> Result<IntegerSequence> {
    if p.rows().len() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "expected a two-row shape, got {}",
            p.shape()
        )));
    }
    let n = p.size();
    let second = &p.rows()[1];
    let mut entries = Vec::with_capacity(second.len());
    let mut run_start = second[0];
    for (idx, &b) in second.iter().enumerate() {
        if idx > 0 && b != second[idx - 1] + 1 {
            run_start = b;
        }
        entries.push(run_start - 1);
    }
    IntegerSequence::new(n, entries)
}

/// The decomposition of a two-row sequence into its north-step coordinates,
/// the run-offset vector, and the lattice path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoRowDecomposition {
    /// x-coordinates of the north steps; `b_j = j + v_j` rebuilds the second
    /// row of the tableau.
    pub v: Vec<usize>,
    /// Offsets constant on runs: 0 on the first run, then cumulative run
    /// lengths.
    pub eps: Vec<usize>,
    pub path: LatticePath,
}

impl TwoRowDecomposition {
    /// Second row of the corresponding tableau.
    pub fn second_row(&self) -> Vec<usize> {
        self.v.iter().enumerate().map(|(j, &v)| j + 1 + v).collect()
    }
}

/// Decompose `seq` as `v + eps`; errors unless the structure matches a
/// two-row image exactly (shape `(n-k, k)`).
pub fn two_row_decompose(seq: &IntegerSequence) -> Result<TwoRowDecomposition> {
    let n = seq.n();
    let k = seq.k();
    let entries = seq.entries();
    if k == 0 || n < 2 * k {
        return Err(Error::Precondition(format!(
            "shape ({}, {k}) is not a two-row partition",
            n as i64 - k as i64
        )));
    }
    let not_two_row =
        |why: &str| Error::Precondition(format!("{seq:?} has no two-row image: {why}"));
    if entries.windows(2).any(|w| w[0] > w[1]) {
        return Err(not_two_row("not weakly increasing"));
    }
    // eps is the number of positions strictly before the current run
    let mut eps = Vec::with_capacity(k);
    let mut run_begin = 0;
    for (j, &e) in entries.iter().enumerate() {
        if e != entries[run_begin] {
            run_begin = j;
        }
        eps.push(run_begin);
    }
    let mut v = Vec::with_capacity(k);
    for (j, (&e, &o)) in entries.iter().zip(&eps).enumerate() {
        if e <= o {
            return Err(not_two_row("offset meets the entry"));
        }
        let vj = e - o;
        if vj < j + 1 {
            return Err(not_two_row("north step above the diagonal"));
        }
        if vj > n - k {
            return Err(not_two_row("north step past the east wall"));
        }
        // runs of v must match runs of the sequence: strict growth across
        // run boundaries
        if j > 0 && o != eps[j - 1] && vj <= v[j - 1] {
            return Err(not_two_row("run values do not strictly increase"));
        }
        v.push(vj);
    }
    let path = LatticePath::from_north_coordinates(&v, n - k)?;
    Ok(TwoRowDecomposition { v, eps, path })
}

/// A rough classification of a sequence by the three characterized shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeClass {
    OneRow,
    Hook,
    TwoRow,
    Other,
}

pub fn classify(seq: &IntegerSequence) -> ShapeClass {
    if is_one_row(seq) {
        ShapeClass::OneRow
    } else if is_hook_sequence(seq) {
        ShapeClass::Hook
    } else if two_row_decompose(seq).is_ok() {
        ShapeClass::TwoRow
    } else {
        ShapeClass::Other
    }
}
