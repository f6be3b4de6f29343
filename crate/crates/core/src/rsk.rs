//! RSK row insertion, Knuth's two-line RSK with its inverse, jeu de taquin
//! deletion, and longest-increasing-subsequence utilities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{PartialTableau, StandardYoungTableau};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[w] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.word {
            if *w < 10 {
                write!(f, "{w}")?;
            } else {
                write!(f, " {w} ")?;
            }
        }
        Ok(())
    }
}

/// Outcome of one row insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub tableau: PartialTableau,
    /// Row that received the new box.
    pub row_index: usize,
    /// Entry displaced from the first row, if the insertion bumped one.
    pub bumped_out: Option<usize>,
}

/// RSK row insertion of `x` into `t`. The entry bumps the smallest larger
/// entry of each row downward until something lands at the end of a row.
pub fn row_insert(t: &PartialTableau, x: usize) -> Result<Insertion> {
    if x == 0 {
        return Err(Error::InvalidTableau("entries must be positive".into()));
    }
    if t.contains(x) {
        return Err(Error::DuplicateEntry(x));
    }
    let mut t = t.clone();
    let rows = t.rows_mut();
    let mut carry = x;
    let mut bumped_out = None;
    let mut row_index = rows.len();
    for r in 0..rows.len() {
        let row = &mut rows[r];
        let idx = row.partition_point(|&e| e < carry);
        if idx == row.len() {
            row.push(carry);
            row_index = r;
            break;
        }
        let displaced = std::mem::replace(&mut row[idx], carry);
        if r == 0 {
            bumped_out = Some(displaced);
        }
        carry = displaced;
    }
    if row_index == t.rows().len() {
        t.rows_mut().push(vec![carry]);
    }
    t.debug_validate();
    Ok(Insertion {
        tableau: t,
        row_index,
        bumped_out,
    })
}

/// Inverse of `row_insert`, starting from the box at the end of `row`.
/// Returns the resulting tableau and the value that had been inserted.
pub(crate) fn reverse_row_insert(t: &PartialTableau, row: usize) -> Result<(PartialTableau, usize)> {
    if row >= t.rows().len() {
        return Err(Error::InconsistentTrace(format!(
            "no row {row} to un-insert from"
        )));
    }
    let shape = t.shape();
    if !shape.removable_rows().contains(&row) {
        return Err(Error::InconsistentTrace(format!(
            "box at end of row {row} is not removable in shape {shape}"
        )));
    }
    let mut t = t.clone();
    let rows = t.rows_mut();
    let mut carry = rows[row].pop().expect("rows are nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        let idx = rows[r].partition_point(|&e| e < carry);
        if idx == 0 {
            return Err(Error::InconsistentTrace(format!(
                "row {r} holds no entry below {carry}"
            )));
        }
        carry = std::mem::replace(&mut rows[r][idx - 1], carry);
    }
    t.debug_validate();
    Ok((t, carry))
}

/// Jeu de taquin deletion of the entry `x`: slide `x` toward the smaller of
/// its right and lower neighbours until it reaches a corner, then remove it.
pub fn jdt_delete(t: &PartialTableau, x: usize) -> Result<PartialTableau> {
    let (mut r, mut c) = t.find(x).ok_or(Error::MissingEntry(x))?;
    let mut t = t.clone();
    let rows = t.rows_mut();
    loop {
        let below = rows
            .get(r + 1)
            .and_then(|row| row.get(c))
            .copied();
        let right = rows[r].get(c + 1).copied();
        match (below, right) {
            (None, None) => break,
            (Some(b), Some(rt)) if b < rt => {
                rows[r][c] = b;
                r += 1;
                rows[r][c] = x;
            }
            (Some(b), None) => {
                rows[r][c] = b;
                r += 1;
                rows[r][c] = x;
            }
            (_, Some(rt)) => {
                rows[r][c] = rt;
                c += 1;
                rows[r][c] = x;
            }
        }
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    t.debug_validate();
    Ok(t)
}

/// Inverse jeu de taquin: re-insert `x` starting at a new box at the end of
/// `target_row`, sliding it up/left past larger neighbours back to a resting
/// cell. Inverts `jdt_delete` when `target_row` is the row the deletion
/// removed a box from.
pub(crate) fn reverse_jdt(t: &PartialTableau, target_row: usize, x: usize) -> Result<PartialTableau> {
    if t.contains(x) {
        return Err(Error::DuplicateEntry(x));
    }
    let shape = t.shape();
    if !shape.addable_rows().contains(&target_row) {
        return Err(Error::InconsistentTrace(format!(
            "cannot re-add a box in row {target_row} of shape {shape}"
        )));
    }
    let mut t = t.clone();
    let rows = t.rows_mut();
    let (mut r, mut c) = if target_row == rows.len() {
        rows.push(vec![x]);
        (target_row, 0)
    } else {
        rows[target_row].push(x);
        (target_row, rows[target_row].len() - 1)
    };
    loop {
        let up = if r > 0 { Some(rows[r - 1][c]) } else { None };
        let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
        match (up, left) {
            (Some(u), l) if u > x && l.is_none_or(|l| u >= l) => {
                rows[r][c] = u;
                r -= 1;
                rows[r][c] = x;
            }
            (_, Some(l)) if l > x => {
                rows[r][c] = l;
                c -= 1;
                rows[r][c] = x;
            }
            _ => break,
        }
    }
    if rows[r].is_empty() {
        rows.pop();
    }
    t.debug_validate();
    Ok(t)
}

/// A lexicographically sorted two-line array over an ordered label alphabet,
/// with distinct bottom entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLineArray<L> {
    pairs: Vec<(L, usize)>,
}

impl<L: Ord + Clone> TwoLineArray<L> {
    pub fn new(pairs: Vec<(L, usize)>) -> Result<Self> {
        for w in pairs.windows(2) {
            let ((u0, v0), (u1, v1)) = (&w[0], &w[1]);
            if u0 > u1 || (u0 == u1 && v0 > v1) {
                return Err(Error::InvalidTwoLineArray(
                    "pairs not in non-decreasing lexicographic order".into(),
                ));
            }
        }
        let mut bottoms: Vec<usize> = pairs.iter().map(|(_, v)| *v).collect();
        bottoms.sort_unstable();
        if bottoms.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTwoLineArray(
                "bottom entries must be distinct".into(),
            ));
        }
        if bottoms.contains(&0) {
            return Err(Error::InvalidTwoLineArray(
                "bottom entries must be positive".into(),
            ));
        }
        Ok(TwoLineArray { pairs })
    }

    pub fn pairs(&self) -> &[(L, usize)] {
        &self.pairs
    }

    pub fn bottom(&self) -> Vec<usize> {
        self.pairs.iter().map(|(_, v)| *v).collect()
    }
}

impl TwoLineArray<usize> {
    /// The array `(1..n; w)` of a permutation.
    pub fn from_permutation(w: &Permutation) -> Self {
        TwoLineArray {
            pairs: w
                .word()
                .iter()
                .enumerate()
                .map(|(j, &v)| (j + 1, v))
                .collect(),
        }
    }
}

/// RSK applied to a two-line array: the bottom line is row-inserted into the
/// insertion tableau while the top labels record where each box appeared.
pub fn rsk<L: Clone>(array: &TwoLineArray<L>) -> (PartialTableau, Vec<Vec<L>>) {
    let mut p = PartialTableau::empty();
    let mut recording: Vec<Vec<L>> = Vec::new();
    for (label, v) in &array.pairs {
        let ins = row_insert(&p, *v).expect("two-line array bottoms are distinct");
        p = ins.tableau;
        if ins.row_index == recording.len() {
            recording.push(vec![label.clone()]);
        } else {
            recording[ins.row_index].push(label.clone());
        }
    }
    (p, recording)
}

/// Inverse RSK for labelled recordings: boxes are removed in decreasing label
/// order, ties broken right to left, each one reverse-inserted out of `p`.
pub fn inverse_rsk<L: Ord + Clone>(
    p: &PartialTableau,
    recording: &[Vec<L>],
) -> Result<TwoLineArray<L>> {
    let rec_shape: Vec<usize> = recording.iter().map(Vec::len).collect();
    let p_shape: Vec<usize> = p.rows().iter().map(Vec::len).collect();
    if rec_shape != p_shape {
        return Err(Error::ShapeMismatch(format!(
            "insertion shape {p_shape:?} vs recording shape {rec_shape:?}"
        )));
    }
    let mut boxes: Vec<(&L, usize, usize)> = recording
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, l)| (l, c, r)))
        .collect();
    boxes.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

    let mut cur = p.clone();
    let mut pairs_rev: Vec<(L, usize)> = Vec::new();
    for &(label, c, r) in boxes.iter().rev() {
        // the box must sit at the current end of its row
        if cur.rows().get(r).map_or(0, Vec::len) != c + 1 {
            return Err(Error::InvalidRecording(format!(
                "box ({r},{c}) is not the last of its row when its turn comes"
            )));
        }
        let (next, value) = reverse_row_insert(&cur, r).map_err(|e| {
            Error::InvalidRecording(format!("cannot un-insert at row {r}: {e}"))
        })?;
        cur = next;
        pairs_rev.push((label.clone(), value));
    }
    pairs_rev.reverse();
    TwoLineArray::new(pairs_rev)
}

/// RSK insertion and recording tableaux of a permutation.
pub fn rsk_permutation(w: &Permutation) -> (StandardYoungTableau, StandardYoungTableau) {
    let (p, rec) = rsk(&TwoLineArray::from_permutation(w));
    let q = StandardYoungTableau::new(rec).expect("positions 1..n record standardly");
    let p = StandardYoungTableau::from_partial(p).expect("inserting a permutation of 1..n");
    (p, q)
}

/// Recover the permutation with insertion tableau `p` and recording tableau `q`.
pub fn inverse_rsk_permutation(
    p: &StandardYoungTableau,
    q: &StandardYoungTableau,
) -> Result<Permutation> {
    let array = inverse_rsk(p.as_partial(), q.rows())?;
    // top line must come out as 1..n for an SYT recording
    Permutation::new(array.bottom())
}

/// Length of the longest strictly increasing subsequence.
pub fn longest_increasing(seq: &[usize]) -> usize {
    g_values(seq).into_iter().max().unwrap_or(0)
}

/// For each position `i`, the maximal length of an increasing subsequence
/// ending at `seq[i]` (patience piles; pile index + 1).
pub fn g_values(seq: &[usize]) -> Vec<usize> {
    let mut tails: Vec<usize> = Vec::new();
    let mut g = Vec::with_capacity(seq.len());
    for &x in seq {
        let pile = tails.partition_point(|&t| t < x);
        if pile == tails.len() {
            tails.push(x);
        } else {
            tails[pile] = x;
        }
        g.push(pile + 1);
    }
    g
}
