//! The delete-insert map on integer sequences: alternates jeu de taquin
//! deletion and RSK row insertion, pairing each sequence in `[n]^k` with a
//! standard Young tableau and a vacillating tableau of the same shape.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rsk::{jdt_delete, reverse_jdt, reverse_row_insert, row_insert};
use crate::tableau::{PartialTableau, StandardYoungTableau};
use crate::vacillating::VacillatingTableau;

#[derive(Serialize, Deserialize)]
struct SeqRepr {
    n: usize,
    entries: Vec<usize>,
}

/// A sequence in `[n]^k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SeqRepr", into = "SeqRepr")]
pub struct IntegerSequence {
    n: usize,
    entries: Vec<usize>,
}

impl IntegerSequence {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSequence("n must be positive".into()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSequence(format!(
                "entry {bad} outside 1..={n}"
            )));
        }
        Ok(IntegerSequence { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

impl TryFrom<SeqRepr> for IntegerSequence {
    type Error = Error;
    fn try_from(r: SeqRepr) -> Result<Self> {
        IntegerSequence::new(r.n, r.entries)
    }
}

impl From<IntegerSequence> for SeqRepr {
    fn from(s: IntegerSequence) -> SeqRepr {
        SeqRepr {
            n: s.n,
            entries: s.entries,
        }
    }
}

impl fmt::Debug for IntegerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in [{}]^{}", self.entries, self.n, self.k())
    }
}

/// Image of a sequence under the delete-insert map, with the full trace of
/// intermediate tableaux `T^(0), T^(1/2), ..., T^(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiImage {
    pub p: StandardYoungTableau,
    pub gamma: VacillatingTableau,
    pub trace: Vec<PartialTableau>,
}

impl DiImage {
    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

/// Forward map: starting from the row tableau `1..n`, round `j` deletes
/// `i_j` by jeu de taquin and row-inserts it back.
pub fn di_forward(seq: &IntegerSequence) -> DiImage {
    let mut trace = Vec::with_capacity(2 * seq.k() + 1);
    trace.push(PartialTableau::row_tableau(seq.n()));
    for &x in seq.entries() {
        let deleted = jdt_delete(trace.last().unwrap(), x)
            .expect("entries of [n] are present in every integer-step tableau");
        trace.push(deleted);
        let inserted = row_insert(trace.last().unwrap(), x)
            .expect("the just-deleted entry is absent")
            .tableau;
        trace.push(inserted);
    }
    let gamma = VacillatingTableau::new(trace.iter().map(PartialTableau::shape).collect())
        .expect("delete-insert shapes alternate by one box");
    let p = StandardYoungTableau::from_partial(trace.last().unwrap().clone())
        .expect("integer steps are standard");
    DiImage { p, gamma, trace }
}

/// Entries bumped out of the first row at each insertion round, when every
/// round displaces one. This is the bumping sequence of a maximal-index
/// sequence.
pub fn di_bumped_entries(seq: &IntegerSequence) -> Vec<Option<usize>> {
    let mut cur = PartialTableau::row_tableau(seq.n());
    let mut out = Vec::with_capacity(seq.k());
    for &x in seq.entries() {
        cur = jdt_delete(&cur, x).expect("present entry");
        let ins = row_insert(&cur, x).expect("absent entry");
        out.push(ins.bumped_out);
        cur = ins.tableau;
    }
    out
}

/// Inverse map: replays the trace backwards, un-inserting the box each round
/// added and re-sliding the recovered value into the box each round removed.
pub fn di_inverse(p: &StandardYoungTableau, gamma: &VacillatingTableau) -> Result<IntegerSequence> {
    if &p.shape() != gamma.shape() {
        return Err(Error::ShapeMismatch(format!(
            "tableau shape {} vs final vacillating shape {}",
            p.shape(),
            gamma.shape()
        )));
    }
    let n = gamma.n();
    let k = gamma.k();
    let mut cur = p.as_partial().clone();
    let mut entries = vec![0; k];
    for j in (1..=k).rev() {
        let after = gamma.at_integer(j);
        let mid = gamma.at_half(j - 1);
        let before = gamma.at_integer(j - 1);
        let added_row = after.single_box_difference(mid).ok_or_else(|| {
            Error::InconsistentTrace(format!("round {j}: insert step is not a single box"))
        })?;
        let (mid_tableau, x) = reverse_row_insert(&cur, added_row)?;
        let removed_row = before.single_box_difference(mid).ok_or_else(|| {
            Error::InconsistentTrace(format!("round {j}: delete step is not a single box"))
        })?;
        cur = reverse_jdt(&mid_tableau, removed_row, x)?;
        entries[j - 1] = x;
    }
    if cur != PartialTableau::row_tableau(n) {
        return Err(Error::InconsistentTrace(
            "trace does not rewind to the row tableau".into(),
        ));
    }
    IntegerSequence::new(n, entries)
}

/// Shape of the image tableaux.
pub fn vt_shape(seq: &IntegerSequence) -> Partition {
    di_forward(seq).shape()
}

/// Number of boxes of the image shape below the first row; between 0 and `k`.
pub fn vt_index(seq: &IntegerSequence) -> usize {
    vt_shape(seq).star().size()
}
