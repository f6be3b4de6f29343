//! n-vacillating tableaux, their simplified form, interconversion, and
//! exhaustive enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::StandardYoungTableau;

/// Cap on `(n, k)` for exhaustive vacillating-tableau enumeration.
pub const ENUMERATION_N_BOUND: usize = 16;
pub const ENUMERATION_K_BOUND: usize = 8;

#[derive(Serialize, Deserialize)]
struct VtRepr {
    n: usize,
    k: usize,
    steps: Vec<Partition>,
}

/// A sequence of `2k+1` partitions starting at `(n)`, alternately removing
/// and adding one box: integer steps are partitions of `n`, half steps of
/// `n-1`.
///
/// Step `j` lives at flat index `2j`, step `j+1/2` at flat index `2j+1`.
/// Serialized as `{"n": .., "k": .., "steps": [[..], ..]}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "VtRepr", into = "VtRepr")]
pub struct VacillatingTableau {
    steps: Vec<Partition>,
}

impl VacillatingTableau {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.len().is_multiple_of(2) {
            return Err(Error::InvalidVacillating(
                "step count must be odd (2k+1 shapes)".into(),
            ));
        }
        let n = steps[0].size();
        if steps[0] != Partition::row(n) || n == 0 {
            return Err(Error::InvalidVacillating(format!(
                "first step must be a one-row partition of n > 0, got {}",
                steps[0]
            )));
        }
        for (m, w) in steps.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            if m % 2 == 0 {
                // delete half-step
                if !a.contains(b) || a.size() != b.size() + 1 {
                    return Err(Error::InvalidVacillating(format!(
                        "step {m} to {}: expected one box removed, got {a} to {b}",
                        m + 1
                    )));
                }
            } else if !b.contains(a) || b.size() != a.size() + 1 {
                return Err(Error::InvalidVacillating(format!(
                    "step {m} to {}: expected one box added, got {a} to {b}",
                    m + 1
                )));
            }
        }
        Ok(VacillatingTableau { steps })
    }

    pub fn n(&self) -> usize {
        self.steps[0].size()
    }

    pub fn k(&self) -> usize {
        self.steps.len() / 2
    }

    /// Flat access, index `m` in `0..=2k`.
    pub fn step(&self, m: usize) -> &Partition {
        &self.steps[m]
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    /// `λ^(j)` for integer `j`.
    pub fn at_integer(&self, j: usize) -> &Partition {
        &self.steps[2 * j]
    }

    /// `λ^(j+1/2)`.
    pub fn at_half(&self, j: usize) -> &Partition {
        &self.steps[2 * j + 1]
    }

    /// Final shape `λ^(k)`.
    pub fn shape(&self) -> &Partition {
        self.steps.last().expect("2k+1 >= 1 steps")
    }
}

impl TryFrom<VtRepr> for VacillatingTableau {
    type Error = Error;
    fn try_from(r: VtRepr) -> Result<Self> {
        let vt = VacillatingTableau::new(r.steps)?;
        if vt.n() != r.n || vt.k() != r.k {
            return Err(Error::InvalidVacillating(format!(
                "declared (n,k) = ({},{}) but steps give ({},{})",
                r.n,
                r.k,
                vt.n(),
                vt.k()
            )));
        }
        Ok(vt)
    }
}

impl From<VacillatingTableau> for VtRepr {
    fn from(vt: VacillatingTableau) -> VtRepr {
        VtRepr {
            n: vt.n(),
            k: vt.k(),
            steps: vt.steps,
        }
    }
}

impl fmt::Debug for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VT[")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct SvtRepr {
    k: usize,
    steps: Vec<Partition>,
}

/// The first-row-free form: starts at `∅`, each half step removes or keeps,
/// each full step adds or keeps (at most one box either way).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SvtRepr", into = "SvtRepr")]
pub struct SimplifiedVacillatingTableau {
    steps: Vec<Partition>,
}

impl SimplifiedVacillatingTableau {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.len().is_multiple_of(2) {
            return Err(Error::InvalidVacillating(
                "step count must be odd (2k+1 shapes)".into(),
            ));
        }
        if !steps[0].is_empty() {
            return Err(Error::InvalidVacillating(format!(
                "first simplified step must be empty, got {}",
                steps[0]
            )));
        }
        for (m, w) in steps.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let ok = if m % 2 == 0 {
                a.contains(b) && a.size() - b.size() <= 1
            } else {
                b.contains(a) && b.size() - a.size() <= 1
            };
            if !ok {
                return Err(Error::InvalidVacillating(format!(
                    "simplified step {m} to {}: {a} and {b} differ by more than one box",
                    m + 1
                )));
            }
        }
        Ok(SimplifiedVacillatingTableau { steps })
    }

    pub fn k(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn step(&self, m: usize) -> &Partition {
        &self.steps[m]
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn shape(&self) -> &Partition {
        self.steps.last().expect("2k+1 >= 1 steps")
    }
}

impl TryFrom<SvtRepr> for SimplifiedVacillatingTableau {
    type Error = Error;
    fn try_from(r: SvtRepr) -> Result<Self> {
        let svt = SimplifiedVacillatingTableau::new(r.steps)?;
        if svt.k() != r.k {
            return Err(Error::InvalidVacillating(format!(
                "declared k = {} but steps give {}",
                r.k,
                svt.k()
            )));
        }
        Ok(svt)
    }
}

impl From<SimplifiedVacillatingTableau> for SvtRepr {
    fn from(svt: SimplifiedVacillatingTableau) -> SvtRepr {
        SvtRepr {
            k: svt.k(),
            steps: svt.steps,
        }
    }
}

impl fmt::Debug for SimplifiedVacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SVT[")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Strip the first row of every step.
pub fn simplify(gamma: &VacillatingTableau) -> SimplifiedVacillatingTableau {
    SimplifiedVacillatingTableau::new(gamma.steps().iter().map(Partition::star).collect())
        .expect("starring a vacillating tableau stays within one box per half step")
}

/// Re-attach first rows for the given `n`. The first-row lengths are forced
/// by the step sizes; fails when some step does not complete to a partition.
pub fn unsimplify(gstar: &SimplifiedVacillatingTableau, n: usize) -> Result<VacillatingTableau> {
    let mut steps = Vec::with_capacity(gstar.steps().len());
    for (m, mu) in gstar.steps().iter().enumerate() {
        let target = if m % 2 == 0 { n } else { n - 1 };
        let rest = mu.size();
        if target < rest {
            return Err(Error::Infeasible {
                n,
                reason: format!("step {m} needs first row of {target} - {rest} boxes"),
            });
        }
        let first = target - rest;
        if first < mu.first() {
            return Err(Error::Infeasible {
                n,
                reason: format!(
                    "step {m}: forced first row {first} shorter than second row {}",
                    mu.first()
                ),
            });
        }
        let mut parts = Vec::with_capacity(mu.rows() + 1);
        if first > 0 {
            parts.push(first);
        } else if !mu.is_empty() {
            return Err(Error::Infeasible {
                n,
                reason: format!("step {m}: empty first row above nonempty {mu}"),
            });
        }
        parts.extend_from_slice(mu.parts());
        steps.push(Partition::new(parts).expect("first >= mu_1 keeps parts decreasing"));
    }
    VacillatingTableau::new(steps).map_err(|e| Error::Infeasible {
        n,
        reason: e.to_string(),
    })
}

/// All n-vacillating tableaux of the given shape and length `2k`, by
/// depth-first search over the box removed and added in each round.
pub fn enumerate_vt(n: usize, k: usize, shape: &Partition) -> Result<Vec<VacillatingTableau>> {
    if n > ENUMERATION_N_BOUND || k > ENUMERATION_K_BOUND {
        return Err(Error::BoundExceeded(format!(
            "enumerate_vt supports n <= {ENUMERATION_N_BOUND}, k <= {ENUMERATION_K_BOUND}, got ({n},{k})"
        )));
    }
    if shape.size() != n || n == 0 {
        return Err(Error::InvalidPartition(format!(
            "{shape} is not a partition of n = {n}"
        )));
    }
    let mut out = Vec::new();
    let mut steps = vec![Partition::row(n)];
    search(shape, k, &mut steps, &mut out);
    out
        .sort_by(|a, b| a.steps().cmp(b.steps()));
    Ok(out)
}

fn search(
    target: &Partition,
    k: usize,
    steps: &mut Vec<Partition>,
    out: &mut Vec<VacillatingTableau>,
) {
    let m = steps.len() - 1; // flat index of the current step
    if m == 2 * k {
        if steps.last().unwrap() == target {
            out.push(VacillatingTableau::new(steps.clone()).expect("search keeps steps valid"));
        }
        return;
    }
    // prune: each remaining delete can erase at most one surplus box, each
    // remaining insert can supply at most one missing box
    let cur = steps.last().unwrap().clone();
    let deletes_left = k - m.div_ceil(2);
    let inserts_left = k - m / 2;
    let missing: usize = (0..target.rows().max(cur.rows()))
        .map(|r| target.part(r).saturating_sub(cur.part(r)))
        .sum();
    let surplus: usize = (0..target.rows().max(cur.rows()))
        .map(|r| cur.part(r).saturating_sub(target.part(r)))
        .sum();
    if missing > inserts_left || surplus > deletes_left {
        return;
    }
    if m.is_multiple_of(2) {
        for r in cur.removable_rows() {
            steps.push(cur.with_box_removed(r).expect("removable row"));
            search(target, k, steps, out);
            steps.pop();
        }
    } else {
        for r in cur.addable_rows() {
            steps.push(cur.with_box_added(r).expect("addable row"));
            search(target, k, steps, out);
            steps.pop();
        }
    }
}

/// For a shape with `λ₁ = n - k` the vacillating tableau grows one box below
/// the first row per round; record round `j` in the box added at step `j`.
pub fn vt_to_syt_star(gamma: &VacillatingTableau) -> Result<StandardYoungTableau> {
    let n = gamma.n();
    let k = gamma.k();
    let lambda = gamma.shape();
    if lambda.first() + k != n {
        return Err(Error::Precondition(format!(
            "shape {lambda} with n = {n}, k = {k}: first part must be n - k"
        )));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for j in 1..=k {
        let prev = gamma.at_integer(j - 1).star();
        let next = gamma.at_integer(j).star();
        let row = next.single_box_difference(&prev).ok_or_else(|| {
            Error::InconsistentTrace(format!(
                "round {j} does not add exactly one box below the first row"
            ))
        })?;
        if row == rows.len() {
            rows.push(vec![j]);
        } else {
            rows[row].push(j);
        }
    }
    StandardYoungTableau::new(rows)
}

/// Inverse of [`vt_to_syt_star`]: rebuild the vacillating tableau of shape
/// `(n - k, shape(q_star))` whose round `j` adds the box holding `j`.
pub fn syt_star_to_vt(q_star: &StandardYoungTableau, n: usize) -> Result<VacillatingTableau> {
    let k = q_star.size();
    let mut steps = Vec::with_capacity(2 * k + 1);
    steps.push(Partition::empty());
    for j in 0..k {
        let mu = q_star.prefix_shape(j);
        steps.push(mu); // half step keeps the sub-first-row shape
        steps.push(q_star.prefix_shape(j + 1));
    }
    let gstar = SimplifiedVacillatingTableau::new(steps)
        .expect("prefix shapes of an SYT grow one box per round");
    unsimplify(&gstar, n)
}
