//! Criteria for bumping sequences and permutation suffixes, and the
//! equivalent reparking simulation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rsk::longest_increasing;

/// Reverse the sequence and replace each entry `x` by `n + 1 - x`.
pub fn reverse_complement(xs: &[usize], n: usize) -> Vec<usize> {
    xs.iter().rev().map(|&x| n + 1 - x).collect()
}

fn check_distinct_in_range(xs: &[usize], n: usize) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &x in xs {
        if x == 0 || x > n {
            return Err(Error::InvalidSequence(format!("entry {x} outside 1..={n}")));
        }
        if !seen.insert(x) {
            return Err(Error::InvalidSequence(format!("entry {x} repeated")));
        }
    }
    Ok(())
}

/// Values strictly between the minimum and maximum that do not occur,
/// increasing.
fn gaps(xs: &[usize]) -> Vec<usize> {
    let present: BTreeSet<usize> = xs.iter().copied().collect();
    match (present.first(), present.last()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).filter(|v| !present.contains(v)).collect(),
        _ => Vec::new(),
    }
}

/// Does some member permutation bump out exactly this sequence? True iff
/// `t_min > l - j` where `l` is the longest increasing subsequence of the
/// sequence followed by its `j` gap values.
pub fn bumping_criterion(t: &[usize], n: usize) -> Result<bool> {
    check_distinct_in_range(t, n)?;
    if t.is_empty() {
        return Ok(true);
    }
    if n < t.len() + 1 {
        return Err(Error::Precondition(format!(
            "need n >= k + 1, got n = {n}, k = {}",
            t.len()
        )));
    }
    let gap_values = gaps(t);
    let gap_count = gap_values.len();
    let mut padded = t.to_vec();
    padded.extend(&gap_values);
    let l = longest_increasing(&padded);
    let t_min = *t.iter().min().expect("nonempty");
    Ok(t_min > l - gap_count)
}

/// Is this sequence the last `k` entries of a member permutation? True iff
/// `n + 1 - a_max > l' - j` where `l'` is the longest increasing subsequence
/// of the `j` gap values followed by the sequence.
pub fn suffix_criterion(a: &[usize], n: usize) -> Result<bool> {
    check_distinct_in_range(a, n)?;
    if a.is_empty() {
        return Ok(true);
    }
    if n < a.len() + 1 {
        return Err(Error::Precondition(format!(
            "need n >= k + 1, got n = {n}, k = {}",
            a.len()
        )));
    }
    let gap_values = gaps(a);
    let gap_count = gap_values.len();
    let mut padded = gap_values;
    padded.extend(a);
    let l = longest_increasing(&padded);
    let a_max = *a.iter().max().expect("nonempty");
    Ok(n + 1 - a_max > l - gap_count)
}

/// `k` cars parked at distinct spots on a street of `n` spots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReparkingInstance {
    pub n: usize,
    pub positions: Vec<usize>,
}

impl ReparkingInstance {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        check_distinct_in_range(&positions, n)?;
        Ok(ReparkingInstance { n, positions })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right,
    Left,
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Direction::Right),
            "left" => Ok(Direction::Left),
            other => Err(Error::Precondition(format!(
                "direction must be 'right' or 'left', got '{other}'"
            ))),
        }
    }
}

/// Result of a reparking run together with the criterion's verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReparkOutcome {
    pub success: bool,
    /// Final spot of each car, when every car found one.
    pub positions: Option<Vec<usize>>,
    /// What the street-end-gap criterion predicts.
    pub predicted: bool,
}

/// Move every car to the closest free spot in the given direction: cars go
/// in order 1..k when moving right, k..1 when moving left. A car vacates its
/// spot before looking and may not stay put.
pub fn repark(instance: &ReparkingInstance, direction: Direction) -> ReparkOutcome {
    let n = instance.n;
    let xs = &instance.positions;
    let k = xs.len();
    let mut occupied: BTreeSet<usize> = xs.iter().copied().collect();
    let mut new_positions = vec![0; k];
    let order: Vec<usize> = match direction {
        Direction::Right => (0..k).collect(),
        Direction::Left => (0..k).rev().collect(),
    };
    let mut success = true;
    'cars: for car in order {
        let start = xs[car];
        occupied.remove(&start);
        let spot = match direction {
            Direction::Right => (start + 1..=n).find(|s| !occupied.contains(s)),
            Direction::Left => (1..start).rev().find(|s| !occupied.contains(s)),
        };
        match spot {
            Some(s) => {
                occupied.insert(s);
                new_positions[car] = s;
            }
            None => {
                success = false;
                break 'cars;
            }
        }
    }
    let predicted = predict(instance, direction);
    ReparkOutcome {
        success,
        positions: success.then_some(new_positions),
        predicted,
    }
}

/// Criterion side: enough free spots at the end of the street being driven
/// toward. Right needs `n - x_max >= l' - j`, left needs `x_min - 1 >= l - j`,
/// with `l`/`l'` as in the bumping and suffix criteria and `j` the gap count.
fn predict(instance: &ReparkingInstance, direction: Direction) -> bool {
    let xs = &instance.positions;
    if xs.is_empty() {
        return true;
    }
    let gap_values = gaps(xs);
    let gap_count = gap_values.len();
    match direction {
        Direction::Right => {
            let mut padded = gap_values;
            padded.extend(xs);
            let l = longest_increasing(&padded);
            let x_max = *xs.iter().max().expect("nonempty");
            instance.n - x_max >= l - gap_count
        }
        Direction::Left => {
            let mut padded = xs.clone();
            padded.extend(&gap_values);
            let l = longest_increasing(&padded);
            let x_min = *xs.iter().min().expect("nonempty");
            x_min > l - gap_count
        }
    }
}
