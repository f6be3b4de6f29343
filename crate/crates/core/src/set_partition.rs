//! Set partitions of `[k]` and the block decomposition of an integer sequence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::di::IntegerSequence;
use crate::error::{Error, Result};

/// A partition of `{1, ..., k}` into pairwise disjoint nonempty blocks.
/// Blocks are kept sorted internally and ordered by their least element.
///
/// Serialized as an array of sorted arrays.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    ground_size: usize,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b.first().copied());
        let k: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; k + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            for &e in b {
                if e == 0 || e > k {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {e} outside 1..={k}"
                    )));
                }
                if seen[e] {
                    return Err(Error::InvalidSetPartition(format!("element {e} repeated")));
                }
                seen[e] = true;
            }
        }
        Ok(SetPartition {
            blocks,
            ground_size: k,
        })
    }

    /// Blocks ordered by least element, each sorted.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks reordered by largest element, decreasing.
    pub fn blocks_by_max_desc(&self) -> Vec<&[usize]> {
        let mut refs: Vec<&[usize]> = self.blocks.iter().map(Vec::as_slice).collect();
        refs.sort_by_key(|b| std::cmp::Reverse(*b.last().expect("blocks are nonempty")));
        refs
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the partitioned set `[k]`.
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        SetPartition::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Vec<Vec<usize>> {
        p.blocks
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            write!(f, "{{{}}}", cells.join(","))?;
        }
        write!(f, "}}")
    }
}

/// Positions of equal values: `j` and `j'` share a block iff `i_j = i_{j'}`.
pub fn set_partition_blocks(seq: &IntegerSequence) -> SetPartition {
    let mut by_value: Vec<Vec<usize>> = vec![Vec::new(); seq.n() + 1];
    for (pos, &v) in seq.entries().iter().enumerate() {
        by_value[v].push(pos + 1);
    }
    SetPartition::new(by_value.into_iter().filter(|b| !b.is_empty()).collect())
        .expect("positions grouped by value form a set partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, entries: &[usize]) -> IntegerSequence {
        IntegerSequence::new(n, entries.to_vec()).unwrap()
    }

    #[test]
    fn blocks_group_equal_positions() {
        let p = set_partition_blocks(&seq(6, &[3, 2, 6, 2]));
        assert_eq!(p.blocks(), &[vec![1], vec![2, 4], vec![3]]);
        assert_eq!(p.ground_size(), 4);
    }

    #[test]
    fn constant_sequence_gives_single_block() {
        let p = set_partition_blocks(&seq(5, &[5, 5, 5]));
        assert_eq!(p.blocks(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn distinct_values_give_singletons() {
        let p = set_partition_blocks(&seq(8, &[3, 1, 6, 2]));
        assert_eq!(p.blocks(), &[vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn validation() {
        assert!(SetPartition::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(SetPartition::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(vec![vec![]]).is_err());
        assert!(SetPartition::new(vec![]).is_ok()); // partition of the empty set
    }

    #[test]
    fn max_desc_ordering() {
        let p = set_partition_blocks(&seq(6, &[5, 6, 6]));
        let ordered = p.blocks_by_max_desc();
        assert_eq!(ordered, vec![&[2, 3][..], &[1][..]]);
    }
}
