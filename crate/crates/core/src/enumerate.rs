//! Exhaustive generators used by the verification sweeps and tests.

use crate::rsk::Permutation;

/// All sequences in `[n]^k`, odometer order.
pub fn integer_sequences(n: usize, k: usize) -> SequenceIter {
    SequenceIter {
        n,
        current: vec![1; k],
        done: n == 0 && k > 0,
        fresh: true,
    }
}

pub struct SequenceIter {
    n: usize,
    current: Vec<usize>,
    done: bool,
    fresh: bool,
}

impl Iterator for SequenceIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current.clone());
        }
        // increment rightmost digit, carrying leftward
        for d in (0..self.current.len()).rev() {
            if self.current[d] < self.n {
                self.current[d] += 1;
                self.current[d + 1..].fill(1);
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}

/// All length-`k` sequences of distinct values from `[n]`.
pub fn distinct_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; n + 1];
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(n, k, &mut cur, &mut used, &mut out);
    out
}

/// All permutations of `[n]`, lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    distinct_sequences(n, n)
        .into_iter()
        .map(|w| Permutation::new(w).expect("distinct arrangement of 1..n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_counts() {
        assert_eq!(integer_sequences(3, 2).count(), 9);
        assert_eq!(integer_sequences(5, 0).count(), 1);
        assert_eq!(integer_sequences(1, 4).count(), 1);
    }

    #[test]
    fn sequences_are_strictly_ordered() {
        let all: Vec<_> = integer_sequences(3, 3).collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], vec![1, 1, 1]);
        assert_eq!(all[26], vec![3, 3, 3]);
    }

    #[test]
    fn distinct_sequence_counts() {
        assert_eq!(distinct_sequences(5, 2).len(), 20);
        assert_eq!(distinct_sequences(4, 4).len(), 24);
        assert_eq!(distinct_sequences(3, 0).len(), 1);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
    }
}
