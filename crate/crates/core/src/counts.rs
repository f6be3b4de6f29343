//! Exact reference counts: Stirling, Bell, binomial, ballot, Catalan.

/// Stirling number of the second kind: set partitions of `[n]` into exactly
/// `k` blocks. `S(n, k) = k·S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> u64 {
    if n == 0 && k == 0 {
        return 1;
    }
    if n == 0 || k == 0 || k > n {
        return 0;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1; // S(0, 0)
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = (j as u64) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Bell number: all set partitions of `[n]`.
pub fn bell(n: usize) -> u64 {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    u64::try_from(num / den).expect("binomial fits in u64 at supported sizes")
}

/// Subdiagonal lattice paths from `(0,0)` to `(a, b)` that never rise above
/// `y = x`, counted by the grid recurrence. Zero when `b > a`.
pub fn ballot_paths(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let mut ways = vec![vec![0u64; b + 1]; a + 1];
    ways[0][0] = 1;
    for x in 0..=a {
        for y in 0..=b.min(x) {
            if x == 0 && y == 0 {
                continue;
            }
            let mut w = 0;
            if x > 0 {
                w += ways[x - 1][y];
            }
            if y > 0 {
                w += ways[x][y - 1];
            }
            ways[x][y] = w;
        }
    }
    ways[a][b]
}

pub fn catalan(m: usize) -> u64 {
    ballot_paths(m, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::tableau::count_syt;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(3, 5), 0);
        assert_eq!(stirling2(5, 1), 1);
        assert_eq!(stirling2(5, 5), 1);
    }

    #[test]
    fn bell_values() {
        assert_eq!(
            (0..=8).map(bell).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 15, 52, 203, 877, 4140]
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn ballot_counts_match_two_row_tableaux() {
        for n in 2..=10 {
            for k in 1..=n / 2 {
                let shape = Partition::new(vec![n - k, k]).unwrap();
                assert_eq!(ballot_paths(n - k, k), count_syt(&shape), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(
            (0..=6).map(catalan).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42, 132]
        );
    }
}
