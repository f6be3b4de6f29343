//! Acceptance suite: each test drives one criterion across its full stated
//! range and prints a single pass/fail line. Everything is exact integer
//! combinatorics, so every comparison is strict equality.

use std::collections::BTreeSet;

use tableaux::bumping::{repark, Direction, ReparkingInstance};
use tableaux::cossz::{cossz_forward, cossz_inverse, MultisetCell, MultisetTableau};
use tableaux::counts::{binomial, catalan, stirling2};
use tableaux::di::{di_forward, di_inverse, vt_index, vt_shape, IntegerSequence};
use tableaux::enumerate::{integer_sequences, permutations};
use tableaux::max_index::{
    algorithm_a, algorithm_b, enumerate_rnk, psi_detailed, psi_inverse, AlgorithmB,
    RnkPermutation,
};
use tableaux::rsk::{inverse_rsk_permutation, rsk_permutation, Permutation};
use tableaux::shapes::{two_row_decompose, two_row_from_syt};
use tableaux::tableau::count_syt;
use tableaux::vacillating::vt_to_syt_star;
use tableaux::verify::{
    two_row_count_comparison, verify_identity, verify_theorem, TheoremName, DEFAULT_BUDGET,
};
use tableaux::{Partition, StandardYoungTableau};

fn report(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS");
    } else {
        println!("criterion {criterion}: FAIL ({} problems)", failures.len());
        for f in failures.iter().take(20) {
            println!("  - {f}");
        }
        panic!("criterion {criterion} failed");
    }
}

fn seq(n: usize, entries: &[usize]) -> IntegerSequence {
    IntegerSequence::new(n, entries.to_vec()).unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn syt(rows: &[&[usize]]) -> StandardYoungTableau {
    StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn criterion_1_counting_identity() {
    let mut failures = Vec::new();
    for n in 1..=6 {
        for k in 0..=4 {
            match verify_identity(n, k, DEFAULT_BUDGET) {
                Ok(r) if r.ok() && r.total == (n as u64).pow(k as u32) => {}
                Ok(r) => failures.push(format!("n={n} k={k}: {:?}", r.violations)),
                Err(e) => failures.push(format!("n={n} k={k}: {e}")),
            }
        }
    }
    report("1 (identity n^k = sum of f*m, n <= 6, k <= 4)", failures);
}

#[test]
fn criterion_2_worked_examples() {
    let mut failures = Vec::new();
    fn check(failures: &mut Vec<String>, name: &str, ok: bool) {
        if !ok {
            failures.push(name.to_string());
        }
    }

    // delete-insert trace at n = 6, i = (3,2,5)
    let img = di_forward(&seq(6, &[3, 2, 5]));
    check(
        &mut failures,
        "di(3,2,5) tableau",
        img.p == syt(&[&[1, 2, 5], &[3, 6], &[4]]),
    );
    let gamma_steps: Vec<Partition> = [
        &[6][..], &[5][..], &[5, 1][..], &[4, 1][..], &[4, 1, 1][..], &[3, 1, 1][..],
        &[3, 2, 1][..],
    ]
    .iter()
    .map(|s| p(s))
    .collect();
    check(&mut failures, "di(3,2,5) shape trace", img.gamma.steps() == gamma_steps.as_slice());

    // the psi construction at n = 8, i = (3,2,6,2)
    let img = di_forward(&seq(8, &[3, 2, 6, 2]));
    check(
        &mut failures,
        "di(3,2,6,2) tableau",
        img.p == syt(&[&[1, 2, 6, 8], &[3, 5], &[4, 7]]),
    );
    let gamma_steps: Vec<Partition> = [
        &[8][..], &[7][..], &[7, 1][..], &[6, 1][..], &[6, 1, 1][..], &[5, 1, 1][..],
        &[5, 2, 1][..], &[4, 2, 1][..], &[4, 2, 2][..],
    ]
    .iter()
    .map(|s| p(s))
    .collect();
    check(&mut failures, "di(3,2,6,2) shape trace", img.gamma.steps() == gamma_steps.as_slice());
    check(
        &mut failures,
        "q* of (3,2,6,2)",
        vt_to_syt_star(&img.gamma).unwrap() == syt(&[&[1, 3], &[2, 4]]),
    );
    match psi_detailed(&seq(8, &[3, 2, 6, 2])) {
        Ok(detail) => {
            check(&mut failures, "psi q*", detail.q_star == syt(&[&[1, 3], &[2, 4]]));
            check(
        &mut failures,
                "psi q",
                detail.q == syt(&[&[1, 2, 3, 4], &[5, 7], &[6, 8]]),
            );
            check(
        &mut failures,
                "psi word",
                detail.w.permutation().word() == [4, 5, 7, 8, 3, 1, 6, 2],
            );
        }
        Err(e) => failures.push(format!("psi(3,2,6,2): {e}")),
    }

    // forward transform on the permutation
    let w = RnkPermutation::new(
        Permutation::new(vec![4, 5, 7, 8, 3, 1, 6, 2]).unwrap(),
        4,
    )
    .unwrap();
    match algorithm_a(&w) {
        Ok((t, i)) => {
            check(&mut failures, "algorithm A bumps", t.entries() == [4, 3, 7, 5]);
            check(&mut failures, "algorithm A output", i.entries() == [3, 2, 6, 2]);
        }
        Err(e) => failures.push(format!("algorithm A: {e}")),
    }

    // backward-transform failure modes at n = 4
    check(
        &mut failures,
        "algorithm B overflow",
        algorithm_b(&seq(4, &[4, 4])) == AlgorithmB::Step2Overflow { t: vec![5, 6] },
    );
    check(
        &mut failures,
        "algorithm B underflow",
        algorithm_b(&seq(4, &[1, 1]))
            == AlgorithmB::Step3Underflow {
                t: vec![2, 3],
                a: vec![0, 1],
            },
    );

    // segment collapse and its decomposition at n = 15, k = 7
    let big = syt(&[
        &[1, 2, 4, 7, 8, 9, 11, 15],
        &[3, 5, 6, 10, 12, 13, 14],
    ]);
    let i = two_row_from_syt(&big).unwrap();
    check(&mut failures, "segment collapse", i.entries() == [2, 4, 4, 9, 11, 11, 11]);
    match two_row_decompose(&i) {
        Ok(d) => {
            check(&mut failures, "north coordinates", d.v == [2, 3, 3, 6, 7, 7, 7]);
            check(&mut failures, "run offsets", d.eps == [0, 1, 1, 3, 4, 4, 4]);
            check(&mut failures, "second row", d.second_row() == [3, 5, 6, 10, 12, 13, 14]);
        }
        Err(e) => failures.push(format!("two-row decomposition: {e}")),
    }
    check(
        &mut failures,
        "segment collapse image",
        di_forward(&i).p == big,
    );

    // reparking both ways from (3,2,5,8,9)
    let inst = ReparkingInstance::new(11, vec![3, 2, 5, 8, 9]).unwrap();
    let right = repark(&inst, Direction::Right);
    check(
        &mut failures,
        "repark right",
        right.success && right.positions == Some(vec![4, 3, 6, 10, 11]),
    );
    let left = repark(&inst, Direction::Left);
    check(
        &mut failures,
        "repark left",
        left.success && left.positions == Some(vec![2, 1, 4, 6, 7]),
    );

    // both multiset-tableau examples
    let cell = |v: &[usize]| MultisetCell::new(v.iter().copied());
    let (s, t) = cossz_forward(&seq(6, &[3, 2, 6, 2]));
    check(&mut failures, "cossz n=6 insertion", s == syt(&[&[1, 2, 5, 6], &[3], &[4]]));
    let expected = MultisetTableau::new(vec![
        vec![MultisetCell::empty(), MultisetCell::empty(), MultisetCell::empty(), cell(&[3])],
        vec![cell(&[1])],
        vec![cell(&[2, 4])],
    ])
    .unwrap();
    check(&mut failures, "cossz n=6 recording", t == expected);

    let (s, t) = cossz_forward(&seq(8, &[3, 1, 6, 2]));
    check(&mut failures, "cossz n=8 insertion", s == syt(&[&[1, 2, 6, 8], &[3, 5], &[4, 7]]));
    let expected = MultisetTableau::new(vec![
        vec![
            MultisetCell::empty(),
            MultisetCell::empty(),
            MultisetCell::empty(),
            MultisetCell::empty(),
        ],
        vec![cell(&[1]), cell(&[3])],
        vec![cell(&[2]), cell(&[4])],
    ])
    .unwrap();
    check(&mut failures, "cossz n=8 recording", t == expected);
    check(&mut failures, "cossz n=8 shape", s.shape() == p(&[4, 2, 2]));

    report("2 (worked examples, bit-exact)", failures);
}

#[test]
fn criterion_3_round_trips() {
    let mut failures = Vec::new();

    // delete-insert round trip over [n]^k, n <= 6, k <= 4
    for n in 1..=6 {
        for k in 0..=4 {
            for entries in integer_sequences(n, k) {
                let s = seq(n, &entries);
                let img = di_forward(&s);
                match di_inverse(&img.p, &img.gamma) {
                    Ok(back) if back == s => {}
                    other => {
                        failures.push(format!("di round trip n={n} {entries:?}: {other:?}"));
                    }
                }
            }
        }
    }

    // psi round trip on every maximal-index sequence, n <= 6, k <= 4
    for n in 2..=6 {
        for k in 1..=4.min(n - 1) {
            for entries in integer_sequences(n, k) {
                let s = seq(n, &entries);
                if vt_index(&s) != k {
                    continue;
                }
                match psi_detailed(&s).map(|d| psi_inverse(&d.w)) {
                    Ok(Ok(back)) if back == s => {}
                    other => failures.push(format!("psi round trip n={n} {entries:?}: {other:?}")),
                }
            }
        }
    }

    // insertion round trip over the whole symmetric group on six letters
    for w in permutations(6) {
        let (p, q) = rsk_permutation(&w);
        match inverse_rsk_permutation(&p, &q) {
            Ok(back) if back == w => {}
            other => failures.push(format!("rsk round trip {w:?}: {other:?}")),
        }
    }

    // multiset-tableau round trip, n <= 5, k <= 4
    for n in 1..=5 {
        for k in 0..=4 {
            for entries in integer_sequences(n, k) {
                let s = seq(n, &entries);
                let (ins, rec) = cossz_forward(&s);
                match cossz_inverse(&ins, &rec) {
                    Ok(back) if back == s => {}
                    other => {
                        failures.push(format!("cossz round trip n={n} {entries:?}: {other:?}"))
                    }
                }
            }
        }
    }

    report("3 (round trips)", failures);
}

#[test]
fn criterion_4_characterization_equivalences() {
    let mut failures = Vec::new();
    let mut run = |name: TheoremName, n: usize, k: usize| {
        match verify_theorem(name, n, k, DEFAULT_BUDGET) {
            Ok(r) if r.ok() => {}
            Ok(r) => failures.push(format!("{name} n={n} k={k}: {:?}", r.violations)),
            Err(e) => failures.push(format!("{name} n={n} k={k}: {e}")),
        }
    };
    for n in 1..=6usize {
        for k in 1..=4usize {
            run(TheoremName::OneRow, n, k);
            if n > k {
                run(TheoremName::Hook, n, k);
                run(TheoremName::MaxIndexTest, n, k);
            }
            if n >= 2 * k {
                run(TheoremName::TwoRow, n, k);
            }
            if n > k && k <= 3 {
                run(TheoremName::BumpingCriterion, n, k);
                run(TheoremName::SuffixCriterion, n, k);
                run(TheoremName::Cossz, n, k);
            }
        }
    }
    report("4 (characterization equivalences, n <= 6)", failures);
}

#[test]
fn criterion_5_counting_identities() {
    let mut failures = Vec::new();

    // the five members on four letters and their images
    let members: Vec<Vec<usize>> = enumerate_rnk(4, 2)
        .unwrap()
        .iter()
        .map(|w| w.permutation().word().to_vec())
        .collect();
    if members
        != vec![
            vec![1, 4, 3, 2],
            vec![2, 4, 1, 3],
            vec![2, 4, 3, 1],
            vec![3, 4, 1, 2],
            vec![3, 4, 2, 1],
        ]
    {
        failures.push(format!("member list on four letters: {members:?}"));
    }
    let max_index: BTreeSet<Vec<usize>> = integer_sequences(4, 2)
        .filter(|e| vt_index(&seq(4, e)) == 2)
        .collect();
    let expected: BTreeSet<Vec<usize>> = [
        vec![2, 2],
        vec![1, 3],
        vec![3, 2],
        vec![3, 1],
        vec![2, 1],
    ]
    .into_iter()
    .collect();
    if max_index != expected {
        failures.push(format!("maximal-index sequences on [4]^2: {max_index:?}"));
    }

    // one-row counts against Stirling sums
    for n in 1..=6usize {
        for k in 1..=4usize {
            let observed = integer_sequences(n, k)
                .filter(|e| vt_shape(&seq(n, e)) == Partition::row(n))
                .count() as u64;
            let predicted: u64 = (1..=n.min(k)).map(|i| stirling2(k, i)).sum();
            if observed != predicted {
                failures.push(format!(
                    "one-row count n={n} k={k}: {observed} vs {predicted}"
                ));
            }
        }
    }

    // hook counts against binomials
    for n in 2..=6usize {
        for k in 1..=4.min(n - 1) {
            let hook = Partition::hook(n - k, k).unwrap();
            let observed = integer_sequences(n, k)
                .filter(|e| vt_shape(&seq(n, e)) == hook)
                .count() as u64;
            if observed != binomial(n - 1, k) {
                failures.push(format!(
                    "hook count n={n} k={k}: {observed} vs {}",
                    binomial(n - 1, k)
                ));
            }
        }
    }

    // two-row counts against the tableau count, including the square case
    for n in 2..=6usize {
        for k in 1..=n / 2 {
            let two_row = p(&[n - k, k]);
            let observed = integer_sequences(n, k)
                .filter(|e| vt_shape(&seq(n, e)) == two_row)
                .count() as u64;
            if observed != count_syt(&two_row) {
                failures.push(format!(
                    "two-row count n={n} k={k}: {observed} vs {}",
                    count_syt(&two_row)
                ));
            }
        }
    }
    for m in 1..=5usize {
        if count_syt(&p(&[m, m])) != catalan(m) {
            failures.push(format!("square count m={m}"));
        }
    }

    // member-class sizes f^lambda * f^{lambda*}
    for n in 2..=6usize {
        for k in 1..=n - 1 {
            let members = enumerate_rnk(n, k).unwrap();
            for lambda in Partition::all_of(n) {
                if lambda.first() != n - k {
                    continue;
                }
                let observed = members.iter().filter(|w| w.shape() == lambda).count() as u64;
                let predicted = count_syt(&lambda) * count_syt(&lambda.star());
                if observed != predicted {
                    failures.push(format!(
                        "class size n={n} k={k} {lambda}: {observed} vs {predicted}"
                    ));
                }
            }
        }
    }

    report("5 (counting identities)", failures);
}

#[test]
fn criterion_6_reparking_equivalence() {
    let mut failures = Vec::new();
    for n in 1..=9 {
        for k in 1..=4.min(n) {
            match verify_theorem(TheoremName::Repark, n, k, DEFAULT_BUDGET) {
                Ok(r) if r.ok() => {}
                Ok(r) => failures.push(format!("n={n} k={k}: {:?}", r.violations)),
                Err(e) => failures.push(format!("n={n} k={k}: {e}")),
            }
        }
    }
    report("6 (reparking simulation matches criterion, n <= 9, k <= 4)", failures);
}

#[test]
fn criterion_7_two_row_count_note() {
    let mut failures = Vec::new();
    let notes = two_row_count_comparison(10);
    for note in &notes {
        println!("note: {}", note.render());
        if note.oracle != note.lattice_paths {
            failures.push(format!(
                "oracle {} disagrees with lattice paths {} at ({}, {})",
                note.oracle, note.lattice_paths, note.n, note.k
            ));
        }
        if !note.standard_matches {
            failures.push(format!(
                "(n-2k+1)/(n-k+1)*C(n,k) misses the oracle at ({}, {})",
                note.n, note.k
            ));
        }
        if note.printed_matches {
            failures.push(format!(
                "(n-2k-1)/(n-k+1)*C(n,k) unexpectedly matches at ({}, {})",
                note.n, note.k
            ));
        }
    }
    if notes.is_empty() {
        failures.push("no comparison notes emitted".into());
    }
    report("7 (two-row count: oracle authoritative, printed fraction flagged)", failures);
}
