//! Exhaustive verification sweeps: the counting identity and the per-theorem
//! equivalence checks, reported with per-shape tallies and violation records.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bumping::{bumping_criterion, repark, reverse_complement, suffix_criterion, Direction,
    ReparkingInstance};
use crate::cossz::{cossz_forward, cossz_inverse, cossz_maxshape};
use crate::counts::{ballot_paths, binomial, stirling2};
use crate::di::{di_forward, vt_index, vt_shape, IntegerSequence};
use crate::enumerate::distinct_sequences;
use crate::error::{Error, Result};
use crate::max_index::{algorithm_a, algorithm_b, enumerate_rnk, has_max_vt_index, psi,
    psi_inverse, AlgorithmB};
use crate::partition::Partition;
use crate::set_partition::set_partition_blocks;
use crate::shapes::{is_hook_sequence, is_one_row, set_partition_to_one_row, two_row_decompose,
    two_row_from_syt};
use crate::tableau::{count_syt, enumerate_syt_with_bound};
use crate::vacillating::{enumerate_vt, syt_star_to_vt, vt_to_syt_star};

/// Default number of sequences a sweep may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub const REPORT_SCHEMA: u32 = 1;

/// Tally for one shape: how many sequences landed on it versus the counted
/// prediction `f^λ · m_k^λ`.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeTally {
    pub shape: Partition,
    pub observed: u64,
    pub f_lambda: u64,
    pub m_k_lambda: u64,
}

/// A single counterexample found by a sweep.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub check: String,
    pub input: Vec<usize>,
    pub detail: String,
}

/// Outcome of one sweep. `violations` empty means the claim held everywhere.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub target: String,
    pub n: usize,
    pub k: usize,
    /// Number of inputs visited.
    pub total: u64,
    pub per_shape: Vec<ShapeTally>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(target: impl Into<String>, n: usize, k: usize) -> Self {
        SweepReport {
            schema: REPORT_SCHEMA,
            target: target.into(),
            n,
            k,
            total: 0,
            per_shape: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn finish(mut self) -> Self {
        self.violations.sort();
        self
    }
}

fn check_budget(n: usize, k: usize, budget: u64) -> Result<u64> {
    let size = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(Error::BudgetExceeded {
            size: size.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    Ok(size as u64)
}

fn worker_count(n: usize) -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(n)
        .min(8)
        .max(1)
}

/// Map every sequence in `[n]^k` through `visit`, chunked by first
/// coordinate across a small worker pool. Accumulators come back in chunk
/// order, so merging is deterministic regardless of scheduling.
fn parallel_sweep<A, I, F>(n: usize, k: usize, init: I, visit: F) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&[usize], &mut A) + Sync,
{
    if k == 0 {
        let mut acc = init();
        visit(&[], &mut acc);
        return vec![acc];
    }
    let workers = worker_count(n);
    let chunk = n.div_ceil(workers);
    let ranges: Vec<(usize, usize)> = (0..workers)
        .map(|w| (1 + w * chunk, n.min((w + 1) * chunk)))
        .filter(|(lo, hi)| lo <= hi)
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|(lo, hi)| {
                let init = &init;
                let visit = &visit;
                scope.spawn(move || {
                    let mut acc = init();
                    let mut seq = vec![0usize; k];
                    for first in lo..=hi {
                        seq[0] = first;
                        odometer(n, &mut seq, 1, visit, &mut acc);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

fn odometer<A>(
    n: usize,
    seq: &mut Vec<usize>,
    from: usize,
    visit: &(impl Fn(&[usize], &mut A) + Sync),
    acc: &mut A,
) {
    if from == seq.len() {
        visit(seq, acc);
        return;
    }
    for v in 1..=n {
        seq[from] = v;
        odometer(n, seq, from + 1, visit, acc);
    }
}

#[derive(Default)]
struct SweepAcc {
    count: u64,
    tallies: BTreeMap<Partition, u64>,
    violations: Vec<Violation>,
}

fn merge(parts: Vec<SweepAcc>) -> SweepAcc {
    let mut out = SweepAcc::default();
    for p in parts {
        out.count += p.count;
        for (shape, c) in p.tallies {
            *out.tallies.entry(shape).or_default() += c;
        }
        out.violations.extend(p.violations);
    }
    out
}

/// Sweep `[n]^k` through the delete-insert map and compare the per-shape
/// counts with `f^λ · m_k^λ`; the grand total must be `n^k`.
pub fn verify_identity(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("identity", n, k);
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("swept entries lie in [n]");
        *acc.tallies.entry(vt_shape(&seq)).or_default() += 1;
        acc.count += 1;
    }));
    report.total = swept.count;
    let mut predicted_total = 0u64;
    for lambda in Partition::all_of(n) {
        let observed = swept.tallies.get(&lambda).copied().unwrap_or(0);
        let f = count_syt(&lambda);
        let m = enumerate_vt(n, k, &lambda)?.len() as u64;
        predicted_total += f * m;
        if observed != f * m {
            report.violations.push(Violation {
                check: "identity-per-shape".into(),
                input: lambda.parts().to_vec(),
                detail: format!("observed {observed} sequences, predicted f*m = {}", f * m),
            });
        }
        report.per_shape.push(ShapeTally {
            shape: lambda,
            observed,
            f_lambda: f,
            m_k_lambda: m,
        });
    }
    if report.total != (n as u64).pow(k as u32) || predicted_total != report.total {
        report.violations.push(Violation {
            check: "identity-total".into(),
            input: vec![],
            detail: format!(
                "swept {} sequences, predicted {predicted_total}, expected n^k = {}",
                report.total,
                (n as u64).pow(k as u32)
            ),
        });
    }
    report.notes.push(format!(
        "n^k = {} split across {} shapes",
        report.total,
        report.per_shape.iter().filter(|t| t.observed > 0).count()
    ));
    Ok(report.finish())
}

/// The named sweeps. Names follow the statements they exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremName {
    /// One-row images are the successor-closed sequences.
    OneRow,
    /// Hook images are the strictly decreasing sequences below `n`.
    Hook,
    /// Two-row images are the segment-collapsed second rows.
    TwoRow,
    /// Vacillating tableaux of a maximal-index shape match starred SYT.
    StarCorrespondence,
    /// The transforms between sequences and member permutations invert.
    PsiTransforms,
    /// The transform-based maximal-index test matches the map.
    MaxIndexTest,
    /// The bumping-sequence criterion matches brute force.
    BumpingCriterion,
    /// The suffix criterion matches brute force.
    SuffixCriterion,
    /// The multiset-tableau bijection: round trip, max-shape rule, counts.
    Cossz,
    /// Reparking simulation matches the street-end criterion.
    Repark,
}

impl TheoremName {
    pub const ALL: [TheoremName; 10] = [
        TheoremName::OneRow,
        TheoremName::Hook,
        TheoremName::TwoRow,
        TheoremName::StarCorrespondence,
        TheoremName::PsiTransforms,
        TheoremName::MaxIndexTest,
        TheoremName::BumpingCriterion,
        TheoremName::SuffixCriterion,
        TheoremName::Cossz,
        TheoremName::Repark,
    ];

    pub fn canonical(&self) -> &'static str {
        match self {
            TheoremName::OneRow => "thm3.1",
            TheoremName::Hook => "thm3.2",
            TheoremName::TwoRow => "thm3.4",
            TheoremName::StarCorrespondence => "lem4.1",
            TheoremName::PsiTransforms => "thm4.4",
            TheoremName::MaxIndexTest => "thm4.5",
            TheoremName::BumpingCriterion => "thm5.2",
            TheoremName::SuffixCriterion => "cor5.3",
            TheoremName::Cossz => "cossz",
            TheoremName::Repark => "repark",
        }
    }
}

impl fmt::Display for TheoremName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical())
    }
}

impl FromStr for TheoremName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm3.1" | "one-row" => Ok(TheoremName::OneRow),
            "thm3.2" | "hook" => Ok(TheoremName::Hook),
            "thm3.4" | "two-row" => Ok(TheoremName::TwoRow),
            "lem4.1" | "star" => Ok(TheoremName::StarCorrespondence),
            "thm4.4" | "psi" => Ok(TheoremName::PsiTransforms),
            "thm4.5" | "max-index" => Ok(TheoremName::MaxIndexTest),
            "thm5.2" | "bumping" => Ok(TheoremName::BumpingCriterion),
            "cor5.3" | "thm5.3" | "suffix" => Ok(TheoremName::SuffixCriterion),
            "cossz" | "sec6" => Ok(TheoremName::Cossz),
            "repark" => Ok(TheoremName::Repark),
            other => Err(Error::UnknownTheorem(other.into())),
        }
    }
}

/// Run one named sweep at the given parameters.
pub fn verify_theorem(name: TheoremName, n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    match name {
        TheoremName::OneRow => verify_one_row(n, k, budget),
        TheoremName::Hook => verify_hook(n, k, budget),
        TheoremName::TwoRow => verify_two_row(n, k, budget),
        TheoremName::StarCorrespondence => verify_star_correspondence(n, k),
        TheoremName::PsiTransforms => verify_psi_transforms(n, k, budget),
        TheoremName::MaxIndexTest => verify_max_index_test(n, k, budget),
        TheoremName::BumpingCriterion => verify_bumping_criterion(n, k, budget),
        TheoremName::SuffixCriterion => verify_suffix_criterion(n, k, budget),
        TheoremName::Cossz => verify_cossz(n, k, budget),
        TheoremName::Repark => verify_repark(n, k, budget),
    }
}

fn require_k_below_n(n: usize, k: usize) -> Result<()> {
    if n < k + 1 {
        return Err(Error::Precondition(format!(
            "need n >= k + 1, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn verify_one_row(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm3.1", n, k);
    let one_row = Partition::row(n);
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        acc.count += 1;
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
        let by_rule = is_one_row(&seq);
        let by_map = vt_shape(&seq) == one_row;
        if by_rule != by_map {
            acc.violations.push(Violation {
                check: "one-row-equivalence".into(),
                input: entries.to_vec(),
                detail: format!("condition says {by_rule}, map says {by_map}"),
            });
            return;
        }
        if by_rule {
            *acc.tallies.entry(one_row.clone()).or_default() += 1;
            // round trip through the block correspondence
            let blocks = set_partition_blocks(&seq);
            match set_partition_to_one_row(&blocks, n) {
                Ok(back) if back == seq => {}
                other => acc.violations.push(Violation {
                    check: "one-row-block-round-trip".into(),
                    input: entries.to_vec(),
                    detail: format!("round trip gave {other:?}"),
                }),
            }
        }
    }));
    report.total = swept.count;
    report.violations = swept.violations;
    let observed = swept.tallies.get(&one_row).copied().unwrap_or(0);
    let expected: u64 = (1..=n.min(k)).map(|i| stirling2(k, i)).sum();
    if observed != expected {
        report.violations.push(Violation {
            check: "one-row-count".into(),
            input: vec![],
            detail: format!("observed {observed}, stirling sum {expected}"),
        });
    }
    report.notes.push(format!(
        "{observed} one-row sequences; sum of S({k}, i) for i <= {n} is {expected}"
    ));
    Ok(report.finish())
}

fn verify_hook(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm3.2", n, k);
    let hook = Partition::hook(n - k, k)?;
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        acc.count += 1;
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
        let by_rule = is_hook_sequence(&seq);
        let by_map = vt_shape(&seq) == hook;
        if by_rule != by_map {
            acc.violations.push(Violation {
                check: "hook-equivalence".into(),
                input: entries.to_vec(),
                detail: format!("condition says {by_rule}, map says {by_map}"),
            });
        } else if by_rule {
            *acc.tallies.entry(hook.clone()).or_default() += 1;
        }
    }));
    report.total = swept.count;
    report.violations = swept.violations;
    let observed = swept.tallies.get(&hook).copied().unwrap_or(0);
    let expected = binomial(n - 1, k);
    if observed != expected {
        report.violations.push(Violation {
            check: "hook-count".into(),
            input: vec![],
            detail: format!("observed {observed}, C({}, {k}) = {expected}", n - 1),
        });
    }
    report.notes.push(format!(
        "{observed} hook sequences; C({}, {k}) = {expected}",
        n - 1
    ));
    Ok(report.finish())
}

fn verify_two_row(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    if k == 0 || n < 2 * k {
        return Err(Error::Precondition(format!(
            "need n >= 2k and k >= 1, got n = {n}, k = {k}"
        )));
    }
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm3.4", n, k);
    let two_row = Partition::new(vec![n - k, k])?;
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        acc.count += 1;
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
        let by_rule = two_row_decompose(&seq).is_ok();
        let by_map = vt_shape(&seq) == two_row;
        if by_rule != by_map {
            acc.violations.push(Violation {
                check: "two-row-equivalence".into(),
                input: entries.to_vec(),
                detail: format!("decomposition says {by_rule}, map says {by_map}"),
            });
        } else if by_rule {
            *acc.tallies.entry(two_row.clone()).or_default() += 1;
        }
    }));
    report.total = swept.count;
    report.violations = swept.violations;
    // every tableau of the shape comes back from its collapsed sequence
    for p in enumerate_syt_with_bound(&two_row, n.max(12))? {
        let i = two_row_from_syt(&p)?;
        let img = di_forward(&i);
        if img.p != p {
            report.violations.push(Violation {
                check: "two-row-image".into(),
                input: i.entries().to_vec(),
                detail: format!("expected tableau {:?}, map gave {:?}", p, img.p),
            });
        }
        match two_row_decompose(&i) {
            Ok(d) if d.second_row() == p.rows()[1] => {}
            other => report.violations.push(Violation {
                check: "two-row-round-trip".into(),
                input: i.entries().to_vec(),
                detail: format!("decomposition mismatch: {other:?}"),
            }),
        }
    }
    let observed = swept.tallies.get(&two_row).copied().unwrap_or(0);
    let oracle = count_syt(&two_row);
    if observed != oracle {
        report.violations.push(Violation {
            check: "two-row-count".into(),
            input: vec![],
            detail: format!("observed {observed}, tableau count {oracle}"),
        });
    }
    let note = two_row_count_note(n, k);
    if !note.standard_matches || note.printed_matches {
        report.violations.push(Violation {
            check: "two-row-fractions".into(),
            input: vec![],
            detail: format!("{note:?}"),
        });
    }
    report.notes.push(note.render());
    Ok(report.finish())
}

fn verify_star_correspondence(n: usize, k: usize) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    let mut report = SweepReport::new("lem4.1", n, k);
    for lambda in Partition::all_of(n) {
        if lambda.first() != n - k {
            continue;
        }
        let star = lambda.star();
        let vts = enumerate_vt(n, k, &lambda)?;
        let expected = count_syt(&star);
        report.per_shape.push(ShapeTally {
            shape: lambda.clone(),
            observed: vts.len() as u64,
            f_lambda: count_syt(&lambda),
            m_k_lambda: vts.len() as u64,
        });
        report.total += vts.len() as u64;
        if vts.len() as u64 != expected {
            report.violations.push(Violation {
                check: "star-count".into(),
                input: lambda.parts().to_vec(),
                detail: format!("{} vacillating tableaux, f^star = {expected}", vts.len()),
            });
        }
        let mut images = BTreeSet::new();
        for gamma in &vts {
            match vt_to_syt_star(gamma) {
                Ok(q) => {
                    if syt_star_to_vt(&q, n).ok().as_ref() != Some(gamma) {
                        report.violations.push(Violation {
                            check: "star-inverse".into(),
                            input: lambda.parts().to_vec(),
                            detail: format!("round trip failed for {gamma:?}"),
                        });
                    }
                    images.insert(q.rows().to_vec());
                }
                Err(e) => report.violations.push(Violation {
                    check: "star-map".into(),
                    input: lambda.parts().to_vec(),
                    detail: e.to_string(),
                }),
            }
        }
        let all_star: BTreeSet<_> = enumerate_syt_with_bound(&star, k)?
            .into_iter()
            .map(|t| t.rows().to_vec())
            .collect();
        if images != all_star {
            report.violations.push(Violation {
                check: "star-surjective".into(),
                input: lambda.parts().to_vec(),
                detail: format!("{} images vs {} tableaux", images.len(), all_star.len()),
            });
        }
    }
    report
        .notes
        .push(format!("{} shapes with first part n - k", report.per_shape.len()));
    Ok(report.finish())
}

fn verify_psi_transforms(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm4.4", n, k);
    let members = enumerate_rnk(n, k)?;
    let mut images = BTreeSet::new();
    let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
    for w in &members {
        report.total += 1;
        *by_shape.entry(w.shape()).or_default() += 1;
        let word = w.permutation().word().to_vec();
        let (t, i) = match algorithm_a(w) {
            Ok(pair) => pair,
            Err(e) => {
                report.violations.push(Violation {
                    check: "psi-forward-transform".into(),
                    input: word,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        if vt_shape(&i) != w.shape() {
            report.violations.push(Violation {
                check: "psi-shape".into(),
                input: word.clone(),
                detail: format!("image {:?} has shape {}", i, vt_shape(&i)),
            });
        }
        match psi(&i) {
            Ok(back) if &back == w => {}
            other => report.violations.push(Violation {
                check: "psi-definitional".into(),
                input: word.clone(),
                detail: format!("psi({i:?}) gave {other:?}"),
            }),
        }
        match algorithm_b(&i) {
            AlgorithmB::Success { t: t2, w: w2 } if t2 == t && &w2 == w => {}
            other => report.violations.push(Violation {
                check: "psi-backward-transform".into(),
                input: word.clone(),
                detail: format!("{other:?}"),
            }),
        }
        match psi_inverse(w) {
            Ok(back) if back == i => {}
            other => report.violations.push(Violation {
                check: "psi-inverse".into(),
                input: word.clone(),
                detail: format!("psi_inverse gave {other:?}"),
            }),
        }
        images.insert(i.entries().to_vec());
    }
    if images.len() != members.len() {
        report.violations.push(Violation {
            check: "psi-injective".into(),
            input: vec![],
            detail: format!("{} members, {} distinct images", members.len(), images.len()),
        });
    }
    // the images are exactly the maximal-index sequences
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
        if vt_index(&seq) == k {
            *acc.tallies
                .entry(vt_shape(&seq))
                .or_default() += 1;
            acc.count += 1;
        }
    }));
    if swept.count != members.len() as u64 {
        report.violations.push(Violation {
            check: "psi-surjective".into(),
            input: vec![],
            detail: format!(
                "{} maximal-index sequences vs {} members",
                swept.count,
                members.len()
            ),
        });
    }
    for (lambda, observed) in &swept.tallies {
        let f = count_syt(lambda);
        let f_star = count_syt(&lambda.star());
        let members_of_shape = by_shape.get(lambda).copied().unwrap_or(0);
        if *observed != f * f_star || members_of_shape != f * f_star {
            report.violations.push(Violation {
                check: "psi-class-size".into(),
                input: lambda.parts().to_vec(),
                detail: format!(
                    "sequences {observed}, members {members_of_shape}, f*f_star {}",
                    f * f_star
                ),
            });
        }
        report.per_shape.push(ShapeTally {
            shape: lambda.clone(),
            observed: *observed,
            f_lambda: f,
            m_k_lambda: f_star,
        });
    }
    report.notes.push(format!(
        "{} member permutations across {} shapes",
        members.len(),
        by_shape.len()
    ));
    Ok(report.finish())
}

fn verify_max_index_test(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm4.5", n, k);
    let swept = merge(parallel_sweep(n, k, SweepAcc::default, |entries, acc| {
        acc.count += 1;
        let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
        let by_test = has_max_vt_index(&seq);
        let by_map = vt_index(&seq) == k;
        if by_test != by_map {
            acc.violations.push(Violation {
                check: "max-index-equivalence".into(),
                input: entries.to_vec(),
                detail: format!("test says {by_test}, map says {by_map}"),
            });
        }
    }));
    report.total = swept.count;
    report.violations = swept.violations;
    Ok(report.finish())
}

fn verify_bumping_criterion(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("thm5.2", n, k);
    let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
    for w in enumerate_rnk(n, k)? {
        let (t, _) = algorithm_a(&w)
            .map_err(|e| Error::InconsistentTrace(format!("transform failed on {w:?}: {e}")))?;
        brute.insert(t.entries().to_vec());
    }
    for t in distinct_sequences(n, k) {
        report.total += 1;
        let by_criterion = bumping_criterion(&t, n)?;
        let by_brute = brute.contains(&t);
        if by_criterion != by_brute {
            report.violations.push(Violation {
                check: "bumping-equivalence".into(),
                input: t,
                detail: format!("criterion says {by_criterion}, brute force says {by_brute}"),
            });
        }
    }
    report
        .notes
        .push(format!("{} realizable bumping sequences", brute.len()));
    Ok(report.finish())
}

fn verify_suffix_criterion(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    require_k_below_n(n, k)?;
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("cor5.3", n, k);
    let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
    for w in enumerate_rnk(n, k)? {
        brute.insert(w.suffix().to_vec());
    }
    for a in distinct_sequences(n, k) {
        report.total += 1;
        let by_criterion = suffix_criterion(&a, n)?;
        let by_brute = brute.contains(&a);
        if by_criterion != by_brute {
            report.violations.push(Violation {
                check: "suffix-equivalence".into(),
                input: a.clone(),
                detail: format!("criterion says {by_criterion}, brute force says {by_brute}"),
            });
        }
        let dual = bumping_criterion(&reverse_complement(&a, n), n)?;
        if dual != by_criterion {
            report.violations.push(Violation {
                check: "suffix-duality".into(),
                input: a,
                detail: format!("criterion {by_criterion}, reverse complement {dual}"),
            });
        }
    }
    report
        .notes
        .push(format!("{} realizable suffixes", brute.len()));
    Ok(report.finish())
}

fn verify_cossz(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("cossz", n, k);
    type CosszAcc = (SweepAcc, BTreeSet<String>, BTreeMap<Partition, u64>);
    let parts = parallel_sweep(
        n,
        k,
        || (SweepAcc::default(), BTreeSet::new(), BTreeMap::new()),
        |entries, acc: &mut CosszAcc| {
            let (sweep, images, di_tallies) = acc;
            sweep.count += 1;
            let seq = IntegerSequence::new(n, entries.to_vec()).expect("in range");
            let (s, t) = cossz_forward(&seq);
            images.insert(format!("{:?}|{:?}", s, t));
            *sweep.tallies.entry(s.shape()).or_default() += 1;
            *di_tallies.entry(vt_shape(&seq)).or_default() += 1;
            match cossz_inverse(&s, &t) {
                Ok(back) if back == seq => {}
                other => sweep.violations.push(Violation {
                    check: "cossz-round-trip".into(),
                    input: entries.to_vec(),
                    detail: format!("inverse gave {other:?}"),
                }),
            }
            let distinct = {
                let mut sorted = entries.to_vec();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            };
            let max_shape = cossz_maxshape(&seq);
            let expected = distinct
                && n > k
                && suffix_criterion(entries, n).unwrap_or(false);
            if max_shape != expected {
                sweep.violations.push(Violation {
                    check: "cossz-max-shape".into(),
                    input: entries.to_vec(),
                    detail: format!("max-shape {max_shape}, suffix rule {expected}"),
                });
            }
        },
    );
    let mut swept = SweepAcc::default();
    let mut images = BTreeSet::new();
    let mut di_tallies: BTreeMap<Partition, u64> = BTreeMap::new();
    for (s, i, d) in parts {
        swept.count += s.count;
        swept.violations.extend(s.violations);
        for (shape, c) in s.tallies {
            *swept.tallies.entry(shape).or_default() += c;
        }
        images.extend(i);
        for (shape, c) in d {
            *di_tallies.entry(shape).or_default() += c;
        }
    }
    report.total = swept.count;
    report.violations = swept.violations;
    if images.len() as u64 != report.total {
        report.violations.push(Violation {
            check: "cossz-injective".into(),
            input: vec![],
            detail: format!("{} images from {} sequences", images.len(), report.total),
        });
    }
    if swept.tallies != di_tallies {
        report.violations.push(Violation {
            check: "cossz-shape-counts".into(),
            input: vec![],
            detail: "per-shape counts differ from the delete-insert map".into(),
        });
    }
    for (shape, observed) in swept.tallies {
        report.per_shape.push(ShapeTally {
            shape: shape.clone(),
            observed,
            f_lambda: count_syt(&shape),
            m_k_lambda: enumerate_vt(n, k, &shape)?.len() as u64,
        });
    }
    Ok(report.finish())
}

fn verify_repark(n: usize, k: usize, budget: u64) -> Result<SweepReport> {
    check_budget(n, k, budget)?;
    let mut report = SweepReport::new("repark", n, k);
    for xs in distinct_sequences(n, k) {
        report.total += 1;
        let instance = ReparkingInstance::new(n, xs.clone())?;
        for direction in [Direction::Right, Direction::Left] {
            let out = repark(&instance, direction);
            if out.success != out.predicted {
                report.violations.push(Violation {
                    check: "repark-prediction".into(),
                    input: xs.clone(),
                    detail: format!(
                        "{direction:?}: simulation {} vs criterion {}",
                        out.success, out.predicted
                    ),
                });
            }
        }
    }
    Ok(report.finish())
}

/// Exact comparison of the two-row sequence count against both printed
/// closed forms, `(n-2k±1)/(n-k+1) · C(n,k)`. The tableau count and the
/// lattice-path count are independent derivations of the true value.
#[derive(Clone, Debug, Serialize)]
pub struct TwoRowCountNote {
    pub n: usize,
    pub k: usize,
    pub oracle: u64,
    pub lattice_paths: u64,
    pub standard_fraction: String,
    pub standard_matches: bool,
    pub printed_fraction: String,
    pub printed_matches: bool,
}

impl TwoRowCountNote {
    pub fn render(&self) -> String {
        format!(
            "count for (n,k) = ({},{}) is {} (lattice paths {}); \
             (n-2k+1)/(n-k+1)*C(n,k) = {} ({}); (n-2k-1)/(n-k+1)*C(n,k) = {} ({})",
            self.n,
            self.k,
            self.oracle,
            self.lattice_paths,
            self.standard_fraction,
            if self.standard_matches { "matches" } else { "MISMATCH" },
            self.printed_fraction,
            if self.printed_matches {
                "unexpectedly matches"
            } else {
                "does not match, as suspected"
            },
        )
    }
}

fn fraction_string(numerator: i128, denominator: i128) -> String {
    if numerator % denominator == 0 {
        (numerator / denominator).to_string()
    } else {
        let g = gcd(numerator.unsigned_abs(), denominator.unsigned_abs()) as i128;
        format!("{}/{}", numerator / g, denominator / g)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn two_row_count_note(n: usize, k: usize) -> TwoRowCountNote {
    let shape = Partition::new(vec![n - k, k]).expect("n >= 2k");
    let oracle = count_syt(&shape);
    let lattice = ballot_paths(n - k, k);
    let denom = (n - k + 1) as i128;
    let choose = binomial(n, k) as i128;
    let standard_num = (n as i128 - 2 * k as i128 + 1) * choose;
    let printed_num = (n as i128 - 2 * k as i128 - 1) * choose;
    TwoRowCountNote {
        n,
        k,
        oracle,
        lattice_paths: lattice,
        standard_fraction: fraction_string(standard_num, denom),
        standard_matches: standard_num == oracle as i128 * denom,
        printed_fraction: fraction_string(printed_num, denom),
        printed_matches: printed_num == oracle as i128 * denom,
    }
}

/// Notes for every `(n, k)` with `2k <= n <= max_n`.
pub fn two_row_count_comparison(max_n: usize) -> Vec<TwoRowCountNote> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..=n / 2 {
            out.push(two_row_count_note(n, k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_small_cases() {
        let r = verify_identity(2, 1, DEFAULT_BUDGET).unwrap();
        assert!(r.ok());
        assert_eq!(r.total, 2);

        let r = verify_identity(4, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.ok());
        assert_eq!(r.total, 16);

        let r = verify_identity(6, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.ok());
        assert_eq!(r.total, 216);
        let tally = r
            .per_shape
            .iter()
            .find(|t| t.shape.parts() == [3, 2, 1])
            .unwrap();
        assert_eq!(tally.observed, 32);
        assert_eq!(tally.f_lambda, 16);
        assert_eq!(tally.m_k_lambda, 2);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            verify_identity(10, 9, 1_000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn theorem_names_parse() {
        for name in TheoremName::ALL {
            assert_eq!(name.canonical().parse::<TheoremName>().unwrap(), name);
        }
        assert!("thm9.9".parse::<TheoremName>().is_err());
    }

    #[test]
    fn theorem_sweeps_pass_at_a_small_size() {
        for name in TheoremName::ALL {
            let r = verify_theorem(name, 4, 2, DEFAULT_BUDGET).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.violations);
        }
    }

    #[test]
    fn max_index_sweep_counts_inputs() {
        let r = verify_theorem(TheoremName::MaxIndexTest, 4, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.ok());
        assert_eq!(r.total, 16);
    }

    #[test]
    fn hook_sweep_finds_the_binomial_count() {
        let r = verify_theorem(TheoremName::Hook, 5, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.ok());
        assert!(r.notes[0].contains("4 hook sequences"));
    }

    #[test]
    fn two_row_fraction_note() {
        let note = two_row_count_note(6, 3);
        assert_eq!(note.oracle, 5); // Catalan(3)
        assert!(note.standard_matches);
        assert!(!note.printed_matches);
        assert_eq!(note.standard_fraction, "5");
        assert_eq!(note.printed_fraction, "-5");

        for note in two_row_count_comparison(10) {
            assert_eq!(note.oracle, note.lattice_paths);
            assert!(note.standard_matches, "{note:?}");
            assert!(!note.printed_matches, "{note:?}");
        }
    }

    #[test]
    fn unknown_theorem_is_an_error() {
        assert!(matches!(
            "thm1.1".parse::<TheoremName>(),
            Err(Error::UnknownTheorem(_))
        ));
    }
}
