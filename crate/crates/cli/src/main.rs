//! Command-line front end: every operation reads small JSON or inline
//! arguments and prints JSON on stdout. `verify` subcommands exit nonzero
//! when a sweep finds violations.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tableaux::bumping::{
    bumping_criterion, repark, suffix_criterion, Direction, ReparkingInstance,
};
use tableaux::cossz::{cossz_forward, cossz_inverse, cossz_maxshape, MultisetTableau};
use tableaux::counts::stirling2;
use tableaux::di::{di_forward, di_inverse, IntegerSequence};
use tableaux::max_index::{
    algorithm_a, algorithm_b, psi_detailed, psi_inverse, recover_from_bumping, AlgorithmB,
    RnkPermutation, TransformGrid,
};
use tableaux::rsk::{jdt_delete, row_insert, rsk_permutation, Permutation};
use tableaux::shapes::{
    classify, is_hook_sequence, is_one_row, one_row_to_set_partition, two_row_decompose,
    ShapeClass,
};
use tableaux::vacillating::VacillatingTableau;
use tableaux::verify::{
    two_row_count_comparison, verify_identity, verify_theorem, SweepReport, TheoremName,
    DEFAULT_BUDGET,
};
use tableaux::{PartialTableau, StandardYoungTableau};

#[derive(Parser)]
#[command(name = "tableaux", version, about = "Delete-insert correspondence toolkit")]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeqArgs {
    /// Alphabet size n.
    #[arg(long)]
    n: usize,
    /// Space- or comma-separated entries, e.g. "3 2 5".
    #[arg(long, allow_hyphen_values = true)]
    seq: String,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion and recording tableaux of a permutation.
    Rsk {
        /// One-line notation, e.g. "4 5 7 8 3 1 6 2".
        #[arg(long)]
        perm: String,
    },
    /// Row-insert a value into a tableau read from a JSON file.
    Insert {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        value: usize,
    },
    /// Jeu de taquin deletion of a value from a tableau JSON file.
    Jdt {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        delete: usize,
    },
    /// Apply the delete-insert map to a sequence.
    Di(SeqArgs),
    /// Invert the delete-insert map from tableau and shape-sequence files.
    DiInv {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
    },
    /// Map a maximal-index sequence to its member permutation.
    Psi(SeqArgs),
    /// Recover the sequence of a member permutation.
    PsiInv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perm: String,
    },
    /// Forward transform: permutation to bumping sequence and sequence.
    AlgoA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perm: String,
        /// Include an ASCII rendering of the shading grid.
        #[arg(long)]
        render_grid: bool,
    },
    /// Backward transform: sequence to bumping sequence and permutation.
    AlgoB {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        render_grid: bool,
    },
    /// Transform-based test for maximal index.
    MaxIndexTest(SeqArgs),
    /// Is this the bumping sequence of some member permutation?
    BumpCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
    },
    /// Is this the suffix of some member permutation?
    SuffixCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
    },
    /// Repark cars to the nearest free spot in one direction.
    Repark {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cars: String,
        #[arg(long)]
        dir: String,
    },
    /// Multiset-tableau image of a sequence.
    Cossz(SeqArgs),
    /// Invert the multiset-tableau map from two JSON files.
    CosszInv {
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
    },
    /// Classify a sequence by the characterized image shapes.
    ShapeTest {
        #[command(flatten)]
        seq: SeqArgs,
        /// Expected length; checked against the sequence when given.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Count one-row sequences and the matching Stirling sum.
    OneRowCount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive verification sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Sweep [n]^k and check the per-shape counting identity.
    Identity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run one named equivalence sweep (thm3.1, thm3.2, thm3.4, lem4.1,
    /// thm4.4, thm4.5, thm5.2, cor5.3, cossz, repark).
    Theorem {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Compare the two-row sequence count against both closed-form
    /// fractions for all n up to the bound.
    TwoRowNote {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<usize>()
                .with_context(|| format!("cannot parse '{tok}' as a positive integer"))
        })
        .collect()
}

fn parse_seq(args: &SeqArgs) -> Result<IntegerSequence> {
    Ok(IntegerSequence::new(args.n, parse_numbers(&args.seq)?)?)
}

fn parse_perm(s: &str) -> Result<Permutation> {
    Ok(Permutation::new(parse_numbers(s)?)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn budget() -> u64 {
    std::env::var("TABLEAUX_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn emit(pretty: bool, value: &Value) -> Result<()> {
    let text = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    println!("{text}");
    Ok(())
}

fn algorithm_b_json(outcome: &AlgorithmB) -> Value {
    match outcome {
        AlgorithmB::Success { t, w } => json!({
            "outcome": "success",
            "t": t.entries(),
            "w": w.permutation().word(),
            "shape": w.shape(),
        }),
        AlgorithmB::Step2Overflow { t } => json!({
            "outcome": "step2-overflow",
            "t": t,
        }),
        AlgorithmB::Step3Underflow { t, a } => json!({
            "outcome": "step3-underflow",
            "t": t,
            "a": a,
        }),
    }
}

fn report_json(report: &SweepReport) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn run(cli: Cli) -> Result<bool> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Rsk { perm } => {
            let w = parse_perm(&perm)?;
            let (p, q) = rsk_permutation(&w);
            emit(pretty, &json!({ "p": p, "q": q, "shape": p.shape() }))?;
        }
        Command::Insert { tableau, value } => {
            let t: PartialTableau = read_json(&tableau)?;
            let ins = row_insert(&t, value)?;
            emit(
                pretty,
                &json!({
                    "tableau": ins.tableau,
                    "row_index": ins.row_index,
                    "bumped_out": ins.bumped_out,
                }),
            )?;
        }
        Command::Jdt { tableau, delete } => {
            let t: PartialTableau = read_json(&tableau)?;
            let out = jdt_delete(&t, delete)?;
            emit(pretty, &json!({ "tableau": out }))?;
        }
        Command::Di(args) => {
            let seq = parse_seq(&args)?;
            let img = di_forward(&seq);
            emit(
                pretty,
                &json!({
                    "p": img.p,
                    "gamma": img.gamma,
                    "shape": img.shape(),
                    "vt_index": img.shape().star().size(),
                }),
            )?;
        }
        Command::DiInv { p, gamma } => {
            let p: StandardYoungTableau = read_json(&p)?;
            let gamma: VacillatingTableau = read_json(&gamma)?;
            let seq = di_inverse(&p, &gamma)?;
            emit(pretty, &json!({ "n": seq.n(), "seq": seq.entries() }))?;
        }
        Command::Psi(args) => {
            let seq = parse_seq(&args)?;
            let img = psi_detailed(&seq)?;
            emit(
                pretty,
                &json!({
                    "w": img.w.permutation().word(),
                    "q_star": img.q_star,
                    "q": img.q,
                    "shape": img.w.shape(),
                }),
            )?;
        }
        Command::PsiInv { n, perm } => {
            let w = parse_perm(&perm)?;
            if w.n() != n {
                bail!("permutation has {} letters but n = {n}", w.n());
            }
            // membership forces k = n - is(w)
            let k = n - rsk_permutation(&w).0.shape().first();
            let member = RnkPermutation::new(w, k)?;
            let seq = psi_inverse(&member)?;
            emit(pretty, &json!({ "n": n, "k": k, "seq": seq.entries() }))?;
        }
        Command::AlgoA { n, perm, render_grid } => {
            let w = parse_perm(&perm)?;
            if w.n() != n {
                bail!("permutation has {} letters but n = {n}", w.n());
            }
            let k = n - rsk_permutation(&w).0.shape().first();
            let member = RnkPermutation::new(w, k)?;
            let (t, i) = algorithm_a(&member)?;
            let mut out = json!({
                "k": k,
                "t": t.entries(),
                "i": i.entries(),
                "shape": member.shape(),
            });
            if render_grid {
                out["grid"] =
                    Value::String(TransformGrid::new(n, t.entries(), i.entries()).to_string());
            }
            emit(pretty, &out)?;
        }
        Command::AlgoB { seq, render_grid } => {
            let s = parse_seq(&seq)?;
            let outcome = algorithm_b(&s);
            let mut out = algorithm_b_json(&outcome);
            if render_grid {
                let grid = match &outcome {
                    AlgorithmB::Success { t, w } => {
                        TransformGrid::new(s.n(), t.entries(), w.suffix())
                    }
                    AlgorithmB::Step2Overflow { t } => TransformGrid::new(s.n(), t, &[]),
                    AlgorithmB::Step3Underflow { t, a } => {
                        let shown: Vec<usize> = a
                            .iter()
                            .map(|&x| if x > 0 { x as usize } else { 0 })
                            .collect();
                        TransformGrid::new(s.n(), t, &shown)
                    }
                };
                out["grid"] = Value::String(grid.to_string());
            }
            emit(pretty, &out)?;
        }
        Command::MaxIndexTest(args) => {
            let s = parse_seq(&args)?;
            let outcome = algorithm_b(&s);
            let recovered = match &outcome {
                AlgorithmB::Success { t, .. } => recover_from_bumping(t.entries()).ok(),
                _ => None,
            };
            let has_max = matches!(&recovered, Some(r) if r == s.entries());
            emit(
                pretty,
                &json!({
                    "has_max_vt_index": has_max,
                    "transform": algorithm_b_json(&outcome),
                    "recovered": recovered,
                }),
            )?;
        }
        Command::BumpCheck { n, t } => {
            let t = parse_numbers(&t)?;
            let ok = bumping_criterion(&t, n)?;
            emit(pretty, &json!({ "is_bumping_sequence": ok, "t": t, "n": n }))?;
        }
        Command::SuffixCheck { n, a } => {
            let a = parse_numbers(&a)?;
            let ok = suffix_criterion(&a, n)?;
            emit(pretty, &json!({ "is_member_suffix": ok, "a": a, "n": n }))?;
        }
        Command::Repark { n, cars, dir } => {
            let direction: Direction = dir.parse()?;
            let instance = ReparkingInstance::new(n, parse_numbers(&cars)?)?;
            let out = repark(&instance, direction);
            emit(
                pretty,
                &json!({
                    "success": out.success,
                    "positions": out.positions,
                    "predicted": out.predicted,
                }),
            )?;
        }
        Command::Cossz(args) => {
            let s = parse_seq(&args)?;
            let (ins, rec) = cossz_forward(&s);
            emit(
                pretty,
                &json!({
                    "s": ins,
                    "t": rec,
                    "shape": ins.shape(),
                    "max_shape": cossz_maxshape(&s),
                }),
            )?;
        }
        Command::CosszInv { s, t } => {
            let s: StandardYoungTableau = read_json(&s)?;
            let t: MultisetTableau = read_json(&t)?;
            let seq = cossz_inverse(&s, &t)?;
            emit(pretty, &json!({ "n": seq.n(), "seq": seq.entries() }))?;
        }
        Command::ShapeTest { seq, k } => {
            let s = parse_seq(&seq)?;
            if let Some(k) = k {
                if k != s.k() {
                    bail!("sequence has length {}, not k = {k}", s.k());
                }
            }
            let class = classify(&s);
            let mut out = json!({
                "shape_class": class,
                "vt_shape": di_forward(&s).shape(),
                "one_row": is_one_row(&s),
                "hook": is_hook_sequence(&s),
            });
            if class == ShapeClass::OneRow {
                out["set_partition"] = serde_json::to_value(one_row_to_set_partition(&s)?)?;
            }
            if let Ok(d) = two_row_decompose(&s) {
                out["v"] = json!(d.v);
                out["eps"] = json!(d.eps);
                out["path"] = json!(d.path.to_string());
                out["second_row"] = json!(d.second_row());
            }
            emit(pretty, &out)?;
        }
        Command::OneRowCount { n, k } => {
            let stirling_sum: u64 = (1..=n.min(k)).map(|i| stirling2(k, i)).sum();
            let report = verify_theorem(TheoremName::OneRow, n, k, budget())?;
            if !report.ok() {
                bail!("one-row sweep found violations: {:?}", report.violations);
            }
            emit(
                pretty,
                &json!({ "n": n, "k": k, "count": stirling_sum, "stirling_sum": stirling_sum }),
            )?;
        }
        Command::Verify(cmd) => {
            let report = match cmd {
                VerifyCommand::Identity { n, k } => verify_identity(n, k, budget())?,
                VerifyCommand::Theorem { name, n, k } => {
                    let name: TheoremName = name.parse()?;
                    verify_theorem(name, n, k, budget())?
                }
                VerifyCommand::TwoRowNote { max_n } => {
                    let notes = two_row_count_comparison(max_n);
                    emit(pretty, &serde_json::to_value(&notes)?)?;
                    let consistent = notes
                        .iter()
                        .all(|x| x.standard_matches && !x.printed_matches);
                    return Ok(consistent);
                }
            };
            let ok = report.ok();
            emit(pretty, &report_json(&report))?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
