use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use nearbip::graph::{emit_edgelist, emit_graph6, random_p5free_graph};
use nearbip::lists::{emit_lists, ColourSet, ListAssignment, Mode};
use nearbip::solve::{self, SolveOptions};
use nearbip::{lsac, oracle, Graph, Stats};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FuzzProblem {
    Nb,
    Ifvs,
    Ioct,
    /// List semi-acyclic colouring with random lists.
    Lsac,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    #[arg(long, value_enum, default_value = "ifvs")]
    problem: FuzzProblem,
    #[arg(long, default_value_t = 500)]
    iterations: u64,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    parallel: bool,
    /// Print every generated instance (graph6).
    #[arg(long)]
    dump: bool,
    #[arg(long)]
    json: bool,
    /// Deliberately perturb the solver's answers (harness self-test).
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Serialize)]
struct Summary {
    problem: FuzzProblem,
    iterations: u64,
    mismatches: u64,
    yes: u64,
    stats: Stats,
}

/// Solver and oracle answers reduced to comparable numbers.
fn answers(
    problem: FuzzProblem,
    g: &Graph,
    lists: &ListAssignment,
    opts: &SolveOptions,
    stats: &mut Stats,
) -> Result<(Option<usize>, Option<usize>)> {
    Ok(match problem {
        FuzzProblem::Nb => {
            let r = solve::is_near_bipartite(g, opts)?;
            stats.merge(&r.stats);
            (
                r.is_yes().then_some(0),
                oracle::brute_min_ifvs(g)?.map(|_| 0),
            )
        }
        FuzzProblem::Ifvs => {
            let r = solve::min_ifvs(g, opts)?;
            stats.merge(&r.stats);
            (r.size, oracle::brute_min_ifvs(g)?.map(|x| x.0))
        }
        FuzzProblem::Ioct => {
            let r = solve::min_ioct(g, opts)?;
            stats.merge(&r.stats);
            (r.size, oracle::brute_min_ioct(g)?.map(|x| x.0))
        }
        FuzzProblem::Lsac => {
            let got = lsac::solve(g, lists, Mode::SemiAcyclic, opts, stats)?;
            let want = oracle::brute_lsac(g, lists)?;
            (got.map(|_| 0), want.map(|_| 0))
        }
    })
}

fn random_lists(n: usize, rng: &mut ChaCha8Rng) -> ListAssignment {
    ListAssignment(
        (0..n)
            .map(|_| loop {
                let cs: Vec<u8> = (1..=3u8).filter(|_| rng.gen_bool(0.7)).collect();
                if !cs.is_empty() {
                    break ColourSet::from_colours(&cs);
                }
            })
            .collect(),
    )
}

pub fn run(a: FuzzArgs) -> Result<u8> {
    if a.max_n == 0 || a.max_n > oracle::SUBSET_GUARD {
        bail!("--max-n must be between 1 and {}", oracle::SUBSET_GUARD);
    }
    let opts = SolveOptions {
        parallel: a.parallel,
        ..SolveOptions::default()
    };
    let mut summary = Summary {
        problem: a.problem,
        iterations: 0,
        mismatches: 0,
        yes: 0,
        stats: Stats::default(),
    };
    for i in 0..a.iterations {
        let seed = a.seed.wrapping_add(i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=a.max_n);
        let g = random_p5free_graph(n, seed)?;
        let lists = random_lists(n, &mut rng);
        if a.dump {
            println!("{}", emit_graph6(&g));
        }
        let (mut got, want) = answers(a.problem, &g, &lists, &opts, &mut summary.stats)?;
        if a.corrupt {
            got = match got {
                Some(s) if s > 0 => Some(s - 1),
                Some(_) => None,
                None => Some(0),
            };
        }
        summary.iterations += 1;
        summary.yes += want.is_some() as u64;
        if got != want {
            summary.mismatches += 1;
            eprintln!("mismatch at iteration {i} (seed {seed}): solver {got:?}, oracle {want:?}");
            eprint!("{}", emit_edgelist(&g));
            if a.problem == FuzzProblem::Lsac {
                eprint!("{}", emit_lists(&lists));
            }
            break;
        }
    }
    if a.json {
        println!("{}", serde_json::to_string(&summary)?);
    } else {
        println!(
            "{} iterations, {} yes-instances, {} mismatches",
            summary.iterations, summary.yes, summary.mismatches
        );
    }
    Ok((summary.mismatches > 0) as u8)
}
