mod fuzz;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use nearbip::gadgets::{hamilton_gadget, sat_to_lsac, subdivision_chain, CnfFormula, GadgetOutput};
use nearbip::graph::{
    contains_k4, find_induced_claw, find_induced_path, find_odd_cycle, line_graph, random_graph,
    random_p5free_graph, random_p5free_graph_with, P5FreeFamily,
};
use nearbip::lists::{emit_lists, parse_lists, Mode};
use nearbip::solve::{self, SolveOptions, SolveResult};
use nearbip::{lsac, oracle, Graph, Stats, Verdict};
use serde::Serialize;

use input::{emit, named_graph, Format, GraphInput};

#[derive(Parser, Debug)]
#[command(
    name = "nearbip",
    version,
    about = "Near-bipartiteness, independent feedback vertex sets and independent odd cycle transversals on P5-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a problem on a P5-free graph (exit 0 = yes, 1 = no, 2 = error).
    Solve(SolveArgs),
    /// Test a structural property and print a witness when it fails.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph from a family.
    Generate(GenerateArgs),
    /// Build a hardness gadget.
    Reduce {
        #[command(subcommand)]
        gadget: Gadget,
    },
    /// Answer by exhaustive search (small graphs only).
    Oracle(OracleArgs),
    /// Compare the solver with the exhaustive search on random P5-free graphs.
    Fuzz(fuzz::FuzzArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// Near-bipartiteness (decision).
    Nb,
    /// Independent feedback vertex set.
    Ifvs,
    /// Independent odd cycle transversal.
    Ioct,
}

#[derive(clap::Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "nb")]
    problem: Problem,
    /// Decide whether a solution of size at most K exists.
    #[arg(long, value_name = "K", conflicts_with_all = ["max", "exact"])]
    k: Option<usize>,
    /// Largest independent feedback vertex set.
    #[arg(long, conflicts_with = "exact")]
    max: bool,
    /// Independent feedback vertex set of exactly this size.
    #[arg(long, value_name = "K")]
    exact: Option<usize>,
    /// List file (`v: c1 c2 ...`); solves the list colouring problem instead.
    #[arg(long, value_name = "FILE")]
    lists: Option<PathBuf>,
    /// Skip the P5-freeness test; "no" answers may then be wrong.
    #[arg(long)]
    unchecked: bool,
    /// Explore the first-level branches on several threads.
    #[arg(long)]
    parallel: bool,
    /// Emit the JSON record.
    #[arg(long)]
    json: bool,
    /// Include wall time in the stats.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    P5free,
    Clawfree,
    K4free,
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
    P5freeRandom,
    LinegraphOf,
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    /// Size, or for `linegraph-of` a graph name (cube, petersen, kN, cN, pN, starN) or file.
    arg: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Construction used by `p5free-random` (default: seeded mix).
    #[arg(long, value_enum)]
    construction: Option<Construction>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Cograph,
    Split,
    CompleteMultipartite,
    PrimeBlowup,
    CographPlus,
    Rejection,
}

impl From<Construction> for P5FreeFamily {
    fn from(c: Construction) -> Self {
        match c {
            Construction::Cograph => P5FreeFamily::Cograph,
            Construction::Split => P5FreeFamily::Split,
            Construction::CompleteMultipartite => P5FreeFamily::CompleteMultipartite,
            Construction::PrimeBlowup => P5FreeFamily::PrimeBlowup,
            Construction::CographPlus => P5FreeFamily::CographPlus,
            Construction::Rejection => P5FreeFamily::Rejection,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Gadget {
    /// Line graph that is near-bipartite iff a cubic graph has a Hamilton
    /// cycle through the given edge.
    Hamilton {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
        #[arg(long, value_enum, default_value = "edgelist")]
        emit: Format,
    },
    /// List colouring instance equivalent to a CNF formula (DIMACS).
    Sat {
        formula: PathBuf,
        /// Write the lists here instead of as comments after the graph.
        #[arg(long, value_name = "FILE")]
        lists_out: Option<PathBuf>,
    },
    /// Subdivide every edge, repeatedly.
    Subdivide {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        emit: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleProblem {
    Nb,
    Ifvs,
    Ioct,
    /// Feedback vertex set without independence.
    Fvs,
}

#[derive(clap::Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "nb")]
    problem: OracleProblem,
    /// Largest independent feedback vertex set.
    #[arg(long)]
    max: bool,
    #[arg(long, value_name = "FILE")]
    lists: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    // die quietly when piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::Builder::from_env(env_logger::Env::new().filter("NEARBIP_LOG")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Check {
            property,
            input,
            json,
        } => cmd_check(property, &input.read()?, json),
        Command::Generate(args) => cmd_generate(args),
        Command::Reduce { gadget } => cmd_reduce(gadget),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Fuzz(args) => fuzz::run(args),
    }
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 1,
    }
}

fn print_result(res: &SolveResult, json: bool) -> Result<u8> {
    if json {
        println!("{}", serde_json::to_string(res)?);
    } else {
        let verdict = match res.verdict {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        };
        match res.size {
            Some(s) if res.is_yes() => println!("{verdict} size={s}"),
            _ => println!("{verdict}"),
        }
        if let (Some(w), true) = (&res.witness, res.is_yes()) {
            println!("witness: {}", join(w.as_slice(), " "));
        }
        println!("stats: {}", stats_line(&res.stats));
    }
    Ok(exit_code(res.verdict))
}

fn stats_line(s: &Stats) -> String {
    let mut line = format!(
        "branches={} leaves={} list_rules={:?} aux_rules={:?} options={}",
        s.branches, s.leaves, s.lsac_rules, s.trouble_rules, s.trouble_options
    );
    if let Some(t) = s.wall_time_us {
        line.push_str(&format!(" time_us={t}"));
    }
    line
}

fn join(items: &[usize], sep: &str) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
struct ColouringRecord {
    verdict: Verdict,
    colouring: Option<Vec<u8>>,
    stats: Stats,
}

fn cmd_solve(a: SolveArgs) -> Result<u8> {
    let g = a.input.read()?;
    let opts = SolveOptions {
        checked: !a.unchecked,
        parallel: a.parallel,
        timing: a.timing,
    };
    if a.problem != Problem::Ifvs && (a.max || a.exact.is_some()) {
        bail!("--max and --exact only apply to --problem ifvs");
    }
    if let Some(path) = &a.lists {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let lists = parse_lists(&text, g.n())?;
        let mode = match a.problem {
            Problem::Ioct => Mode::Proper,
            _ => Mode::SemiAcyclic,
        };
        let mut stats = Stats::default();
        let col = lsac::solve(&g, &lists, mode, &opts, &mut stats)?;
        let rec = ColouringRecord {
            verdict: if col.is_some() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            colouring: col.map(|c| c.0),
            stats,
        };
        if a.json {
            println!("{}", serde_json::to_string(&rec)?);
        } else {
            match &rec.colouring {
                Some(c) => {
                    println!("yes");
                    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    println!("colouring: {}", cs.join(" "));
                }
                None => println!("no"),
            }
            println!("stats: {}", stats_line(&rec.stats));
        }
        return Ok(exit_code(rec.verdict));
    }
    let res = match (a.problem, a.k) {
        (Problem::Nb, Some(_)) => bail!("--k does not apply to --problem nb"),
        (Problem::Nb, None) => solve::is_near_bipartite(&g, &opts)?,
        (Problem::Ifvs, Some(k)) => solve::ifvs_decision(&g, k, &opts)?,
        (Problem::Ifvs, None) if a.max => solve::max_ifvs(&g, &opts)?,
        (Problem::Ifvs, None) => match a.exact {
            Some(k) => solve::ifvs_exact_size(&g, k, &opts)?,
            None => solve::min_ifvs(&g, &opts)?,
        },
        (Problem::Ioct, Some(k)) => solve::ioct_decision(&g, k, &opts)?,
        (Problem::Ioct, None) => solve::min_ioct(&g, &opts)?,
    };
    print_result(&res, a.json)
}

#[derive(Serialize)]
struct CheckRecord {
    property: &'static str,
    holds: bool,
    witness: Option<Vec<usize>>,
}

fn find_k4(g: &Graph) -> Option<Vec<usize>> {
    if !contains_k4(g) {
        return None;
    }
    for (a, b) in g.edges() {
        let common: Vec<usize> = g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&c| g.has_edge(b, c))
            .collect();
        for (i, &c) in common.iter().enumerate() {
            if let Some(&d) = common[i + 1..].iter().find(|&&d| g.has_edge(c, d)) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    None
}

fn cmd_check(property: Property, g: &Graph, json: bool) -> Result<u8> {
    let (name, witness, what) = match property {
        Property::P5free => ("p5free", find_induced_path(g, 5), "witness"),
        Property::Clawfree => (
            "clawfree",
            find_induced_claw(g).map(|c| c.to_vec()),
            "claw (centre first)",
        ),
        Property::K4free => ("k4free", find_k4(g), "K4"),
        Property::Bipartite => ("bipartite", find_odd_cycle(g), "odd cycle"),
    };
    if json {
        let rec = CheckRecord {
            property: name,
            holds: witness.is_none(),
            witness: witness.clone(),
        };
        println!("{}", serde_json::to_string(&rec)?);
    } else {
        match &witness {
            None => println!("yes"),
            Some(w) => println!("no, {what} {}", join(w, "-")),
        }
    }
    Ok(witness.is_some() as u8)
}

fn cmd_generate(a: GenerateArgs) -> Result<u8> {
    let size = || -> Result<usize> {
        match (a.n, &a.arg) {
            (Some(n), _) => Ok(n),
            (None, Some(s)) => s
                .parse()
                .with_context(|| format!("expected a size, got {s:?}")),
            (None, None) => bail!("give a size, either positionally or with --n"),
        }
    };
    let g = match a.family {
        Family::Path => nearbip::graph::path_graph(size()?),
        Family::Cycle => {
            let n = size()?;
            if n < 3 {
                bail!("cycles need at least 3 vertices");
            }
            nearbip::graph::cycle_graph(n)
        }
        Family::Complete => nearbip::graph::complete_graph(size()?),
        Family::Star => nearbip::graph::star_graph(size()?),
        Family::Random => random_graph(size()?, a.p, a.seed),
        Family::P5freeRandom => {
            let n = size()?;
            let g = match a.construction {
                Some(c) => random_p5free_graph_with(n, c.into(), a.seed)?,
                None => random_p5free_graph(n, a.seed)?,
            };
            if let Some(w) = find_induced_path(&g, 5) {
                bail!("generator produced an induced P5 {w:?}");
            }
            g
        }
        Family::LinegraphOf => {
            let name = a.arg.as_deref().context("give a graph name or file")?;
            line_graph(&named_graph(name)?).0
        }
    };
    print!("{}", emit(&g, a.format));
    Ok(0)
}

fn print_gadget(out: &GadgetOutput, format: Format) {
    print!("{}", out.describe());
    print!("{}", emit(&out.graph, format));
}

fn cmd_reduce(gadget: Gadget) -> Result<u8> {
    match gadget {
        Gadget::Hamilton { input, edge, emit } => {
            let g = input.read()?;
            let (u, v) = match edge[..] {
                [u, v] => (u, v),
                _ => g.edges().next().context("graph has no edges")?,
            };
            if (0..g.n()).any(|x| g.degree(x) != 3) {
                eprintln!("note: input is not cubic; the Hamilton equivalence is only claimed for cubic graphs");
            }
            print_gadget(&hamilton_gadget(&g, u, v)?, emit);
        }
        Gadget::Sat { formula, lists_out } => {
            let text = fs::read_to_string(&formula)
                .with_context(|| format!("reading {}", formula.display()))?;
            let phi = CnfFormula::parse_dimacs(&text)?;
            let norm = phi.normalized()?;
            println!(
                "# normalized formula over original variables {:?}",
                norm.original.iter().map(|x| x + 1).collect::<Vec<_>>()
            );
            for (x, v) in norm.forced.iter().enumerate() {
                if let Some(v) = v {
                    println!("# x{} forced to {v}", x + 1);
                }
            }
            let out = sat_to_lsac(&norm.formula)?;
            print_gadget(&out, Format::Edgelist);
            let lists = emit_lists(out.lists.as_ref().expect("list gadget"));
            match lists_out {
                Some(p) => {
                    fs::write(&p, lists).with_context(|| format!("writing {}", p.display()))?
                }
                None => {
                    println!("# lists");
                    for line in lists.lines() {
                        println!("# {line}");
                    }
                }
            }
        }
        Gadget::Subdivide {
            input,
            rounds,
            emit: format,
        } => {
            let g = input.read()?;
            print!("{}", emit(&subdivision_chain(&g, rounds), format));
        }
    }
    Ok(0)
}

fn cmd_oracle(a: OracleArgs) -> Result<u8> {
    let g = a.input.read()?;
    if a.max && a.problem != OracleProblem::Ifvs {
        bail!("--max only applies to --problem ifvs");
    }
    if let Some(path) = &a.lists {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let lists = parse_lists(&text, g.n())?;
        let mode = match a.problem {
            OracleProblem::Ioct => Mode::Proper,
            _ => Mode::SemiAcyclic,
        };
        let col = oracle::brute_list_colouring(&g, &lists, mode)?;
        let rec = ColouringRecord {
            verdict: if col.is_some() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            colouring: col.map(|c| c.0),
            stats: Stats::default(),
        };
        if a.json {
            println!("{}", serde_json::to_string(&rec)?);
        } else if let Some(c) = &rec.colouring {
            println!("yes");
            let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            println!("colouring: {}", cs.join(" "));
        } else {
            println!("no");
        }
        return Ok(exit_code(rec.verdict));
    }
    let found = match a.problem {
        OracleProblem::Nb | OracleProblem::Ifvs if a.max => oracle::brute_max_ifvs(&g)?,
        OracleProblem::Nb | OracleProblem::Ifvs => oracle::brute_min_ifvs(&g)?,
        OracleProblem::Ioct => oracle::brute_min_ioct(&g)?,
        OracleProblem::Fvs => Some(oracle::brute_min_fvs(&g)?),
    };
    let res = SolveResult {
        verdict: if found.is_some() {
            Verdict::Yes
        } else {
            Verdict::No
        },
        size: found.as_ref().map(|f| f.0),
        witness: found.map(|f| f.1),
        stats: Stats::default(),
    };
    print_result(&res, a.json)
}
