//! Near-bipartiteness, independent feedback vertex sets and independent odd
//! cycle transversals.
//!
//! Every yes-answer carries a witness checked directly against the graph,
//! whatever the input.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::detect::find_induced_path;
use crate::graph::ops::{is_forest_masked, two_colour_masked};
use crate::graph::{Graph, VertexSet};
use crate::lists::{verify_colouring, Coloring, ListAssignment, Mode};
use crate::lsac::{self, lift_witness, Leaf};
use crate::stats::Stats;
use crate::trouble::{self, TroubleAnalysis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub size: Option<usize>,
    pub witness: Option<VertexSet>,
    pub stats: Stats,
}

impl SolveResult {
    fn no(stats: Stats) -> Self {
        SolveResult {
            verdict: Verdict::No,
            size: None,
            witness: None,
            stats,
        }
    }

    fn yes(witness: VertexSet, stats: Stats) -> Self {
        SolveResult {
            verdict: Verdict::Yes,
            size: Some(witness.len()),
            witness: Some(witness),
            stats,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Reject inputs with an induced `P5`. Without the check a "no" may be
    /// wrong on such inputs; a "yes" is still verified.
    pub checked: bool,
    /// Evaluate the top-level branches on the rayon pool. Results are
    /// identical either way.
    pub parallel: bool,
    /// Record wall time in the stats.
    pub timing: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            checked: true,
            parallel: false,
            timing: false,
        }
    }
}

/// In checked mode, fails with an induced `P5` if there is one.
pub fn check_input(g: &Graph, opts: &SolveOptions) -> Result<()> {
    if opts.checked {
        if let Some(witness) = find_induced_path(g, 5) {
            return Err(Error::NotP5Free { witness });
        }
    }
    Ok(())
}

/// Checks that `s` is independent and that `G - s` is a forest (or, in
/// [`Mode::Proper`], bipartite).
pub fn verify_witness(g: &Graph, s: &VertexSet, mode: Mode) -> std::result::Result<(), String> {
    if s.iter().any(|v| v >= g.n()) {
        return Err("witness vertex out of range".into());
    }
    if !g.is_independent(s.as_slice()) {
        return Err("witness is not independent".into());
    }
    let rest: Vec<bool> = (0..g.n()).map(|v| !s.contains(v)).collect();
    match mode {
        Mode::SemiAcyclic if !is_forest_masked(g, &rest) => Err("G - S has a cycle".into()),
        Mode::Proper if two_colour_masked(g, &rest).is_none() => {
            Err("G - S has an odd cycle".into())
        }
        _ => Ok(()),
    }
}

/// What to optimise over the colour-1 class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
    Exact(usize),
}

// no clock unless asked: `Instant::now` panics on wasm32-unknown-unknown
fn clock(opts: &SolveOptions) -> Option<Instant> {
    opts.timing.then(Instant::now)
}

fn finish(mut res: SolveResult, start: Option<Instant>, opts: &SolveOptions) -> SolveResult {
    if let (Some(start), true) = (start, opts.timing) {
        res.stats.wall_time_us = Some(start.elapsed().as_micros() as u64);
    }
    res
}

fn witness_of(g: &Graph, col: &Coloring, mode: Mode) -> Result<VertexSet> {
    verify_colouring(g, &ListAssignment::full(g.n()), col, mode).map_err(Error::InvariantBreach)?;
    let s: VertexSet = col.class(1).into();
    verify_witness(g, &s, mode).map_err(Error::InvariantBreach)?;
    Ok(s)
}

/// Yes with a colour-1 class when some (semi-acyclic or proper) 3-colouring
/// exists.
pub fn decide(g: &Graph, mode: Mode, opts: &SolveOptions) -> Result<SolveResult> {
    let start = clock(opts);
    let mut stats = Stats::default();
    let res = match lsac::solve(g, &ListAssignment::full(g.n()), mode, opts, &mut stats)? {
        Some(col) => SolveResult::yes(witness_of(g, &col, mode)?, stats),
        None => SolveResult::no(stats),
    };
    Ok(finish(res, start, opts))
}

fn analyse_leaf(
    leaf: &Leaf,
    mode: Mode,
    stats: &mut Stats,
) -> Result<Option<[TroubleAnalysis; 2]>> {
    let a = trouble::analyse(&leaf.first, mode, stats).map_err(|e| leaf.lift(e, false))?;
    let Some(a) = a else { return Ok(None) };
    let b = trouble::analyse(&leaf.second, mode, stats).map_err(|e| leaf.lift(e, true))?;
    Ok(b.map(|b| [a, b]))
}

/// Colour-1 counts achievable in one component, each with a colouring.
type SizeTable = BTreeMap<usize, Coloring>;

fn component_table(
    g: &Graph,
    mode: Mode,
    objective: Objective,
    opts: &SolveOptions,
    stats: &mut Stats,
) -> Result<SizeTable> {
    let lists = ListAssignment::full(g.n());
    let better = |a: usize, b: usize| match objective {
        Objective::Max => a > b,
        _ => a < b,
    };
    let accs = lsac::drive(
        g,
        &lists,
        mode,
        opts.parallel,
        false,
        stats,
        SizeTable::new,
        |acc: &mut SizeTable, _, leaf, st| {
            let Some([a, b]) = analyse_leaf(leaf, mode, st)? else {
                return Ok(false);
            };
            let record = |acc: &mut SizeTable, size: usize, col: Coloring| -> Result<()> {
                verify_colouring(g, &lists, &col, mode).map_err(Error::InvariantBreach)?;
                debug_assert_eq!(col.class(1).len(), size);
                match objective {
                    Objective::Exact(_) => {
                        acc.entry(size).or_insert(col);
                    }
                    _ => {
                        let current = acc.keys().next().copied();
                        if current.is_none_or(|c| better(size, c)) {
                            acc.clear();
                            acc.insert(size, col);
                        }
                    }
                }
                Ok(())
            };
            match objective {
                Objective::Exact(_) => {
                    let (sa, sb) = (a.all_sizes(), b.all_sizes());
                    for (x, ca) in &sa {
                        for (y, cb) in &sb {
                            let size = leaf.ones + x + y;
                            if !acc.contains_key(&size) {
                                record(acc, size, leaf.combine(ca, cb))?;
                            }
                        }
                    }
                }
                Objective::Min | Objective::Max => {
                    let pick = |t: &TroubleAnalysis| match objective {
                        Objective::Max => t.max(),
                        _ => t.min(),
                    };
                    let ((x, ca), (y, cb)) = (pick(&a), pick(&b));
                    record(acc, leaf.ones + x + y, leaf.combine(&ca, &cb))?;
                }
            }
            Ok(false)
        },
    )?;
    let mut table = SizeTable::new();
    for acc in accs {
        for (size, col) in acc {
            match objective {
                Objective::Exact(_) => {
                    table.entry(size).or_insert(col);
                }
                _ => {
                    let current = table.keys().next().copied();
                    if current.is_none_or(|c| better(size, c)) {
                        table.clear();
                        table.insert(size, col);
                    }
                }
            }
        }
    }
    Ok(table)
}

/// Optimises the colour-1 class over all semi-acyclic (or proper)
/// 3-colourings. Runs the decision first and stops on "no".
pub fn optimise(
    g: &Graph,
    mode: Mode,
    objective: Objective,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    let start = clock(opts);
    let mut stats = Stats::default();
    let inner = SolveOptions {
        checked: false,
        ..*opts
    };
    check_input(g, opts)?;
    if lsac::solve(g, &ListAssignment::full(g.n()), mode, &inner, &mut stats)?.is_none() {
        return Ok(finish(SolveResult::no(stats), start, opts));
    }
    let mut reach: SizeTable = [(0, Coloring(vec![0; g.n()]))].into_iter().collect();
    for (sub, _, map) in lsac::components(g, &ListAssignment::full(g.n())) {
        let table = component_table(&sub, mode, objective, opts, &mut stats)
            .map_err(|e| lift_witness(e, &map))?;
        if table.is_empty() {
            return Err(Error::InvariantBreach(
                "component has a colouring but no optimised leaf".into(),
            ));
        }
        let mut next = SizeTable::new();
        for (s, col) in &reach {
            for (t, part) in &table {
                next.entry(s + t).or_insert_with(|| {
                    let mut c = col.clone();
                    for (i, &v) in map.iter().enumerate() {
                        c.set(v, part.0[i]);
                    }
                    c
                });
            }
        }
        reach = next;
    }
    let picked = match objective {
        Objective::Min => reach.into_iter().next(),
        Objective::Max => reach.into_iter().next_back(),
        Objective::Exact(k) => reach.remove(&k).map(|c| (k, c)),
    };
    let res = match picked {
        Some((size, col)) => {
            let s = witness_of(g, &col, mode)?;
            if s.len() != size {
                return Err(Error::InvariantBreach(format!(
                    "witness has {} vertices, expected {size}",
                    s.len()
                )));
            }
            SolveResult::yes(s, stats)
        }
        None => SolveResult::no(stats),
    };
    Ok(finish(res, start, opts))
}

/// Whether the graph splits into an independent set and a forest.
pub fn is_near_bipartite(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    decide(g, Mode::SemiAcyclic, opts)
}

/// A smallest independent feedback vertex set.
pub fn min_ifvs(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    optimise(g, Mode::SemiAcyclic, Objective::Min, opts)
}

/// A largest independent feedback vertex set.
pub fn max_ifvs(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    optimise(g, Mode::SemiAcyclic, Objective::Max, opts)
}

/// Yes when an independent feedback vertex set of size at most `k` exists;
/// the witness is a smallest one.
pub fn ifvs_decision(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    let mut res = min_ifvs(g, opts)?;
    if res.size.is_some_and(|s| s > k) {
        res.verdict = Verdict::No;
    }
    Ok(res)
}

/// An independent feedback vertex set of exactly `k` vertices.
pub fn ifvs_exact_size(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    optimise(g, Mode::SemiAcyclic, Objective::Exact(k), opts)
}

/// A smallest independent odd cycle transversal.
pub fn min_ioct(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    optimise(g, Mode::Proper, Objective::Min, opts)
}

/// Yes when an independent odd cycle transversal of size at most `k`
/// exists; the witness is a smallest one.
pub fn ioct_decision(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    let mut res = min_ioct(g, opts)?;
    if res.size.is_some_and(|s| s > k) {
        res.verdict = Verdict::No;
    }
    Ok(res)
}
