//! List semi-acyclic 3-colouring of P5-free graphs.
//!
//! Per connected component: colour a small dominating set every possible
//! way, propagate, then branch until no edge joins two different
//! two-colour-list regions. Each such state splits into a directly coloured
//! part and two troublesome instances.

mod leaf;
mod rules;

pub use leaf::{classify_strongly_tricky, Leaf, TrickyC4};
pub use rules::{Propagator, Step};

use crate::error::{Error, Result};
use crate::graph::detect::{
    contains_k4, dominating_clique_or_p3, find_induced_path, is_induced_path,
};
use crate::graph::ops::{mask_of, two_colour_masked};
use crate::graph::{connected_components, Graph};
use crate::lists::{verify_colouring, Coloring, ColourSet, ListAssignment, Mode};
use crate::solve::SolveOptions;
use crate::stats::Stats;
use crate::trouble;

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
const COMBOS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Two-colour-list vertices around each dominating vertex, split into the
/// two sides of their bipartition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partition {
    /// Non-dominating vertices by the first dominating vertex they see.
    pub region: [Vec<usize>; 3],
    /// Vertices of each region whose list is every colour but the
    /// dominating vertex's.
    pub open: [Vec<usize>; 3],
    /// `open` split into its two bipartition sides.
    pub sides: [[Vec<usize>; 2]; 3],
}

/// The branching machinery of one connected component.
pub struct ComponentSolver<'g> {
    prop: Propagator<'g>,
    dominating: Vec<usize>,
    region: Vec<u8>,
}

impl<'g> ComponentSolver<'g> {
    pub fn new(g: &'g Graph, mode: Mode) -> Result<Self> {
        let dom = dominating_clique_or_p3(g)?.ok_or_else(|| match find_induced_path(g, 5) {
            Some(witness) => Error::NotP5Free { witness },
            None => Error::InvariantBreach("no small dominating clique or P3".into()),
        })?;
        let mut dominating = dom.into_vec();
        for v in 0..g.n() {
            if dominating.len() >= 3 {
                break;
            }
            if !dominating.contains(&v) {
                dominating.push(v);
            }
        }
        let region = (0..g.n())
            .map(|v| {
                if dominating.contains(&v) {
                    u8::MAX
                } else {
                    dominating
                        .iter()
                        .position(|&a| g.has_edge(a, v))
                        .map_or(2, |i| i as u8)
                }
            })
            .collect();
        Ok(ComponentSolver {
            prop: Propagator::new(g, mode),
            dominating,
            region,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.prop.graph()
    }

    pub fn propagator(&self) -> &Propagator<'g> {
        &self.prop
    }

    /// The (padded) dominating vertices, branched on first.
    pub fn dominating(&self) -> &[usize] {
        &self.dominating
    }

    /// Every colouring of the dominating vertices that survives
    /// propagation, in lexicographic order.
    pub fn roots(&self, lists: &ListAssignment, stats: &mut Stats) -> Vec<ListAssignment> {
        let mut base = lists.clone();
        if !self.prop.run(&mut base, stats) {
            return Vec::new();
        }
        let k = self.dominating.len();
        let mut out = Vec::new();
        for code in 0..3usize.pow(k as u32) {
            let colours: Vec<u8> = (0..k)
                .map(|i| (code / 3usize.pow((k - 1 - i) as u32) % 3) as u8 + 1)
                .collect();
            if self
                .dominating
                .iter()
                .zip(&colours)
                .any(|(&a, &c)| !base.get(a).contains(c))
            {
                continue;
            }
            let mut l = base.clone();
            for (&a, &c) in self.dominating.iter().zip(&colours) {
                l.set(a, ColourSet::single(c));
            }
            stats.branches += 1;
            if self.prop.run(&mut l, stats) {
                out.push(l);
            }
        }
        out
    }

    fn anchor_colour(&self, lists: &ListAssignment, i: usize) -> Option<u8> {
        self.dominating.get(i).and_then(|&a| lists.get(a).only())
    }

    pub fn partition(&self, lists: &ListAssignment) -> Result<Partition> {
        let g = self.graph();
        let mut p = Partition::default();
        for v in 0..g.n() {
            if let Some(r) = p.region.get_mut(self.region[v] as usize) {
                r.push(v);
            }
        }
        for i in 0..3 {
            let Some(c) = self.anchor_colour(lists, i) else {
                continue;
            };
            let target = ColourSet::FULL.without(c);
            p.open[i] = p.region[i]
                .iter()
                .copied()
                .filter(|&v| lists.get(v) == target)
                .collect();
            let sides = two_colour_masked(g, &mask_of(g.n(), &p.open[i])).ok_or_else(|| {
                Error::InvariantBreach(format!("open region {i} is not bipartite"))
            })?;
            for &v in &p.open[i] {
                p.sides[i][sides[v] as usize].push(v);
            }
        }
        Ok(p)
    }

    /// Branches until no edge joins the open vertices of two different
    /// regions, calling `visit` on every such state. Returns `true` as soon
    /// as `visit` does.
    pub fn eliminate(
        &self,
        lists: ListAssignment,
        stats: &mut Stats,
        visit: &mut dyn FnMut(ListAssignment, &mut Stats) -> Result<bool>,
    ) -> Result<bool> {
        let g = self.graph();
        let p = self.partition(&lists)?;
        for (i, j) in PAIRS {
            for (x, y) in COMBOS {
                let far = &p.sides[j][y];
                let mut linked: Vec<(usize, Vec<usize>)> = p.sides[i][x]
                    .iter()
                    .map(|&u| {
                        (
                            u,
                            far.iter().copied().filter(|&w| g.has_edge(u, w)).collect(),
                        )
                    })
                    .filter(|(_, nb): &(usize, Vec<usize>)| !nb.is_empty())
                    .collect();
                if linked.is_empty() {
                    continue;
                }
                linked.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
                for w in linked.windows(2) {
                    if !w[1].1.iter().all(|x| w[0].1.contains(x)) {
                        return Err(self.chain_witness(i, &w[0], &w[1]));
                    }
                }
                let (ci, cj) = (self.anchor_colour(&lists, i), self.anchor_colour(&lists, j));
                let c = (1..=3u8).find(|&c| Some(c) != ci && Some(c) != cj).unwrap();
                let k = linked.len();
                for t in 0..=k {
                    let mut l = lists.clone();
                    for (u, _) in &linked[..t] {
                        l.set(*u, l.get(*u).without(c));
                    }
                    if t < k {
                        l.set(linked[t].0, ColourSet::single(c));
                    }
                    stats.branches += 1;
                    if self.prop.run(&mut l, stats) && self.eliminate(l, stats, visit)? {
                        return Ok(true);
                    }
                }
                return Ok(false);
            }
        }
        visit(lists, stats)
    }

    /// Two vertices with incomparable neighbourhoods across the pair give
    /// the induced path `x - u - a - w - y`.
    fn chain_witness(&self, i: usize, w: &(usize, Vec<usize>), u: &(usize, Vec<usize>)) -> Error {
        let g = self.graph();
        let x = u.1.iter().copied().find(|x| !w.1.contains(x));
        let y = w.1.iter().copied().find(|y| !u.1.contains(y));
        if let (Some(x), Some(y)) = (x, y) {
            let path = vec![x, u.0, self.dominating[i], w.0, y];
            if is_induced_path(g, &path) {
                return Error::NotP5Free { witness: path };
            }
        }
        match find_induced_path(g, 5) {
            Some(witness) => Error::NotP5Free { witness },
            None => Error::InvariantBreach("cross edges do not form a chain graph".into()),
        }
    }

    pub fn leaf(&self, lists: &ListAssignment) -> Result<Leaf> {
        Leaf::build(self.graph(), lists, self.prop.c4s(), self.prop.mode())
    }
}

pub(crate) fn lift_witness(err: Error, map: &[usize]) -> Error {
    match err {
        Error::NotP5Free { witness } => Error::NotP5Free {
            witness: witness.into_iter().map(|v| map[v]).collect(),
        },
        e => e,
    }
}

/// Runs the branch tree of one connected graph. `visit` sees every leaf of
/// one root branch with that branch's accumulator and returns `true` to
/// stop the branch. Accumulators come back in root order; with `stop_early`
/// and no parallelism, roots after the first stopped one are skipped.
#[allow(clippy::too_many_arguments)]
pub(crate) fn drive<T, I, V>(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    parallel: bool,
    stop_early: bool,
    stats: &mut Stats,
    init: I,
    visit: V,
) -> Result<Vec<T>>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &ComponentSolver<'_>, &Leaf, &mut Stats) -> Result<bool> + Sync,
{
    if contains_k4(g) {
        return Ok(Vec::new());
    }
    let solver = ComponentSolver::new(g, mode)?;
    let roots = solver.roots(lists, stats);
    let work = |root: ListAssignment| -> Result<(T, Stats, bool)> {
        let mut acc = init();
        let mut st = Stats::default();
        let stopped = solver.eliminate(root, &mut st, &mut |l, st| {
            st.leaves += 1;
            let leaf = solver.leaf(&l)?;
            visit(&mut acc, &solver, &leaf, st)
        })?;
        Ok((acc, st, stopped))
    };
    let results: Vec<Result<(T, Stats, bool)>> = if parallel {
        let mut out = run_parallel(roots, &work);
        // keep exactly what a sequential run would have seen
        if stop_early {
            if let Some(i) = out
                .iter()
                .position(|r| matches!(r, Ok((_, _, true)) | Err(_)))
            {
                out.truncate(i + 1);
            }
        }
        out
    } else {
        let mut out = Vec::new();
        for root in roots {
            let r = work(root);
            let stop = matches!(r, Ok((_, _, true)) | Err(_));
            out.push(r);
            if stop && stop_early {
                break;
            }
        }
        out
    };
    let mut accs = Vec::new();
    for r in results {
        let (acc, st, _) = r?;
        stats.merge(&st);
        accs.push(acc);
    }
    Ok(accs)
}

#[cfg(feature = "parallel")]
fn run_parallel<R: Send>(
    roots: Vec<ListAssignment>,
    work: &(dyn Fn(ListAssignment) -> R + Sync),
) -> Vec<R> {
    use rayon::prelude::*;
    roots.into_par_iter().map(work).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<R: Send>(
    roots: Vec<ListAssignment>,
    work: &(dyn Fn(ListAssignment) -> R + Sync),
) -> Vec<R> {
    roots.into_iter().map(work).collect()
}

/// Splits a graph and its lists into connected components.
pub(crate) fn components(
    g: &Graph,
    lists: &ListAssignment,
) -> Vec<(Graph, ListAssignment, Vec<usize>)> {
    connected_components(g, &g.all_vertices())
        .into_iter()
        .map(|c| {
            let (sub, map) = g.induced_subgraph(c.as_slice());
            let l = ListAssignment(map.iter().map(|&v| lists.get(v)).collect());
            (sub, l, map)
        })
        .collect()
}

/// Leaf decision: both troublesome parts through 2-SAT.
pub(crate) fn decide_leaf(leaf: &Leaf, mode: Mode) -> Option<Coloring> {
    let a = trouble::decide(&leaf.first, mode)?;
    let b = trouble::decide(&leaf.second, mode)?;
    Some(leaf.combine(&a, &b))
}

/// A list-respecting colouring whose colours 2 and 3 induce a forest
/// (or, in [`Mode::Proper`], any proper list colouring), if one exists.
/// The returned colouring is always verified.
pub fn solve(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    opts: &SolveOptions,
    stats: &mut Stats,
) -> Result<Option<Coloring>> {
    if lists.len() != g.n() {
        return Err(Error::Malformed(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    crate::solve::check_input(g, opts)?;
    let mut col = Coloring::uncoloured(g.n());
    for (sub, l, map) in components(g, lists) {
        let found = drive(
            &sub,
            &l,
            mode,
            opts.parallel,
            true,
            stats,
            || None,
            |acc: &mut Option<Coloring>, _, leaf, _| {
                if let Some(c) = decide_leaf(leaf, mode) {
                    verify_colouring(&sub, &l, &c, mode).map_err(Error::InvariantBreach)?;
                    *acc = Some(c);
                    return Ok(true);
                }
                Ok(false)
            },
        )
        .map_err(|e| lift_witness(e, &map))?;
        match found.into_iter().flatten().next() {
            Some(c) => {
                for (i, &v) in map.iter().enumerate() {
                    col.set(v, c.0[i]);
                }
            }
            None => return Ok(None),
        }
    }
    verify_colouring(g, lists, &col, mode).map_err(Error::InvariantBreach)?;
    Ok(Some(col))
}
