//! Colouring options of the compressed auxiliary graph.
//!
//! After reduction every blue component is a clique, so it holds at most one
//! colour-3 vertex. Per connected component the feasible colourings are
//! covered by: for each clique `B`, "every red-incident vertex of `B` gets
//! 1" (which forces everything outside `B`'s red-free part), plus the case
//! where every clique has its colour 3 on a red-incident vertex. Each option
//! is a fixed part and independent groups of alternatives, which is enough
//! to read off the minimum, the maximum and every achievable weight.

use super::aux::{build_aux, compress_aux, AuxGraph, EdgeKind, AUX_RULES, COMPRESSED_RULES};
use super::TroublesomeInstance;
use crate::error::{Error, Result};
use crate::graph::{find_induced_path, is_induced_path};
use crate::lists::{Coloring, Mode};
use crate::stats::Stats;

/// A choice index and the alternative taken in each of its groups.
type Pick = (usize, Vec<usize>);

#[derive(Clone, Debug)]
struct Alt {
    assign: Vec<(usize, u8)>,
    ones: usize,
}

#[derive(Clone, Debug)]
struct Choice {
    fixed: Vec<(usize, u8)>,
    fixed_ones: usize,
    groups: Vec<Vec<Alt>>,
}

/// Every trouble-free colouring of an instance, grouped as options.
#[derive(Clone, Debug)]
pub struct TroubleAnalysis {
    base: Vec<u8>,
    base_ones: usize,
    members: Vec<Vec<usize>>,
    components: Vec<Vec<Choice>>,
}

// a choice index per component and an alternative index per group
type Picks = Vec<(usize, Vec<usize>)>;

impl TroubleAnalysis {
    fn colouring(&self, picks: &Picks) -> Coloring {
        let mut col = self.base.clone();
        let mut paint = |v: usize, c: u8| {
            for &m in &self.members[v] {
                col[m] = c;
            }
        };
        for (comp, (ci, alts)) in self.components.iter().zip(picks) {
            let choice = &comp[*ci];
            for &(v, c) in &choice.fixed {
                paint(v, c);
            }
            for (group, &a) in choice.groups.iter().zip(alts) {
                for &(v, c) in &group[a].assign {
                    paint(v, c);
                }
            }
        }
        debug_assert!(col.iter().all(|&c| c != 0));
        Coloring(col)
    }

    fn extreme(&self, better: impl Fn(usize, usize) -> bool) -> (usize, Coloring) {
        let mut total = self.base_ones;
        let mut picks = Vec::new();
        for comp in &self.components {
            let mut best: Option<(usize, usize, Vec<usize>)> = None;
            for (ci, choice) in comp.iter().enumerate() {
                let mut value = choice.fixed_ones;
                let mut alts = Vec::new();
                for group in &choice.groups {
                    let mut pick = 0;
                    for (a, alt) in group.iter().enumerate() {
                        if better(alt.ones, group[pick].ones) {
                            pick = a;
                        }
                    }
                    value += group[pick].ones;
                    alts.push(pick);
                }
                if best.as_ref().is_none_or(|b| better(value, b.0)) {
                    best = Some((value, ci, alts));
                }
            }
            let (value, ci, alts) = best.expect("components always keep an option");
            total += value;
            picks.push((ci, alts));
        }
        (total, self.colouring(&picks))
    }

    /// Fewest colour-1 vertices, with the canonical witness: first optimal
    /// option, and inside a red-free clique part the heaviest vertex (lowest
    /// index on ties) takes colour 3.
    pub fn min(&self) -> (usize, Coloring) {
        self.extreme(|a, b| a < b)
    }

    /// Most colour-1 vertices.
    pub fn max(&self) -> (usize, Coloring) {
        self.extreme(|a, b| a > b)
    }

    fn tables(&self) -> Vec<Vec<Option<Pick>>> {
        self.components
            .iter()
            .map(|comp| {
                let mut table: Vec<Option<Pick>> = Vec::new();
                for (ci, choice) in comp.iter().enumerate() {
                    let mut reach: Vec<Option<Vec<usize>>> = vec![None; choice.fixed_ones + 1];
                    reach[choice.fixed_ones] = Some(Vec::new());
                    for group in &choice.groups {
                        let top = reach.len() - 1 + group.iter().map(|a| a.ones).max().unwrap();
                        let mut next: Vec<Option<Vec<usize>>> = vec![None; top + 1];
                        for (s, r) in reach.iter().enumerate() {
                            let Some(r) = r else { continue };
                            for (a, alt) in group.iter().enumerate() {
                                let slot = &mut next[s + alt.ones];
                                if slot.is_none() {
                                    let mut p = r.clone();
                                    p.push(a);
                                    *slot = Some(p);
                                }
                            }
                        }
                        reach = next;
                    }
                    if table.len() < reach.len() {
                        table.resize(reach.len(), None);
                    }
                    for (s, r) in reach.into_iter().enumerate() {
                        if let (Some(r), None) = (r, &table[s]) {
                            table[s] = Some((ci, r));
                        }
                    }
                }
                table
            })
            .collect()
    }

    fn reach_all(&self) -> Vec<Option<Picks>> {
        let mut reach: Vec<Option<Picks>> = vec![None; self.base_ones + 1];
        reach[self.base_ones] = Some(Vec::new());
        for table in self.tables() {
            let mut next: Vec<Option<Picks>> = vec![None; reach.len() + table.len()];
            for (s, r) in reach.iter().enumerate() {
                let Some(r) = r else { continue };
                for (t, entry) in table.iter().enumerate() {
                    if let (Some(e), None) = (entry, &next[s + t]) {
                        let mut p = r.clone();
                        p.push(e.clone());
                        next[s + t] = Some(p);
                    }
                }
            }
            reach = next;
        }
        reach
    }

    /// All achievable numbers of colour-1 vertices, ascending.
    pub fn achievable(&self) -> Vec<usize> {
        self.reach_all()
            .iter()
            .enumerate()
            .filter_map(|(s, r)| r.as_ref().map(|_| s))
            .collect()
    }

    /// A trouble-free colouring with exactly `ones` colour-1 vertices.
    pub fn colouring_with(&self, ones: usize) -> Option<Coloring> {
        let reach = self.reach_all();
        let picks = reach.get(ones)?.as_ref()?;
        Some(self.colouring(picks))
    }

    /// One achievable-size table entry per achievable size, each with the
    /// colouring realising it.
    pub fn all_sizes(&self) -> Vec<(usize, Coloring)> {
        self.reach_all()
            .iter()
            .enumerate()
            .filter_map(|(s, r)| r.as_ref().map(|p| (s, self.colouring(p))))
            .collect()
    }
}

pub(super) fn analyse(
    inst: &TroublesomeInstance,
    mode: Mode,
    stats: &mut Stats,
) -> Result<Option<TroubleAnalysis>> {
    let mut h = build_aux(inst, mode);
    if !h.reduce(&AUX_RULES, stats) {
        return Ok(None);
    }
    let n = inst.graph().n();
    let mut base = vec![0u8; n];
    for v in inst.l2().iter() {
        base[v] = 2;
    }
    for v in 0..h.n() {
        if h.is_removed(v) {
            for &m in h.members(v) {
                base[m] = h.colour(v).unwrap();
            }
        }
    }
    let mut hs = compress_aux(&h)?;
    if !hs.reduce(&COMPRESSED_RULES[..5], stats) {
        return Ok(None);
    }
    assert_blue_cliques(inst, &hs)?;
    let ones = h.ones();
    let Some(analysis) = conclude(hs, base, ones, stats)? else {
        return Ok(None);
    };
    let (t, col) = analysis.min();
    if !inst.is_trouble_free(&col, mode) || col.class(1).len() != t {
        return Err(Error::InvariantBreach(format!(
            "minimum colouring {:?} is not trouble-free",
            col.0
        )));
    }
    Ok(Some(analysis))
}

/// Applies Rule 8 and the colouring rules to a compressed graph whose blue
/// components are cliques, then collects its options.
fn conclude(
    mut hs: AuxGraph,
    mut base: Vec<u8>,
    ones: usize,
    stats: &mut Stats,
) -> Result<Option<TroubleAnalysis>> {
    if !hs.reduce(&COMPRESSED_RULES, stats) {
        return Ok(None);
    }
    for v in 0..hs.n() {
        if hs.is_removed(v) {
            for &m in hs.members(v) {
                base[m] = hs.colour(v).unwrap();
            }
        }
    }
    let Some(components) = component_options(&hs, stats)? else {
        return Ok(None);
    };
    Ok(Some(TroubleAnalysis {
        base,
        base_ones: ones + hs.ones(),
        members: (0..hs.n()).map(|v| hs.members(v).to_vec()).collect(),
        components,
    }))
}

impl TroubleAnalysis {
    /// Options of a standalone compressed graph: blue components must be
    /// cliques and red edges a matching. Colourings are indexed by member.
    pub fn of_compressed(hs: AuxGraph, stats: &mut Stats) -> Result<Option<TroubleAnalysis>> {
        for v in hs.alive() {
            if hs.neighbours(v, EdgeKind::Red).count() > 1 {
                return Err(Error::Malformed(format!("vertex {v} has two red edges")));
            }
        }
        for comp in hs.blue_components() {
            for (i, &u) in comp.iter().enumerate() {
                if comp[i + 1..]
                    .iter()
                    .any(|&w| hs.edge(u, w) != Some(EdgeKind::Blue))
                {
                    return Err(Error::Malformed(format!(
                        "blue component {comp:?} is not a clique"
                    )));
                }
            }
        }
        let size = (0..hs.n())
            .flat_map(|v| hs.members(v).iter().map(|m| m + 1))
            .max()
            .unwrap_or(0);
        conclude(hs, vec![0; size], 0, stats)
    }
}

fn common_l2(inst: &TroublesomeInstance, a: usize, b: usize) -> Vec<usize> {
    let g = inst.graph();
    inst.l2()
        .iter()
        .filter(|&p| g.has_edge(a, p) && g.has_edge(b, p))
        .collect()
}

fn is_blue_pair(inst: &TroublesomeInstance, a: usize, b: usize) -> bool {
    !inst.graph().has_edge(a, b) && common_l2(inst, a, b).len() >= 2
}

/// Checks that every blue component of the compressed graph is a clique.
/// Otherwise returns an induced `P5` of the instance graph as
/// [`Error::NotP5Free`].
pub fn assert_blue_cliques(inst: &TroublesomeInstance, hs: &AuxGraph) -> Result<()> {
    for comp in hs.blue_components() {
        for &v in &comp {
            let blue: Vec<usize> = hs.neighbours(v, EdgeKind::Blue).collect();
            for (i, &u) in blue.iter().enumerate() {
                for &w in &blue[i + 1..] {
                    if hs.edge(u, w) != Some(EdgeKind::Blue) {
                        let witness = blue_path_witness(inst, hs, u, v, w);
                        log::debug!("blue component is not a clique at {u}-{v}-{w}");
                        return Err(match witness {
                            Some(witness) => Error::NotP5Free { witness },
                            None => Error::InvariantBreach(format!(
                                "blue component not a clique at {u}-{v}-{w}, and no induced P5"
                            )),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rebuilds an induced `P5` from blue edges `uv`, `vw` of the compressed
/// graph where `uw` is not blue.
fn blue_path_witness(
    inst: &TroublesomeInstance,
    hs: &AuxGraph,
    u: usize,
    v: usize,
    w: usize,
) -> Option<Vec<usize>> {
    let g = inst.graph();
    let pairs = |a: usize, b: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &x in hs.members(a) {
            for &y in hs.members(b) {
                if is_blue_pair(inst, x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    };
    let uv = pairs(u, v);
    let vw = pairs(v, w);
    // shared middle vertex: u' p v' q w'
    for &(u1, v1) in &uv {
        for &(v2, w1) in &vw {
            if v1 != v2 {
                continue;
            }
            let p = common_l2(inst, u1, v1)
                .into_iter()
                .find(|&p| !g.has_edge(p, w1));
            let q = common_l2(inst, v1, w1)
                .into_iter()
                .find(|&q| !g.has_edge(q, u1));
            if let (Some(p), Some(q)) = (p, q) {
                let path = vec![u1, p, v1, q, w1];
                if is_induced_path(g, &path) {
                    return Some(path);
                }
            }
        }
    }
    // different middle vertices on one side of a red component: search the
    // few vertices the argument involves
    for &(u1, v1) in &uv {
        for &(v2, w1) in &vw {
            let mut cand = vec![u1, v1, v2, w1];
            cand.extend(
                inst.l13()
                    .iter()
                    .filter(|&s| g.has_edge(s, v1) && g.has_edge(s, v2)),
            );
            cand.extend(common_l2(inst, u1, v1));
            cand.extend(common_l2(inst, v2, w1));
            cand.sort_unstable();
            cand.dedup();
            let (sub, map) = g.induced_subgraph(&cand);
            if let Some(path) = find_induced_path(&sub, 5) {
                return Some(path.into_iter().map(|x| map[x]).collect());
            }
        }
    }
    find_induced_path(g, 5)
}

struct Layout {
    cliques: Vec<Vec<usize>>,
    clique_of: Vec<usize>,
}

impl Layout {
    fn new(hs: &AuxGraph) -> Self {
        let cliques = hs.blue_components();
        let mut clique_of = vec![usize::MAX; hs.n()];
        for (i, c) in cliques.iter().enumerate() {
            for &v in c {
                clique_of[v] = i;
            }
        }
        Layout { cliques, clique_of }
    }
}

/// Worklist propagation of forced colours. With `one_three_each`, every
/// clique must end up with exactly one colour-3 vertex.
struct Propagation<'a> {
    hs: &'a AuxGraph,
    layout: &'a Layout,
    one_three_each: bool,
    colour: Vec<u8>,
    queue: Vec<usize>,
}

impl<'a> Propagation<'a> {
    fn new(hs: &'a AuxGraph, layout: &'a Layout, one_three_each: bool) -> Self {
        Propagation {
            hs,
            layout,
            one_three_each,
            colour: vec![0; hs.n()],
            queue: Vec::new(),
        }
    }

    fn set(&mut self, v: usize, c: u8) -> bool {
        match self.colour[v] {
            0 => {
                self.colour[v] = c;
                self.queue.push(v);
                true
            }
            old => old == c,
        }
    }

    fn check_clique(&mut self, ci: usize) -> bool {
        if !self.one_three_each {
            return true;
        }
        let clique = &self.layout.cliques[ci];
        if clique.iter().any(|&v| self.colour[v] == 3) {
            return true;
        }
        let open: Vec<usize> = clique
            .iter()
            .copied()
            .filter(|&v| self.colour[v] == 0)
            .collect();
        match open.len() {
            0 => false,
            1 => self.set(open[0], 3),
            _ => true,
        }
    }

    fn run(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            let c = self.colour[v];
            if let Some(u) = self.hs.red_partner(v) {
                if !self.set(u, 4 - c) {
                    return false;
                }
            }
            if c == 3 {
                let blue: Vec<usize> = self.hs.neighbours(v, EdgeKind::Blue).collect();
                for u in blue {
                    if !self.set(u, 1) {
                        return false;
                    }
                }
            }
            if !self.check_clique(self.layout.clique_of[v]) {
                return false;
            }
        }
        true
    }
}

fn ones_of(hs: &AuxGraph, assign: &[(usize, u8)]) -> usize {
    assign
        .iter()
        .filter(|a| a.1 == 1)
        .map(|a| hs.weight(a.0))
        .sum()
}

fn connected_parts(hs: &AuxGraph, within: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![true; hs.n()];
    for &v in within {
        seen[v] = false;
    }
    let mut parts = Vec::new();
    for &s in within {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let u = part[i];
            i += 1;
            for (v, done) in seen.iter_mut().enumerate() {
                if !*done && hs.edge(u, v).is_some() {
                    *done = true;
                    part.push(v);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

fn component_options(hs: &AuxGraph, stats: &mut Stats) -> Result<Option<Vec<Vec<Choice>>>> {
    let layout = Layout::new(hs);
    let alive: Vec<usize> = hs.alive().collect();
    let mut out = Vec::new();
    for comp in connected_parts(hs, &alive) {
        let choices = if let Some(alts) = double_red_square(hs, &layout, &comp) {
            stats.trouble_options += 1;
            vec![Choice {
                fixed: Vec::new(),
                fixed_ones: 0,
                groups: vec![alts],
            }]
        } else {
            let mut choices = Vec::new();
            let mut ids: Vec<usize> = comp.iter().map(|&v| layout.clique_of[v]).collect();
            ids.dedup();
            ids.sort_unstable();
            ids.dedup();
            for &ci in &ids {
                stats.trouble_options += 1;
                if let Some(c) = all_ones_option(hs, &layout, &comp, ci)? {
                    choices.push(c);
                }
            }
            stats.trouble_options += 1;
            if let Some(c) = one_three_each_option(hs, &layout, &comp, &ids)? {
                choices.push(c);
            }
            choices
        };
        if choices.is_empty() {
            return Ok(None);
        }
        out.push(choices);
    }
    Ok(Some(out))
}

/// Two blue edges joined by two red edges: exactly two colourings.
fn double_red_square(hs: &AuxGraph, layout: &Layout, comp: &[usize]) -> Option<Vec<Alt>> {
    if comp.len() != 4 {
        return None;
    }
    let ci = layout.clique_of[comp[0]];
    let (a, b): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| layout.clique_of[v] == ci);
    if a.len() != 2 || b.len() != 2 || layout.clique_of[b[0]] != layout.clique_of[b[1]] {
        return None;
    }
    let (u1, u2) = (a[0], a[1]);
    let (v1, v2) = (hs.red_partner(u1)?, hs.red_partner(u2)?);
    if !b.contains(&v1) || !b.contains(&v2) {
        return None;
    }
    let first = vec![(u1, 1), (v1, 3), (u2, 3), (v2, 1)];
    let second = vec![(u1, 3), (v1, 1), (u2, 1), (v2, 3)];
    Some(vec![
        Alt {
            ones: ones_of(hs, &first),
            assign: first,
        },
        Alt {
            ones: ones_of(hs, &second),
            assign: second,
        },
    ])
}

/// Every red-incident vertex of clique `ci` coloured 1; the red-free part of
/// the clique stays free with at most one colour-3 vertex.
fn all_ones_option(
    hs: &AuxGraph,
    layout: &Layout,
    comp: &[usize],
    ci: usize,
) -> Result<Option<Choice>> {
    let clique = &layout.cliques[ci];
    let (linked, free): (Vec<usize>, Vec<usize>) =
        clique.iter().partition(|&&v| hs.red_partner(v).is_some());
    let mut prop = Propagation::new(hs, layout, false);
    for &v in &linked {
        prop.set(v, 1);
    }
    if !prop.run() {
        return Ok(None);
    }
    let mut fixed = Vec::new();
    for &v in comp {
        if free.contains(&v) {
            continue;
        }
        if prop.colour[v] == 0 {
            return Err(Error::InvariantBreach(format!(
                "colouring clique {clique:?} with 1 left vertex {v} open"
            )));
        }
        fixed.push((v, prop.colour[v]));
    }
    let mut groups = Vec::new();
    if !free.is_empty() {
        let mut alts: Vec<Alt> = free
            .iter()
            .map(|&f| {
                let assign: Vec<(usize, u8)> = free
                    .iter()
                    .map(|&v| (v, if v == f { 3 } else { 1 }))
                    .collect();
                Alt {
                    ones: ones_of(hs, &assign),
                    assign,
                }
            })
            .collect();
        let all: Vec<(usize, u8)> = free.iter().map(|&v| (v, 1)).collect();
        alts.push(Alt {
            ones: ones_of(hs, &all),
            assign: all,
        });
        groups.push(alts);
    }
    Ok(Some(Choice {
        fixed_ones: ones_of(hs, &fixed),
        fixed,
        groups,
    }))
}

/// Every clique has its colour-3 vertex among its red-incident vertices.
fn one_three_each_option(
    hs: &AuxGraph,
    layout: &Layout,
    comp: &[usize],
    ids: &[usize],
) -> Result<Option<Choice>> {
    if ids.iter().any(|&ci| {
        layout.cliques[ci]
            .iter()
            .all(|&v| hs.red_partner(v).is_none())
    }) {
        return Ok(None);
    }
    let mut prop = Propagation::new(hs, layout, true);
    for &ci in ids {
        for &v in &layout.cliques[ci] {
            if hs.red_partner(v).is_none() {
                prop.set(v, 1);
            }
        }
    }
    for &ci in ids {
        if !prop.check_clique(ci) {
            return Ok(None);
        }
    }
    if !prop.run() {
        return Ok(None);
    }
    let fixed: Vec<(usize, u8)> = comp
        .iter()
        .filter(|&&v| prop.colour[v] != 0)
        .map(|&v| (v, prop.colour[v]))
        .collect();
    let open: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| prop.colour[v] == 0)
        .collect();
    let mut groups = Vec::new();
    for part in connected_parts(hs, &open) {
        // Each open vertex has its red partner open too, and each open
        // clique needs exactly one 3; counting red edges against colour-3
        // vertices leaves only cliques with exactly two open vertices.
        let mut sizes: Vec<(usize, usize)> = Vec::new();
        for &v in &part {
            let ci = layout.clique_of[v];
            match sizes.iter_mut().find(|e| e.0 == ci) {
                Some(e) => e.1 += 1,
                None => sizes.push((ci, 1)),
            }
        }
        if sizes.iter().any(|e| e.1 != 2) {
            log::trace!("residual part {part:?} has a clique of open size != 2");
            return Ok(None);
        }
        let edge = first_non_bridge(hs, layout, &part, &sizes)?;
        let mut alts = Vec::new();
        for cu in [1u8, 3] {
            let mut trial = Propagation {
                hs,
                layout,
                one_three_each: true,
                colour: prop.colour.clone(),
                queue: Vec::new(),
            };
            if !(trial.set(edge.0, cu) && trial.set(edge.1, 4 - cu) && trial.run()) {
                continue;
            }
            if let Some(&v) = part.iter().find(|&&v| trial.colour[v] == 0) {
                return Err(Error::InvariantBreach(format!(
                    "orienting red edge {edge:?} left vertex {v} open"
                )));
            }
            let assign: Vec<(usize, u8)> = part.iter().map(|&v| (v, trial.colour[v])).collect();
            alts.push(Alt {
                ones: ones_of(hs, &assign),
                assign,
            });
        }
        if alts.is_empty() {
            return Ok(None);
        }
        groups.push(alts);
    }
    Ok(Some(Choice {
        fixed_ones: ones_of(hs, &fixed),
        fixed,
        groups,
    }))
}

/// The first red edge (canonical order) that is not a bridge of the graph
/// whose nodes are the open cliques of `part`.
fn first_non_bridge(
    hs: &AuxGraph,
    layout: &Layout,
    part: &[usize],
    sizes: &[(usize, usize)],
) -> Result<(usize, usize)> {
    let node = |v: usize| {
        sizes
            .iter()
            .position(|e| e.0 == layout.clique_of[v])
            .unwrap()
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &u in part {
        if let Some(v) = hs.red_partner(u) {
            if u < v && part.contains(&v) {
                edges.push((u, v));
            }
        }
    }
    let k = sizes.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[node(u)].push((node(v), id));
        adj[node(v)].push((node(u), id));
    }
    if let Some(x) = (0..k).find(|&x| adj[x].len() < 2) {
        return Err(Error::InvariantBreach(format!(
            "contracted clique graph has a node of degree {}",
            adj[x].len()
        )));
    }
    let bridges = bridges(&adj, edges.len());
    edges
        .iter()
        .zip(&bridges)
        .find(|(_, &b)| !b)
        .map(|(&e, _)| e)
        .ok_or_else(|| Error::InvariantBreach("every contracted edge is a bridge".into()))
}

/// Bridge flags for a multigraph given as `(neighbour, edge id)` lists.
fn bridges(adj: &[Vec<(usize, usize)>], m: usize) -> Vec<bool> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_bridge = vec![false; m];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge id used to enter, next adjacency index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, via, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let (w, id) = adj[v][*i];
                *i += 1;
                if id == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        is_bridge[via] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn analysis_of(
        weights: Vec<usize>,
        red: &[(usize, usize)],
        blue: &[(usize, usize)],
    ) -> TroubleAnalysis {
        let mut hs = AuxGraph::new(weights);
        for &(u, v) in red {
            hs.set_edge(u, v, Some(EdgeKind::Red));
        }
        for &(u, v) in blue {
            hs.set_edge(u, v, Some(EdgeKind::Blue));
        }
        let mut stats = Stats::default();
        let comps = component_options(&hs, &mut stats).unwrap().unwrap();
        TroubleAnalysis {
            base: vec![0; hs.n()],
            base_ones: 0,
            members: (0..hs.n()).map(|v| vec![v]).collect(),
            components: comps,
        }
    }

    #[test]
    fn single_red_edge_heavy_side_gets_three() {
        let a = analysis_of(vec![3, 1], &[(0, 1)], &[]);
        let (t, col) = a.min();
        assert_eq!(t, 1);
        assert_eq!(col.0, vec![3, 1]);
        assert_eq!(a.max().0, 3);
        assert_eq!(a.achievable(), vec![1, 3]);
    }

    #[test]
    fn single_blue_edge() {
        let a = analysis_of(vec![1, 1], &[], &[(0, 1)]);
        let (t, col) = a.min();
        assert_eq!(t, 1);
        assert_eq!(col.0, vec![3, 1]);
        assert_eq!(a.achievable(), vec![1, 2]);
    }

    #[test]
    fn isolated_vertex_is_free() {
        let a = analysis_of(vec![4], &[], &[]);
        assert_eq!(a.achievable(), vec![0, 4]);
    }

    #[test]
    fn cycle_of_blue_pairs() {
        // cliques {0,1}, {2,3}, {4,5}; red 1-2, 3-4, 5-0 form a cycle
        let a = analysis_of(
            vec![1; 6],
            &[(1, 2), (3, 4), (5, 0)],
            &[(0, 1), (2, 3), (4, 5)],
        );
        let brute: Vec<usize> = {
            let mut hs = AuxGraph::new(vec![1; 6]);
            for (u, v) in [(1, 2), (3, 4), (5, 0)] {
                hs.set_edge(u, v, Some(EdgeKind::Red));
            }
            for (u, v) in [(0, 1), (2, 3), (4, 5)] {
                hs.set_edge(u, v, Some(EdgeKind::Blue));
            }
            let mut sizes: Vec<usize> = (0u32..64)
                .filter_map(|m| {
                    let col: Vec<u8> = (0..6)
                        .map(|i| if m >> i & 1 == 1 { 3 } else { 1 })
                        .collect();
                    hs.is_feasible(&col)
                        .then(|| col.iter().filter(|&&c| c == 1).count())
                })
                .collect();
            sizes.sort_unstable();
            sizes.dedup();
            sizes
        };
        assert_eq!(a.achievable(), brute);
        assert_eq!(a.min().0, 3);
    }

    #[test]
    fn bridges_of_path_and_cycle() {
        // path 0-1-2: both edges bridges
        let adj = vec![vec![(1, 0)], vec![(0, 0), (2, 1)], vec![(1, 1)]];
        assert_eq!(bridges(&adj, 2), vec![true, true]);
        // double edge between 0 and 1: neither is a bridge
        let adj = vec![vec![(1, 0), (1, 1)], vec![(0, 0), (0, 1)]];
        assert_eq!(bridges(&adj, 2), vec![false, false]);
    }

    #[test]
    fn blue_path_yields_p5_witness() {
        // u' - p - v' - q - w' with extra common neighbours so that u'v' and
        // v'w' are blue but u'w' is not
        // l13: 0 (u'), 2 (v'), 4 (w'); l2: 1, 3, 5, 6
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 5),
                (2, 5),
                (2, 6),
                (4, 6),
            ],
        )
        .unwrap();
        let inst =
            TroublesomeInstance::new(g.clone(), vec![1, 3, 5, 6].into(), vec![0, 2, 4].into())
                .unwrap();
        let mut stats = Stats::default();
        match analyse(&inst, Mode::SemiAcyclic, &mut stats) {
            Err(Error::NotP5Free { witness }) => {
                assert_eq!(witness.len(), 5);
                assert!(is_induced_path(&g, &witness));
            }
            other => panic!("expected a P5 witness, got {other:?}"),
        }
    }
}
