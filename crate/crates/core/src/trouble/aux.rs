//! Red/blue auxiliary graphs and their reduction rules.
//!
//! Red edges must get different colours from `{1,3}`; blue edges forbid
//! both endpoints being 3. Every vertex stands for a set of instance
//! vertices (`members`) sharing one colour and counts `weight` towards the
//! colour-1 total.

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::TroublesomeInstance;
use crate::error::{Error, Result};
use crate::lists::Mode;
use crate::stats::Stats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Red,
    Blue,
}

/// Outcome of one rule application.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleStep {
    Fired(u8),
    Conflict(u8),
    Fixpoint,
}

/// Rule order on the first auxiliary graph.
pub const AUX_RULES: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];
/// Rule order on the compressed graph. Rule 3 is repeated here because
/// merging a red component into two vertices can create new
/// "blue to both sides" situations.
pub const COMPRESSED_RULES: [u8; 6] = [3, 4, 5, 6, 7, 8];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    n: usize,
    edges: Vec<Option<EdgeKind>>,
    weight: Vec<usize>,
    colour: Vec<u8>,
    removed: Vec<bool>,
    component: Vec<usize>,
    side: Vec<u8>,
    members: Vec<Vec<usize>>,
    ones: usize,
}

impl AuxGraph {
    /// Edgeless graph with the given weights; vertex `i` represents `[i]`.
    pub fn new(weights: Vec<usize>) -> Self {
        let n = weights.len();
        AuxGraph {
            n,
            edges: vec![None; n * n],
            colour: vec![0; n],
            removed: vec![false; n],
            component: (0..n).collect(),
            side: vec![0; n],
            members: (0..n).map(|v| vec![v]).collect(),
            weight: weights,
            ones: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<EdgeKind> {
        self.edges[u * self.n + v]
    }

    /// Sets (or with `None` deletes) the edge `uv` and refreshes the red
    /// components.
    pub fn set_edge(&mut self, u: usize, v: usize, kind: Option<EdgeKind>) {
        self.put(u, v, kind);
        self.assign_red_sides();
    }

    fn put(&mut self, u: usize, v: usize, kind: Option<EdgeKind>) {
        assert!(u != v, "auxiliary graphs have no loops");
        self.edges[u * self.n + v] = kind;
        self.edges[v * self.n + u] = kind;
    }

    pub fn weight(&self, v: usize) -> usize {
        self.weight[v]
    }

    pub fn colour(&self, v: usize) -> Option<u8> {
        match self.colour[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_removed(&self, v: usize) -> bool {
        self.removed[v]
    }

    pub fn members(&self, v: usize) -> &[usize] {
        &self.members[v]
    }

    /// Weight of colour-1 vertices removed so far.
    pub fn ones(&self) -> usize {
        self.ones
    }

    /// Red component index and side (0 holds the lowest vertex).
    pub fn red_side(&self, v: usize) -> (usize, u8) {
        (self.component[v], self.side[v])
    }

    pub fn alive(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| !self.removed[v])
    }

    fn live_pairs(&self, kind: EdgeKind) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                (!self.removed[u] && !self.removed[v] && self.edge(u, v) == Some(kind))
                    .then_some((u, v))
            })
        })
    }

    /// Edges of `kind` between vertices not yet removed.
    pub fn edges_of(&self, kind: EdgeKind) -> Vec<(usize, usize)> {
        self.live_pairs(kind).collect()
    }

    pub(crate) fn neighbours(&self, u: usize, kind: EdgeKind) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| !self.removed[v] && self.edge(u, v) == Some(kind))
    }

    pub(crate) fn red_partner(&self, u: usize) -> Option<usize> {
        self.neighbours(u, EdgeKind::Red).next()
    }

    /// Recomputes red components by BFS; sides alternate from the lowest
    /// vertex of each component.
    fn assign_red_sides(&mut self) {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut side = vec![0u8; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.edge(u, v) == Some(EdgeKind::Red) && comp[v] == usize::MAX {
                        comp[v] = next;
                        side[v] = side[u] ^ 1;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        self.component = comp;
        self.side = side;
    }

    /// Whether a full `{1,3}` assignment of the vertices still present
    /// respects every red and blue edge between them.
    pub fn is_feasible(&self, colours: &[u8]) -> bool {
        self.alive().all(|v| colours[v] == 1 || colours[v] == 3)
            && self
                .live_pairs(EdgeKind::Red)
                .all(|(u, v)| colours[u] != colours[v])
            && self
                .live_pairs(EdgeKind::Blue)
                .all(|(u, v)| colours[u] != 3 || colours[v] != 3)
    }

    /// Edge list dump, one `u -- v [red|blue]` line per edge, followed by
    /// the vertex weights and colours.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph aux {\n");
        for v in self.alive() {
            let _ = writeln!(
                s,
                "  {v} [weight={}, colour={}, members=\"{:?}\"];",
                self.weight[v], self.colour[v], self.members[v]
            );
        }
        for (kind, name) in [(EdgeKind::Red, "red"), (EdgeKind::Blue, "blue")] {
            for (u, v) in self.live_pairs(kind) {
                let _ = writeln!(s, "  {u} -- {v} [color={name}];");
            }
        }
        s.push_str("}\n");
        s
    }

    /// Applies the first applicable rule of `rules` once.
    pub fn step(&mut self, rules: &[u8]) -> RuleStep {
        for &r in rules {
            let outcome = match r {
                1 => self.rule_blue_inside_side(),
                2 => self.rule_blue_across_sides(),
                3 => self.rule_blue_to_both_sides(),
                4 => self.rule_next_to_three(),
                5 => self.rule_red_opposite(),
                6 => self.rule_conflict(),
                7 => self.rule_remove_coloured(),
                8 => self.rule_double_red(),
                _ => panic!("no auxiliary rule {r}"),
            };
            if let Some(step) = outcome {
                return step;
            }
        }
        RuleStep::Fixpoint
    }

    /// Applies `rules` until a fixpoint (`true`) or a conflict (`false`).
    pub fn reduce(&mut self, rules: &[u8], stats: &mut Stats) -> bool {
        loop {
            match self.step(rules) {
                RuleStep::Fired(r) => {
                    stats.trouble_rules[r as usize - 1] += 1;
                    log::trace!("aux rule {r} fired");
                }
                RuleStep::Conflict(r) => {
                    stats.trouble_rules[r as usize - 1] += 1;
                    log::trace!("aux rule {r} found a conflict");
                    return false;
                }
                RuleStep::Fixpoint => return true,
            }
        }
    }

    fn same_side(&self, u: usize, v: usize) -> bool {
        self.component[u] == self.component[v] && self.side[u] == self.side[v]
    }

    fn rule_blue_inside_side(&mut self) -> Option<RuleStep> {
        let (u, v) = self.live_pairs(EdgeKind::Blue).find(|&(u, v)| {
            self.same_side(u, v)
                && self.colour[u] != 3
                && self.colour[v] != 3
                && (self.colour[u] == 0 || self.colour[v] == 0)
        })?;
        self.colour[u] = 1;
        self.colour[v] = 1;
        Some(RuleStep::Fired(1))
    }

    fn rule_blue_across_sides(&mut self) -> Option<RuleStep> {
        let (u, v) = self.live_pairs(EdgeKind::Blue).find(|&(u, v)| {
            self.component[u] == self.component[v] && self.side[u] != self.side[v]
        })?;
        self.put(u, v, None);
        Some(RuleStep::Fired(2))
    }

    fn rule_blue_to_both_sides(&mut self) -> Option<RuleStep> {
        let u = self.alive().find(|&u| {
            if self.colour[u] != 0 {
                return false;
            }
            let blue: Vec<usize> = self.neighbours(u, EdgeKind::Blue).collect();
            blue.iter().any(|&v| {
                self.component[v] != self.component[u]
                    && blue.iter().any(|&w| {
                        self.component[w] == self.component[v] && self.side[w] != self.side[v]
                    })
            })
        })?;
        self.colour[u] = 1;
        Some(RuleStep::Fired(3))
    }

    fn rule_next_to_three(&mut self) -> Option<RuleStep> {
        let u = self.alive().find(|&u| {
            self.colour[u] == 0
                && self
                    .neighbours(u, EdgeKind::Blue)
                    .any(|v| self.colour[v] == 3)
        })?;
        self.colour[u] = 1;
        Some(RuleStep::Fired(4))
    }

    fn rule_red_opposite(&mut self) -> Option<RuleStep> {
        let (u, c) = self.alive().find_map(|u| {
            if self.colour[u] != 0 {
                return None;
            }
            self.neighbours(u, EdgeKind::Red)
                .find(|&v| self.colour[v] != 0)
                .map(|v| (u, 4 - self.colour[v]))
        })?;
        self.colour[u] = c;
        Some(RuleStep::Fired(5))
    }

    fn rule_conflict(&mut self) -> Option<RuleStep> {
        let red = self
            .live_pairs(EdgeKind::Red)
            .any(|(u, v)| self.colour[u] != 0 && self.colour[u] == self.colour[v]);
        let blue = self
            .live_pairs(EdgeKind::Blue)
            .any(|(u, v)| self.colour[u] == 3 && self.colour[v] == 3);
        (red || blue).then_some(RuleStep::Conflict(6))
    }

    fn rule_remove_coloured(&mut self) -> Option<RuleStep> {
        let coloured: Vec<usize> = self.alive().filter(|&v| self.colour[v] != 0).collect();
        if coloured.is_empty() {
            return None;
        }
        for v in coloured {
            self.removed[v] = true;
            if self.colour[v] == 1 {
                self.ones += self.weight[v];
            }
        }
        Some(RuleStep::Fired(7))
    }

    /// Blue components of the vertices still present, each sorted, ordered
    /// by smallest vertex.
    pub fn blue_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in self.alive() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for v in self.neighbours(u, EdgeKind::Blue) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn rule_double_red(&mut self) -> Option<RuleStep> {
        let blue = self.blue_components();
        let mut owner = vec![usize::MAX; self.n];
        for (i, b) in blue.iter().enumerate() {
            for &v in b {
                owner[v] = i;
            }
        }
        for (i, bi) in blue.iter().enumerate() {
            for bj in &blue[i + 1..] {
                let j = owner[bj[0]];
                let reds: Vec<(usize, usize)> = bi
                    .iter()
                    .filter_map(|&u| self.red_partner(u).map(|v| (u, v)))
                    .filter(|&(_, v)| owner[v] == j)
                    .collect();
                if reds.len() < 2 {
                    continue;
                }
                let keep = [reds[0].0, reds[0].1, reds[1].0, reds[1].1];
                let targets: Vec<usize> = bi
                    .iter()
                    .chain(bj.iter())
                    .copied()
                    .filter(|v| !keep.contains(v) && self.colour[*v] == 0)
                    .collect();
                if targets.is_empty() {
                    continue;
                }
                for v in targets {
                    self.colour[v] = 1;
                }
                return Some(RuleStep::Fired(8));
            }
        }
        None
    }
}

/// The first auxiliary graph: one vertex per `l13` vertex (in order), red
/// edges from the graph, blue edges between non-adjacent pairs with at least
/// two common `l2` neighbours (never in proper mode).
pub fn build_aux(inst: &TroublesomeInstance, mode: Mode) -> AuxGraph {
    let g = inst.graph();
    let l13 = inst.l13().as_slice();
    let mut h = AuxGraph::new(vec![1; l13.len()]);
    h.members = l13.iter().map(|&v| vec![v]).collect();
    for (i, &u) in l13.iter().enumerate() {
        for (j, &v) in l13.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.put(i, j, Some(EdgeKind::Red));
            } else if mode == Mode::SemiAcyclic {
                let common = inst
                    .l2()
                    .iter()
                    .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                    .count();
                if common >= 2 {
                    h.put(i, j, Some(EdgeKind::Blue));
                }
            }
        }
    }
    h.assign_red_sides();
    h
}

/// Compresses every red component of the remaining vertices into one
/// vertex per side, weighted by side size. Blue edges are inherited between
/// sides. Requires the first-stage rules at a fixpoint.
pub fn compress_aux(h: &AuxGraph) -> Result<AuxGraph> {
    let mut comps: Vec<usize> = Vec::new();
    for v in h.alive() {
        if !comps.contains(&h.component[v]) {
            comps.push(h.component[v]);
        }
    }
    // (component, side) -> new vertex
    let mut index = std::collections::HashMap::new();
    let mut weights = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &c in &comps {
        for side in 0..2u8 {
            let part: Vec<usize> = (0..h.n)
                .filter(|&v| h.component[v] == c && h.side[v] == side)
                .collect();
            if part.is_empty() {
                continue;
            }
            if part.iter().any(|&v| h.removed[v]) {
                return Err(Error::InvariantBreach(format!(
                    "red component {c} is only partly reduced"
                )));
            }
            index.insert((c, side), weights.len());
            weights.push(part.iter().map(|&v| h.weight[v]).sum());
            members.push(part.iter().flat_map(|&v| h.members[v].clone()).collect());
        }
    }
    let mut hs = AuxGraph::new(weights);
    for m in members.iter_mut() {
        m.sort_unstable();
    }
    hs.members = members;
    for &c in &comps {
        if let (Some(&x), Some(&y)) = (index.get(&(c, 0)), index.get(&(c, 1))) {
            hs.put(x, y, Some(EdgeKind::Red));
        }
    }
    for (u, v) in h.live_pairs(EdgeKind::Blue) {
        if h.component[u] == h.component[v] {
            return Err(Error::InvariantBreach(
                "blue edge inside a red component survived reduction".into(),
            ));
        }
        let a = index[&(h.component[u], h.side[u])];
        let b = index[&(h.component[v], h.side[v])];
        hs.put(a, b, Some(EdgeKind::Blue));
    }
    hs.assign_red_sides();
    Ok(hs)
}
