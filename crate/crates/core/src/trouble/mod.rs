//! Trouble-free colourings of troublesome graphs.
//!
//! A troublesome graph has every vertex listed `{2}` or `{1,3}`, the `{2}`
//! vertices independent and the `{1,3}` vertices inducing a bipartite graph.
//! A trouble-free colouring is a proper list colouring in which every
//! strongly tricky induced `C4` (alternating `{1,3}` / `{2}`) has a vertex
//! coloured 1. This module decides existence through 2-SAT and computes the
//! minimum (and maximum, and every achievable) number of colour-1 vertices
//! through the red/blue auxiliary graph.

mod aux;
mod options;

pub use aux::{build_aux, compress_aux, AuxGraph, EdgeKind, RuleStep, AUX_RULES, COMPRESSED_RULES};
pub use options::TroubleAnalysis;

use crate::error::{Error, Result};
use crate::graph::detect::enumerate_induced_c4;
use crate::graph::ops::{mask_of, two_colour_masked};
use crate::graph::{Graph, VertexSet};
use crate::lists::{Coloring, Mode};
use crate::stats::Stats;
use crate::twosat::{self, Lit, TwoSatInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TroublesomeInstance {
    graph: Graph,
    l2: VertexSet,
    l13: VertexSet,
}

impl TroublesomeInstance {
    /// Validates the troublesome-graph invariants.
    pub fn new(graph: Graph, l2: VertexSet, l13: VertexSet) -> Result<Self> {
        let n = graph.n();
        let mut seen = vec![false; n];
        for v in l2.iter().chain(l13.iter()) {
            if v >= n || seen[v] {
                return Err(Error::Malformed(format!(
                    "vertex {v} is out of range or in both l2 and l13"
                )));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Malformed(format!(
                "vertex {v} is in neither l2 nor l13"
            )));
        }
        if !graph.is_independent(l2.as_slice()) {
            return Err(Error::Malformed("l2 is not independent".into()));
        }
        if two_colour_masked(&graph, &mask_of(n, l13.as_slice())).is_none() {
            return Err(Error::Malformed(
                "l13 does not induce a bipartite graph".into(),
            ));
        }
        Ok(TroublesomeInstance { graph, l2, l13 })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn l2(&self) -> &VertexSet {
        &self.l2
    }

    pub fn l13(&self) -> &VertexSet {
        &self.l13
    }

    /// Induced `C4`s alternating between `l13` and `l2`, written
    /// `[good, l2, good, l2]`.
    pub fn strongly_tricky_c4s(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for c in enumerate_induced_c4(&self.graph) {
            let good = |i: usize| self.l13.contains(c[i]);
            if good(0) && good(2) && !good(1) && !good(3) {
                out.push(c);
            } else if good(1) && good(3) && !good(0) && !good(2) {
                out.push([c[1], c[2], c[3], c[0]]);
            }
        }
        out
    }

    /// Proper, `l2` coloured 2, `l13` coloured 1 or 3, and (in semi-acyclic
    /// mode) a colour-1 vertex on every strongly tricky `C4`.
    pub fn is_trouble_free(&self, colouring: &Coloring, mode: Mode) -> bool {
        if colouring.0.len() != self.graph.n() {
            return false;
        }
        let lists_ok = (0..self.graph.n()).all(|v| {
            let c = colouring.0[v];
            if self.l2.contains(v) {
                c == 2
            } else {
                c == 1 || c == 3
            }
        });
        if !lists_ok
            || self
                .graph
                .edges()
                .any(|(u, v)| colouring.0[u] == colouring.0[v])
        {
            return false;
        }
        mode == Mode::Proper
            || self
                .strongly_tricky_c4s()
                .iter()
                .all(|c| colouring.0[c[0]] == 1 || colouring.0[c[2]] == 1)
    }
}

/// 2-SAT encoding: variables `2i` ("colour 1") and `2i + 1` ("colour 3") for
/// the `i`-th vertex of `l13`.
pub fn encode_trouble_free(inst: &TroublesomeInstance, mode: Mode) -> TwoSatInstance {
    let l13 = inst.l13.as_slice();
    let index = |v: usize| l13.binary_search(&v).unwrap();
    let mut sat = TwoSatInstance::new(2 * l13.len());
    for i in 0..l13.len() {
        let (one, three) = (2 * i, 2 * i + 1);
        sat.add_clause(Lit::pos(one), Lit::pos(three));
        sat.add_clause(Lit::neg(one), Lit::neg(three));
    }
    for (u, v) in inst.graph.edges() {
        if inst.l13.contains(u) && inst.l13.contains(v) {
            let (a, b) = (index(u), index(v));
            sat.add_clause(Lit::neg(2 * a), Lit::neg(2 * b));
            sat.add_clause(Lit::neg(2 * a + 1), Lit::neg(2 * b + 1));
        }
    }
    if mode == Mode::SemiAcyclic {
        let mut pairs: Vec<(usize, usize)> = inst
            .strongly_tricky_c4s()
            .iter()
            .map(|c| (c[0].min(c[2]), c[0].max(c[2])))
            .collect();
        pairs.dedup();
        pairs.sort_unstable();
        pairs.dedup();
        for (u, v) in pairs {
            sat.add_clause(Lit::pos(2 * index(u)), Lit::pos(2 * index(v)));
        }
    }
    sat
}

/// Some trouble-free colouring, or `None`.
pub fn decide(inst: &TroublesomeInstance, mode: Mode) -> Option<Coloring> {
    let values = twosat::solve(&encode_trouble_free(inst, mode))?;
    let mut col = Coloring(vec![2; inst.graph.n()]);
    for (i, v) in inst.l13.iter().enumerate() {
        col.set(v, if values[2 * i] { 1 } else { 3 });
    }
    debug_assert!(inst.is_trouble_free(&col, mode));
    Some(col)
}

/// Runs the auxiliary-graph pipeline. `Ok(None)` means no trouble-free
/// colouring exists.
pub fn analyse(
    inst: &TroublesomeInstance,
    mode: Mode,
    stats: &mut Stats,
) -> Result<Option<TroubleAnalysis>> {
    options::analyse(inst, mode, stats)
}

/// The minimum number of colour-1 vertices over trouble-free colourings,
/// with a verified witness; `None` stands for infinity.
pub fn min_trouble_free(
    inst: &TroublesomeInstance,
    mode: Mode,
) -> Result<Option<(usize, Coloring)>> {
    let mut stats = Stats::default();
    match analyse(inst, mode, &mut stats)? {
        None => Ok(None),
        Some(a) => Ok(Some(a.min())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph};

    pub(crate) fn tricky_c4() -> TroublesomeInstance {
        // 0 and 2 listed {1,3}, 1 and 3 listed {2}
        TroublesomeInstance::new(cycle_graph(4), vec![1, 3].into(), vec![0, 2].into()).unwrap()
    }

    #[test]
    fn invariants_checked() {
        let g = path_graph(3);
        assert!(TroublesomeInstance::new(g.clone(), vec![0, 1].into(), vec![2].into()).is_err());
        assert!(TroublesomeInstance::new(g.clone(), vec![1].into(), vec![0].into()).is_err());
        let k3 = crate::graph::complete_graph(3);
        assert!(TroublesomeInstance::new(k3, vec![].into(), vec![0, 1, 2].into()).is_err());
        assert!(TroublesomeInstance::new(g, vec![1].into(), vec![0, 2].into()).is_ok());
    }

    #[test]
    fn strongly_tricky_normal_form() {
        assert_eq!(tricky_c4().strongly_tricky_c4s(), vec![[0, 1, 2, 3]]);
        let rotated =
            TroublesomeInstance::new(cycle_graph(4), vec![0, 2].into(), vec![1, 3].into()).unwrap();
        assert_eq!(rotated.strongly_tricky_c4s(), vec![[1, 2, 3, 0]]);
    }

    #[test]
    fn encoding_of_single_tricky_c4() {
        let inst = tricky_c4();
        let sat = encode_trouble_free(&inst, Mode::SemiAcyclic);
        assert_eq!(sat.var_count, 4);
        assert!(sat.clauses.contains(&(Lit::pos(0), Lit::pos(2))));
        let col = decide(&inst, Mode::SemiAcyclic).unwrap();
        assert!(col.0[0] == 1 || col.0[2] == 1);
    }

    #[test]
    fn single_edge_has_two_colourings() {
        let inst =
            TroublesomeInstance::new(path_graph(2), vec![].into(), vec![0, 1].into()).unwrap();
        let sat = encode_trouble_free(&inst, Mode::SemiAcyclic);
        let count = (0u32..16)
            .filter(|m| {
                let vals: Vec<bool> = (0..4).map(|i| m >> i & 1 == 1).collect();
                sat.satisfied_by(&vals)
            })
            .count();
        assert_eq!(count, 2);
    }

    #[test]
    fn t_examples() {
        assert_eq!(
            min_trouble_free(&tricky_c4(), Mode::SemiAcyclic)
                .unwrap()
                .unwrap()
                .0,
            1
        );
        assert_eq!(
            min_trouble_free(&tricky_c4(), Mode::Proper)
                .unwrap()
                .unwrap()
                .0,
            0
        );
        let empty =
            TroublesomeInstance::new(Graph::new(2), vec![0, 1].into(), vec![].into()).unwrap();
        let (t, col) = min_trouble_free(&empty, Mode::SemiAcyclic)
            .unwrap()
            .unwrap();
        assert_eq!((t, col.0), (0, vec![2, 2]));
        // red components P4 (sides 2/2) and P3 (sides 1/2)
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6)]).unwrap();
        let inst = TroublesomeInstance::new(g, vec![].into(), (0..7).collect()).unwrap();
        assert_eq!(
            min_trouble_free(&inst, Mode::SemiAcyclic)
                .unwrap()
                .unwrap()
                .0,
            3
        );
    }
}
