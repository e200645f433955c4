#![allow(dead_code)]

use nearbip::graph::{find_induced_path, random_p5free_graph, Graph};
use nearbip::lists::{ColourSet, ListAssignment, Mode};
use nearbip::lsac::{Propagator, Step};
use nearbip::oracle;
use nearbip::trouble::{AuxGraph, EdgeKind, RuleStep, TroublesomeInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded random P5-free graph with `1..=max_n` vertices.
pub fn p5free(seed: u64, max_n: usize) -> Graph {
    let n = rng(seed).gen_range(1..=max_n);
    random_p5free_graph(n, seed).unwrap()
}

pub fn random_lists(n: usize, rng: &mut ChaCha8Rng) -> ListAssignment {
    ListAssignment(
        (0..n)
            .map(|_| loop {
                let s = ColourSet::from_colours(
                    &(1..=3u8).filter(|_| rng.gen_bool(0.7)).collect::<Vec<_>>(),
                );
                if !s.is_empty() {
                    break s;
                }
            })
            .collect(),
    )
}

/// Troublesome P5-free instance: vertices `0..k2` are the `{2}` side, the
/// rest a random bipartite graph, joined densely so tricky `C4`s are common.
pub fn troublesome(seed: u64, max_l13: usize) -> Option<TroublesomeInstance> {
    let mut rng = rng(seed);
    let k2 = rng.gen_range(1..=5);
    let k13 = rng.gen_range(2..=max_l13);
    let n = k2 + k13;
    let pr = rng.gen_range(0.05..0.5);
    let pb = rng.gen_range(0.2..0.9);
    for _ in 0..200 {
        let mut g = Graph::new(n);
        let side: Vec<bool> = (0..k13).map(|_| rng.gen_bool(0.5)).collect();
        for a in 0..k13 {
            for b in a + 1..k13 {
                if side[a] != side[b] && rng.gen_bool(pr) {
                    g.add_edge(k2 + a, k2 + b);
                }
            }
        }
        for p in 0..k2 {
            for a in 0..k13 {
                if rng.gen_bool(pb) {
                    g.add_edge(p, k2 + a);
                }
            }
        }
        if find_induced_path(&g, 5).is_none() {
            return TroublesomeInstance::new(g, (0..k2).collect(), (k2..n).collect()).ok();
        }
    }
    None
}

/// Red edges form a random bipartite graph; blue edges are arbitrary.
pub fn random_aux(seed: u64, n: usize) -> AuxGraph {
    let mut rng = rng(seed);
    let weights = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut a = AuxGraph::new(weights);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let (pr, pb) = (rng.gen_range(0.05..0.4), rng.gen_range(0.05..0.5));
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(pr) {
                a.set_edge(u, v, Some(EdgeKind::Red));
            } else if rng.gen_bool(pb) {
                a.set_edge(u, v, Some(EdgeKind::Blue));
            }
        }
    }
    a
}

/// Blue edges form disjoint cliques; red edges a matching between different
/// cliques.
pub fn random_compressed(seed: u64, n: usize) -> AuxGraph {
    let mut rng = rng(seed);
    let weights = (0..n).map(|_| rng.gen_range(1..=4)).collect();
    let mut a = AuxGraph::new(weights);
    let cliques = rng.gen_range(1..=n.max(1));
    let clique: Vec<usize> = (0..n).map(|_| rng.gen_range(0..cliques)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if clique[u] == clique[v] {
                a.set_edge(u, v, Some(EdgeKind::Blue));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut matched = vec![false; n];
    let pm = rng.gen_range(0.3..1.0);
    for &u in &order {
        for &v in &order {
            if u != v && !matched[u] && !matched[v] && clique[u] != clique[v] && rng.gen_bool(pm) {
                matched[u] = true;
                matched[v] = true;
                a.set_edge(u, v, Some(EdgeKind::Red));
            }
        }
    }
    a
}

/// Every `{1,3}` assignment agreeing with the fixed colours and feasible on
/// the vertices still present.
pub fn aux_colourings(a: &AuxGraph) -> Vec<Vec<u8>> {
    let n = a.n();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let col: Vec<u8> = (0..n)
            .map(|v| if mask >> v & 1 == 1 { 3 } else { 1 })
            .collect();
        if (0..n).all(|v| a.colour(v).is_none_or(|c| c == col[v])) && a.is_feasible(&col) {
            out.push(col);
        }
    }
    out
}

pub fn weight_of_ones(a: &AuxGraph, col: &[u8]) -> usize {
    (0..a.n())
        .filter(|&v| col[v] == 1)
        .map(|v| a.weight(v))
        .sum()
}

/// Applies `rules` step by step and counts steps that change the set of
/// feasible colourings (a conflict must leave none).
pub fn aux_rule_violations(mut a: AuxGraph, rules: &[u8], fired: &mut [u64; 8]) -> usize {
    let mut violations = 0;
    let mut before = aux_colourings(&a);
    loop {
        match a.step(rules) {
            RuleStep::Fired(r) => {
                fired[r as usize - 1] += 1;
                let after = aux_colourings(&a);
                if after != before {
                    violations += 1;
                }
                before = after;
            }
            RuleStep::Conflict(r) => {
                fired[r as usize - 1] += 1;
                if !before.is_empty() {
                    violations += 1;
                }
                return violations;
            }
            RuleStep::Fixpoint => return violations,
        }
    }
}

/// Same check for the list propagation rules against every valid list
/// colouring.
pub fn lsac_rule_violations(
    g: &Graph,
    mut lists: ListAssignment,
    mode: Mode,
    fired: &mut [u64; 5],
) -> usize {
    let p = Propagator::new(g, mode);
    let mut violations = 0;
    let mut before = oracle::brute_all_list_colourings(g, &lists, mode).unwrap();
    loop {
        match p.step(&mut lists) {
            Step::Fired(r) => {
                fired[r as usize - 1] += 1;
                let after = oracle::brute_all_list_colourings(g, &lists, mode).unwrap();
                if after != before {
                    violations += 1;
                }
                before = after;
            }
            Step::Contradiction(r) => {
                fired[r as usize - 1] += 1;
                if !before.is_empty() {
                    violations += 1;
                }
                return violations;
            }
            Step::Fixpoint => return violations,
        }
    }
}
