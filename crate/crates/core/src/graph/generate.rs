//! Named graphs and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::detect::find_induced_path;
use super::Graph;
use crate::error::{Error, Result};

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// `K_{1,leaves}` with centre 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// The 3-cube `Q3`: vertices are 3-bit strings, adjacent iff at Hamming
/// distance one.
pub fn cube() -> Graph {
    let mut g = Graph::new(8);
    for u in 0..8usize {
        for b in 0..3 {
            g.add_edge(u, u ^ (1 << b));
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

/// Erdős-Rényi `G(n, p)`, deterministic for a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp(n, p.clamp(0.0, 1.0), &mut rng)
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Constructive families used by [`random_p5free_graph_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum P5FreeFamily {
    /// Random cotree (P4-free).
    Cograph,
    /// Clique plus independent set with arbitrary edges between them.
    Split,
    CompleteMultipartite,
    /// Small prime P5-free graph (C5, bull, house, ...) with every vertex
    /// replaced by a random cograph module.
    PrimeBlowup,
    /// Cograph with random extra edges, each kept only if the graph stays
    /// P5-free.
    CographPlus,
    /// Plain `G(n, p)` rejection sampling.
    Rejection,
}

impl P5FreeFamily {
    pub const ALL: [P5FreeFamily; 6] = [
        P5FreeFamily::Cograph,
        P5FreeFamily::Split,
        P5FreeFamily::CompleteMultipartite,
        P5FreeFamily::PrimeBlowup,
        P5FreeFamily::CographPlus,
        P5FreeFamily::Rejection,
    ];
}

const REJECTION_TRIES: usize = 400;

/// A random P5-free graph on `n` vertices drawn from a seeded mix of
/// families. Always verified before it is returned.
pub fn random_p5free_graph(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families: &[P5FreeFamily] = if n <= 10 {
        &P5FreeFamily::ALL
    } else {
        &P5FreeFamily::ALL[..5]
    };
    let family = *families.choose(&mut rng).unwrap();
    generate_family(n, family, &mut rng)
}

pub fn random_p5free_graph_with(n: usize, family: P5FreeFamily, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_family(n, family, &mut rng)
}

fn generate_family(n: usize, family: P5FreeFamily, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let g = match family {
        P5FreeFamily::Cograph => {
            let join_p = rng.gen_range(0.2..0.6);
            random_cograph(n, join_p, rng)
        }
        P5FreeFamily::Split => random_split(n, rng),
        P5FreeFamily::CompleteMultipartite => random_multipartite(n, rng),
        P5FreeFamily::PrimeBlowup => random_blowup(n, rng),
        P5FreeFamily::CographPlus => {
            let join_p = rng.gen_range(0.15..0.4);
            let mut g = random_cograph(n, join_p, rng);
            let extra = rng.gen_range(0..=n);
            for _ in 0..extra {
                if n < 2 {
                    break;
                }
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u == v || g.has_edge(u, v) {
                    continue;
                }
                g.add_edge(u, v);
                if find_induced_path(&g, 5).is_some() {
                    g.remove_edge(u, v);
                }
            }
            g
        }
        P5FreeFamily::Rejection => {
            let mut found = None;
            for _ in 0..REJECTION_TRIES {
                let p = rng.gen_range(0.15..0.85);
                let g = gnp(n, p, rng);
                if find_induced_path(&g, 5).is_none() {
                    found = Some(g);
                    break;
                }
            }
            found.ok_or_else(|| {
                Error::BudgetExhausted(format!(
                    "no P5-free G(n,p) sample for n={n} within {REJECTION_TRIES} tries; \
                     lower n or use a constructive family"
                ))
            })?
        }
    };
    let g = shuffle_labels(&g, rng);
    if let Some(w) = find_induced_path(&g, 5) {
        return Err(Error::InvariantBreach(format!(
            "{family:?} generator produced an induced P5 {w:?}"
        )));
    }
    Ok(g)
}

fn shuffle_labels(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn random_cograph(n: usize, join_p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    let verts: Vec<usize> = (0..n).collect();
    cotree(&mut g, &verts, join_p, rng);
    g
}

fn cotree(g: &mut Graph, verts: &[usize], join_p: f64, rng: &mut ChaCha8Rng) {
    if verts.len() <= 1 {
        return;
    }
    let parts = rng.gen_range(2..=verts.len().min(3));
    let mut cuts: Vec<usize> = (1..verts.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut groups = Vec::new();
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(verts.len())) {
        groups.push(&verts[start..c]);
        start = c;
    }
    if rng.gen_bool(join_p) {
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                for &u in *a {
                    for &v in *b {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    for grp in groups {
        cotree(g, grp, join_p, rng);
    }
}

fn random_split(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    if n == 0 {
        return g;
    }
    let k = rng.gen_range(1..=n.min(4));
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    let p = rng.gen_range(0.2..0.7);
    for u in k..n {
        for v in 0..k {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_multipartite(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let parts = rng.gen_range(1..=4usize);
    let label: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if label[u] != label[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Prime P5-free base graphs: C5, bull, house, P4, K3, and a single edge.
fn base_graphs() -> Vec<Graph> {
    vec![
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).unwrap(),
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]).unwrap(),
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
        Graph::from_edges(2, [(0, 1)]).unwrap(),
    ]
}

fn random_blowup(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let bases: Vec<Graph> = base_graphs()
        .into_iter()
        .filter(|b| b.n() <= n.max(1))
        .collect();
    if bases.is_empty() || n == 0 {
        return Graph::new(n);
    }
    let base = bases.choose(rng).unwrap().clone();
    let k = base.n();
    // every base vertex gets at least one vertex
    let mut owner: Vec<usize> = (0..k).collect();
    owner.extend((k..n).map(|_| rng.gen_range(0..k)));
    let mut g = Graph::new(n);
    let mut modules: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, &o) in owner.iter().enumerate() {
        modules[o].push(v);
    }
    for m in &modules {
        if rng.gen_bool(0.6) {
            continue;
        }
        cotree(&mut g, m, 0.3, rng);
    }
    for (a, b) in base.edges() {
        for &u in &modules[a] {
            for &v in &modules[b] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::emit_graph6;

    #[test]
    fn named_graphs() {
        assert_eq!((cube().n(), cube().m()), (8, 12));
        assert_eq!((petersen().n(), petersen().m()), (10, 15));
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(random_graph(5, 1.0, 9), complete_graph(5));
    }

    #[test]
    fn p5free_generation_is_seeded_and_valid() {
        for seed in 0..40 {
            for n in [1, 2, 5, 10, 16] {
                let a = random_p5free_graph(n, seed).unwrap();
                let b = random_p5free_graph(n, seed).unwrap();
                assert_eq!(emit_graph6(&a), emit_graph6(&b));
                assert!(find_induced_path(&a, 5).is_none());
            }
        }
    }

    #[test]
    fn every_family_generates() {
        for fam in P5FreeFamily::ALL {
            for seed in 0..10 {
                let g = random_p5free_graph_with(9, fam, seed).unwrap();
                assert_eq!(g.n(), 9);
            }
        }
    }

    #[test]
    fn cograph_is_p4_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let g = random_cograph(12, 0.4, &mut rng);
            assert!(find_induced_path(&g, 4).is_none());
        }
    }

    #[test]
    fn rejection_budget_error_for_large_n() {
        let r = random_p5free_graph_with(60, P5FreeFamily::Rejection, 1);
        assert!(matches!(r, Err(Error::BudgetExhausted(_))));
    }
}
