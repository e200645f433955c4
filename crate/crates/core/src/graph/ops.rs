use std::collections::VecDeque;

use super::{Bipartition, Graph, VertexSet};
use crate::error::{Error, Result};

pub(crate) fn mask_of(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in vertices {
        mask[v] = true;
    }
    mask
}

/// Two-colours `G[vertices]` by BFS. Within each component the lowest-index
/// vertex goes left. `None` if the induced subgraph has an odd cycle.
pub fn bipartition(g: &Graph, vertices: &VertexSet) -> Option<Bipartition> {
    let mask = mask_of(g.n(), vertices.as_slice());
    let side = two_colour_masked(g, &mask)?;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for v in vertices.iter() {
        if side[v] == 0 {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(Bipartition {
        left: VertexSet(left),
        right: VertexSet(right),
    })
}

/// An odd cycle (as a vertex sequence) if the graph is not bipartite.
pub fn find_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if depth[w] % 2 == depth[u] % 2 {
                    let (mut a, mut b) = (vec![u], vec![w]);
                    while a.last() != b.last() {
                        let (x, y) = (*a.last().unwrap(), *b.last().unwrap());
                        if depth[x] >= depth[y] {
                            a.push(parent[x]);
                        } else {
                            b.push(parent[y]);
                        }
                    }
                    b.pop();
                    a.extend(b.into_iter().rev());
                    return Some(a);
                }
            }
        }
    }
    None
}

/// Side (0/1) per vertex of `G[mask]`; entries outside the mask are 0.
pub(crate) fn two_colour_masked(g: &Graph, mask: &[bool]) -> Option<Vec<u8>> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if !mask[s] || side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !mask[w] {
                    continue;
                }
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    for s in side.iter_mut() {
        if *s == u8::MAX {
            *s = 0;
        }
    }
    Some(side)
}

/// Components of `G[vertices]`, ordered by their smallest vertex.
pub fn connected_components(g: &Graph, vertices: &VertexSet) -> Vec<VertexSet> {
    let mask = mask_of(g.n(), vertices.as_slice());
    components_masked(g, &mask)
}

pub(crate) fn components_masked(g: &Graph, mask: &[bool]) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if !mask[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    out
}

/// True iff `G[vertices]` is acyclic.
pub fn is_forest(g: &Graph, vertices: &VertexSet) -> bool {
    let mask = mask_of(g.n(), vertices.as_slice());
    is_forest_masked(g, &mask)
}

pub(crate) fn is_forest_masked(g: &Graph, mask: &[bool]) -> bool {
    let nv = mask.iter().filter(|&&b| b).count();
    let ne = g.edges().filter(|&(u, v)| mask[u] && mask[v]).count();
    let nc = components_masked(g, mask).len();
    ne + nc == nv
}

/// Line graph plus the edge each line-graph vertex stands for (edges in
/// canonical `(u < v)` lexicographic order).
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut lg = Graph::new(edges.len());
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    (lg, edges)
}

/// Replaces `uv` by a path `u w v` through a new vertex `w = n`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let mut h = g.clone();
    h.remove_edge(u, v);
    let w = h.add_vertex();
    h.add_edge(u, w);
    h.add_edge(w, v);
    Ok(h)
}

/// Subdivides every edge once. The `i`-th edge in canonical order gets the
/// new vertex `n + i`.
pub fn subdivide_all(g: &Graph) -> Graph {
    let edges: Vec<_> = g.edges().collect();
    let mut h = Graph::new(g.n() + edges.len());
    for (i, (u, v)) in edges.into_iter().enumerate() {
        let w = g.n() + i;
        h.add_edge(u, w);
        h.add_edge(w, v);
    }
    h
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
