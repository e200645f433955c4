//! Fixed-pattern detectors by pruned backtracking.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// An induced path on `r` vertices, if one exists. The first one found in
/// lexicographic vertex order is returned.
pub fn find_induced_path(g: &Graph, r: usize) -> Option<Vec<usize>> {
    if r == 0 {
        return Some(Vec::new());
    }
    let mut path = Vec::with_capacity(r);
    for s in 0..g.n() {
        path.push(s);
        if extend_path(g, r, &mut path) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, r: usize, path: &mut Vec<usize>) -> bool {
    if path.len() == r {
        return true;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        let k = path.len();
        if path.contains(&w) || path[..k - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        if extend_path(g, r, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// True iff `seq` is an induced path: consecutive vertices adjacent, all
/// other pairs non-adjacent, no repeats.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    for i in 0..seq.len() {
        if seq[i] >= g.n() {
            return false;
        }
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return false;
            }
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// A claw as `[centre, leaf, leaf, leaf]`.
pub fn find_induced_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some([c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

pub fn contains_k4(g: &Graph) -> bool {
    find_k4(g).is_some()
}

pub(crate) fn find_k4(g: &Graph) -> Option<[usize; 4]> {
    for (u, v) in g.edges() {
        let common: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w > v && g.has_edge(v, w))
            .collect();
        for (i, &w) in common.iter().enumerate() {
            for &x in &common[i + 1..] {
                if g.has_edge(w, x) {
                    return Some([u, v, w, x]);
                }
            }
        }
    }
    None
}

/// All induced 4-cycles, each once, as `[v1, v2, v3, v4]` with `v1` the
/// smallest vertex and `v2 < v4`. Sorted lexicographically.
pub fn enumerate_induced_c4(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        let nb = g.neighbors(v1);
        for (i, &v2) in nb.iter().enumerate() {
            if v2 < v1 {
                continue;
            }
            for &v4 in &nb[i + 1..] {
                if g.has_edge(v2, v4) {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 > v1 && v3 != v4 && g.has_edge(v3, v4) && !g.has_edge(v1, v3) {
                        out.push([v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.n()).all(|v| set.contains(&v) || set.iter().any(|&s| g.has_edge(s, v)))
}

/// A dominating set of at most three vertices inducing a clique or a `P3`,
/// searched by increasing size then lexicographically.
///
/// Every connected P5-free graph without `K4` has one; `None` is possible
/// only outside that class.
pub fn dominating_clique_or_p3(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(VertexSet::new()));
    }
    if super::ops::components_masked(g, &vec![true; n]).len() > 1 {
        return Err(Error::Disconnected);
    }
    for a in 0..n {
        if dominates(g, &[a]) {
            return Ok(Some(vec![a].into()));
        }
    }
    for (a, b) in g.edges() {
        if dominates(g, &[a, b]) {
            return Ok(Some(vec![a, b].into()));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = g.has_edge(a, b) as u8 + g.has_edge(a, c) as u8 + g.has_edge(b, c) as u8;
                // a triangle (3 edges) or an induced P3 (exactly 2 edges)
                if e >= 2 && dominates(g, &[a, b, c]) {
                    return Ok(Some(vec![a, b, c].into()));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, line_graph, path_graph, petersen, star_graph};

    fn brute_p5(g: &Graph) -> bool {
        // every ordered 5-tuple
        let n = g.n();
        let mut seq = [0usize; 5];
        fn rec(g: &Graph, n: usize, seq: &mut [usize; 5], k: usize) -> bool {
            if k == 5 {
                return is_induced_path(g, seq);
            }
            for v in 0..n {
                seq[k] = v;
                if rec(g, n, seq, k + 1) {
                    return true;
                }
            }
            false
        }
        rec(g, n, &mut seq, 0)
    }

    #[test]
    fn p5_examples() {
        assert_eq!(find_induced_path(&cycle_graph(4), 5), None);
        assert_eq!(
            find_induced_path(&path_graph(5), 5),
            Some(vec![0, 1, 2, 3, 4])
        );
        let w = find_induced_path(&petersen(), 5).unwrap();
        assert!(is_induced_path(&petersen(), &w));
        assert!(brute_p5(&petersen()));
    }

    #[test]
    fn claw_examples() {
        let claw = star_graph(3);
        let c = find_induced_claw(&claw).unwrap();
        let mut s = c.to_vec();
        s.sort();
        assert_eq!(s, vec![0, 1, 2, 3]);
        assert_eq!(find_induced_claw(&line_graph(&complete_graph(4)).0), None);
        assert_eq!(find_induced_claw(&cycle_graph(6)), None);
    }

    #[test]
    fn k4_examples() {
        assert!(contains_k4(&complete_graph(4)));
        assert!(!contains_k4(&cycle_graph(6)));
        assert!(!contains_k4(&petersen()));
    }

    #[test]
    fn c4_examples() {
        assert_eq!(enumerate_induced_c4(&cycle_graph(4)), vec![[0, 1, 2, 3]]);
        assert!(enumerate_induced_c4(&complete_graph(4)).is_empty());
    }

    #[test]
    fn c4_rook_graph_matches_brute_force() {
        // 3x3 rook's graph: cells (r,c), adjacent iff same row or column
        let mut g = Graph::new(9);
        for a in 0..9 {
            for b in a + 1..9 {
                if a / 3 == b / 3 || a % 3 == b % 3 {
                    g.add_edge(a, b);
                }
            }
        }
        let mut brute = 0;
        for a in 0..9 {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    for d in c + 1..9 {
                        let s = [a, b, c, d];
                        let deg_ok = s.iter().all(|&x| {
                            s.iter().filter(|&&y| y != x && g.has_edge(x, y)).count() == 2
                        });
                        let edges = (0..4)
                            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                            .filter(|&(i, j)| g.has_edge(s[i], s[j]))
                            .count();
                        // 2-regular on 4 vertices with 4 edges is a C4
                        if deg_ok && edges == 4 {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(enumerate_induced_c4(&g).len(), brute);
        assert_eq!(brute, 9);
    }

    #[test]
    fn dominating_examples() {
        assert_eq!(
            dominating_clique_or_p3(&star_graph(4))
                .unwrap()
                .unwrap()
                .as_slice(),
            &[0]
        );
        let d = dominating_clique_or_p3(&path_graph(5)).unwrap().unwrap();
        assert_eq!(d.as_slice(), &[1, 2, 3]);
        // C7: no dominating clique (size <= 2 dominates at most 4 vertices),
        // and a P3 dominates only 5 of the 7 vertices
        assert_eq!(dominating_clique_or_p3(&cycle_graph(7)).unwrap(), None);
        let two = Graph::new(2);
        assert_eq!(dominating_clique_or_p3(&two), Err(Error::Disconnected));
    }
}
