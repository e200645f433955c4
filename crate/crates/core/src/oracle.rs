//! Exhaustive reference implementations, for tests and cross-checks only.
//!
//! Subsets are visited by size, then lexicographically, so every reported
//! witness is the first one in that order. Inputs past a guard are
//! rejected with [`Error::GuardExceeded`] instead of being truncated.

use crate::error::{Error, Result};
use crate::gadgets::CnfFormula;
use crate::graph::{Graph, VertexSet};
use crate::lists::{Coloring, ListAssignment, Mode};
use crate::trouble::TroublesomeInstance;

pub const SUBSET_GUARD: usize = 22;
pub const FVS_GUARD: usize = 26;
pub const COLOURING_GUARD: u64 = 10_000_000;
pub const HAMILTON_GUARD: usize = 20;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::GuardExceeded {
            what,
            size: size as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

/// Whether `G[keep]` is a forest, by union-find over its edges.
fn acyclic(g: &Graph, keep: u64) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if keep >> u & 1 == 1 && keep >> v & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

fn two_colourable(nb: &[u64], keep: u64) -> bool {
    let mut side = vec![u8::MAX; nb.len()];
    for s in 0..nb.len() {
        if keep >> s & 1 == 0 || side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut rest = nb[u] & keep;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Calls `f` on every `k`-subset (as a bit mask) in lexicographic order,
/// skipping extensions of non-independent prefixes when `independent`.
/// Stops when `f` returns `true`.
fn subsets_of_size(
    n: usize,
    k: usize,
    nb: &[u64],
    independent: bool,
    f: &mut dyn FnMut(u64) -> bool,
) -> bool {
    fn rec(
        start: usize,
        left: usize,
        n: usize,
        set: u64,
        nb: &[u64],
        independent: bool,
        f: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return f(set);
        }
        for v in start..=n - left {
            if independent && nb[v] & set != 0 {
                continue;
            }
            if rec(v + 1, left - 1, n, set | 1 << v, nb, independent, f) {
                return true;
            }
        }
        false
    }
    k <= n && rec(0, k, n, 0, nb, independent, f)
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn search(
    g: &Graph,
    sizes: impl Iterator<Item = usize>,
    independent: bool,
    ok: impl Fn(u64) -> bool,
) -> Option<(usize, VertexSet)> {
    let n = g.n();
    let nb = masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in sizes {
        let mut found = None;
        subsets_of_size(n, k, &nb, independent, &mut |s| {
            if ok(all & !s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Some((k, to_set(s)));
        }
    }
    None
}

/// Smallest independent `S` with `G - S` a forest.
pub fn brute_min_ifvs(g: &Graph) -> Result<Option<(usize, VertexSet)>> {
    guard("vertex count", g.n(), SUBSET_GUARD)?;
    Ok(search(g, 0..=g.n(), true, |keep| acyclic(g, keep)))
}

/// Largest independent `S` with `G - S` a forest.
pub fn brute_max_ifvs(g: &Graph) -> Result<Option<(usize, VertexSet)>> {
    guard("vertex count", g.n(), SUBSET_GUARD)?;
    Ok(search(g, (0..=g.n()).rev(), true, |keep| acyclic(g, keep)))
}

/// Every size `k` for which an independent feedback vertex set of exactly
/// `k` vertices exists.
pub fn brute_ifvs_sizes(g: &Graph) -> Result<Vec<usize>> {
    guard("vertex count", g.n(), SUBSET_GUARD)?;
    Ok((0..=g.n())
        .filter(|&k| search(g, k..=k, true, |keep| acyclic(g, keep)).is_some())
        .collect())
}

/// Smallest independent `S` with `G - S` bipartite.
pub fn brute_min_ioct(g: &Graph) -> Result<Option<(usize, VertexSet)>> {
    guard("vertex count", g.n(), SUBSET_GUARD)?;
    let nb = masks(g);
    Ok(search(g, 0..=g.n(), true, |keep| two_colourable(&nb, keep)))
}

/// Smallest `S` (not necessarily independent) with `G - S` a forest.
pub fn brute_min_fvs(g: &Graph) -> Result<(usize, VertexSet)> {
    guard("vertex count", g.n(), FVS_GUARD)?;
    Ok(search(g, 0..=g.n(), false, |keep| acyclic(g, keep)).expect("deleting everything works"))
}

/// Every minimum feedback vertex set.
pub fn brute_all_min_fvs(g: &Graph) -> Result<Vec<VertexSet>> {
    let (k, _) = brute_min_fvs(g)?;
    let nb = masks(g);
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    subsets_of_size(n, k, &nb, false, &mut |s| {
        if acyclic(g, all & !s) {
            out.push(to_set(s));
        }
        false
    });
    Ok(out)
}

fn colour_ok(g: &Graph, col: &[u8], mode: Mode) -> bool {
    let keep = (0..g.n())
        .filter(|&v| col[v] != 1)
        .fold(0u64, |m, v| m | 1 << v);
    match mode {
        Mode::SemiAcyclic => acyclic(g, keep),
        // properness already makes classes 2 and 3 bipartite
        Mode::Proper => true,
    }
}

/// Calls `f` on every proper list colouring in lexicographic order (vertex
/// 0 most significant) until it returns `true`.
fn each_proper_colouring(
    g: &Graph,
    lists: &ListAssignment,
    f: &mut dyn FnMut(&[u8]) -> bool,
) -> Result<()> {
    if lists.len() != g.n() {
        return Err(Error::Malformed(
            "list count does not match the graph".into(),
        ));
    }
    guard("vertex count", g.n(), 63)?;
    let product = lists.product();
    if product > COLOURING_GUARD {
        return Err(Error::GuardExceeded {
            what: "list product",
            size: product,
            limit: COLOURING_GUARD,
        });
    }
    fn rec(
        g: &Graph,
        lists: &ListAssignment,
        v: usize,
        col: &mut Vec<u8>,
        f: &mut dyn FnMut(&[u8]) -> bool,
    ) -> bool {
        if v == g.n() {
            return f(col);
        }
        for c in lists.get(v).colours() {
            if g.neighbors(v).iter().any(|&u| u < v && col[u] == c) {
                continue;
            }
            col[v] = c;
            if rec(g, lists, v + 1, col, f) {
                return true;
            }
        }
        col[v] = 0;
        false
    }
    rec(g, lists, 0, &mut vec![0; g.n()], f);
    Ok(())
}

/// First list-respecting proper colouring whose classes 2 and 3 induce a
/// forest.
pub fn brute_lsac(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    brute_list_colouring(g, lists, Mode::SemiAcyclic)
}

/// [`brute_lsac`], or in [`Mode::Proper`] the first proper list colouring.
pub fn brute_list_colouring(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
) -> Result<Option<Coloring>> {
    let mut found = None;
    each_proper_colouring(g, lists, &mut |col| {
        if colour_ok(g, col, mode) {
            found = Some(Coloring(col.to_vec()));
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Every valid list colouring, in lexicographic order.
pub fn brute_all_list_colourings(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    each_proper_colouring(g, lists, &mut |col| {
        if colour_ok(g, col, mode) {
            out.push(Coloring(col.to_vec()));
        }
        false
    })?;
    Ok(out)
}

/// Alternating `C4`s `a - b - c - d` with `a, c` in `l13` and `b, d` in
/// `l2`, as the pairs `(a, c)` that need a colour-1 vertex.
fn tricky_pairs(inst: &TroublesomeInstance) -> Vec<(usize, usize)> {
    let g = inst.graph();
    let l13 = inst.l13().as_slice();
    let l2 = inst.l2().as_slice();
    let mut out = Vec::new();
    for (i, &a) in l13.iter().enumerate() {
        for &c in &l13[i + 1..] {
            if g.has_edge(a, c) {
                continue;
            }
            let mut hits = 0;
            'pairs: for (j, &b) in l2.iter().enumerate() {
                for &d in &l2[j + 1..] {
                    if g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && g.has_edge(d, a)
                        && !g.has_edge(b, d)
                    {
                        hits += 1;
                        break 'pairs;
                    }
                }
            }
            if hits > 0 {
                out.push((a, c));
            }
        }
    }
    out
}

fn trouble_free_sets(inst: &TroublesomeInstance, mode: Mode) -> Result<Vec<Vec<u64>>> {
    let l13 = inst.l13().as_slice();
    guard("l13 size", l13.len(), SUBSET_GUARD)?;
    let g = inst.graph();
    let k = l13.len();
    let bit = |v: usize| 1u64 << l13.binary_search(&v).unwrap();
    let edges: Vec<(u64, u64)> = g
        .edges()
        .filter(|&(u, v)| inst.l13().contains(u) && inst.l13().contains(v))
        .map(|(u, v)| (bit(u), bit(v)))
        .collect();
    let pairs: Vec<u64> = match mode {
        Mode::SemiAcyclic => tricky_pairs(inst)
            .iter()
            .map(|&(a, c)| bit(a) | bit(c))
            .collect(),
        Mode::Proper => Vec::new(),
    };
    let nb = vec![0u64; k];
    let mut by_size = vec![Vec::new(); k + 1];
    for (size, slot) in by_size.iter_mut().enumerate() {
        subsets_of_size(k, size, &nb, false, &mut |ones| {
            // ones get colour 1, the rest colour 3
            let proper = edges
                .iter()
                .all(|&(a, b)| (ones & a != 0) != (ones & b != 0));
            if proper && pairs.iter().all(|&p| ones & p != 0) {
                slot.push(ones);
            }
            false
        });
    }
    Ok(by_size)
}

fn trouble_colouring(inst: &TroublesomeInstance, ones: u64) -> Coloring {
    let mut col = Coloring(vec![2; inst.graph().n()]);
    for (i, v) in inst.l13().iter().enumerate() {
        col.set(v, if ones >> i & 1 == 1 { 1 } else { 3 });
    }
    col
}

/// Minimum number of colour-1 vertices over trouble-free colourings, with
/// the first witness.
pub fn brute_trouble_free(inst: &TroublesomeInstance) -> Result<Option<(usize, Coloring)>> {
    brute_trouble_free_mode(inst, Mode::SemiAcyclic)
}

/// [`brute_trouble_free`], ignoring the `C4` condition in [`Mode::Proper`].
pub fn brute_trouble_free_mode(
    inst: &TroublesomeInstance,
    mode: Mode,
) -> Result<Option<(usize, Coloring)>> {
    let sets = trouble_free_sets(inst, mode)?;
    Ok(sets
        .iter()
        .enumerate()
        .find_map(|(k, s)| s.first().map(|&ones| (k, trouble_colouring(inst, ones)))))
}

/// Number of trouble-free colourings with each number of colour-1 vertices.
pub fn brute_trouble_free_counts(inst: &TroublesomeInstance, mode: Mode) -> Result<Vec<usize>> {
    Ok(trouble_free_sets(inst, mode)?
        .iter()
        .map(|s| s.len())
        .collect())
}

/// Whether some Hamilton cycle uses the edge `uv`.
pub fn brute_hamilton_through_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let n = g.n();
    guard("vertex count", n, HAMILTON_GUARD)?;
    if u >= n || v >= n || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    if n < 3 {
        return Ok(false);
    }
    // ends[mask] = vertices x with a path from u to x covering exactly mask
    let mut ends = vec![0u32; 1 << n];
    ends[1 << u] = 1 << u;
    for mask in 0..1usize << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for x in 0..n {
            if e >> x & 1 == 0 {
                continue;
            }
            for &y in g.neighbors(x) {
                if mask >> y & 1 == 0 {
                    ends[mask | 1 << y] |= 1 << y;
                }
            }
        }
    }
    Ok(ends[(1 << n) - 1] >> v & 1 == 1)
}

/// First satisfying assignment in binary counting order (variable 0 is
/// the lowest bit).
pub fn brute_sat(phi: &CnfFormula) -> Result<Option<Vec<bool>>> {
    guard("variable count", phi.var_count, SUBSET_GUARD)?;
    Ok((0u32..1 << phi.var_count)
        .map(|m| {
            (0..phi.var_count)
                .map(|x| m >> x & 1 == 1)
                .collect::<Vec<_>>()
        })
        .find(|values| phi.satisfied_by(values)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cube, cycle_graph, path_graph, subdivide_all};
    use crate::lists::ColourSet;

    #[test]
    fn ifvs_examples() {
        assert_eq!(brute_min_ifvs(&complete_graph(4)).unwrap(), None);
        assert_eq!(
            brute_min_ifvs(&cycle_graph(4)).unwrap(),
            Some((1, vec![0].into()))
        );
        assert_eq!(
            brute_min_ifvs(&path_graph(4)).unwrap(),
            Some((0, VertexSet::new()))
        );
        assert_eq!(brute_max_ifvs(&path_graph(3)).unwrap().unwrap().0, 2);
        assert_eq!(brute_ifvs_sizes(&cycle_graph(4)).unwrap(), vec![1, 2]);
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(brute_min_ioct(&cycle_graph(5)).unwrap().unwrap().0, 1);
        assert_eq!(brute_min_fvs(&complete_graph(4)).unwrap().0, 2);
        let k4s = subdivide_all(&complete_graph(4));
        assert_eq!(brute_min_fvs(&k4s).unwrap().0, 2);
        assert!(brute_min_ifvs(&Graph::new(23)).is_err());
    }

    #[test]
    fn independent_filter_agrees_with_plain_search() {
        // min over independent sets equals min over all sets that happen to
        // be independent
        for g in [
            cycle_graph(5),
            cycle_graph(6),
            complete_graph(3),
            path_graph(4),
        ] {
            let nb = masks(&g);
            let all = (1u64 << g.n()) - 1;
            let filtered = search(&g, 0..=g.n(), false, |keep| {
                let s = all & !keep;
                (0..g.n()).all(|v| s >> v & 1 == 0 || nb[v] & s == 0) && acyclic(&g, keep)
            });
            assert_eq!(filtered, brute_min_ifvs(&g).unwrap());
        }
    }

    #[test]
    fn lsac_examples() {
        let c4 = cycle_graph(4);
        let l23 = ListAssignment(vec![ColourSet::from_colours(&[2, 3]); 4]);
        assert_eq!(brute_lsac(&c4, &l23).unwrap(), None);
        let ones = ListAssignment(vec![ColourSet::single(1); 2]);
        assert_eq!(brute_lsac(&path_graph(2), &ones).unwrap(), None);
        assert!(brute_lsac(&path_graph(3), &ListAssignment::full(3))
            .unwrap()
            .is_some());
        assert_eq!(
            brute_list_colouring(&c4, &l23, Mode::Proper).unwrap(),
            Some(Coloring(vec![2, 3, 2, 3]))
        );
        assert!(brute_lsac(&Graph::new(15), &ListAssignment::full(15)).is_err());
    }

    #[test]
    fn trouble_free_examples() {
        let empty =
            TroublesomeInstance::new(Graph::new(2), vec![0, 1].into(), vec![].into()).unwrap();
        assert_eq!(
            brute_trouble_free(&empty).unwrap(),
            Some((0, Coloring(vec![2, 2])))
        );
        let c4 =
            TroublesomeInstance::new(cycle_graph(4), vec![1, 3].into(), vec![0, 2].into()).unwrap();
        let (t, col) = brute_trouble_free(&c4).unwrap().unwrap();
        assert_eq!(t, 1);
        assert!(col.0[0] == 1 || col.0[2] == 1);
        assert_eq!(
            brute_trouble_free_mode(&c4, Mode::Proper)
                .unwrap()
                .unwrap()
                .0,
            0
        );
        let edge =
            TroublesomeInstance::new(path_graph(2), vec![].into(), vec![0, 1].into()).unwrap();
        assert_eq!(brute_trouble_free(&edge).unwrap().unwrap().0, 1);
        assert_eq!(
            brute_trouble_free_counts(&edge, Mode::SemiAcyclic).unwrap(),
            vec![0, 2, 0]
        );
    }

    #[test]
    fn hamilton_examples() {
        assert!(brute_hamilton_through_edge(&cycle_graph(5), 0, 1).unwrap());
        assert!(!brute_hamilton_through_edge(&path_graph(4), 1, 2).unwrap());
        let q3 = cube();
        for (u, v) in q3.edges() {
            assert!(brute_hamilton_through_edge(&q3, u, v).unwrap());
        }
        assert!(brute_hamilton_through_edge(&path_graph(3), 0, 2).is_err());
    }

    #[test]
    fn sat_examples() {
        let phi = CnfFormula::from_signed(&[&[1, 2], &[-1, -2]]).unwrap();
        assert_eq!(brute_sat(&phi).unwrap(), Some(vec![true, false]));
        let unsat = CnfFormula::from_signed(&[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]).unwrap();
        assert_eq!(brute_sat(&unsat).unwrap(), None);
    }
}
