//! Splitting a fully branched instance into its independent parts.

use crate::error::{Error, Result};
use crate::graph::ops::{mask_of, two_colour_masked};
use crate::graph::Graph;
use crate::lists::{swap23, Coloring, ColourSet, ListAssignment, Mode};
use crate::trouble::TroublesomeInstance;

/// An induced `C4` that can be coloured from its lists using only 2 and 3,
/// written with its two colour-1-capable vertices first and third.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrickyC4 {
    pub cycle: [usize; 4],
}

impl TrickyC4 {
    pub fn good(&self) -> [usize; 2] {
        [self.cycle[0], self.cycle[2]]
    }
}

fn set(cs: &[u8]) -> ColourSet {
    ColourSet::from_colours(cs)
}

/// Returns every tricky induced `C4` in normal form, or an error if one of
/// them does not have lists `({1,2},{3},{1,2},{3})` or `({1,3},{2},{1,3},{2})`.
pub fn classify_strongly_tricky(
    lists: &ListAssignment,
    c4s: &[[usize; 4]],
) -> Result<Vec<TrickyC4>> {
    let mut out = Vec::new();
    for c in c4s {
        let l = |i: usize| lists.get(c[i % 4]);
        let tricky = (0..2).any(|r| {
            l(r).contains(2) && l(r + 1).contains(3) && l(r + 2).contains(2) && l(r + 3).contains(3)
        });
        if !tricky {
            continue;
        }
        let strong = (0..2).find(|&r| {
            [(set(&[1, 2]), set(&[3])), (set(&[1, 3]), set(&[2]))]
                .iter()
                .any(|&(good, other)| {
                    l(r) == good && l(r + 2) == good && l(r + 1) == other && l(r + 3) == other
                })
        });
        match strong {
            Some(r) => out.push(TrickyC4 {
                cycle: [c[r], c[r + 1], c[(r + 2) % 4], c[(r + 3) % 4]],
            }),
            None => {
                return Err(Error::InvariantBreach(format!(
                    "tricky C4 {c:?} has lists {:?}",
                    c.map(|v| lists.get(v))
                )))
            }
        }
    }
    Ok(out)
}

/// A fully branched instance: colour 1 and `{2,3}` vertices coloured
/// directly, the rest split into two troublesome instances.
#[derive(Clone, Debug)]
pub struct Leaf {
    /// Colours of `L_1` and `L_{2,3}`; 0 elsewhere.
    pub base: Coloring,
    /// Number of vertices with list `{1}`.
    pub ones: usize,
    /// `G[L_2 ∪ L_{1,3}]`.
    pub first: TroublesomeInstance,
    pub first_map: Vec<usize>,
    /// `G[L_3 ∪ L_{1,2}]` with colours 2 and 3 exchanged.
    pub second: TroublesomeInstance,
    pub second_map: Vec<usize>,
}

impl Leaf {
    pub fn build(
        g: &Graph,
        lists: &ListAssignment,
        c4s: &[[usize; 4]],
        mode: Mode,
    ) -> Result<Leaf> {
        let n = g.n();
        let by =
            |cs: &[u8]| -> Vec<usize> { (0..n).filter(|&v| lists.get(v) == set(cs)).collect() };
        if let Some(v) = (0..n).find(|&v| lists.get(v).len() == 3 || lists.get(v).is_empty()) {
            return Err(Error::InvariantBreach(format!(
                "vertex {v} reached a leaf with list {:?}",
                lists.get(v)
            )));
        }
        let (l1, l2, l3) = (by(&[1]), by(&[2]), by(&[3]));
        let (l12, l13, l23) = (by(&[1, 2]), by(&[1, 3]), by(&[2, 3]));

        let mut base = Coloring::uncoloured(n);
        for &v in &l1 {
            base.set(v, 1);
        }
        let sides = two_colour_masked(g, &mask_of(n, &l23))
            .ok_or_else(|| Error::InvariantBreach("L_{2,3} is not bipartite".into()))?;
        for &v in &l23 {
            base.set(v, 2 + sides[v]);
        }

        let split =
            |single: &[usize], pair: &[usize]| -> Result<(TroublesomeInstance, Vec<usize>)> {
                let mut vs: Vec<usize> = single.iter().chain(pair).copied().collect();
                vs.sort_unstable();
                let (sub, map) = g.induced_subgraph(&vs);
                let local = |set: &[usize]| -> Vec<usize> {
                    set.iter().map(|v| map.binary_search(v).unwrap()).collect()
                };
                let inst = TroublesomeInstance::new(sub, local(single).into(), local(pair).into())
                    .map_err(|e| {
                        Error::InvariantBreach(format!("leaf part is not troublesome: {e}"))
                    })?;
                Ok((inst, map))
            };
        let (first, first_map) = split(&l2, &l13)?;
        let (second, second_map) = split(&l3, &l12)?;

        if mode == Mode::SemiAcyclic {
            let tricky = classify_strongly_tricky(lists, c4s)?.len();
            let parts = first.strongly_tricky_c4s().len() + second.strongly_tricky_c4s().len();
            if tricky != parts {
                return Err(Error::InvariantBreach(format!(
                    "{tricky} tricky C4s but {parts} in the troublesome parts"
                )));
            }
        }
        Ok(Leaf {
            base,
            ones: l1.len(),
            first,
            first_map,
            second,
            second_map,
        })
    }

    /// Combines colourings of the two troublesome parts with the base.
    pub fn combine(&self, first: &Coloring, second: &Coloring) -> Coloring {
        let mut col = self.base.clone();
        for (i, &v) in self.first_map.iter().enumerate() {
            col.set(v, first.0[i]);
        }
        for (i, &v) in self.second_map.iter().enumerate() {
            col.set(v, swap23(second.0[i]));
        }
        col
    }

    /// Translates a `P5` witness found inside one of the parts.
    pub fn lift(&self, err: Error, second: bool) -> Error {
        let map = if second {
            &self.second_map
        } else {
            &self.first_map
        };
        match err {
            Error::NotP5Free { witness } => Error::NotP5Free {
                witness: witness.into_iter().map(|v| map[v]).collect(),
            },
            e => e,
        }
    }
}
