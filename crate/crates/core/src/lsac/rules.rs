//! List propagation rules for semi-acyclic (or proper) list 3-colouring.

use crate::graph::detect::enumerate_induced_c4;
use crate::graph::ops::two_colour_masked;
use crate::graph::Graph;
use crate::lists::{ColourSet, ListAssignment, Mode};
use crate::stats::Stats;

/// Outcome of one propagation step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// The numbered rule changed some list.
    Fired(u8),
    /// The numbered rule proved there is no colouring.
    Contradiction(u8),
    Fixpoint,
}

/// Rules 1 to 5, tried in order and restarted from rule 1 after every
/// change:
///
/// 1. a singleton list `{c}` removes `c` from every neighbour,
/// 2. an empty list is a contradiction,
/// 3. the vertices missing a colour `i` must induce a bipartite graph,
/// 4. an induced `C4` with no vertex allowing colour 1 is a contradiction,
/// 5. an induced `C4` with exactly one vertex allowing colour 1 fixes it to 1.
///
/// Rules 4 and 5 only hold in [`Mode::SemiAcyclic`].
pub struct Propagator<'g> {
    g: &'g Graph,
    c4s: Vec<[usize; 4]>,
    mode: Mode,
}

impl<'g> Propagator<'g> {
    pub fn new(g: &'g Graph, mode: Mode) -> Self {
        let c4s = match mode {
            Mode::SemiAcyclic => enumerate_induced_c4(g),
            Mode::Proper => Vec::new(),
        };
        Propagator { g, c4s, mode }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Induced 4-cycles of the graph (empty in proper mode).
    pub fn c4s(&self) -> &[[usize; 4]] {
        &self.c4s
    }

    pub fn step(&self, lists: &mut ListAssignment) -> Step {
        let g = self.g;
        for v in 0..g.n() {
            let Some(c) = lists.get(v).only() else {
                continue;
            };
            if g.neighbors(v).iter().any(|&u| lists.get(u).contains(c)) {
                for &u in g.neighbors(v) {
                    lists.set(u, lists.get(u).without(c));
                }
                return Step::Fired(1);
            }
        }
        if lists.0.iter().any(|s| s.is_empty()) {
            return Step::Contradiction(2);
        }
        for i in 1..=3 {
            let mask: Vec<bool> = lists.0.iter().map(|s| !s.contains(i)).collect();
            if two_colour_masked(g, &mask).is_none() {
                return Step::Contradiction(3);
            }
        }
        if self.mode == Mode::Proper {
            return Step::Fixpoint;
        }
        for c in &self.c4s {
            if c.iter().all(|&v| !lists.get(v).contains(1)) {
                return Step::Contradiction(4);
            }
        }
        for c in &self.c4s {
            let mut good = c.iter().filter(|&&v| lists.get(v).contains(1));
            if let (Some(&v), None) = (good.next(), good.next()) {
                if lists.get(v) != ColourSet::single(1) {
                    lists.set(v, ColourSet::single(1));
                    return Step::Fired(5);
                }
            }
        }
        Step::Fixpoint
    }

    /// Runs the rules to a fixed point; `false` means no colouring exists.
    pub fn run(&self, lists: &mut ListAssignment, stats: &mut Stats) -> bool {
        loop {
            match self.step(lists) {
                Step::Fired(r) => {
                    stats.lsac_rules[r as usize - 1] += 1;
                    log::trace!("rule {r} fired");
                }
                Step::Contradiction(r) => {
                    stats.lsac_rules[r as usize - 1] += 1;
                    log::trace!("rule {r} found a contradiction");
                    return false;
                }
                Step::Fixpoint => return true,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn lists(sets: &[&[u8]]) -> ListAssignment {
        ListAssignment(sets.iter().map(|s| ColourSet::from_colours(s)).collect())
    }

    #[test]
    fn forced_chain_on_triangle() {
        let g = complete_graph(3);
        let p = Propagator::new(&g, Mode::SemiAcyclic);
        let mut l = lists(&[&[1], &[1, 2], &[1, 2, 3]]);
        let mut stats = Stats::default();
        assert!(p.run(&mut l, &mut stats));
        assert_eq!(l, lists(&[&[1], &[2], &[3]]));
        assert!(stats.lsac_rules[0] >= 2);
    }

    #[test]
    fn c4_without_colour_one() {
        let g = cycle_graph(4);
        let p = Propagator::new(&g, Mode::SemiAcyclic);
        let mut l = lists(&[&[2u8, 3][..]; 4]);
        assert_eq!(p.step(&mut l), Step::Contradiction(4));
        let q = Propagator::new(&g, Mode::Proper);
        assert_eq!(q.step(&mut l), Step::Fixpoint);
    }

    #[test]
    fn c4_with_one_good_vertex() {
        let g = cycle_graph(4);
        let p = Propagator::new(&g, Mode::SemiAcyclic);
        let mut l = lists(&[&[1, 2], &[2, 3], &[2, 3], &[2, 3]]);
        assert_eq!(p.step(&mut l), Step::Fired(5));
        assert_eq!(l.get(0), ColourSet::single(1));
    }

    #[test]
    fn odd_cycle_missing_a_colour() {
        let g = cycle_graph(5);
        let p = Propagator::new(&g, Mode::Proper);
        let mut l = lists(&[&[1u8, 2][..]; 5]);
        assert_eq!(p.step(&mut l), Step::Contradiction(3));
    }

    #[test]
    fn empty_list() {
        let g = Graph::new(2);
        let p = Propagator::new(&g, Mode::Proper);
        let mut l = lists(&[&[], &[1]]);
        assert_eq!(p.step(&mut l), Step::Contradiction(2));
    }
}
