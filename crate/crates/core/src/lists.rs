//! Colour lists over `{1, 2, 3}` and (partial) colourings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ops::{is_forest_masked, two_colour_masked};
use crate::graph::Graph;

/// Subset of `{1, 2, 3}` stored as a bit mask (bit `c - 1` for colour `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColourSet(u8);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);
    pub const FULL: ColourSet = ColourSet(0b111);

    pub fn single(c: u8) -> Self {
        debug_assert!((1..=3).contains(&c));
        ColourSet(1 << (c - 1))
    }

    pub fn from_colours(cs: &[u8]) -> Self {
        cs.iter().fold(ColourSet::EMPTY, |s, &c| s.with(c))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: u8) -> bool {
        (1..=3).contains(&c) && self.0 >> (c - 1) & 1 == 1
    }

    pub fn with(self, c: u8) -> Self {
        ColourSet(self.0 | 1 << (c - 1))
    }

    pub fn without(self, c: u8) -> Self {
        ColourSet(self.0 & !(1 << (c - 1)))
    }

    pub fn minus(self, other: ColourSet) -> Self {
        ColourSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The colour of a singleton list.
    pub fn only(self) -> Option<u8> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as u8 + 1)
    }

    pub fn colours(self) -> impl Iterator<Item = u8> {
        (1..=3u8).filter(move |&c| self.contains(c))
    }

    /// Exchanges colours 2 and 3.
    pub fn swap23(self) -> Self {
        let b = self.0;
        ColourSet((b & 1) | ((b >> 1) & 1) << 2 | ((b >> 2) & 1) << 1)
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.colours().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn swap23(c: u8) -> u8 {
    match c {
        2 => 3,
        3 => 2,
        c => c,
    }
}

/// Per-vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment(pub Vec<ColourSet>);

impl ListAssignment {
    pub fn full(n: usize) -> Self {
        ListAssignment(vec![ColourSet::FULL; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> ColourSet {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, s: ColourSet) {
        self.0[v] = s;
    }

    /// Number of list-respecting colour choices, saturating.
    pub fn product(&self) -> u64 {
        self.0
            .iter()
            .fold(1u64, |acc, s| acc.saturating_mul(s.len() as u64))
    }
}

/// Parses the list file format: one line `v: c1 c2 ...` per vertex.
/// Omitted vertices default to `{1,2,3}`; `#` starts a comment line.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment> {
    let mut lists = ListAssignment::full(n);
    let mut seen = vec![false; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `v: colours`, got `{line}`")))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("bad vertex `{}`", head.trim())))?;
        if v >= n {
            return Err(err(format!("vertex {v} out of range for n={n}")));
        }
        if seen[v] {
            return Err(err(format!("vertex {v} listed twice")));
        }
        seen[v] = true;
        let mut set = ColourSet::EMPTY;
        for tok in tail.split_whitespace() {
            let c: u8 = tok
                .parse()
                .ok()
                .filter(|c| (1..=3).contains(c))
                .ok_or_else(|| err(format!("bad colour `{tok}`")))?;
            set = set.with(c);
        }
        lists.set(v, set);
    }
    Ok(lists)
}

pub fn emit_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, s) in lists.0.iter().enumerate() {
        out.push_str(&format!("{v}:"));
        for c in s.colours() {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

/// Partial colouring; `0` marks an uncoloured vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<u8>);

impl Coloring {
    pub fn uncoloured(n: usize) -> Self {
        Coloring(vec![0; n])
    }

    pub fn get(&self, v: usize) -> Option<u8> {
        match self.0[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, v: usize, c: u8) {
        self.0[v] = c;
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(|&c| c != 0)
    }

    pub fn class(&self, c: u8) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }
}

/// What the colour classes `2` and `3` must induce together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// A forest: semi-acyclic colourings, independent feedback vertex sets.
    SemiAcyclic,
    /// A bipartite graph, which every proper 3-colouring already gives:
    /// independent odd cycle transversals.
    Proper,
}

/// Checks a total colouring: proper, inside the lists, and classes 2 and 3
/// inducing a forest (in [`Mode::SemiAcyclic`]) or a bipartite graph.
pub fn verify_colouring(
    g: &Graph,
    lists: &ListAssignment,
    colouring: &Coloring,
    mode: Mode,
) -> std::result::Result<(), String> {
    if colouring.0.len() != g.n() || lists.len() != g.n() {
        return Err("length mismatch".into());
    }
    for v in 0..g.n() {
        let c = colouring.0[v];
        if !(1..=3).contains(&c) {
            return Err(format!("vertex {v} has no colour"));
        }
        if !lists.get(v).contains(c) {
            return Err(format!(
                "vertex {v} coloured {c} outside list {:?}",
                lists.get(v)
            ));
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| colouring.0[u] == colouring.0[v]) {
        return Err(format!("edge {u}-{v} is monochromatic"));
    }
    let mask: Vec<bool> = colouring.0.iter().map(|&c| c != 1).collect();
    match mode {
        Mode::SemiAcyclic if !is_forest_masked(g, &mask) => {
            Err("colour classes 2 and 3 contain a cycle".into())
        }
        Mode::Proper if two_colour_masked(g, &mask).is_none() => {
            Err("colour classes 2 and 3 contain an odd cycle".into())
        }
        _ => Ok(()),
    }
}
