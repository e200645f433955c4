//! 2-SAT by strongly connected components of the implication graph.

use std::fmt::Write as _;

/// A literal: variable index and polarity (`true` = positive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn negate(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    // node index in the implication graph
    fn node(self) -> usize {
        2 * self.var + (!self.positive) as usize
    }

    pub fn eval(self, values: &[bool]) -> bool {
        values[self.var] == self.positive
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatInstance {
    pub var_count: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

pub type Assignment = Vec<bool>;

impl TwoSatInstance {
    pub fn new(var_count: usize) -> Self {
        TwoSatInstance {
            var_count,
            clauses: Vec::new(),
        }
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.var_count && b.var < self.var_count);
        self.clauses.push((a, b));
    }

    /// Unit clause, stored as `(l ∨ l)`.
    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        values.len() == self.var_count
            && self
                .clauses
                .iter()
                .all(|&(a, b)| a.eval(values) || b.eval(values))
    }

    /// DIMACS CNF rendering, variables numbered from 1.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.var_count, self.clauses.len());
        for &(a, b) in &self.clauses {
            let f = |l: Lit| {
                let v = l.var as i64 + 1;
                if l.positive {
                    v
                } else {
                    -v
                }
            };
            let _ = writeln!(s, "{} {} 0", f(a), f(b));
        }
        s
    }
}

/// A satisfying assignment, or `None`. Deterministic for a fixed instance.
pub fn solve(inst: &TwoSatInstance) -> Option<Assignment> {
    let nodes = 2 * inst.var_count;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for &(a, b) in &inst.clauses {
        // (a ∨ b) ≡ (¬a → b) ∧ (¬b → a)
        adj[a.negate().node()].push(b.node());
        adj[b.negate().node()].push(a.node());
    }
    let comp = tarjan(&adj);
    let mut values = vec![false; inst.var_count];
    for (v, value) in values.iter_mut().enumerate() {
        let (p, n) = (comp[2 * v], comp[2 * v + 1]);
        if p == n {
            return None;
        }
        // Tarjan numbers components in reverse topological order; a literal
        // is true when its component comes later in topological order.
        *value = p < n;
    }
    debug_assert!(inst.satisfied_by(&values));
    Some(values)
}

/// Iterative Tarjan SCC. Returns the component index of every node.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, e)) = call.last() {
            if e < adj[v].len() {
                call.last_mut().unwrap().1 += 1;
                let w = adj[v][e];
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}
