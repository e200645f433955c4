//! Hardness constructions as instance generators: a line-graph gadget for
//! Hamilton cycles through an edge, a list-colouring gadget for CNF
//! satisfiability, and repeated subdivision.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{line_graph, subdivide_all, Graph};
use crate::lists::{ColourSet, ListAssignment};
use crate::twosat::Lit;

/// A CNF formula over variables `0..var_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub var_count: usize,
    pub clauses: Vec<Vec<Lit>>,
}

/// Result of [`CnfFormula::normalized`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub formula: CnfFormula,
    /// Original index of each remaining variable.
    pub original: Vec<usize>,
    /// Values forced during simplification, indexed by original variable.
    pub forced: Vec<Option<bool>>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        for c in &clauses {
            if let Some(l) = c.iter().find(|l| l.var >= var_count) {
                return Err(Error::Malformed(format!(
                    "literal on variable {} but only {var_count} variables",
                    l.var
                )));
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    /// Builds a formula from DIMACS-style signed integers (variable `i`
    /// is written `i + 1`).
    pub fn from_signed(clauses: &[&[i32]]) -> Result<Self> {
        let var_count = clauses
            .iter()
            .flat_map(|c| c.iter())
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for c in clauses {
            let mut clause = Vec::new();
            for &l in c.iter() {
                if l == 0 {
                    return Err(Error::Malformed("literal 0".into()));
                }
                let var = l.unsigned_abs() as usize - 1;
                clause.push(if l > 0 { Lit::pos(var) } else { Lit::neg(var) });
            }
            out.push(clause);
        }
        CnfFormula::new(var_count, out)
    }

    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(values)))
    }

    /// Whether every clause has at least two distinct literals, no clause
    /// holds both polarities of a variable, and every variable occurs both
    /// positively and negatively.
    pub fn is_normalized(&self) -> bool {
        self.normal_form_violation().is_none()
    }

    fn normal_form_violation(&self) -> Option<String> {
        let mut seen = vec![[false; 2]; self.var_count];
        for (j, c) in self.clauses.iter().enumerate() {
            if c.len() < 2 {
                return Some(format!("clause {j} has fewer than two literals"));
            }
            for (i, l) in c.iter().enumerate() {
                if c[..i].iter().any(|m| m.var == l.var) {
                    return Some(format!("clause {j} mentions variable {} twice", l.var));
                }
                seen[l.var][l.positive as usize] = true;
            }
        }
        (0..self.var_count)
            .find(|&x| seen[x] != [true, true])
            .map(|x| format!("variable {x} lacks a positive or a negative occurrence"))
    }

    /// Equisatisfiable normal form: duplicate literals and tautologies are
    /// dropped, unit clauses and pure literals are propagated, and the
    /// remaining variables are renumbered in order. Fails only when
    /// propagation derives an empty clause.
    pub fn normalized(&self) -> Result<Normalized> {
        let mut forced: Vec<Option<bool>> = vec![None; self.var_count];
        let mut clauses: Vec<Vec<Lit>> = Vec::new();
        for c in &self.clauses {
            let mut d: Vec<Lit> = Vec::new();
            for &l in c {
                if !d.contains(&l) {
                    d.push(l);
                }
            }
            if !d.iter().any(|l| d.contains(&l.negate())) {
                clauses.push(d);
            }
        }
        loop {
            if clauses.iter().any(|c| c.is_empty()) {
                return Err(Error::Normalize(
                    "unit propagation derives an empty clause".into(),
                ));
            }
            let unit = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]);
            let pure = || {
                let mut seen = vec![[false; 2]; self.var_count];
                for l in clauses.iter().flatten() {
                    seen[l.var][l.positive as usize] = true;
                }
                (0..self.var_count).find_map(|x| match seen[x] {
                    [false, true] => Some(Lit::pos(x)),
                    [true, false] => Some(Lit::neg(x)),
                    _ => None,
                })
            };
            let Some(l) = unit.or_else(pure) else { break };
            forced[l.var] = Some(l.positive);
            clauses.retain(|c| !c.contains(&l));
            for c in &mut clauses {
                c.retain(|&m| m != l.negate());
            }
        }
        let mut original: Vec<usize> = clauses.iter().flatten().map(|l| l.var).collect();
        original.sort_unstable();
        original.dedup();
        let index: BTreeMap<usize, usize> =
            original.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let clauses = clauses
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|l| Lit {
                        var: index[&l.var],
                        positive: l.positive,
                    })
                    .collect()
            })
            .collect();
        Ok(Normalized {
            formula: CnfFormula {
                var_count: original.len(),
                clauses,
            },
            original,
            forced,
        })
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut declared: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 || f[0] != "cnf" {
                    return Err(err("expected `p cnf VARS CLAUSES`".into()));
                }
                let v = f[1]
                    .parse()
                    .map_err(|_| err(format!("bad count {:?}", f[1])))?;
                let c = f[2]
                    .parse()
                    .map_err(|_| err(format!("bad count {:?}", f[2])))?;
                declared = Some((v, c));
                continue;
            }
            let Some((vars, _)) = declared else {
                return Err(err("clause before the `p cnf` header".into()));
            };
            for tok in line.split_whitespace() {
                let l: i64 = tok
                    .parse()
                    .map_err(|_| err(format!("bad literal {tok:?}")))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = l.unsigned_abs() as usize - 1;
                if var >= vars {
                    return Err(err(format!("literal {l} exceeds {vars} variables")));
                }
                current.push(if l > 0 { Lit::pos(var) } else { Lit::neg(var) });
            }
        }
        let Some((vars, count)) = declared else {
            return Err(Error::Parse {
                line: 0,
                message: "missing `p cnf` header".into(),
            });
        };
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(Error::Parse {
                line: 0,
                message: format!("header promises {count} clauses, found {}", clauses.len()),
            });
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.var_count, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let v = l.var as i64 + 1;
                let _ = write!(s, "{} ", if l.positive { v } else { -v });
            }
            s.push_str("0\n");
        }
        s
    }
}

/// What a gadget vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Occurrence of `lit` in `clause`; `representative` marks the chosen
    /// vertex of its variable.
    Literal {
        clause: usize,
        lit: Lit,
        representative: bool,
    },
    /// A `{2}` vertex on a clause cycle.
    Separator { clause: usize },
    /// Joins a repeated positive occurrence to its representative.
    Middle { var: usize },
    /// Line-graph vertex for the edge `uv` of the modified graph.
    Edge { u: usize, v: usize },
    /// Line-graph vertex for a new pendant edge `u end`.
    Pendant { u: usize, end: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub lists: Option<ListAssignment>,
    /// One role per vertex.
    pub roles: Vec<Role>,
}

impl GadgetOutput {
    /// Representative vertex of a variable.
    pub fn representative(&self, var: usize) -> Option<usize> {
        self.roles.iter().position(
            |r| matches!(r, Role::Literal { lit, representative: true, .. } if lit.var == var),
        )
    }

    /// Vertices of a clause cycle in cyclic order.
    pub fn clause_cycle(&self, clause: usize) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| match r {
                Role::Literal { clause: c, .. } | Role::Separator { clause: c } => *c == clause,
                _ => false,
            })
            .map(|(v, _)| v)
            .collect()
    }

    /// The two pendant line-graph vertices, first the one at `u1`.
    pub fn pendants(&self) -> Option<(usize, usize)> {
        let mut p: Vec<(usize, usize)> = self
            .roles
            .iter()
            .enumerate()
            .filter_map(|(v, r)| match r {
                Role::Pendant { end, .. } => Some((*end, v)),
                _ => None,
            })
            .collect();
        p.sort_unstable();
        match p[..] {
            [(_, a), (_, b)] => Some((a, b)),
            _ => None,
        }
    }

    /// Comment lines describing every vertex role.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (v, r) in self.roles.iter().enumerate() {
            let _ = match r {
                Role::Literal {
                    clause,
                    lit,
                    representative,
                } => writeln!(
                    s,
                    "# {v}: clause {clause} literal {}x{}{}",
                    if lit.positive { "" } else { "~" },
                    lit.var + 1,
                    if *representative {
                        " (representative)"
                    } else {
                        ""
                    }
                ),
                Role::Separator { clause } => writeln!(s, "# {v}: clause {clause} separator"),
                Role::Middle { var } => writeln!(s, "# {v}: middle for x{}", var + 1),
                Role::Edge { u, v: w } => writeln!(s, "# {v}: edge {u}-{w}"),
                Role::Pendant { u, end } => writeln!(s, "# {v}: pendant edge {u}-{end}"),
            };
        }
        s
    }
}

/// Removes the edge `u1 u2`, hangs new leaves `n` on `u1` and `n + 1` on
/// `u2`, and returns the line graph of the result. For a cubic input this
/// is near-bipartite exactly when the input has a Hamilton cycle through
/// `u1 u2`.
pub fn hamilton_gadget(g: &Graph, u1: usize, u2: usize) -> Result<GadgetOutput> {
    if u1 >= g.n() || u2 >= g.n() || !g.has_edge(u1, u2) {
        return Err(Error::NotAnEdge { u: u1, v: u2 });
    }
    let n = g.n();
    let mut h = g.clone();
    h.remove_edge(u1, u2);
    let v1 = h.add_vertex();
    let v2 = h.add_vertex();
    h.add_edge(u1, v1);
    h.add_edge(u2, v2);
    let (graph, edges) = line_graph(&h);
    let roles = edges
        .into_iter()
        .map(|(a, b)| {
            if b >= n {
                Role::Pendant { u: a, end: b }
            } else {
                Role::Edge { u: a, v: b }
            }
        })
        .collect();
    Ok(GadgetOutput {
        graph,
        lists: None,
        roles,
    })
}

/// List instance that admits a semi-acyclic colouring exactly when the
/// formula is satisfiable. Each clause becomes an even cycle alternating
/// literal vertices (`{1,3}`) and separators (`{2}`); colour 1 means true.
/// The representative of `x` is its first positive occurrence; other
/// positive occurrences reach it through a middle vertex and negative
/// occurrences are adjacent to it.
pub fn sat_to_lsac(phi: &CnfFormula) -> Result<GadgetOutput> {
    if let Some(why) = phi.normal_form_violation() {
        return Err(Error::Normalize(why));
    }
    let mut roles = Vec::new();
    let mut graph = Graph::new(0);
    let mut rep: Vec<Option<usize>> = vec![None; phi.var_count];
    let mut occurrences: Vec<(usize, Lit)> = Vec::new();
    for (j, clause) in phi.clauses.iter().enumerate() {
        let first = graph.n();
        for &lit in clause {
            let v = graph.add_vertex();
            let representative = lit.positive && rep[lit.var].is_none();
            if representative {
                rep[lit.var] = Some(v);
            }
            roles.push(Role::Literal {
                clause: j,
                lit,
                representative,
            });
            occurrences.push((v, lit));
            graph.add_vertex();
            roles.push(Role::Separator { clause: j });
        }
        let len = 2 * clause.len();
        for i in 0..len {
            graph.add_edge(first + i, first + (i + 1) % len);
        }
    }
    for (v, lit) in occurrences {
        let r = rep[lit.var].expect("normalized formulas have positive occurrences");
        if v == r {
            continue;
        }
        if lit.positive {
            let m = graph.add_vertex();
            roles.push(Role::Middle { var: lit.var });
            graph.add_edge(v, m);
            graph.add_edge(m, r);
        } else {
            graph.add_edge(v, r);
        }
    }
    let lists = roles
        .iter()
        .map(|r| match r {
            Role::Separator { .. } => ColourSet::single(2),
            _ => ColourSet::from_colours(&[1, 3]),
        })
        .collect();
    Ok(GadgetOutput {
        graph,
        lists: Some(ListAssignment(lists)),
        roles,
    })
}

/// Subdivides every edge `rounds` times over; each round doubles the girth.
pub fn subdivision_chain(g: &Graph, rounds: usize) -> Graph {
    (0..rounds).fold(g.clone(), |h, _| subdivide_all(&h))
}
