//! Browser bindings. Every export takes text and returns a JSON string so
//! the page needs no glue beyond `JSON.parse`.

use nearbip::graph::{
    cycle_graph, emit_edgelist, find_induced_path, parse_edgelist, parse_graph6, path_graph,
    random_p5free_graph, random_p5free_graph_with, P5FreeFamily,
};
use nearbip::solve::{self, SolveOptions};
use nearbip::{Graph, Stats, Verdict};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Cap on generated sizes; the page draws every vertex.
pub const MAX_GENERATED: usize = 60;

#[derive(Serialize, Debug, PartialEq)]
pub struct Drawing {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Drawing {
    fn of(g: &Graph) -> Self {
        Drawing {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct Solved {
    pub graph: Drawing,
    pub verdict: Verdict,
    pub size: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub stats: Stats,
}

#[derive(Serialize, Debug)]
pub struct P5Check {
    pub graph: Drawing,
    pub p5free: bool,
    pub path: Option<Vec<usize>>,
}

#[derive(Serialize, Debug)]
pub struct Generated {
    pub graph: Drawing,
    pub text: String,
}

/// Edge list (`n m` header), or a single graph6 token.
pub fn read_graph(text: &str) -> Result<Graph, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let parsed = match lines[..] {
        [one] if one.split_whitespace().count() == 1 => parse_graph6(one),
        _ => parse_edgelist(text),
    };
    parsed.map_err(|e| e.to_string())
}

pub fn solve_text(text: &str, problem: &str) -> Result<Solved, String> {
    let g = read_graph(text)?;
    let opts = SolveOptions {
        parallel: false,
        ..SolveOptions::default()
    };
    let res = match problem {
        "nb" => solve::is_near_bipartite(&g, &opts),
        "ifvs" => solve::min_ifvs(&g, &opts),
        "max-ifvs" => solve::max_ifvs(&g, &opts),
        "ioct" => solve::min_ioct(&g, &opts),
        other => return Err(format!("unknown problem {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(Solved {
        graph: Drawing::of(&g),
        verdict: res.verdict,
        size: res.size,
        witness: res.witness.map(|w| w.as_slice().to_vec()),
        stats: res.stats,
    })
}

pub fn check_text(text: &str) -> Result<P5Check, String> {
    let g = read_graph(text)?;
    let path = find_induced_path(&g, 5);
    Ok(P5Check {
        graph: Drawing::of(&g),
        p5free: path.is_none(),
        path,
    })
}

pub fn generate_graph(family: &str, n: usize, seed: u64) -> Result<Generated, String> {
    if n > MAX_GENERATED {
        return Err(format!("at most {MAX_GENERATED} vertices"));
    }
    let g = match family {
        "path" => path_graph(n),
        "cycle" if n >= 3 => cycle_graph(n),
        "cycle" => return Err("cycles need at least 3 vertices".into()),
        "p5free" => random_p5free_graph(n, seed).map_err(|e| e.to_string())?,
        "cograph" => {
            random_p5free_graph_with(n, P5FreeFamily::Cograph, seed).map_err(|e| e.to_string())?
        }
        "split" => {
            random_p5free_graph_with(n, P5FreeFamily::Split, seed).map_err(|e| e.to_string())?
        }
        "blowup" => random_p5free_graph_with(n, P5FreeFamily::PrimeBlowup, seed)
            .map_err(|e| e.to_string())?,
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(Generated {
        graph: Drawing::of(&g),
        text: emit_edgelist(&g),
    })
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

#[wasm_bindgen]
pub fn solve(text: &str, problem: &str) -> String {
    to_json(solve_text(text, problem))
}

#[wasm_bindgen]
pub fn check_p5(text: &str) -> String {
    to_json(check_text(text))
}

#[wasm_bindgen]
pub fn generate(family: &str, n: usize, seed: u64) -> String {
    to_json(generate_graph(family, n, seed))
}
