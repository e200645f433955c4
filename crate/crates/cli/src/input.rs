use std::fs;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use nearbip::graph::{
    complete_graph, cube, cycle_graph, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6,
    path_graph, petersen, star_graph,
};
use nearbip::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

/// Where a graph comes from.
#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file, `-` for stdin.
    #[arg(value_name = "INPUT", conflicts_with = "graph")]
    pub path: Option<PathBuf>,
    /// Inline graph: a graph6 string, or an edge list with `;` between lines.
    #[arg(long, value_name = "TEXT")]
    pub graph: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl GraphInput {
    pub fn read(&self) -> Result<Graph> {
        let (text, origin) = match (&self.graph, &self.path) {
            (Some(inline), _) => (inline.replace(';', "\n"), "inline graph".to_string()),
            (None, Some(p)) if p.as_os_str() == "-" => (read_stdin()?, "stdin".to_string()),
            (None, Some(p)) => (
                fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
                p.display().to_string(),
            ),
            (None, None) => (read_stdin()?, "stdin".to_string()),
        };
        parse_graph(&text, self.format).with_context(|| format!("parsing {origin}"))
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

/// Edge list unless told otherwise or the text is a single token.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    let content: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let format = format.unwrap_or(
        if content.len() == 1 && content[0].split_whitespace().count() == 1 {
            Format::Graph6
        } else {
            Format::Edgelist
        },
    );
    Ok(match format {
        Format::Edgelist => parse_edgelist(text)?,
        Format::Graph6 => {
            let [line] = content[..] else {
                bail!("graph6 input must be a single line");
            };
            parse_graph6(line)?
        }
    })
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => emit_edgelist(g),
        Format::Graph6 => emit_graph6(g) + "\n",
    }
}

/// `cube`, `petersen`, `kN`, `cN`, `pN`, `starN`, or a graph file.
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    let num = |prefix: &str| {
        lower
            .strip_prefix(prefix)
            .and_then(|r| r.parse::<usize>().ok())
    };
    Ok(match lower.as_str() {
        "cube" | "q3" => cube(),
        "petersen" => petersen(),
        _ => {
            if let Some(k) = num("star") {
                star_graph(k)
            } else if let Some(k) = num("k") {
                complete_graph(k)
            } else if let Some(k) = num("c") {
                if k < 3 {
                    bail!("cycles need at least 3 vertices");
                }
                cycle_graph(k)
            } else if let Some(k) = num("p") {
                path_graph(k)
            } else {
                let text = fs::read_to_string(name).with_context(|| {
                    format!("{name} is neither a known graph nor a readable file")
                })?;
                parse_graph(&text, None)?
            }
        }
    })
}
