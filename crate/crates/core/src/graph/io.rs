use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
///
/// Blank lines and lines starting with `#` are ignored. Duplicate edges
/// collapse to one.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut g = Graph::new(n);
    let mut seen = 0usize;
    let mut last = hline;
    for (ln, line) in lines {
        last = ln;
        let (u, v) = parse_pair(ln, line)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: ln,
                message: format!("index out of range: {u} {v} with n={n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: ln,
                message: format!("self-loop at {u}"),
            });
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: last,
            message: format!("expected {m} edge lines, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let bad = |what: &str| Error::Parse {
        line,
        message: format!("{what}: `{s}`"),
    };
    let a = it
        .next()
        .ok_or_else(|| bad("expected two integers"))?
        .parse::<usize>()
        .map_err(|_| bad("not a non-negative integer"))?;
    let b = it
        .next()
        .ok_or_else(|| bad("expected two integers"))?
        .parse::<usize>()
        .map_err(|_| bad("not a non-negative integer"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    Ok((a, b))
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |message: String| Error::Parse { line: 1, message };
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(format!(
            "invalid graph6 character {:?} at offset {pos}",
            bytes[pos] as char
        )));
    }
    if bytes.is_empty() {
        return Err(err("empty graph6 string".into()));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err("truncated vertex count".into()));
        }
        (decode_bits(&bytes[1..4]), 4)
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated vertex count".into()));
        }
        (decode_bits(&bytes[2..8]), 8)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(err(format!(
            "truncated bit stream: need {nbytes} bytes, have {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > nbytes {
        return Err(err("trailing data after bit stream".into()));
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    pos += nbytes;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn decode_bits(chunk: &[u8]) -> usize {
    chunk
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
