//! Graph input formats.
//!
//! The edge-list format has the vertex count alone on the first line, then one
//! `u v` pair per line with 0-based endpoints. Blank lines and lines starting
//! with `#` are ignored. graph6 is the standard nauty/Sage encoding.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected vertex count, found `{header}`")))?;

    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(
                line,
                format!("expected `u v`, found `{content}`"),
            ));
        };
        let parse_vertex = |s: &str| -> Result<usize> {
            let v: usize = s
                .parse()
                .map_err(|_| parse_err(line, format!("`{s}` is not a vertex index")))?;
            if v >= n {
                return Err(parse_err(line, format!("vertex {v} out of range 0..{n}")));
            }
            Ok(v)
        };
        let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (line, content) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty graph6 input"))?;
    let content = content.strip_prefix(">>graph6<<").unwrap_or(content);
    let bytes = content.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(line, format!("invalid graph6 byte {bad:#x}")));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();

    let (n, body) = match data.as_slice() {
        [63, 63, rest @ ..] if rest.len() >= 6 => (sextets(&rest[..6]), &rest[6..]),
        [63, rest @ ..] if rest.len() >= 3 => (sextets(&rest[..3]), &rest[3..]),
        [63, ..] => return Err(parse_err(line, "truncated graph6 size field")),
        [first, rest @ ..] => (*first as usize, rest),
        [] => return Err(parse_err(line, "empty graph6 input")),
    };

    let bits_needed = n * n.saturating_sub(1) / 2;
    let expected = bits_needed.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            line,
            format!(
                "graph6 body has {} bytes, expected {expected} for n = {n}",
                body.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn sextets(chunk: &[u8]) -> usize {
    chunk.iter().fold(0, |acc, &b| (acc << 6) | b as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
