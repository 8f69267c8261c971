//! Graph file formats: graph6, DIMACS `.col`, and plain edge lists.
//!
//! graph6 is the canonical interchange format (header byte `63 + n` for
//! `n <= 62`, upper-triangle bits packed 6 per byte at offset 63, see
//! <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>). DIMACS `.col` is
//! accepted for coloring-community corpora. Parsers relabel nothing: all
//! formats here use dense integer vertices already.

use crate::graph::{Graph, Vertex};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Graph6,
    DimacsCol,
    EdgeList,
}

impl Format {
    pub fn from_name(name: &str) -> Option<Format> {
        match name {
            "graph6" | "g6" => Some(Format::Graph6),
            "dimacs-col" | "dimacs" | "col" => Some(Format::DimacsCol),
            "edge-list" | "edgelist" | "edges" => Some(Format::EdgeList),
            _ => None,
        }
    }

    /// Guesses from a file extension, defaulting to the edge list format.
    pub fn from_extension(path: &str) -> Format {
        match path.rsplit('.').next() {
            Some("g6") | Some("graph6") => Format::Graph6,
            Some("col") | Some("dimacs") => Format::DimacsCol,
            _ => Format::EdgeList,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Format::Graph6 => "graph6",
            Format::DimacsCol => "dimacs-col",
            Format::EdgeList => "edge-list",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::DimacsCol => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => emit_graph6(g),
        Format::DimacsCol => emit_dimacs(g),
        Format::EdgeList => emit_edge_list(g),
    }
}

// -- graph6 -------------------------------------------------------------

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.lines().next().unwrap_or("").trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(1, "empty graph6 input"));
    }
    if bytes[0] == 126 {
        return Err(err(1, "graph6 inputs with n > 62 are not supported"));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(err(1, format!("bad graph6 header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() != 1 + bytes_needed {
        return Err(err(
            1,
            format!("graph6 body has {} bytes, expected {}", bytes.len() - 1, bytes_needed),
        ));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n as Vertex {
        for i in 0..j {
            let byte = bytes[1 + pos / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(1, format!("bad graph6 body byte {byte}")));
            }
            let bit = (byte - 63) >> (5 - pos % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| err(1, e.to_string()))
}

pub fn emit_graph6(g: &Graph) -> String {
    assert!(g.n() <= 62, "graph6 emit supports n <= 62");
    let n = g.n();
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    String::from_utf8(out).unwrap()
}

// -- DIMACS .col ----------------------------------------------------------

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                let kind = parts.next().ok_or_else(|| err(lineno, "missing problem kind"))?;
                if kind != "edge" && kind != "edges" {
                    return Err(err(lineno, format!("unsupported problem kind '{kind}'")));
                }
                let n: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(lineno, "bad vertex count"))?;
                let m: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err(lineno, "edge before problem line"))?;
                let u: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(lineno, "bad edge endpoint"))?;
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(lineno, "bad edge endpoint"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(lineno, format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(lineno, "loop edges are not allowed"));
                }
                edges.push((u as Vertex - 1, v as Vertex - 1));
            }
            Some(other) => return Err(err(lineno, format!("unknown line type '{other}'"))),
            None => {}
        }
    }
    let (n, _) = header.ok_or_else(|| err(1, "missing problem line"))?;
    Graph::from_edges_dedup(n, &edges).map_err(|e| err(1, e.to_string()))
}

fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(a, b) in g.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

// -- plain edge list -------------------------------------------------------

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max_v: Option<Vertex> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        let u: Vertex = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err(lineno, "expected two vertex ids"))?;
        let v: Vertex = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err(lineno, "expected two vertex ids"))?;
        if parts.next().is_some() {
            return Err(err(lineno, "trailing tokens after edge"));
        }
        if u == v {
            return Err(err(lineno, "loop edges are not allowed"));
        }
        max_v = Some(max_v.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_v.map_or(0, |m| m as usize + 1);
    Graph::from_edges_dedup(n, &edges).map_err(|e| err(1, e.to_string()))
}

fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
