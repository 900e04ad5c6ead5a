//! Plain-text graph and ordering files.
//!
//! Split graphs:
//!
//! ```text
//! # comment
//! p split <k_size> <s_size>
//! s <idx> <c1> <c2> ...
//! ```
//!
//! General graphs use `p edge <n> <m>` followed by `e <u> <v>` lines. An
//! ordering file holds one whitespace-separated permutation. Every index in
//! these files is 1-based.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::{CliqueOrdering, Side};
use crate::sparse::SparseSplitGraph;

/// Contents of a graph file.
#[derive(Debug, Clone)]
pub enum GraphFile {
    Split(SparseSplitGraph),
    Edge(Graph),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

fn one_based(x: usize, bound: usize, line: usize, what: &str) -> Result<usize> {
    if x == 0 || x > bound {
        return Err(parse_err(line, format!("{what} {x} outside 1..={bound}")));
    }
    Ok(x - 1)
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let (line, header) = content_lines(text).next().ok_or_else(|| parse_err(1, "missing header"))?;
    match header.split_whitespace().nth(1) {
        Some("split") => parse_split(text).map(GraphFile::Split),
        Some("edge") => parse_edge(text).map(GraphFile::Edge),
        _ => Err(parse_err(line, format!("unknown header {header:?}"))),
    }
}

pub fn parse_split(text: &str) -> Result<SparseSplitGraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("split") {
        return Err(parse_err(line, "expected `p split <k_size> <s_size>`"));
    }
    let k_size = number(toks.next(), line, "clique size")?;
    let s_size = number(toks.next(), line, "stable size")?;
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; s_size];
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        if toks.next() != Some("s") {
            return Err(parse_err(line, "expected `s <idx> <c1> ...`"));
        }
        let idx = one_based(number(toks.next(), line, "stable index")?, s_size, line, "stable index")?;
        let mut list = Vec::new();
        for tok in toks {
            list.push(one_based(number(Some(tok), line, "clique index")?, k_size, line, "clique index")?);
        }
        list.sort_unstable();
        if lists[idx].replace(list).is_some() {
            return Err(parse_err(line, format!("stable vertex {} listed twice", idx + 1)));
        }
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| parse_err(0, format!("stable vertex {} has no record", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    SparseSplitGraph::new(k_size, lists)
}

pub fn write_split(sg: &SparseSplitGraph) -> String {
    let mut out = format!("p split {} {}\n", sg.k_size(), sg.s_size());
    for (v, list) in sg.stable_lists().iter().enumerate() {
        out.push_str(&format!("s {}", v + 1));
        for &u in list {
            out.push_str(&format!(" {}", u + 1));
        }
        out.push('\n');
    }
    out
}

pub fn parse_edge(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("edge") {
        return Err(parse_err(line, "expected `p edge <n> <m>`"));
    }
    let n = number(toks.next(), line, "vertex count")?;
    let m = number(toks.next(), line, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(line, "expected `e <u> <v>`"));
        }
        let u = one_based(number(toks.next(), line, "vertex")?, n, line, "vertex")?;
        let v = one_based(number(toks.next(), line, "vertex")?, n, line, "vertex")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_ordering(text: &str, side: Side) -> Result<CliqueOrdering> {
    let mut order = Vec::new();
    for (line, text) in content_lines(text) {
        for tok in text.split_whitespace() {
            let x = number(Some(tok), line, "position")?;
            if x == 0 {
                return Err(parse_err(line, "vertex ids are 1-based"));
            }
            order.push(x - 1);
        }
    }
    CliqueOrdering::new(side, order)
}

pub fn write_ordering(tau: &CliqueOrdering) -> String {
    let ids: Vec<String> = tau.order().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", ids.join(" "))
}
