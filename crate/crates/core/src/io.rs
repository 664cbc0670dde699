//! Text and JSON formats.
//!
//! * Edge lists: `p <n> <m>` followed by `m` lines `e <u> <v>` with 0-based
//!   ids. Blank lines and lines starting with `c` or `#` are ignored.
//! * Co-bipartite JSON: `{"X": [...], "Y": [...], "edges": [[u, v], ...]}`;
//!   the order of `Y` is the labeling. Clique edges may be omitted.
//! * Words: whitespace-separated letter names, one word per line, mapped to
//!   dense ids by a [`SymbolTable`].
//! * Orientations: one `u -> v` line per arc.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CoBipartite, SimpleGraph};
use crate::orient::Orientation;
use crate::word::{Letter, Word};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line.starts_with("c ") || line == "c"
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} {tok:?} is not a non-negative integer"),
        )
    })
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut graph: Option<(SimpleGraph, usize)> = None;
    let mut seen = 0usize;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line_no, "second problem line"));
                }
                let n = parse_num(toks.next(), line_no, "vertex count")?;
                let m = parse_num(toks.next(), line_no, "edge count")?;
                graph = Some((SimpleGraph::new(n), m));
            }
            Some("e") => {
                let (g, _) = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, "edge before the `p` line"))?;
                let u = parse_num(toks.next(), line_no, "endpoint")?;
                let v = parse_num(toks.next(), line_no, "endpoint")?;
                g.try_add_edge(u, v)
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
                seen += 1;
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
        if toks.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens"));
        }
    }
    let (g, m) = graph.ok_or_else(|| parse_err(last_line.max(1), "missing `p <n> <m>` line"))?;
    if seen != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header announces {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct CoBipartiteJson {
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    edges: Vec<[usize; 2]>,
}

pub fn parse_cobipartite_json(text: &str) -> Result<CoBipartite> {
    let j: CoBipartiteJson =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let n = j.x.len() + j.y.len();
    let mut g = SimpleGraph::new(n);
    for side in [&j.x, &j.y] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                g.try_add_edge(u, v)?;
            }
        }
    }
    for [u, v] in j.edges {
        g.try_add_edge(u, v)?;
    }
    CoBipartite::new(g, j.x, j.y)
}

pub fn write_cobipartite_json(cb: &CoBipartite) -> String {
    let j = CoBipartiteJson {
        x: cb.x().to_vec(),
        y: cb.y().to_vec(),
        edges: cb
            .graph()
            .edges()
            .into_iter()
            .map(|(u, v)| [u, v])
            .collect(),
    };
    serde_json::to_string(&j).expect("plain data serialises")
}

/// Graph input in either format, told apart by a leading `{`.
#[derive(Debug, Clone)]
pub enum GraphInput {
    EdgeList(SimpleGraph),
    CoBipartite(CoBipartite),
}

impl GraphInput {
    pub fn graph(&self) -> &SimpleGraph {
        match self {
            GraphInput::EdgeList(g) => g,
            GraphInput::CoBipartite(cb) => cb.graph(),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    if text.trim_start().starts_with('{') {
        parse_cobipartite_json(text).map(GraphInput::CoBipartite)
    } else {
        parse_edge_list(text).map(GraphInput::EdgeList)
    }
}

/// Stable map between letter names and dense ids.
///
/// Ids follow the sorted order of the names: numerically when every name is
/// an integer, lexicographically otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    ids: BTreeMap<String, u32>,
}

impl SymbolTable {
    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        let mut names: Vec<String> = names.into_iter().map(str::to_string).collect();
        names.sort();
        names.dedup();
        if names.iter().all(|n| n.parse::<u64>().is_ok()) {
            names.sort_by_key(|n| n.parse::<u64>().unwrap());
        }
        let ids = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        SymbolTable { names, ids }
    }

    /// Names `0..n`.
    pub fn identity(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::from_names(names.iter().map(String::as_str))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<Letter> {
        self.ids.get(name).map(|&i| Letter(i))
    }

    pub fn name(&self, l: Letter) -> Option<&str> {
        self.names.get(l.index()).map(String::as_str)
    }

    pub fn format(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&l| {
                self.name(l)
                    .map(str::to_string)
                    .unwrap_or_else(|| l.to_string())
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses one word. A single token without whitespace is read one character
/// per letter, so `123` and `1 2 3` are the same word.
pub fn parse_word(text: &str) -> Result<(Word, SymbolTable)> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() > 1 {
        return Err(parse_err(2, "expected a single word"));
    }
    let line = lines.first().copied().unwrap_or("").trim();
    let tokens: Vec<String> = if line.split_whitespace().count() == 1 {
        line.chars().map(String::from).collect()
    } else {
        line.split_whitespace().map(str::to_string).collect()
    };
    let table = SymbolTable::from_names(tokens.iter().map(String::as_str));
    let letters = tokens.iter().map(|t| table.id(t).unwrap()).collect();
    let w = Word::new(letters, (0..table.len() as u32).map(Letter))?;
    Ok((w, table))
}

pub fn parse_orientation(base: SimpleGraph, text: &str) -> Result<Orientation> {
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let (u, v) = line
            .split_once("->")
            .ok_or_else(|| parse_err(i + 1, "expected `u -> v`"))?;
        let u = parse_num(Some(u.trim()), i + 1, "tail")?;
        let v = parse_num(Some(v.trim()), i + 1, "head")?;
        arcs.push((u, v));
    }
    Orientation::from_arcs(base, &arcs)
}
