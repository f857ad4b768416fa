//! Text formats: graph files and path-decomposition files.
//!
//! ```text
//! # comment
//! bipartite 2 1
//! e a1 b1
//! e a2 b1
//! ```
//!
//! General graphs use the header `graph <n>` and vertex tokens `1..n`.

use hconvex_core::{BipartiteGraph, Graph, PathDecomposition};

use crate::error::{FormatError, ParseError};

/// Either kind of graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Bipartite(BipartiteGraph),
    General(Graph),
}

impl GraphFile {
    pub fn vertex_count(&self) -> usize {
        match self {
            GraphFile::Bipartite(g) => g.vertex_count(),
            GraphFile::General(g) => g.vertex_count(),
        }
    }

    /// The plain graph; `A` comes first, then `B`.
    pub fn graph(&self) -> Graph {
        match self {
            GraphFile::Bipartite(g) => g.to_graph(),
            GraphFile::General(g) => g.clone(),
        }
    }

    pub fn bipartite(&self) -> Option<&BipartiteGraph> {
        match self {
            GraphFile::Bipartite(g) => Some(g),
            GraphFile::General(_) => None,
        }
    }

    pub fn names(&self) -> Names {
        match self {
            GraphFile::Bipartite(g) => Names::Bipartite { a: g.a_size(), b: g.b_size() },
            GraphFile::General(g) => Names::General { n: g.vertex_count() },
        }
    }
}

/// Vertex tokens of a graph file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Names {
    Bipartite { a: usize, b: usize },
    General { n: usize },
}

impl Names {
    pub fn name(self, v: usize) -> String {
        match self {
            Names::Bipartite { a, .. } if v < a => format!("a{}", v + 1),
            Names::Bipartite { a, .. } => format!("b{}", v - a + 1),
            Names::General { .. } => format!("{}", v + 1),
        }
    }

    /// Index of a token (`A` before `B` for bipartite graphs).
    pub fn parse(self, token: &str) -> Result<usize, ParseError> {
        let bad = || ParseError::BadToken(token.to_string());
        let out = || ParseError::OutOfRange(token.to_string());
        let number = |digits: &str| -> Result<usize, ParseError> {
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse::<usize>().map_err(|_| out())
        };
        match self {
            Names::Bipartite { a, b } => {
                let (side, rest) = token.split_at(token.len().min(1));
                let i = number(rest)?;
                match side {
                    "a" if (1..=a).contains(&i) => Ok(i - 1),
                    "b" if (1..=b).contains(&i) => Ok(a + i - 1),
                    "a" | "b" => Err(out()),
                    _ => Err(bad()),
                }
            }
            Names::General { n } => match number(token)? {
                i if (1..=n).contains(&i) => Ok(i - 1),
                _ => Err(out()),
            },
        }
    }

    /// Index of an `A`-vertex token.
    pub fn parse_a(self, token: &str) -> Result<usize, ParseError> {
        let v = self.parse(token)?;
        match self {
            Names::Bipartite { a, .. } if v >= a => Err(ParseError::OutOfRange(token.to_string())),
            _ => Ok(v),
        }
    }
}

// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

pub fn parse_graph(text: &str) -> Result<GraphFile, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError { line: 1, kind: ParseError::MissingHeader })?;
    let malformed = || FormatError { line, kind: ParseError::MalformedHeader(header.join(" ")) };
    let size = |s: &str| s.parse::<usize>().map_err(|_| malformed());
    let mut file = match header.as_slice() {
        ["bipartite", a, b] => GraphFile::Bipartite(BipartiteGraph::new(size(a)?, size(b)?)),
        ["graph", n] => GraphFile::General(Graph::new(size(n)?)),
        _ => return Err(malformed()),
    };
    let names = file.names();
    for (line, tokens) in lines {
        let err = |kind| FormatError { line, kind };
        let (u, v) = match tokens.as_slice() {
            ["e", u, v] => (*u, *v),
            ["e", ..] => return Err(err(ParseError::MalformedEdge)),
            [other, ..] => return Err(err(ParseError::UnknownDirective(other.to_string()))),
            [] => unreachable!("blank lines are skipped"),
        };
        let (x, y) = (names.parse(u).map_err(err)?, names.parse(v).map_err(err)?);
        match &mut file {
            GraphFile::Bipartite(g) => {
                let a = g.a_size();
                let (p, q) = match (x < a, y < a) {
                    (true, false) => (x, y - a),
                    (false, true) => (y, x - a),
                    _ => return Err(err(ParseError::NonCrossingEdge(u.into(), v.into()))),
                };
                if g.has_edge(p, q) {
                    return Err(err(ParseError::DuplicateEdge(u.into(), v.into())));
                }
                g.add_edge(p, q).expect("checked above");
            }
            GraphFile::General(g) => {
                if x == y {
                    return Err(err(ParseError::Loop(u.into())));
                }
                if g.has_edge(x, y) {
                    return Err(err(ParseError::DuplicateEdge(u.into(), v.into())));
                }
                g.add_edge(x, y).expect("checked above");
            }
        }
    }
    Ok(file)
}

/// Canonical text: header, then edges in increasing order.
pub fn serialize_graph(file: &GraphFile) -> String {
    let names = file.names();
    let mut out = String::new();
    match file {
        GraphFile::Bipartite(g) => {
            out.push_str(&format!("bipartite {} {}\n", g.a_size(), g.b_size()));
            let mut edges = g.edges();
            edges.sort_unstable();
            for (a, b) in edges {
                out.push_str(&format!("e {} {}\n", names.name(a), names.name(g.b_vertex(b))));
            }
        }
        GraphFile::General(g) => {
            out.push_str(&format!("graph {}\n", g.vertex_count()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", names.name(u), names.name(v)));
            }
        }
    }
    out
}

/// Lines `bag v1 v2 ...` in sequence order.
pub fn parse_pathdecomp(text: &str, names: Names) -> Result<PathDecomposition, FormatError> {
    let mut bags = Vec::new();
    for (line, tokens) in content_lines(text) {
        let err = |kind| FormatError { line, kind };
        if tokens[0] != "bag" {
            return Err(err(ParseError::UnknownDirective(tokens[0].to_string())));
        }
        let mut bag = Vec::with_capacity(tokens.len() - 1);
        for token in &tokens[1..] {
            let v = names.parse(token).map_err(err)?;
            if bag.contains(&v) {
                return Err(err(ParseError::RepeatedInBag(token.to_string())));
            }
            bag.push(v);
        }
        bag.sort_unstable();
        bags.push(bag);
    }
    Ok(PathDecomposition::new(bags))
}

pub fn serialize_pathdecomp(p: &PathDecomposition, names: Names) -> String {
    p.bags
        .iter()
        .map(|bag| {
            let mut line = String::from("bag");
            for &v in bag {
                line.push(' ');
                line.push_str(&names.name(v));
            }
            line.push('\n');
            line
        })
        .collect()
}
