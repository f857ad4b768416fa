//! JSON forms of witnesses, decompositions, cut reports and representations.
//! Vertices are written with their graph-file tokens.

use std::collections::BTreeMap;

use hconvex_core::decomp::InducedMatching;
use hconvex_core::{BranchDecomposition, CutReport, Graph, SupportKind, SupportWitness, ThinRepresentation};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::format::Names;

fn token(names: Names, t: &str, parse: impl Fn(Names, &str) -> Result<usize, crate::error::ParseError>) -> Result<usize> {
    parse(names, t).map_err(|e| CliError::Invalid(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    pub host_edges: Vec<[String; 2]>,
    /// Vertices of degree at least three.
    pub t: usize,
    /// Maximum degree.
    pub delta: usize,
}

impl WitnessJson {
    pub fn new(w: &SupportWitness, names: Names) -> Self {
        WitnessJson {
            kind: w.kind().name().to_string(),
            host_edges: w.host_edges().iter().map(|&(u, v)| [names.name(u), names.name(v)]).collect(),
            t: w.t(),
            delta: w.max_degree(),
        }
    }

    /// The witness as written, without checking its claims.
    pub fn host(&self, names: Names, a_size: usize) -> Result<SupportWitness> {
        let kind = SupportKind::from_name(&self.kind)
            .ok_or_else(|| CliError::Invalid(format!("unknown witness kind `{}`", self.kind)))?;
        let edges = self
            .host_edges
            .iter()
            .map(|[u, v]| Ok((token(names, u, Names::parse_a)?, token(names, v, Names::parse_a)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SupportWitness::new(kind, a_size, &edges)?)
    }

    /// Rebuild on the `A` side of `names`; `t`, `delta` and the kind's shape
    /// must agree with the edges.
    pub fn to_witness(&self, names: Names, a_size: usize) -> Result<SupportWitness> {
        let w = self.host(names, a_size)?;
        if !w.is_well_shaped() {
            return Err(CliError::Invalid(format!("host edges do not form a {}", self.kind)));
        }
        if (w.t(), w.max_degree()) != (self.t, self.delta) {
            return Err(CliError::Invalid(format!(
                "witness claims t={} delta={} but its host has t={} delta={}",
                self.t,
                self.delta,
                w.t(),
                w.max_degree()
            )));
        }
        Ok(w)
    }
}

/// Names of decomposition tree nodes: leaves `t1, t2, ...` and inner nodes
/// `s1, s2, ...`, each numbered in node order.
pub struct NodeNames(Vec<String>);

impl NodeNames {
    pub fn new(d: &BranchDecomposition) -> Self {
        let (mut s, mut t) = (0, 0);
        NodeNames(
            (0..d.tree().vertex_count())
                .map(|x| {
                    if d.leaf_vertex(x).is_some() {
                        t += 1;
                        format!("t{t}")
                    } else {
                        s += 1;
                        format!("s{s}")
                    }
                })
                .collect(),
        )
    }

    pub fn name(&self, node: usize) -> &str {
        &self.0[node]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub linear: bool,
    pub spine: Vec<String>,
    /// Leaf node to graph vertex.
    pub leaves: BTreeMap<String, String>,
    pub tree_edges: Vec<[String; 2]>,
}

impl DecompositionJson {
    pub fn new(d: &BranchDecomposition, names: Names) -> Self {
        let nodes = NodeNames::new(d);
        DecompositionJson {
            linear: d.is_linear(),
            spine: d.spine().iter().map(|&s| nodes.name(s).to_string()).collect(),
            leaves: d
                .leaves()
                .into_iter()
                .map(|(x, v)| (nodes.name(x).to_string(), names.name(v)))
                .collect(),
            tree_edges: d
                .tree()
                .edges()
                .map(|(x, y)| [nodes.name(x).to_string(), nodes.name(y).to_string()])
                .collect(),
        }
    }

    /// Inner nodes `s1..sM` become tree nodes `0..M`, leaves `t1..tL` follow.
    pub fn to_decomposition(&self, names: Names, vertex_count: usize) -> Result<BranchDecomposition> {
        let parse = |name: &str| -> Result<(bool, usize)> {
            let bad = || CliError::Invalid(format!("bad tree node `{name}`"));
            let (kind, digits) = name.split_at(name.len().min(1));
            let k: usize = digits.parse().map_err(|_| bad())?;
            match kind {
                "s" | "t" if k >= 1 => Ok((kind == "t", k - 1)),
                _ => Err(bad()),
            }
        };
        let all = self
            .tree_edges
            .iter()
            .flatten()
            .chain(self.leaves.keys())
            .chain(&self.spine)
            .map(|n| parse(n))
            .collect::<Result<Vec<_>>>()?;
        let inner = all.iter().filter(|n| !n.0).map(|n| n.1 + 1).max().unwrap_or(0);
        let leaf_count = all.iter().filter(|n| n.0).map(|n| n.1 + 1).max().unwrap_or(0);
        let index = |name: &str| -> Result<usize> {
            let (leaf, k) = parse(name)?;
            Ok(if leaf { inner + k } else { k })
        };
        let edges = self
            .tree_edges
            .iter()
            .map(|[x, y]| Ok((index(x)?, index(y)?)))
            .collect::<Result<Vec<_>>>()?;
        let tree = Graph::from_edges(inner + leaf_count, edges)?;
        let leaves = self
            .leaves
            .iter()
            .map(|(x, v)| Ok((index(x)?, token(names, v, Names::parse)?)))
            .collect::<Result<Vec<_>>>()?;
        let d = BranchDecomposition::new(tree, &leaves, vertex_count)?;
        if self.linear {
            let spine = self.spine.iter().map(|s| index(s)).collect::<Result<Vec<_>>>()?;
            Ok(d.with_spine(spine)?)
        } else {
            Ok(d)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutJson {
    pub edge: [String; 2],
    pub side: Vec<String>,
    pub value: usize,
}

impl CutJson {
    pub fn new(cut: &CutReport, d: &BranchDecomposition, names: Names) -> Self {
        let nodes = NodeNames::new(d);
        CutJson {
            edge: [nodes.name(cut.edge.0).to_string(), nodes.name(cut.edge.1).to_string()],
            side: cut.side.iter().map(|&v| names.name(v)).collect(),
            value: cut.value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub size: usize,
    pub edges: Vec<[String; 2]>,
}

impl MatchingJson {
    pub fn new(m: &InducedMatching, names: Names) -> Self {
        MatchingJson {
            size: m.size,
            edges: m.edges.iter().map(|&(x, y)| [names.name(x), names.name(y)]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThinJson {
    pub order: Vec<String>,
    pub classes: Vec<Vec<String>>,
    pub strong: bool,
}

impl ThinJson {
    pub fn new(r: &ThinRepresentation, names: Names) -> Self {
        ThinJson {
            order: r.order().iter().map(|&v| names.name(v)).collect(),
            classes: r.classes().iter().map(|c| c.iter().map(|&v| names.name(v)).collect()).collect(),
            strong: r.is_strong(),
        }
    }

    pub fn to_representation(&self, names: Names, vertex_count: usize) -> Result<ThinRepresentation> {
        let vertices = |list: &[String]| list.iter().map(|v| token(names, v, Names::parse)).collect::<Result<Vec<_>>>();
        let order = vertices(&self.order)?;
        let classes = self.classes.iter().map(|c| vertices(c)).collect::<Result<Vec<_>>>()?;
        Ok(ThinRepresentation::new(order, classes, self.strong, vertex_count)?)
    }
}
