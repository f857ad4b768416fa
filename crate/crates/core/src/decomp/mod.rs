//! Branch decompositions and their cut widths.

mod construct;
mod matching;
mod oracle;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

pub use construct::{
    decompose_circular, decompose_convex, decompose_spider, decompose_tdelta, glue_multijoin, SplitRecord,
    TreeDecomposition,
};
pub use matching::{max_induced_matching_cut, max_induced_matching_sim, InducedMatching};
pub use oracle::{mimw_oracle, simw_oracle, width_oracle, DEFAULT_WIDTH_GUARD};

/// Which cut function a width is measured with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutMode {
    /// Maximum induced matching of the bipartite cut graph (`cutmim`).
    Mim,
    /// Maximum induced matching of `G` with every edge crossing the cut (`cutsim`).
    Sim,
}

/// A subcubic tree whose leaves are in bijection with the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    tree: Graph,
    leaf_vertex: Vec<Option<usize>>,
    vertex_leaf: Vec<usize>,
    linear: bool,
    spine: Vec<usize>,
}

/// The worst cut of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    /// Tree edge `(u, v)` with `u < v`.
    pub edge: (usize, usize),
    /// Graph vertices on the `u` side.
    pub side: Vec<usize>,
    pub value: usize,
}

impl BranchDecomposition {
    /// Validate and build from a tree and its leaf labelling.
    ///
    /// `leaves` lists `(tree node, graph vertex)` pairs; every tree node of
    /// degree at most one must appear, and the vertices must be exactly
    /// `0..vertex_count`.
    pub fn new(tree: Graph, leaves: &[(usize, usize)], vertex_count: usize) -> Result<Self> {
        let m = tree.vertex_count();
        if m > 0 && (tree.edge_count() != m - 1 || !tree.is_connected()) {
            return Err(Error::DecompositionMismatch("decomposition tree is not a tree".into()));
        }
        if let Some(node) = (0..m).find(|&x| tree.degree(x) > 3) {
            return Err(Error::DecompositionMismatch(format!("tree node {node} has degree above three")));
        }
        let mut leaf_vertex = vec![None; m];
        let mut vertex_leaf = vec![usize::MAX; vertex_count];
        for &(node, v) in leaves {
            if node >= m {
                return Err(Error::VertexOutOfRange { vertex: node, bound: m });
            }
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex: v, bound: vertex_count });
            }
            if tree.degree(node) > 1 {
                return Err(Error::DecompositionMismatch(format!("node {node} is not a leaf")));
            }
            if leaf_vertex[node].is_some() || vertex_leaf[v] != usize::MAX {
                return Err(Error::DecompositionMismatch(format!("leaf map is not injective at node {node}")));
            }
            leaf_vertex[node] = Some(v);
            vertex_leaf[v] = node;
        }
        if let Some(node) = (0..m).find(|&x| tree.degree(x) <= 1 && leaf_vertex[x].is_none()) {
            return Err(Error::DecompositionMismatch(format!("leaf {node} carries no vertex")));
        }
        if let Some(v) = vertex_leaf.iter().position(|&x| x == usize::MAX) {
            return Err(Error::DecompositionMismatch(format!("vertex {v} has no leaf")));
        }
        Ok(BranchDecomposition { tree, leaf_vertex, vertex_leaf, linear: false, spine: Vec::new() })
    }

    /// The caterpillar obtained from a vertex ordering.
    ///
    /// For `ℓ ≥ 3` the tree has spine `s_1..s_ℓ` (nodes `0..ℓ`) and leaf `t_i`
    /// (node `ℓ + i − 1`) hanging from `s_i` and carrying the `i`-th vertex. Two
    /// vertices give a single edge and one vertex a single node.
    pub fn caterpillar_from_ordering(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range for {n} vertices")));
            }
            if seen[v] {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
        let (tree, leaves, spine) = match n {
            0 | 1 => (Graph::new(n), order.iter().map(|&v| (0, v)).collect::<Vec<_>>(), Vec::new()),
            2 => (
                Graph::from_edges(2, [(0, 1)])?,
                vec![(0, order[0]), (1, order[1])],
                Vec::new(),
            ),
            _ => {
                let edges = (0..n).map(|i| (i, n + i)).chain((1..n).map(|i| (i - 1, i)));
                let tree = Graph::from_edges(2 * n, edges)?;
                let leaves = order.iter().enumerate().map(|(i, &v)| (n + i, v)).collect();
                (tree, leaves, (0..n).collect())
            }
        };
        let mut d = BranchDecomposition::new(tree, &leaves, n)?;
        d.linear = true;
        d.spine = spine;
        Ok(d)
    }

    #[inline]
    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    /// Number of graph vertices (leaves).
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_leaf.len()
    }

    #[inline]
    pub fn is_linear(&self) -> bool {
        self.linear
    }

    /// Spine nodes in order (linear decompositions with at least three leaves).
    #[inline]
    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    #[inline]
    pub fn leaf_vertex(&self, node: usize) -> Option<usize> {
        self.leaf_vertex[node]
    }

    #[inline]
    pub fn vertex_leaf(&self, v: usize) -> usize {
        self.vertex_leaf[v]
    }

    /// `(node, vertex)` pairs in node order.
    pub fn leaves(&self) -> Vec<(usize, usize)> {
        self.leaf_vertex
            .iter()
            .enumerate()
            .filter_map(|(node, v)| v.map(|v| (node, v)))
            .collect()
    }

    /// Leaf order along the spine, for linear decompositions.
    pub fn linear_order(&self) -> Option<Vec<usize>> {
        if !self.linear {
            return None;
        }
        let n = self.vertex_count();
        if n <= 2 {
            return Some((0..self.tree.vertex_count()).filter_map(|x| self.leaf_vertex[x]).collect());
        }
        Some(
            self.spine
                .iter()
                .map(|&s| {
                    self.tree
                        .neighbors(s)
                        .iter()
                        .find_map(|&x| self.leaf_vertex[x])
                        .expect("every spine node carries a leaf")
                })
                .collect(),
        )
    }

    /// Mark as linear with the given spine (used when reading files back).
    pub fn with_spine(mut self, spine: Vec<usize>) -> Result<Self> {
        if spine.iter().any(|&s| s >= self.tree.vertex_count()) {
            return Err(Error::DecompositionMismatch("spine node out of range".into()));
        }
        self.linear = true;
        self.spine = spine;
        Ok(self)
    }

    /// Relabel leaves through `map` (old vertex → new vertex) into a graph
    /// with `vertex_count` vertices.
    pub(crate) fn relabelled(&self, map: &[usize], vertex_count: usize) -> Result<Self> {
        let leaves: Vec<_> = self.leaves().into_iter().map(|(node, v)| (node, map[v])).collect();
        let mut d = BranchDecomposition::new(self.tree.clone(), &leaves, vertex_count)?;
        d.linear = self.linear;
        d.spine = self.spine.clone();
        Ok(d)
    }

    /// For each tree edge `(u, v)` with `u < v` in canonical order, the graph
    /// vertices on the `u` side.
    pub fn edge_sides(&self) -> Vec<((usize, usize), Vec<usize>)> {
        let m = self.tree.vertex_count();
        if m <= 1 {
            return Vec::new();
        }
        // root at node 0; below[x] = vertices in the subtree of x
        let mut parent = vec![usize::MAX; m];
        let mut order = Vec::with_capacity(m);
        let mut stack = vec![0];
        parent[0] = 0;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in self.tree.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &x in order.iter().rev() {
            if let Some(v) = self.leaf_vertex[x] {
                below[x].push(v);
            }
            if x != 0 {
                let part = core::mem::take(&mut below[x]);
                below[parent[x]].extend_from_slice(&part);
                below[x] = part;
            }
        }
        let n = self.vertex_count();
        self.tree
            .edges()
            .map(|(u, v)| {
                let child_side = if parent[v] == u { v } else { u };
                let mut side = if child_side == u {
                    below[u].clone()
                } else {
                    let mut inside = vec![false; n];
                    for &x in &below[v] {
                        inside[x] = true;
                    }
                    (0..n).filter(|&x| !inside[x]).collect()
                };
                side.sort_unstable();
                ((u, v), side)
            })
            .collect()
    }
}

/// Width of `d` on `g` under the chosen cut function, with the worst cut.
///
/// Every tree edge is measured, including leaf edges. Ties go to the first
/// edge in canonical order. Trees without edges have width 0.
pub fn width_of(g: &Graph, d: &BranchDecomposition, mode: CutMode) -> Result<(usize, Option<CutReport>)> {
    if d.vertex_count() != g.vertex_count() {
        return Err(Error::DecompositionMismatch(format!(
            "decomposition has {} leaves, graph has {} vertices",
            d.vertex_count(),
            g.vertex_count()
        )));
    }
    let mut best: Option<CutReport> = None;
    for (edge, side) in d.edge_sides() {
        let value = cut_value(g, &side, mode);
        if best.as_ref().map_or(true, |b| value > b.value) {
            best = Some(CutReport { edge, side, value });
        }
    }
    Ok((best.as_ref().map_or(0, |b| b.value), best))
}

pub(crate) fn cut_value(g: &Graph, side: &[usize], mode: CutMode) -> usize {
    let m = match mode {
        CutMode::Mim => max_induced_matching_cut(g, side),
        CutMode::Sim => max_induced_matching_sim(g, side),
    };
    m.expect("side comes from the decomposition").size
}
