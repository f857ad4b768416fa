//! Support witnesses: host graphs on `A` certifying H-convexity.

mod recognize;
mod tree_search;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::canonical_subset;
use crate::{BipartiteGraph, Error, Graph, Result};

pub use recognize::{recognize_circular, recognize_convex, recognize_star, recognize_tdelta};
pub use tree_search::{tree_support_branching_bounded, tree_support_degree_bounded};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SupportKind {
    Path,
    Cycle,
    Tree,
    Star,
    Comb,
}

impl SupportKind {
    pub fn name(self) -> &'static str {
        match self {
            SupportKind::Path => "path",
            SupportKind::Cycle => "cycle",
            SupportKind::Tree => "tree",
            SupportKind::Star => "star",
            SupportKind::Comb => "comb",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "path" => SupportKind::Path,
            "cycle" => SupportKind::Cycle,
            "tree" => SupportKind::Tree,
            "star" => SupportKind::Star,
            "comb" => SupportKind::Comb,
            _ => return None,
        })
    }
}

/// A host graph on `A = {0..a_size}` together with its claimed shape.
///
/// Degree metadata (`branching`, `max_degree`) is always recomputed from the
/// edges, so it is consistent by construction. The shape itself is only
/// checked by [`SupportWitness::is_well_shaped`] and [`verify_support`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportWitness {
    kind: SupportKind,
    host: Graph,
    host_edges: Vec<(usize, usize)>,
    branching: Vec<usize>,
    max_degree: usize,
}

impl SupportWitness {
    pub fn new(kind: SupportKind, a_size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let host = Graph::from_edges(a_size, edges.iter().copied())?;
        let host_edges: Vec<_> = host.edges().collect();
        let branching = (0..a_size).filter(|&v| host.degree(v) >= 3).collect();
        let max_degree = (0..a_size).map(|v| host.degree(v)).max().unwrap_or(0);
        Ok(SupportWitness { kind, host, host_edges, branching, max_degree })
    }

    /// Path host visiting `order` in sequence.
    pub fn path(order: &[usize]) -> Result<Self> {
        Self::from_sequence(SupportKind::Path, order, false)
    }

    /// Cycle host visiting `order` in sequence and closing back (for `|A| ≥ 3`).
    pub fn cycle(order: &[usize]) -> Result<Self> {
        Self::from_sequence(SupportKind::Cycle, order, order.len() >= 3)
    }

    fn from_sequence(kind: SupportKind, order: &[usize], close: bool) -> Result<Self> {
        let n = order.len();
        let sorted = canonical_subset(order, n)?;
        debug_assert_eq!(sorted.len(), n);
        let mut edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        if close {
            edges.push((order[n - 1], order[0]));
        }
        Self::new(kind, n, &edges)
    }

    /// Star host centred at `centre`.
    pub fn star(a_size: usize, centre: usize) -> Result<Self> {
        let edges: Vec<_> = (0..a_size).filter(|&v| v != centre).map(|v| (centre, v)).collect();
        if a_size > 0 && centre >= a_size {
            return Err(Error::VertexOutOfRange { vertex: centre, bound: a_size });
        }
        Self::new(SupportKind::Star, a_size, &edges)
    }

    #[inline]
    pub fn kind(&self) -> SupportKind {
        self.kind
    }

    #[inline]
    pub fn a_size(&self) -> usize {
        self.host.vertex_count()
    }

    #[inline]
    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Host edges `(u, v)` with `u < v`, sorted.
    #[inline]
    pub fn host_edges(&self) -> &[(usize, usize)] {
        &self.host_edges
    }

    /// Host vertices of degree at least three.
    #[inline]
    pub fn branching(&self) -> &[usize] {
        &self.branching
    }

    /// Number of branching vertices (`t`).
    #[inline]
    pub fn t(&self) -> usize {
        self.branching.len()
    }

    /// Maximum host degree (`Δ`).
    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn with_kind(mut self, kind: SupportKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn is_tree(&self) -> bool {
        let n = self.a_size();
        n == 0 || (self.host_edges.len() == n - 1 && self.host.is_connected())
    }

    /// Checks the shape invariant of the witness kind.
    pub fn is_well_shaped(&self) -> bool {
        let n = self.a_size();
        match self.kind {
            SupportKind::Tree => self.is_tree(),
            SupportKind::Path => self.is_tree() && self.max_degree <= 2,
            SupportKind::Cycle => {
                if n <= 2 {
                    self.is_tree()
                } else {
                    self.host_edges.len() == n && self.host.is_connected() && (0..n).all(|v| self.host.degree(v) == 2)
                }
            }
            SupportKind::Star => self.is_tree() && (n <= 1 || self.max_degree == n - 1),
            SupportKind::Comb => self.is_tree() && is_comb(&self.host),
        }
    }

    /// Vertices along a path-shaped host, starting at the smaller end.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !(self.is_tree() && self.max_degree <= 2) {
            return None;
        }
        let n = self.a_size();
        if n == 0 {
            return Some(Vec::new());
        }
        let start = (0..n).find(|&v| self.host.degree(v) <= 1)?;
        Some(walk(&self.host, start))
    }

    /// Vertices around a cycle-shaped host, starting at vertex 0 and moving
    /// to its smaller neighbour first. Path-shaped hosts on `|A| ≤ 2` count.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        let n = self.a_size();
        if n <= 2 {
            return self.path_order();
        }
        if self.kind != SupportKind::Cycle || !self.is_well_shaped() {
            return None;
        }
        Some(walk(&self.host, 0))
    }

    /// Does `subset` induce a connected subgraph of the host? Empty sets and
    /// singletons count as connected.
    pub fn connects(&self, subset: &[usize]) -> bool {
        induces_connected(&self.host, subset)
    }
}

// Walk a path or cycle from `start`, taking the smaller unvisited neighbour.
fn walk(host: &Graph, start: usize) -> Vec<usize> {
    let n = host.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut cur = Some(start);
    while let Some(v) = cur {
        seen[v] = true;
        order.push(v);
        cur = host.neighbors(v).iter().copied().find(|&w| !seen[w]);
    }
    order
}

fn is_comb(host: &Graph) -> bool {
    let n = host.vertex_count();
    if n == 0 || n % 2 == 1 {
        return false;
    }
    if n == 2 {
        return true;
    }
    let leaf: Vec<bool> = (0..n).map(|v| host.degree(v) == 1).collect();
    let backbone: Vec<usize> = (0..n).filter(|&v| !leaf[v]).collect();
    if backbone.len() * 2 != n {
        return false;
    }
    let one_tooth = backbone
        .iter()
        .all(|&v| host.neighbors(v).iter().filter(|&&w| leaf[w]).count() == 1);
    if !one_tooth {
        return false;
    }
    let (spine, _) = host.induced_subgraph(&backbone).expect("backbone is in range");
    spine.is_connected() && (0..spine.vertex_count()).all(|v| spine.degree(v) <= 2)
}

pub(crate) fn induces_connected(host: &Graph, subset: &[usize]) -> bool {
    if subset.len() <= 1 {
        return true;
    }
    let n = host.vertex_count();
    let mut inside = vec![false; n];
    for &v in subset {
        inside[v] = true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![subset[0]];
    seen[subset[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in host.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    let distinct = inside.iter().filter(|&&x| x).count();
    count == distinct
}

/// Is `witness` a valid support of its kind for `g`?
pub fn verify_support(g: &BipartiteGraph, witness: &SupportWitness) -> Result<bool> {
    if witness.a_size() != g.a_size() {
        return Err(Error::WitnessSizeMismatch { witness: witness.a_size(), graph: g.a_size() });
    }
    Ok(witness.is_well_shaped() && g.neighbourhoods().iter().all(|ns| witness.connects(ns)))
}

/// Restrict a tree-like witness to a connected vertex subset.
///
/// The subset is relabelled in increasing order; the returned map sends new
/// labels to old ones. Degree metadata is recomputed.
pub fn restrict_support(witness: &SupportWitness, subset: &[usize]) -> Result<(SupportWitness, Vec<usize>)> {
    let map = canonical_subset(subset, witness.a_size())?;
    if !witness.connects(&map) {
        return Err(Error::NotConnectedInHost);
    }
    let (host, _) = witness.host.induced_subgraph(&map)?;
    let edges: Vec<_> = host.edges().collect();
    let kind = match witness.kind {
        SupportKind::Cycle if map.len() < witness.a_size() => SupportKind::Path,
        SupportKind::Comb => SupportKind::Tree,
        k => k,
    };
    let restricted = SupportWitness::new(kind, map.len(), &edges)?;
    if !restricted.is_well_shaped() {
        return Err(Error::InvalidWitness(format!("restriction is not a {}", kind.name())));
    }
    Ok((restricted, map))
}
