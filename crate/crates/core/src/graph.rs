//! Graph, bipartite graph and hypergraph value types.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, bound: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.rows[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbourhood of `v` as a bit row over `0..n`.
    #[inline]
    pub fn neighbor_row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Subgraph induced by `vertices`, relabelled in increasing vertex order.
    ///
    /// Returns the subgraph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let map = canonical_subset(vertices, self.vertex_count())?;
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        Ok((g, map))
    }

    /// Graph with vertex `n` appended, adjacent to `neighbours`.
    pub fn with_vertex(&self, neighbours: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut g = Graph::new(n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for &u in neighbours {
            g.add_edge(u, n)?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

/// Sorted copy of `vertices`, rejecting duplicates and out-of-range labels.
pub(crate) fn canonical_subset(vertices: &[usize], bound: usize) -> Result<Vec<usize>> {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateVertex(w[0]));
        }
    }
    if let Some(&last) = sorted.last() {
        if last >= bound {
            return Err(Error::VertexOutOfRange { vertex: last, bound });
        }
    }
    Ok(sorted)
}

/// Bipartite graph `(A, B, E)` stored as the neighbourhoods `N(b) ⊆ A`.
///
/// As a [`Graph`], A-vertices come first: `a_i ↦ i`, `b_j ↦ |A| + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    a_size: usize,
    b_nbrs: Vec<Vec<usize>>,
    a_nbrs: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(a_size: usize, b_size: usize) -> Self {
        BipartiteGraph {
            a_size,
            b_nbrs: vec![Vec::new(); b_size],
            a_nbrs: vec![Vec::new(); a_size],
        }
    }

    /// Build from one neighbourhood per B-vertex.
    pub fn from_neighbourhoods(a_size: usize, neighbourhoods: Vec<Vec<usize>>) -> Result<Self> {
        let mut g = BipartiteGraph::new(a_size, neighbourhoods.len());
        for (b, ns) in neighbourhoods.into_iter().enumerate() {
            for a in ns {
                g.add_edge(a, b)?;
            }
        }
        Ok(g)
    }

    /// Add the edge `a b`; `a` indexes A and `b` indexes B.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.a_size {
            return Err(Error::VertexOutOfRange { vertex: a, bound: self.a_size });
        }
        if b >= self.b_size() {
            return Err(Error::VertexOutOfRange { vertex: b, bound: self.b_size() });
        }
        let ns = &mut self.b_nbrs[b];
        match ns.binary_search(&a) {
            Ok(_) => Err(Error::DuplicateEdge(a, self.a_size + b)),
            Err(pos) => {
                ns.insert(pos, a);
                let pos = self.a_nbrs[a].binary_search(&b).unwrap_err();
                self.a_nbrs[a].insert(pos, b);
                Ok(())
            }
        }
    }

    #[inline]
    pub fn a_size(&self) -> usize {
        self.a_size
    }

    #[inline]
    pub fn b_size(&self) -> usize {
        self.b_nbrs.len()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.a_size + self.b_size()
    }

    /// `N(b)` as sorted A-indices.
    #[inline]
    pub fn neighbourhood(&self, b: usize) -> &[usize] {
        &self.b_nbrs[b]
    }

    /// Neighbours of `a` as sorted B-indices.
    #[inline]
    pub fn a_neighbourhood(&self, a: usize) -> &[usize] {
        &self.a_nbrs[a]
    }

    pub fn neighbourhoods(&self) -> &[Vec<usize>] {
        &self.b_nbrs
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.b_nbrs[b].binary_search(&a).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.b_nbrs.iter().map(Vec::len).sum()
    }

    /// Edges `(a, b)` sorted by `a` then `b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .b_nbrs
            .iter()
            .enumerate()
            .flat_map(|(b, ns)| ns.iter().map(move |&a| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    #[inline]
    pub fn b_vertex(&self, b: usize) -> usize {
        self.a_size + b
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for (b, ns) in self.b_nbrs.iter().enumerate() {
            for &a in ns {
                g.add_edge(a, self.a_size + b).expect("bipartite edges are simple");
            }
        }
        g
    }

    pub fn hypergraph(&self) -> Hypergraph {
        Hypergraph {
            ground_size: self.a_size,
            hyperedges: self.b_nbrs.clone(),
        }
    }

    /// Subgraph induced by the given A- and B-subsets, both relabelled in
    /// increasing order. Returns the subgraph with the A and B label maps.
    pub fn induced(&self, a_subset: &[usize], b_subset: &[usize]) -> Result<(BipartiteGraph, Vec<usize>, Vec<usize>)> {
        let a_map = canonical_subset(a_subset, self.a_size)?;
        let b_map = canonical_subset(b_subset, self.b_size())?;
        let mut a_index = vec![usize::MAX; self.a_size];
        for (i, &a) in a_map.iter().enumerate() {
            a_index[a] = i;
        }
        let neighbourhoods = b_map
            .iter()
            .map(|&b| {
                self.b_nbrs[b]
                    .iter()
                    .filter_map(|&a| (a_index[a] != usize::MAX).then_some(a_index[a]))
                    .collect()
            })
            .collect();
        let g = BipartiteGraph::from_neighbourhoods(a_map.len(), neighbourhoods)?;
        Ok((g, a_map, b_map))
    }

    /// Induced subgraph on a set of graph-level vertex labels (A first, then B).
    pub fn induced_on_vertices(&self, vertices: &[usize]) -> Result<(BipartiteGraph, Vec<usize>)> {
        let sorted = canonical_subset(vertices, self.vertex_count())?;
        let split = sorted.partition_point(|&v| v < self.a_size);
        let a_part = &sorted[..split];
        let b_part: Vec<usize> = sorted[split..].iter().map(|&v| v - self.a_size).collect();
        let (g, _, _) = self.induced(a_part, &b_part)?;
        Ok((g, sorted))
    }

    /// Append `count` new A-vertices, each complete to B.
    pub fn with_universal_a(&self, count: usize) -> BipartiteGraph {
        let a_size = self.a_size + count;
        let neighbourhoods = self
            .b_nbrs
            .iter()
            .map(|ns| ns.iter().copied().chain(self.a_size..a_size).collect())
            .collect();
        BipartiteGraph::from_neighbourhoods(a_size, neighbourhoods).expect("fresh vertices are distinct")
    }
}

/// Hypergraph on `0..ground_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub ground_size: usize,
    pub hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(ground_size: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(hyperedges.len());
        for e in hyperedges {
            clean.push(canonical_subset(&e, ground_size)?);
        }
        Ok(Hypergraph { ground_size, hyperedges: clean })
    }
}

/// Neighbourhood hypergraph `(A, {N(b) : b ∈ B})`, hyperedges in B order.
pub fn neighbourhood_hypergraph(g: &BipartiteGraph) -> Hypergraph {
    g.hypergraph()
}
