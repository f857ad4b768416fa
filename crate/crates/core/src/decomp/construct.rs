//! Decompositions built from support witnesses.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{cut_value, BranchDecomposition, CutMode};
use crate::bounds::split_cut_bound;
use crate::support::{restrict_support, verify_support};
use crate::{BipartiteGraph, Error, Graph, Result, SupportWitness};

fn check_witness(g: &BipartiteGraph, w: &SupportWitness) -> Result<()> {
    if !verify_support(g, w)? {
        return Err(Error::InvalidWitness("witness is not a support of the graph".into()));
    }
    Ok(())
}

/// Linear decomposition of mim-width at most 1 from a path support.
///
/// `A` follows the path; each `b` comes right after its last neighbour, and
/// vertices of `B` without neighbours close the order.
pub fn decompose_convex(g: &BipartiteGraph, w: &SupportWitness) -> Result<BranchDecomposition> {
    check_witness(g, w)?;
    let order = w
        .path_order()
        .ok_or_else(|| Error::InvalidWitness("host is not a path".into()))?;
    BranchDecomposition::caterpillar_from_ordering(&interleave(g, &order, &[]))
}

/// Linear decomposition of mim-width at most 2 from a cycle support.
///
/// With the cycle read as `a_1 … a_n`, the vertices of `B` adjacent to `a_n`
/// are placed after `a_n`; every other `b` follows its last neighbour.
pub fn decompose_circular(g: &BipartiteGraph, w: &SupportWitness) -> Result<BranchDecomposition> {
    check_witness(g, w)?;
    let order = w
        .cycle_order()
        .or_else(|| w.path_order())
        .ok_or_else(|| Error::InvalidWitness("host is not a cycle".into()))?;
    let last: Vec<usize> = match order.last() {
        Some(&an) => g.a_neighbourhood(an).to_vec(),
        None => Vec::new(),
    };
    BranchDecomposition::caterpillar_from_ordering(&interleave(g, &order, &last))
}

// A in `order`, each b after its last neighbour; `tail` (already at a_n's
// position in effect) and isolated b close the order.
fn interleave(g: &BipartiteGraph, order: &[usize], tail: &[usize]) -> Vec<usize> {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &a) in order.iter().enumerate() {
        pos[a] = i;
    }
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut isolated = Vec::new();
    for b in 0..g.b_size() {
        if tail.binary_search(&b).is_ok() {
            continue;
        }
        match g.neighbourhood(b).iter().map(|&a| pos[a]).max() {
            Some(p) => after[p].push(b),
            None => isolated.push(b),
        }
    }
    let mut out = Vec::with_capacity(g.vertex_count());
    for (i, &a) in order.iter().enumerate() {
        out.push(a);
        out.extend(after[i].iter().map(|&b| g.b_vertex(b)));
    }
    out.extend(tail.iter().map(|&b| g.b_vertex(b)));
    out.extend(isolated.into_iter().map(|b| g.b_vertex(b)));
    out
}

/// Combine decompositions of the parts of a vertex partition.
///
/// `decomps[i]` decomposes `G[parts[i]]` with vertices relabelled in
/// increasing order. Each part's tree is attached at a subdivided edge (or at
/// its only node). Two parts are joined directly; more are hung in order from
/// a path of `p − 2` new nodes, the first and last part both at the ends. If
/// every pair of parts has `cutmim` at most `c` and every part has width at
/// most `w`, the result has mim-width at most `max(c⌊p²/4⌋, w + c(p − 1))`.
pub fn glue_multijoin(g: &Graph, parts: &[Vec<usize>], decomps: &[BranchDecomposition]) -> Result<BranchDecomposition> {
    let n = g.vertex_count();
    if parts.len() != decomps.len() {
        return Err(Error::InvalidPartition(format!(
            "{} parts but {} decompositions",
            parts.len(),
            decomps.len()
        )));
    }
    let mut owner = vec![usize::MAX; n];
    let mut sorted_parts = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let part = crate::graph::canonical_subset(part, n)?;
        for &v in &part {
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} lies in two parts")));
            }
            owner[v] = i;
        }
        if decomps[i].vertex_count() != part.len() {
            return Err(Error::DecompositionMismatch(format!(
                "part {i} has {} vertices, its decomposition {}",
                part.len(),
                decomps[i].vertex_count()
            )));
        }
        sorted_parts.push(part);
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} lies in no part")));
    }
    let live: Vec<usize> = (0..parts.len()).filter(|&i| !sorted_parts[i].is_empty()).collect();
    if live.len() == 1 {
        let i = live[0];
        return decomps[i].relabelled(&sorted_parts[i], n);
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut leaves: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    let mut attach = Vec::with_capacity(live.len());
    for &i in &live {
        let d = &decomps[i];
        let offset = next;
        let tree = d.tree();
        next += tree.vertex_count();
        for (node, v) in d.leaves() {
            leaves.push((offset + node, sorted_parts[i][v]));
        }
        let mut tree_edges: Vec<(usize, usize)> = tree.edges().collect();
        if tree_edges.is_empty() {
            attach.push(offset);
        } else {
            let (x, y) = tree_edges.remove(0);
            let mid = next;
            next += 1;
            edges.push((offset + x, mid));
            edges.push((mid, offset + y));
            attach.push(mid);
        }
        edges.extend(tree_edges.into_iter().map(|(x, y)| (offset + x, offset + y)));
    }
    let p = live.len();
    if p == 2 {
        edges.push((attach[0], attach[1]));
    } else {
        let spine: Vec<usize> = (0..p - 2).map(|k| next + k).collect();
        next += p - 2;
        edges.extend(spine.windows(2).map(|w| (w[0], w[1])));
        edges.push((attach[0], spine[0]));
        for k in 1..p - 1 {
            edges.push((attach[k], spine[k - 1]));
        }
        edges.push((attach[p - 1], spine[p - 3]));
    }
    let tree = Graph::from_edges(next, edges)?;
    BranchDecomposition::new(tree, &leaves, n)
}

/// Decomposition of mim-width at most `max{2⌊Δ²/4⌋, 2Δ − 1}` from a tree
/// support with at most one vertex of degree three or more.
pub fn decompose_spider(g: &BipartiteGraph, w: &SupportWitness) -> Result<BranchDecomposition> {
    check_witness(g, w)?;
    if !w.is_tree() || w.t() > 1 {
        return Err(Error::InvalidWitness("host is not a tree with at most one branching vertex".into()));
    }
    if w.t() == 0 {
        let path = w.path_order().map(|o| SupportWitness::path(&o)).transpose()?;
        return decompose_convex(g, &path.ok_or_else(|| Error::InvalidWitness("host is not a path".into()))?);
    }
    let host = w.host();
    let u = w.branching()[0];
    // legs of the spider as paths leaving u
    let legs: Vec<Vec<usize>> = host
        .neighbors(u)
        .iter()
        .map(|&x| {
            let mut leg = vec![x];
            let (mut prev, mut cur) = (u, x);
            while let Some(&nx) = host.neighbors(cur).iter().find(|&&y| y != prev) {
                leg.push(nx);
                prev = cur;
                cur = nx;
            }
            leg
        })
        .collect();
    let mut leg_of = vec![usize::MAX; g.a_size()];
    for (i, leg) in legs.iter().enumerate() {
        for &a in leg {
            leg_of[a] = i;
        }
    }
    // B' (only u) and B'' (two legs) both join the first part
    let mut b_parts: Vec<Vec<usize>> = vec![Vec::new(); legs.len()];
    for b in 0..g.b_size() {
        let mut legs_hit = g.neighbourhood(b).iter().filter(|&&a| a != u).map(|&a| leg_of[a]);
        let part = match legs_hit.next() {
            Some(first) if legs_hit.all(|l| l == first) => first,
            _ => 0,
        };
        b_parts[part].push(b);
    }
    let mut parts = Vec::with_capacity(legs.len());
    let mut decomps = Vec::with_capacity(legs.len());
    for (i, leg) in legs.iter().enumerate() {
        let path: Vec<usize> = if i == 0 { core::iter::once(u).chain(leg.iter().copied()).collect() } else { leg.clone() };
        let mut a_part = path.clone();
        a_part.sort_unstable();
        let (sub, a_map, b_map) = g.induced(&a_part, &b_parts[i])?;
        let local: Vec<usize> = path.iter().map(|a| a_map.binary_search(a).expect("a in part")).collect();
        decomps.push(decompose_convex(&sub, &SupportWitness::path(&local)?)?);
        let mut vertices = a_map;
        vertices.extend(b_map.iter().map(|&b| g.b_vertex(b)));
        parts.push(vertices);
    }
    glue_multijoin(&g.to_graph(), &parts, &decomps)
}

/// One split of the `(t, Δ)`-tree recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRecord {
    pub depth: usize,
    /// Branching vertices and maximum degree of the tree being split.
    pub t: usize,
    pub delta: usize,
    /// Branching vertices of the two sides.
    pub t1: usize,
    pub t2: usize,
    /// `cutmim` between the two halves of the graph.
    pub cut: usize,
    /// `Δ(t − 1)`.
    pub bound: usize,
}

/// A decomposition together with the splits that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub decomposition: BranchDecomposition,
    pub splits: Vec<SplitRecord>,
}

/// Decomposition of mim-width at most `f(Δ) + t²Δ` from a tree support with
/// `t` branching vertices of maximum degree `Δ`.
///
/// Trees with two or more branching vertices are cut at an edge leaving both
/// sides with fewer branching vertices; the side `X_1` holds the `A`-side of
/// the smaller endpoint and every `b` with a neighbour there.
pub fn decompose_tdelta(g: &BipartiteGraph, w: &SupportWitness) -> Result<TreeDecomposition> {
    check_witness(g, w)?;
    if !w.is_tree() {
        return Err(Error::InvalidWitness("host is not a tree".into()));
    }
    let mut splits = Vec::new();
    let decomposition = tdelta_rec(g, w, 0, &mut splits)?;
    Ok(TreeDecomposition { decomposition, splits })
}

fn tdelta_rec(
    g: &BipartiteGraph,
    w: &SupportWitness,
    depth: usize,
    splits: &mut Vec<SplitRecord>,
) -> Result<BranchDecomposition> {
    let t = w.t();
    if t <= 1 {
        return decompose_spider(g, w);
    }
    let host = w.host();
    // (worse side's branching count, side of the split, t1, t2)
    let mut best: Option<(usize, Vec<bool>, usize, usize)> = None;
    for &(u, v) in w.host_edges() {
        let side = component_without_edge(host, u, v);
        let count = |inside: bool, end: usize| {
            (0..host.vertex_count())
                .filter(|&x| side[x] == inside)
                .filter(|&x| host.degree(x) - usize::from(x == end) >= 3)
                .count()
        };
        let (t1, t2) = (count(true, u), count(false, v));
        let worst = t1.max(t2);
        if worst < t && best.as_ref().map_or(true, |b| worst < b.0) {
            best = Some((worst, side, t1, t2));
        }
    }
    let (_, side, t1, t2) = best.expect("a tree with two branching vertices has a reducing edge");
    let a1: Vec<usize> = (0..g.a_size()).filter(|&a| side[a]).collect();
    let a2: Vec<usize> = (0..g.a_size()).filter(|&a| !side[a]).collect();
    let (b1, b2): (Vec<usize>, Vec<usize>) = (0..g.b_size()).partition(|&b| g.neighbourhood(b).iter().any(|&a| side[a]));

    let graph = g.to_graph();
    let x1: Vec<usize> = a1.iter().copied().chain(b1.iter().map(|&b| g.b_vertex(b))).collect();
    let x2: Vec<usize> = a2.iter().copied().chain(b2.iter().map(|&b| g.b_vertex(b))).collect();
    splits.push(SplitRecord {
        depth,
        t,
        delta: w.max_degree(),
        t1,
        t2,
        cut: cut_value(&graph, &x1, CutMode::Mim),
        bound: split_cut_bound(t, w.max_degree()),
    });

    let (w1, _) = restrict_support(w, &a1)?;
    let (w2, _) = restrict_support(w, &a2)?;
    let (g1, _, _) = g.induced(&a1, &b1)?;
    let (g2, _, _) = g.induced(&a2, &b2)?;
    let d1 = tdelta_rec(&g1, &w1, depth + 1, splits)?;
    let d2 = tdelta_rec(&g2, &w2, depth + 1, splits)?;
    glue_multijoin(&graph, &[x1, x2], &[d1, d2])
}

// Vertices on u's side once the tree edge u-v is removed.
fn component_without_edge(host: &Graph, u: usize, v: usize) -> Vec<bool> {
    let mut side = vec![false; host.vertex_count()];
    side[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &y in host.neighbors(x) {
            if !side[y] && !(x == u && y == v) {
                side[y] = true;
                stack.push(y);
            }
        }
    }
    side
}

#[cfg(test)]
mod tests {
    use super::super::{mimw_oracle, width_of};
    use super::*;
    use crate::bounds::{spider_bound, tree_bound};
    use crate::support::SupportKind;

    fn bip(a: usize, ns: Vec<Vec<usize>>) -> BipartiteGraph {
        BipartiteGraph::from_neighbourhoods(a, ns).unwrap()
    }

    fn mim(g: &BipartiteGraph, d: &BranchDecomposition) -> usize {
        width_of(&g.to_graph(), d, CutMode::Mim).unwrap().0
    }

    #[test]
    fn convex_is_width_one() {
        let g = bip(4, vec![vec![0, 1], vec![1, 2, 3], vec![2], vec![]]);
        let d = decompose_convex(&g, &SupportWitness::path(&[0, 1, 2, 3]).unwrap()).unwrap();
        assert!(d.is_linear());
        assert_eq!(d.linear_order().unwrap(), vec![0, 1, 4, 2, 6, 3, 5, 7]);
        assert_eq!(mim(&g, &d), 1);
    }

    #[test]
    fn convex_rejects_non_support() {
        let g = bip(3, vec![vec![0, 2]]);
        let err = decompose_convex(&g, &SupportWitness::path(&[0, 1, 2]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::InvalidWitness(_)));
    }

    #[test]
    fn crown_circular_width_two() {
        let n = 5;
        let g = bip(n, (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect());
        let order: Vec<usize> = (0..n).collect();
        let d = decompose_circular(&g, &SupportWitness::cycle(&order).unwrap()).unwrap();
        assert!(mim(&g, &d) <= 2);
    }

    #[test]
    fn glue_two_paths() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let d = BranchDecomposition::caterpillar_from_ordering(&[0, 1]).unwrap();
        let glued = glue_multijoin(&g, &[vec![0, 1], vec![2, 3]], &[d.clone(), d]).unwrap();
        assert_eq!(glued.vertex_count(), 4);
        assert!(width_of(&g, &glued, CutMode::Mim).unwrap().0 <= 2);
    }

    #[test]
    fn glue_rejects_overlap() {
        let g = Graph::new(3);
        let d = BranchDecomposition::caterpillar_from_ordering(&[0, 1]).unwrap();
        let err = glue_multijoin(&g, &[vec![0, 1], vec![1, 2]], &[d.clone(), d]).unwrap_err();
        assert!(matches!(err, Error::InvalidPartition(_)));
    }

    #[test]
    fn glue_many_single_vertices() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let parts: Vec<Vec<usize>> = (0..5).map(|v| vec![v]).collect();
        let d = BranchDecomposition::caterpillar_from_ordering(&[0]).unwrap();
        let glued = glue_multijoin(&g, &parts, &vec![d; 5]).unwrap();
        assert_eq!(glued.tree().vertex_count(), 8);
        for x in 0..8 {
            assert!(glued.tree().degree(x) <= 3);
        }
    }

    #[test]
    fn spider_claw() {
        // centre 0 with legs 1-4, 2-5, 3-6; b's span across the centre
        let edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)];
        let w = SupportWitness::new(SupportKind::Tree, 7, &edges).unwrap();
        let g = bip(7, vec![vec![0, 1, 2], vec![1, 4], vec![0], vec![0, 3, 6], vec![5], vec![0, 1, 2, 3]]);
        let d = decompose_spider(&g, &w).unwrap();
        let width = mim(&g, &d);
        assert!(width <= spider_bound(3));
        assert!(mimw_oracle(&g.to_graph(), 13).unwrap() <= width);
    }

    #[test]
    fn tdelta_two_hubs() {
        // hubs 0 and 1 joined by an edge, each with two extra leaves
        let edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)];
        let w = SupportWitness::new(SupportKind::Tree, 6, &edges).unwrap();
        let g = bip(6, vec![vec![0, 1], vec![2, 0, 1, 4], vec![3], vec![5, 1], vec![0, 2, 3]]);
        let out = decompose_tdelta(&g, &w).unwrap();
        assert_eq!(out.splits.len(), 1);
        let s = &out.splits[0];
        assert_eq!((s.t, s.t1, s.t2), (2, 0, 0));
        assert!(s.cut <= s.bound);
        assert!(mim(&g, &out.decomposition) <= tree_bound(2, 3));
    }
}
