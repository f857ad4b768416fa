//! Recognizers for the convex, circular convex, star convex and
//! `(t, Δ)`-tree convex classes. Every returned witness passes
//! [`verify_support`](super::verify_support).

use alloc::vec;
use alloc::vec::Vec;

use super::{tree_support_branching_bounded, tree_support_degree_bounded, SupportKind, SupportWitness};
use crate::{BipartiteGraph, Hypergraph};

/// Path support on `A` in which every `N(b)` is an interval.
pub fn recognize_convex(g: &BipartiteGraph) -> Option<SupportWitness> {
    let order = consecutive_order(&g.hypergraph())?;
    Some(SupportWitness::path(&order).expect("order is a permutation"))
}

/// Cycle support on `A` in which every `N(b)` is a circular arc.
///
/// Complementing every hyperedge that contains `a_1` turns arcs into
/// intervals and back, so the graph is circular convex exactly when the
/// complemented instance is convex; the same order then serves as the cycle.
pub fn recognize_circular(g: &BipartiteGraph) -> Option<SupportWitness> {
    if let Some(path) = recognize_convex(g) {
        let order = path.path_order().expect("convex witness is a path");
        return Some(SupportWitness::cycle(&order).expect("order is a permutation"));
    }
    let n = g.a_size();
    let flipped: Vec<Vec<usize>> = g
        .neighbourhoods()
        .iter()
        .map(|ns| {
            if ns.first() == Some(&0) {
                (0..n).filter(|a| ns.binary_search(a).is_err()).collect()
            } else {
                ns.clone()
            }
        })
        .collect();
    let order = consecutive_order(&Hypergraph { ground_size: n, hyperedges: flipped })?;
    Some(SupportWitness::cycle(&order).expect("order is a permutation"))
}

/// Star support: some centre lies in every neighbourhood of size at least two.
/// The smallest such centre is used.
pub fn recognize_star(g: &BipartiteGraph) -> Option<SupportWitness> {
    let n = g.a_size();
    if n == 0 {
        return Some(SupportWitness::star(0, 0).expect("empty star"));
    }
    let centre = (0..n).find(|c| {
        g.neighbourhoods()
            .iter()
            .filter(|ns| ns.len() >= 2)
            .all(|ns| ns.binary_search(c).is_ok())
    })?;
    Some(SupportWitness::star(n, centre).expect("centre in range"))
}

/// `(t, Δ)`-tree support: at most `t` vertices of degree at least three and
/// maximum degree at most `Δ`.
pub fn recognize_tdelta(g: &BipartiteGraph, t: usize, delta: usize) -> Option<SupportWitness> {
    let n = g.a_size();
    let edges = tree_support_branching_bounded(&g.hypergraph(), &vec![delta.max(2); n], t)?;
    Some(SupportWitness::new(SupportKind::Tree, n, &edges).expect("search returns a simple tree"))
}

// A path order of the ground set making every hyperedge consecutive.
fn consecutive_order(h: &Hypergraph) -> Option<Vec<usize>> {
    let n = h.ground_size;
    let edges = tree_support_degree_bounded(h, &vec![2; n])?;
    let path = SupportWitness::new(SupportKind::Path, n, &edges).expect("search returns a simple tree");
    path.path_order()
}

#[cfg(test)]
mod tests {
    use super::super::verify_support;
    use super::*;

    fn bip(a: usize, ns: Vec<Vec<usize>>) -> BipartiteGraph {
        BipartiteGraph::from_neighbourhoods(a, ns).unwrap()
    }

    fn crown(n: usize) -> BipartiteGraph {
        bip(n, (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect())
    }

    #[test]
    fn no_b_gives_identity_path() {
        let w = recognize_convex(&BipartiteGraph::new(5, 0)).unwrap();
        assert_eq!(w.path_order().unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn consecutive_already() {
        let g = bip(3, vec![vec![0, 1], vec![1, 2]]);
        let w = recognize_convex(&g).unwrap();
        assert_eq!(w.path_order().unwrap(), vec![0, 1, 2]);
        assert!(verify_support(&g, &w).unwrap());
    }

    #[test]
    fn crown5_is_circular_not_convex() {
        let g = crown(5);
        assert!(recognize_convex(&g).is_none());
        let w = recognize_circular(&g).unwrap();
        assert_eq!(w.kind(), SupportKind::Cycle);
        assert!(verify_support(&g, &w).unwrap());
    }

    #[test]
    fn convex_closes_into_cycle() {
        let g = bip(4, vec![vec![0, 1], vec![2, 3]]);
        let w = recognize_circular(&g).unwrap();
        assert!(verify_support(&g, &w).unwrap());
    }

    #[test]
    fn star_centre_smallest() {
        let g = bip(4, vec![vec![0, 1, 2]]);
        let w = recognize_star(&g).unwrap();
        assert_eq!(w.branching(), &[0]);
        assert!(verify_support(&g, &w).unwrap());
    }

    #[test]
    fn triangle_of_pairs_is_not_star() {
        assert!(recognize_star(&bip(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])).is_none());
    }

    #[test]
    fn claw_by_tdelta() {
        let g = bip(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(recognize_tdelta(&g, 0, 5).is_none());
        let w = recognize_tdelta(&g, 1, 3).unwrap();
        assert_eq!(w.host_edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert!(verify_support(&g, &w).unwrap());
    }

    #[test]
    fn convex_by_tdelta_zero() {
        let g = bip(3, vec![vec![0, 1], vec![1, 2]]);
        let w = recognize_tdelta(&g, 0, 3).unwrap();
        assert!(w.path_order().is_some());
    }
}
