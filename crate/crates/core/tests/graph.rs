use hconvex_core::chordal::is_chordal_bipartite;
use hconvex_core::families::{augment_comb, augment_star, gen_crown, gen_gk, gen_grid, gen_random_chordal_bipartite, gen_random_hconvex, HostShape};
use hconvex_core::graph::neighbourhood_hypergraph;
use hconvex_core::pattern::{has_induced_pattern, triangle_with_pendants, triangular_prism};
use hconvex_core::support::{recognize_star, verify_support};
use hconvex_core::{BipartiteGraph, Graph, SupportKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bip(a: usize, ns: Vec<Vec<usize>>) -> BipartiteGraph {
    BipartiteGraph::from_neighbourhoods(a, ns).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

// every vertex subset of size >= 6 inducing a connected 2-regular graph
fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 6 {
            return false;
        }
        let (h, _) = g.induced_subgraph(&vs).unwrap();
        h.is_connected() && (0..h.vertex_count()).all(|v| h.degree(v) == 2)
    })
}

fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == g.vertex_count() {
            return true;
        }
        for j in 0..h.vertex_count() {
            if !used[j] && map.iter().enumerate().all(|(k, &m)| g.has_edge(k, i) == h.has_edge(m, j)) {
                used[j] = true;
                map.push(j);
                if rec(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && rec(g, h, &mut Vec::new(), &mut vec![false; h.vertex_count()])
}

#[test]
fn chordal_test_matches_cycle_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..300 {
        let a = rng.gen_range(1..6);
        let b = rng.gen_range(0..=10 - a);
        let p = rng.gen_range(0.2..0.8);
        let g = bip(a, (0..b).map(|_| (0..a).filter(|_| rng.gen_bool(p)).collect()).collect());
        let chordal = is_chordal_bipartite(&g);
        assert_eq!(chordal, !has_long_induced_cycle(&g.to_graph()), "{g:?}");
        if chordal {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0);
    assert!(!is_chordal_bipartite(&bip(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])));
    assert!(is_chordal_bipartite(&bip(2, vec![vec![0, 1], vec![0, 1]])));
    assert!(is_chordal_bipartite(&bip(3, vec![vec![0, 1, 2]; 3])));
}

#[test]
fn generated_chordal_graphs_are_chordal_and_pattern_free() {
    for seed in 0..30 {
        let g = gen_random_chordal_bipartite(4, 5, seed);
        assert!(!has_long_induced_cycle(&g.to_graph()));
        let h = gen_random_chordal_bipartite(8, 8, seed).to_graph();
        assert!(!has_induced_pattern(&h, &triangle_with_pendants()));
        assert!(!has_induced_pattern(&h, &triangular_prism()));
    }
}

#[test]
fn pattern_examples() {
    assert!(has_induced_pattern(&triangular_prism(), &triangular_prism()));
    assert!(has_induced_pattern(&triangle_with_pendants(), &triangle_with_pendants()));
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    assert!(has_induced_pattern(&cycle(4), &p3));
    assert!(!has_induced_pattern(&cycle(4), &cycle(3)));
    assert!(!has_induced_pattern(&gen_grid(3, 3).to_graph(), &triangle_with_pendants()));
}

#[test]
fn induced_subgraph_examples() {
    let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let (h, map) = p4.induced_subgraph(&[0, 1]).unwrap();
    assert_eq!((h.edge_count(), map), (1, vec![0, 1]));
    assert_eq!(p4.induced_subgraph(&[]).unwrap().0.vertex_count(), 0);
    assert!(p4.induced_subgraph(&[4]).is_err());
    let (h, _) = cycle(6).induced_subgraph(&[2, 3, 4, 5]).unwrap();
    assert!(isomorphic(&h, &p4));
    let (h, map) = cycle(6).induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(map, (0..6).collect::<Vec<_>>());
    assert_eq!(h.edges().collect::<Vec<_>>(), cycle(6).edges().collect::<Vec<_>>());
}

#[test]
fn hypergraph_examples() {
    let h = neighbourhood_hypergraph(&bip(3, vec![vec![0, 2]]));
    assert_eq!((h.ground_size, h.hyperedges), (3, vec![vec![0, 2]]));
    assert!(neighbourhood_hypergraph(&BipartiteGraph::new(2, 0)).hyperedges.is_empty());
    let h = neighbourhood_hypergraph(&gen_crown(3).0);
    assert_eq!(h.hyperedges.len(), 3);
    assert!(h.hyperedges.iter().all(|e| e.len() == 2));
}

#[test]
fn family_shapes() {
    let g1 = gen_gk(1).unwrap();
    assert_eq!((g1.vertex_count(), g1.edge_count()), (1, 0));
    let g2 = gen_gk(2).unwrap();
    assert_eq!((g2.a_size(), g2.b_size()), (3, 1));
    for k in 2..=4 {
        let g = gen_gk(k).unwrap().to_graph();
        let max = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap();
        assert_eq!(max, 3usize.pow(k as u32 - 1));
        assert_eq!((0..g.vertex_count()).filter(|&v| g.degree(v) == max).count(), 1);
        assert_eq!(g.degree(g.vertex_count() - 1), max);
    }
    assert_eq!(gen_gk(3).unwrap().vertex_count(), 13);
    assert!(gen_gk(6).is_err());

    assert_eq!(gen_crown(2).0.edge_count(), 2);
    assert!(isomorphic(&gen_crown(3).0.to_graph(), &cycle(6)));
    let (g, w) = gen_crown(4);
    assert!(verify_support(&g, &w).unwrap());

    assert_eq!(gen_grid(1, 2).edge_count(), 1);
    assert!(isomorphic(&gen_grid(2, 2).to_graph(), &cycle(4)));
    let g = gen_grid(3, 3);
    assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
}

#[test]
fn augmentations() {
    let g = augment_star(&BipartiteGraph::new(2, 0));
    assert_eq!((g.a_size(), g.edge_count()), (3, 0));
    let grid = gen_grid(2, 2);
    let (comb, w) = augment_comb(&grid);
    assert_eq!(w.kind(), SupportKind::Comb);
    assert_eq!(comb.a_size(), 2 * grid.a_size());
    assert!(verify_support(&comb, &w).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..20 {
        let a = rng.gen_range(1..6);
        let g = bip(a, (0..rng.gen_range(0..5)).map(|_| (0..a).filter(|_| rng.gen_bool(0.5)).collect()).collect());
        let star = augment_star(&g);
        let w = recognize_star(&star).unwrap();
        assert!(verify_support(&star, &w).unwrap());
        // the added vertex is a valid centre; the smallest one is returned
        assert!(star.neighbourhoods().iter().all(|ns| ns.contains(&a)));
        let (comb, w) = augment_comb(&g);
        assert!(verify_support(&comb, &w).unwrap());
        // original labels kept
        for b in 0..g.b_size() {
            assert!(g.neighbourhood(b).iter().all(|&x| comb.has_edge(x, b)));
        }
    }
}

#[test]
fn generators_are_deterministic() {
    for seed in [0, 1, 99] {
        let shape = HostShape::Tree { t: 2, delta: 3 };
        assert_eq!(gen_random_hconvex(shape, 12, 8, seed).unwrap(), gen_random_hconvex(shape, 12, 8, seed).unwrap());
        assert_eq!(gen_random_chordal_bipartite(6, 6, seed), gen_random_chordal_bipartite(6, 6, seed));
    }
    let (g, w) = gen_random_hconvex(HostShape::Path, 5, 4, 1).unwrap();
    assert!(verify_support(&g, &w).unwrap());
    assert!(gen_random_hconvex(HostShape::Tree { t: 3, delta: 3 }, 4, 4, 0).is_err());
}
