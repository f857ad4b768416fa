//! Induced-subgraph search for small patterns.

use alloc::vec;
use alloc::vec::Vec;

use crate::Graph;

/// Triangle `x y z` with one pendant vertex on each corner (`K3⊟S3`).
pub fn triangle_with_pendants() -> Graph {
    // x=0, y=1, z=2, x'=3, y'=4, z'=5
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// Two triangles joined by a perfect matching (`K3⊟K3`).
pub fn triangular_prism() -> Graph {
    // a1=0, b1=1, c1=2, a2=3, b2=4, c2=5
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// Does `g` contain an induced subgraph isomorphic to `pattern`?
pub fn has_induced_pattern(g: &Graph, pattern: &Graph) -> bool {
    find_induced_pattern(g, pattern).is_some()
}

/// An injective map `pattern → g` that preserves edges and non-edges, if any.
pub fn find_induced_pattern(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > g.vertex_count() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let order = search_order(pattern);
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.vertex_count()];
    if extend(g, pattern, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

// Pattern vertices ordered so that each (after the first in its component)
// has an earlier neighbour; high degree first.
fn search_order(p: &Graph) -> Vec<usize> {
    let k = p.vertex_count();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = p.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (links, p.degree(v), core::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn extend(g: &Graph, p: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let anchor = order[..depth].iter().copied().find(|&q| p.has_edge(pv, q));
    let candidates: Vec<usize> = match anchor {
        Some(q) => g.neighbors(image[q]).to_vec(),
        None => (0..g.vertex_count()).collect(),
    };
    for gv in candidates {
        if used[gv] || g.degree(gv) < p.degree(pv) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| p.has_edge(pv, q) == g.has_edge(gv, image[q]));
        if !consistent {
            continue;
        }
        image[pv] = gv;
        used[gv] = true;
        if extend(g, p, order, depth + 1, image, used) {
            return true;
        }
        used[gv] = false;
        image[pv] = usize::MAX;
    }
    false
}
