//! Deterministic and seeded instance generators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chordal::is_chordal_bipartite;
use crate::{BipartiteGraph, Error, Result, SupportKind, SupportWitness};

/// Largest `k` accepted by [`gen_gk`].
pub const GK_GUARD: usize = 5;

/// The recursive family `G_k`: `G_1` is a single `A`-vertex; `G_k` is three
/// copies of `G_{k−1}` plus one `B`-vertex complete to the union of their
/// `A`-sides.
pub fn gen_gk(k: usize) -> Result<BipartiteGraph> {
    if k == 0 || k > GK_GUARD {
        return Err(Error::InfeasibleParameters(format!("G_k needs 1 <= k <= {GK_GUARD}, got {k}")));
    }
    let mut a_size = 1;
    let mut nbrs: Vec<Vec<usize>> = Vec::new();
    for _ in 1..k {
        let mut next = Vec::with_capacity(3 * nbrs.len() + 1);
        for copy in 0..3 {
            let shift = copy * a_size;
            next.extend(nbrs.iter().map(|ns| ns.iter().map(|&a| a + shift).collect::<Vec<_>>()));
        }
        a_size *= 3;
        next.push((0..a_size).collect());
        nbrs = next;
    }
    BipartiteGraph::from_neighbourhoods(a_size, nbrs)
}

/// The crown `K_{n,n}` minus the matching `a_i b_i`, with the cycle
/// `a_0 … a_{n−1}` as support.
pub fn gen_crown(n: usize) -> (BipartiteGraph, SupportWitness) {
    let nbrs = (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect();
    let g = BipartiteGraph::from_neighbourhoods(n, nbrs).expect("labels in range");
    let order: Vec<usize> = (0..n).collect();
    (g, SupportWitness::cycle(&order).expect("identity order"))
}

/// The `r × c` grid. Cells with `i + j` even form `A` and the others `B`,
/// each side numbered in row-major order.
pub fn gen_grid(r: usize, c: usize) -> BipartiteGraph {
    let mut index = vec![0; r * c];
    let (mut a, mut b) = (0, 0);
    for i in 0..r {
        for j in 0..c {
            let slot = if (i + j) % 2 == 0 { &mut a } else { &mut b };
            index[i * c + j] = *slot;
            *slot += 1;
        }
    }
    let mut g = BipartiteGraph::new(a, b);
    for i in 0..r {
        for j in 0..c {
            if (i + j) % 2 == 1 {
                continue;
            }
            let here = index[i * c + j];
            let around = [
                (i > 0).then(|| (i - 1, j)),
                (i + 1 < r).then(|| (i + 1, j)),
                (j > 0).then(|| (i, j - 1)),
                (j + 1 < c).then(|| (i, j + 1)),
            ];
            for (x, y) in around.into_iter().flatten() {
                g.add_edge(here, index[x * c + y]).expect("grid edges are distinct");
            }
        }
    }
    g
}

/// One new `A`-vertex complete to `B`; the result is star convex.
pub fn augment_star(g: &BipartiteGraph) -> BipartiteGraph {
    g.with_universal_a(1)
}

/// `|A|` new `A`-vertices complete to `B`, with the comb whose backbone is the
/// new vertices in order and whose tooth at the `i`-th new vertex is `a_i`.
pub fn augment_comb(g: &BipartiteGraph) -> (BipartiteGraph, SupportWitness) {
    let n = g.a_size();
    let out = g.with_universal_a(n);
    let edges: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, n + i))
        .chain((1..n).map(|i| (n + i - 1, n + i)))
        .collect();
    let w = SupportWitness::new(SupportKind::Comb, 2 * n, &edges).expect("comb edges are simple");
    (out, w)
}

/// Host family for [`gen_random_hconvex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostShape {
    Path,
    Cycle,
    /// A tree with exactly `t` vertices of degree at least three, the first of
    /// degree `delta` and the rest between 3 and `delta`.
    Tree { t: usize, delta: usize },
}

/// A random bipartite graph with a planted support of the given shape.
///
/// The host is built on a random labelling of `A`; each `N(b)` starts at a
/// random vertex and grows by random adjacent host vertices, stopping after
/// each step with probability one half.
pub fn gen_random_hconvex(
    shape: HostShape,
    a_size: usize,
    b_size: usize,
    seed: u64,
) -> Result<(BipartiteGraph, SupportWitness)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (kind, shape_edges) = match shape {
        HostShape::Path => (SupportKind::Path, (1..a_size).map(|i| (i - 1, i)).collect()),
        HostShape::Cycle => {
            let mut edges: Vec<(usize, usize)> = (1..a_size).map(|i| (i - 1, i)).collect();
            if a_size >= 3 {
                edges.push((a_size - 1, 0));
            }
            (SupportKind::Cycle, edges)
        }
        HostShape::Tree { t, delta } => (SupportKind::Tree, random_spider_chain(t, delta, a_size, &mut rng)?),
    };
    let mut label: Vec<usize> = (0..a_size).collect();
    label.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = shape_edges.iter().map(|&(u, v)| (label[u], label[v])).collect();
    let w = SupportWitness::new(kind, a_size, &edges)?;
    let mut nbrs = Vec::with_capacity(b_size);
    for _ in 0..b_size {
        nbrs.push(random_connected_set(&w, &mut rng));
    }
    Ok((BipartiteGraph::from_neighbourhoods(a_size, nbrs)?, w))
}

// Hubs 0..t chained in order, each carrying legs; extra vertices lengthen
// random legs.
fn random_spider_chain(t: usize, delta: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    if t == 0 {
        return Ok((1..n).map(|i| (i - 1, i)).collect());
    }
    if delta < 3 {
        return Err(Error::InfeasibleParameters(format!("branching vertices need delta >= 3, got {delta}")));
    }
    let chain_degree = |i: usize| usize::from(i > 0) + usize::from(i + 1 < t);
    let legs_needed = |degrees: &[usize]| -> usize { degrees.iter().enumerate().map(|(i, &d)| d - chain_degree(i)).sum() };
    let mut degrees = vec![3; t];
    degrees[0] = delta;
    let minimum = t + legs_needed(&degrees);
    if n < minimum {
        return Err(Error::InfeasibleParameters(format!(
            "a tree with {t} branching vertices of degree up to {delta} needs at least {minimum} vertices, got {n}"
        )));
    }
    for i in 1..t {
        let room = n - t - legs_needed(&degrees);
        let extra = rng.gen_range(0..=(delta - 3).min(room));
        degrees[i] += extra;
    }
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut leg_ends: Vec<usize> = Vec::new();
    let mut next = t;
    for (i, &d) in degrees.iter().enumerate() {
        for _ in 0..d - chain_degree(i) {
            edges.push((i, next));
            leg_ends.push(next);
            next += 1;
        }
    }
    while next < n {
        let leg = rng.gen_range(0..leg_ends.len());
        edges.push((leg_ends[leg], next));
        leg_ends[leg] = next;
        next += 1;
    }
    Ok(edges)
}

fn random_connected_set(w: &SupportWitness, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = w.a_size();
    if n == 0 {
        return Vec::new();
    }
    let host = w.host();
    let mut inside = vec![false; n];
    let start = rng.gen_range(0..n);
    inside[start] = true;
    let mut set = vec![start];
    while rng.gen_bool(0.5) {
        let frontier: Vec<usize> = (0..n)
            .filter(|&v| !inside[v] && host.neighbors(v).iter().any(|&x| inside[x]))
            .collect();
        let Some(&v) = frontier.choose(rng) else { break };
        inside[v] = true;
        set.push(v);
    }
    set.sort_unstable();
    set
}

/// A random chordal bipartite graph: edges are offered in random order and
/// kept whenever the graph stays chordal bipartite.
pub fn gen_random_chordal_bipartite(a_size: usize, b_size: usize, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..a_size).flat_map(|a| (0..b_size).map(move |b| (a, b))).collect();
    pairs.shuffle(&mut rng);
    let keep = rng.gen_range(pairs.len() / 3..=pairs.len());
    let mut g = BipartiteGraph::new(a_size, b_size);
    for &(a, b) in &pairs[..keep] {
        let mut trial = g.clone();
        trial.add_edge(a, b).expect("pairs are distinct");
        if is_chordal_bipartite(&trial) {
            g = trial;
        }
    }
    g
}
