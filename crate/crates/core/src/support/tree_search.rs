//! Exact search for degree-capped tree supports.
//!
//! Weight each vertex pair by the number of hyperedges containing both. Every
//! spanning tree has weight at most `Σ (|S| − 1)`, with equality exactly when
//! each hyperedge `S` induces a subtree, so the tree supports are precisely the
//! maximum-weight spanning trees when that total is attainable. Maximum
//! spanning trees all share the Kruskal component structure after each weight
//! level, so the search walks the levels from heavy to light and only decides,
//! within a level, which edges realise the forced merges. Everything a later
//! level can observe is the residual degree vector, which is what failed
//! states are memoised on. The last level (weight zero) joins the remaining
//! components and is solved in closed form.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::Hypergraph;

/// A spanning tree on the ground set in which every hyperedge induces a
/// subtree and vertex `i` has degree at most `caps[i]`, if one exists.
///
/// Edges are returned as sorted `(u, v)` pairs with `u < v`.
pub fn tree_support_degree_bounded(h: &Hypergraph, caps: &[usize]) -> Option<Vec<(usize, usize)>> {
    tree_support_branching_bounded(h, caps, usize::MAX)
}

/// As [`tree_support_degree_bounded`], with at most `budget` vertices of
/// degree three or more.
pub fn tree_support_branching_bounded(h: &Hypergraph, caps: &[usize], budget: usize) -> Option<Vec<(usize, usize)>> {
    let n = h.ground_size;
    assert_eq!(caps.len(), n, "one degree cap per ground vertex");
    if n <= 1 {
        return Some(Vec::new());
    }
    let weights = pair_weights(h);
    let target: usize = h.hyperedges.iter().map(|e| e.len().saturating_sub(1)).sum();
    let levels = build_levels(n, &weights);
    if max_spanning_weight(&levels) != target {
        return None;
    }
    let caps: Vec<usize> = caps.iter().map(|&c| c.min(n - 1)).collect();
    let mut search = Search {
        n,
        levels: &levels,
        residual: caps.clone(),
        caps,
        budget,
        branching: 0,
        chosen: Vec::new(),
        failed: BTreeSet::new(),
    };
    let dsu = Dsu::new(n);
    if search.level(0, dsu) {
        let mut edges: Vec<_> = search.chosen.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Some(edges)
    } else {
        None
    }
}

fn pair_weights(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.ground_size;
    let mut w = vec![vec![0usize; n]; n];
    for e in &h.hyperedges {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                w[u][v] += 1;
                w[v][u] += 1;
            }
        }
    }
    w
}

struct Level {
    weight: usize,
    edges: Vec<(usize, usize)>,
    merges: usize,
}

fn build_levels(n: usize, w: &[Vec<usize>]) -> Vec<Level> {
    let mut weights: Vec<usize> = w.iter().flatten().copied().filter(|&x| x > 0).collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    weights.dedup();
    let mut dsu = Dsu::new(n);
    let mut levels = Vec::new();
    for weight in weights {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| w[u][v] == weight && dsu.find(u) != dsu.find(v))
            .collect();
        let before = dsu.count;
        for &(u, v) in &edges {
            dsu.union(u, v);
        }
        if dsu.count < before {
            levels.push(Level {
                weight,
                edges,
                merges: before - dsu.count,
            });
        }
    }
    levels
}

fn max_spanning_weight(levels: &[Level]) -> usize {
    // every merge at a level uses one edge of that level's weight
    levels.iter().map(|l| l.merges * l.weight).sum()
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
    count: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so labels are canonical
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        self.count -= 1;
        true
    }
}

struct Search<'a> {
    n: usize,
    levels: &'a [Level],
    caps: Vec<usize>,
    residual: Vec<usize>,
    budget: usize,
    // vertices whose degree has reached three
    branching: usize,
    chosen: Vec<(usize, usize)>,
    failed: BTreeSet<Vec<u16>>,
}

impl Search<'_> {
    fn key(&self, level: usize, edge: usize, dsu: &mut Dsu) -> Vec<u16> {
        let mut key = Vec::with_capacity(2 + 2 * self.n);
        key.push(level as u16);
        key.push(edge as u16);
        key.extend(self.residual.iter().map(|&r| r as u16));
        key.extend((0..self.n).map(|v| dsu.find(v) as u16));
        key
    }

    fn used(&self, v: usize) -> usize {
        self.caps[v] - self.residual[v]
    }

    fn level(&mut self, index: usize, dsu: Dsu) -> bool {
        if index == self.levels.len() {
            return self.join_components(dsu);
        }
        let needed = self.levels[index].merges;
        self.within(index, 0, needed, dsu)
    }

    fn within(&mut self, index: usize, pos: usize, needed: usize, mut dsu: Dsu) -> bool {
        if needed == 0 {
            return self.level(index + 1, dsu);
        }
        let level = &self.levels[index];
        if level.edges.len() - pos < needed {
            return false;
        }
        let key = self.key(index, pos, &mut dsu);
        if self.failed.contains(&key) {
            return false;
        }
        let (u, v) = level.edges[pos];
        let grown = usize::from(self.used(u) == 2) + usize::from(self.used(v) == 2);
        if self.residual[u] > 0
            && self.residual[v] > 0
            && self.branching + grown <= self.budget
            && dsu.find(u) != dsu.find(v)
        {
            let mut next = dsu.clone();
            next.union(u, v);
            self.residual[u] -= 1;
            self.residual[v] -= 1;
            self.branching += grown;
            self.chosen.push((u, v));
            if self.within(index, pos + 1, needed - 1, next) {
                return true;
            }
            self.chosen.pop();
            self.branching -= grown;
            self.residual[u] += 1;
            self.residual[v] += 1;
        }
        if self.within(index, pos + 1, needed, dsu) {
            return true;
        }
        self.failed.insert(key);
        false
    }

    // Slots usable without a new branching vertex.
    fn cheap_slots(&self, v: usize) -> usize {
        if self.used(v) >= 3 {
            self.residual[v]
        } else {
            self.caps[v].min(2) - self.used(v)
        }
    }

    // Join the final components with weight-zero edges. When cheap slots
    // suffice the components are chained in order. Otherwise any degree sequence
    // `d_i ≥ 1` summing to `2(m − 1)` is realised by some tree on the
    // components, and a component absorbs `d` endpoints at the cost of the
    // fewest promotions to degree three covering what its cheap slots miss.
    // A knapsack over components picks the sequence.
    fn join_components(&mut self, mut dsu: Dsu) -> bool {
        let n = self.n;
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            members[dsu.find(v)].push(v);
        }
        let comps: Vec<Vec<usize>> = members.into_iter().filter(|m| !m.is_empty()).collect();
        let m = comps.len();
        if m == 1 {
            return true;
        }
        let total = 2 * (m - 1);
        let slack: Vec<usize> = comps.iter().map(|c| c.iter().map(|&v| self.cheap_slots(v)).sum()).collect();
        if slack.iter().all(|&s| s > 0) && slack.iter().sum::<usize>() >= total {
            for (ci, cj) in chain_layout(&slack) {
                let u = self.take_slot(&comps[ci]);
                let v = self.take_slot(&comps[cj]);
                self.chosen.push((u, v));
            }
            return true;
        }
        // cost[i][d]: promotions for d endpoints, None when out of reach
        let cost: Vec<Vec<Option<usize>>> = comps
            .iter()
            .map(|comp| {
                let cheap: usize = comp.iter().map(|&v| self.cheap_slots(v)).sum();
                let mut gains: Vec<usize> = comp
                    .iter()
                    .filter(|&&v| self.used(v) < 3 && self.caps[v] >= 3)
                    .map(|&v| self.caps[v] - 2)
                    .collect();
                gains.sort_unstable_by(|a, b| b.cmp(a));
                (0..=total)
                    .map(|d| {
                        let mut reach = cheap;
                        let mut promoted = 0;
                        while reach < d {
                            reach += *gains.get(promoted)?;
                            promoted += 1;
                        }
                        Some(promoted)
                    })
                    .collect()
            })
            .collect();
        // best[i][s]: fewest promotions giving the first i components s endpoints
        let mut best = vec![vec![None::<usize>; total + 1]; m + 1];
        best[0][0] = Some(0);
        for i in 0..m {
            for s in 0..=total {
                let Some(base) = best[i][s] else { continue };
                for d in 1..=total - s {
                    if let Some(c) = cost[i][d] {
                        let cand = base + c;
                        if best[i + 1][s + d].map_or(true, |b| cand < b) {
                            best[i + 1][s + d] = Some(cand);
                        }
                    }
                }
            }
        }
        match best[m][total] {
            Some(c) if self.branching + c <= self.budget => {}
            _ => return false,
        }
        let mut degree = vec![0; m];
        let mut s = total;
        for i in (0..m).rev() {
            let d = (1..=s)
                .find(|&d| match (best[i].get(s - d).copied().flatten(), cost[i][d]) {
                    (Some(b), Some(c)) => Some(b + c) == best[i + 1][s],
                    _ => false,
                })
                .expect("knapsack trace");
            degree[i] = d;
            s -= d;
        }
        for (ci, cj) in tree_with_degrees(&mut degree) {
            let u = self.take_slot(&comps[ci]);
            let v = self.take_slot(&comps[cj]);
            self.chosen.push((u, v));
        }
        debug_assert!(self.branching <= self.budget);
        true
    }

    // A cheap slot if any, else promote the vertex with the most headroom.
    fn take_slot(&mut self, comp: &[usize]) -> usize {
        let v = comp
            .iter()
            .copied()
            .find(|&v| self.cheap_slots(v) > 0)
            .or_else(|| {
                comp.iter()
                    .copied()
                    .filter(|&v| self.residual[v] > 0)
                    .max_by(|&a, &b| self.caps[a].cmp(&self.caps[b]).then(b.cmp(&a)))
            })
            .expect("knapsack left room");
        if self.used(v) == 2 {
            self.branching += 1;
        }
        self.residual[v] -= 1;
        v
    }
}

// Components with at least two free slots are chained in order; those with
// one slot hang off the free slots of the chain.
fn chain_layout(slack: &[usize]) -> Vec<(usize, usize)> {
    let m = slack.len();
    let hubs: Vec<usize> = (0..m).filter(|&i| slack[i] >= 2).collect();
    let leaves: Vec<usize> = (0..m).filter(|&i| slack[i] == 1).collect();
    if hubs.is_empty() {
        // m == 2 by the slack count
        return vec![(leaves[0], leaves[1])];
    }
    let mut edges = Vec::with_capacity(m - 1);
    let mut free = slack.to_vec();
    for w in hubs.windows(2) {
        edges.push((w[0], w[1]));
        free[w[0]] -= 1;
        free[w[1]] -= 1;
    }
    let mut hub = 0;
    for &leaf in &leaves {
        while free[hubs[hub]] == 0 {
            hub += 1;
        }
        edges.push((hubs[hub], leaf));
        free[hubs[hub]] -= 1;
    }
    edges
}

// Edges of a tree on `0..m` where node `i` has degree `degree[i]`; the
// degrees must be positive and sum to `2(m − 1)`.
fn tree_with_degrees(degree: &mut [usize]) -> Vec<(usize, usize)> {
    let m = degree.len();
    let mut edges = Vec::with_capacity(m - 1);
    let mut done = vec![false; m];
    for _ in 0..m - 2 {
        let leaf = (0..m).find(|&i| !done[i] && degree[i] == 1).expect("a leaf exists");
        let inner = (0..m).find(|&i| !done[i] && degree[i] >= 2).expect("an inner node exists");
        edges.push((inner, leaf));
        done[leaf] = true;
        degree[inner] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&i| !done[i]).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support::induces_connected;
    use crate::Graph;

    fn hyper(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::new(n, edges).unwrap()
    }

    fn check(h: &Hypergraph, caps: &[usize], tree: &[(usize, usize)]) {
        let g = Graph::from_edges(h.ground_size, tree.iter().copied()).unwrap();
        assert_eq!(tree.len(), h.ground_size - 1);
        assert!(g.is_connected());
        for (v, &cap) in caps.iter().enumerate() {
            assert!(g.degree(v) <= cap);
        }
        for e in &h.hyperedges {
            assert!(induces_connected(&g, e));
        }
    }

    #[test]
    fn single_pair_on_three() {
        let h = hyper(3, vec![vec![0, 1]]);
        let t = tree_support_degree_bounded(&h, &[2, 2, 2]).unwrap();
        check(&h, &[2, 2, 2], &t);
        assert!(t.contains(&(0, 1)));
    }

    #[test]
    fn claw_needs_degree_three() {
        let h = hyper(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert_eq!(tree_support_degree_bounded(&h, &[2, 2, 2, 2]), None);
        let t = tree_support_degree_bounded(&h, &[3, 2, 2, 2]).unwrap();
        assert_eq!(t, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn no_hyperedges_gives_identity_path() {
        let h = hyper(4, vec![]);
        assert_eq!(tree_support_degree_bounded(&h, &[2; 4]).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn branching_budget() {
        // two disjoint claws need two branching vertices
        let h = hyper(8, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![4, 5], vec![4, 6], vec![4, 7]]);
        assert_eq!(tree_support_branching_bounded(&h, &[3; 8], 1), None);
        let t = tree_support_branching_bounded(&h, &[3; 8], 2).unwrap();
        check(&h, &[3; 8], &t);
        // the join may need a new branching vertex
        let star = hyper(5, vec![]);
        let t = tree_support_branching_bounded(&star, &[4, 1, 1, 1, 1], 1).unwrap();
        check(&star, &[4, 1, 1, 1, 1], &t);
        assert_eq!(tree_support_branching_bounded(&star, &[4, 1, 1, 1, 1], 0), None);
    }

    #[test]
    fn degree_sequence_tree() {
        let mut d = vec![1, 3, 1, 2, 1];
        let edges = tree_with_degrees(&mut d);
        let g = Graph::from_edges(5, edges).unwrap();
        assert!(g.is_connected());
        assert_eq!((0..5).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1, 3, 1, 2, 1]);
    }

    #[test]
    fn triangle_of_pairs_has_no_tree_support() {
        let h = hyper(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(tree_support_degree_bounded(&h, &[2; 3]), None);
    }
}
