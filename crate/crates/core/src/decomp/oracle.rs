//! Exact mim-width and sim-width for small graphs.
//!
//! Subcubic trees with leaves `0..k` are grown one leaf at a time by
//! subdividing an edge and hanging the new leaf there; every cubic tree on
//! `k + 1` leaves arises exactly once this way. A tree is kept as the list of
//! its edge splits (the side not containing leaf 0). Widths of the partial
//! trees, measured on the induced subgraph of the placed vertices, never
//! decrease as leaves are added, which bounds the search.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::matching::solve;
use super::CutMode;
use crate::{Error, Graph, Result};

/// Largest instance the oracles accept unless told otherwise.
pub const DEFAULT_WIDTH_GUARD: usize = 8;

/// Exact mim-width of `g`.
pub fn mimw_oracle(g: &Graph, guard: usize) -> Result<usize> {
    width_oracle(g, CutMode::Mim, guard)
}

/// Exact sim-width of `g`.
pub fn simw_oracle(g: &Graph, guard: usize) -> Result<usize> {
    width_oracle(g, CutMode::Sim, guard)
}

/// Minimum over all branch decompositions of the width under `mode`.
pub fn width_oracle(g: &Graph, mode: CutMode, guard: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > guard || n > 32 {
        return Err(Error::GuardExceeded { size: n, guard: guard.min(32) });
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut search = Search {
        g,
        sim: mode == CutMode::Sim,
        n,
        memo: BTreeMap::new(),
        best: usize::MAX,
        floor: usize::from(g.edge_count() > 0),
    };
    if n == 2 {
        return Ok(search.cut(0b01, 0b11));
    }
    let splits = vec![0b110, 0b010, 0b100];
    let width = splits.iter().map(|&s| search.cut(s, 0b111)).max().unwrap_or(0);
    search.grow(3, &splits, width);
    Ok(search.best)
}

struct Search<'a> {
    g: &'a Graph,
    sim: bool,
    n: usize,
    memo: BTreeMap<(u32, u32), usize>,
    best: usize,
    floor: usize,
}

impl Search<'_> {
    fn cut(&mut self, side: u32, present: u32) -> usize {
        if let Some(&v) = self.memo.get(&(side, present)) {
            return v;
        }
        let member: Vec<Option<bool>> = (0..self.n)
            .map(|v| (present >> v & 1 == 1).then_some(side >> v & 1 == 1))
            .collect();
        let value = solve(self.g, &member, self.sim).size;
        self.memo.insert((side, present), value);
        value
    }

    fn grow(&mut self, k: usize, splits: &[u32], width: usize) {
        if width >= self.best || self.best == self.floor {
            return;
        }
        if k == self.n {
            self.best = width;
            return;
        }
        let leaf = 1u32 << k;
        let present = (leaf << 1) - 1;
        for e in 0..splits.len() {
            let se = splits[e];
            let mut next = Vec::with_capacity(splits.len() + 2);
            for (f, &sf) in splits.iter().enumerate() {
                if f != e {
                    next.push(if se & !sf == 0 { sf | leaf } else { sf });
                }
            }
            next.extend([se, se | leaf, leaf]);
            let mut w = 0;
            for &s in &next {
                w = w.max(self.cut(s, present));
                if w >= self.best {
                    break;
                }
            }
            self.grow(k + 1, &next, w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mimw_oracle(&Graph::new(0), 8).unwrap(), 0);
        assert_eq!(mimw_oracle(&Graph::new(5), 8).unwrap(), 0);
        assert_eq!(mimw_oracle(&Graph::from_edges(2, [(0, 1)]).unwrap(), 8).unwrap(), 1);
        assert_eq!(mimw_oracle(&complete(6), 8).unwrap(), 1);
        assert_eq!(simw_oracle(&complete(6), 8).unwrap(), 1);
    }

    #[test]
    fn cycles() {
        assert_eq!(mimw_oracle(&cycle(5), 8).unwrap(), 2);
        assert_eq!(mimw_oracle(&cycle(6), 8).unwrap(), 2);
        // three cherries: every split keeps an edge on one side
        assert_eq!(simw_oracle(&cycle(6), 8).unwrap(), 1);
        assert_eq!(simw_oracle(&cycle(3), 8).unwrap(), 1);
    }

    #[test]
    fn paths_have_width_one() {
        let p = Graph::from_edges(7, (1..7).map(|i| (i - 1, i))).unwrap();
        assert_eq!(mimw_oracle(&p, 8).unwrap(), 1);
    }

    #[test]
    fn guard() {
        assert_eq!(
            mimw_oracle(&Graph::new(9), 8),
            Err(Error::GuardExceeded { size: 9, guard: 8 })
        );
    }

    // unpruned enumeration of every cubic tree
    fn exhaustive(g: &Graph, sim: bool) -> usize {
        fn rec(g: &Graph, sim: bool, k: usize, splits: &[u32], best: &mut usize) {
            let n = g.vertex_count();
            if k == n {
                let all = (1u32 << n) - 1;
                let w = splits
                    .iter()
                    .map(|&s| {
                        let member: Vec<Option<bool>> =
                            (0..n).map(|v| (all >> v & 1 == 1).then_some(s >> v & 1 == 1)).collect();
                        solve(g, &member, sim).size
                    })
                    .max()
                    .unwrap();
                *best = (*best).min(w);
                return;
            }
            let leaf = 1u32 << k;
            for e in 0..splits.len() {
                let se = splits[e];
                let mut next: Vec<u32> = splits
                    .iter()
                    .enumerate()
                    .filter(|&(f, _)| f != e)
                    .map(|(_, &sf)| if se & !sf == 0 { sf | leaf } else { sf })
                    .collect();
                next.extend([se, se | leaf, leaf]);
                rec(g, sim, k + 1, &next, best);
            }
        }
        let mut best = usize::MAX;
        rec(g, sim, 3, &[0b110, 0b010, 0b100], &mut best);
        best
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]
        #[test]
        fn pruned_search_is_exact(n in 3usize..7, bits in proptest::collection::vec(proptest::prelude::any::<bool>(), 21)) {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            let mim = mimw_oracle(&g, 8).unwrap();
            let sim = simw_oracle(&g, 8).unwrap();
            proptest::prop_assert_eq!(mim, exhaustive(&g, false));
            proptest::prop_assert_eq!(sim, exhaustive(&g, true));
            proptest::prop_assert!(sim <= mim);
        }
    }

    // number of cubic trees with k labelled leaves is (2k-5)!!
    #[test]
    fn enumeration_counts() {
        fn count(k: usize, n: usize, splits: &[u32]) -> usize {
            if k == n {
                return 1;
            }
            let leaf = 1u32 << k;
            (0..splits.len())
                .map(|e| {
                    let se = splits[e];
                    let mut next: Vec<u32> = splits
                        .iter()
                        .enumerate()
                        .filter(|&(f, _)| f != e)
                        .map(|(_, &sf)| if se & !sf == 0 { sf | leaf } else { sf })
                        .collect();
                    next.extend([se, se | leaf, leaf]);
                    count(k + 1, n, &next)
                })
                .sum()
        }
        assert_eq!(count(3, 6, &[0b110, 0b010, 0b100]), 105);
        // split systems are distinct trees
        fn collect(k: usize, n: usize, splits: &[u32], out: &mut Vec<Vec<u32>>) {
            if k == n {
                let mut s = splits.to_vec();
                s.sort_unstable();
                out.push(s);
                return;
            }
            let leaf = 1u32 << k;
            for e in 0..splits.len() {
                let se = splits[e];
                let mut next: Vec<u32> = splits
                    .iter()
                    .enumerate()
                    .filter(|&(f, _)| f != e)
                    .map(|(_, &sf)| if se & !sf == 0 { sf | leaf } else { sf })
                    .collect();
                next.extend([se, se | leaf, leaf]);
                collect(k + 1, n, &next, out);
            }
        }
        let mut all = Vec::new();
        collect(3, 6, &[0b110, 0b010, 0b100], &mut all);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 105);
    }
}
