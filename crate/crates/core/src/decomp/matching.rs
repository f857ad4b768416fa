//! Exact maximum induced matchings across a vertex cut.
//!
//! Both cut functions reduce to a maximum independent set in the conflict
//! graph on the crossing edges, solved by branch and bound.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::canonical_subset;
use crate::{Graph, Result};

/// A maximum induced matching across a cut, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMatching {
    pub size: usize,
    /// Matched pairs `(x, y)` with `x` in the side and `y` outside it.
    pub edges: Vec<(usize, usize)>,
}

/// Largest induced matching of the bipartite graph `G[X, V∖X]`.
pub fn max_induced_matching_cut(g: &Graph, side: &[usize]) -> Result<InducedMatching> {
    let side = canonical_subset(side, g.vertex_count())?;
    Ok(solve(g, &membership(g, &side, None), false))
}

/// Largest induced matching of `G` whose edges all cross `(X, V∖X)`.
pub fn max_induced_matching_sim(g: &Graph, side: &[usize]) -> Result<InducedMatching> {
    let side = canonical_subset(side, g.vertex_count())?;
    Ok(solve(g, &membership(g, &side, None), true))
}

/// `Some(true)` in the side, `Some(false)` outside it, `None` if absent.
pub(crate) fn membership(g: &Graph, side: &[usize], present: Option<&[bool]>) -> Vec<Option<bool>> {
    let n = g.vertex_count();
    let mut m: Vec<Option<bool>> = match present {
        Some(p) => p.iter().map(|&x| if x { Some(false) } else { None }).collect(),
        None => vec![Some(false); n],
    };
    for &v in side {
        if m[v].is_some() {
            m[v] = Some(true);
        }
    }
    m
}

pub(crate) fn solve(g: &Graph, member: &[Option<bool>], sim: bool) -> InducedMatching {
    let cross: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| match (member[u], member[v]) {
            (Some(true), Some(false)) => Some((u, v)),
            (Some(false), Some(true)) => Some((v, u)),
            _ => None,
        })
        .collect();
    let k = cross.len();
    if k == 0 {
        return InducedMatching { size: 0, edges: Vec::new() };
    }
    let mut conflict = vec![FixedBitSet::with_capacity(k); k];
    for i in 0..k {
        let (x, y) = cross[i];
        for j in i + 1..k {
            let (x2, y2) = cross[j];
            let clash = x == x2
                || y == y2
                || g.has_edge(x, y2)
                || g.has_edge(x2, y)
                || (sim && (g.has_edge(x, x2) || g.has_edge(y, y2)));
            if clash {
                conflict[i].insert(j);
                conflict[j].insert(i);
            }
        }
    }
    let mut mis = Mis {
        cross: &cross,
        conflict: &conflict,
        best: Vec::new(),
        current: Vec::new(),
        n: g.vertex_count(),
    };
    mis.greedy();
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    mis.search(all);
    let mut edges: Vec<_> = mis.best.iter().map(|&i| cross[i]).collect();
    edges.sort_unstable();
    InducedMatching { size: edges.len(), edges }
}

struct Mis<'a> {
    cross: &'a [(usize, usize)],
    conflict: &'a [FixedBitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    n: usize,
}

impl Mis<'_> {
    fn greedy(&mut self) {
        let k = self.cross.len();
        let mut alive = FixedBitSet::with_capacity(k);
        alive.insert_range(..);
        let mut picked = Vec::new();
        while let Some(v) = alive
            .ones()
            .min_by_key(|&v| self.conflict[v].intersection(&alive).count())
        {
            picked.push(v);
            alive.set(v, false);
            alive.difference_with(&self.conflict[v]);
        }
        self.best = picked;
    }

    // Distinct endpoints on either side bound any matching among `cand`.
    fn bound(&self, cand: &FixedBitSet) -> usize {
        let mut xs = FixedBitSet::with_capacity(self.n);
        let mut ys = FixedBitSet::with_capacity(self.n);
        for i in cand.ones() {
            xs.insert(self.cross[i].0);
            ys.insert(self.cross[i].1);
        }
        xs.count_ones(..).min(ys.count_ones(..))
    }

    fn search(&mut self, mut cand: FixedBitSet) {
        let pushed = self.current.len();
        // take vertices with at most one candidate neighbour; some optimum uses them
        loop {
            let forced = cand.ones().find(|&v| self.conflict[v].intersection(&cand).take(2).count() <= 1);
            match forced {
                Some(v) => {
                    self.current.push(v);
                    cand.set(v, false);
                    cand.difference_with(&self.conflict[v]);
                }
                None => break,
            }
        }
        if cand.is_clear() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + self.bound(&cand) > self.best.len() {
            let v = cand
                .ones()
                .max_by_key(|&v| (self.conflict[v].intersection(&cand).count(), usize::MAX - v))
                .expect("candidates are non-empty");
            let mut with = cand.clone();
            with.set(v, false);
            with.difference_with(&self.conflict[v]);
            self.current.push(v);
            self.search(with);
            self.current.pop();
            cand.set(v, false);
            self.search(cand);
        }
        self.current.truncate(pushed);
    }
}
