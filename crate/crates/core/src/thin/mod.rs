//! Thinness and proper thinness.
//!
//! An ordering with a partition into classes is *consistent* when, for every
//! `r < s < t` with `v_r, v_s` in one class and `v_r v_t ∈ E`, also
//! `v_s v_t ∈ E`. It is *strongly consistent* when in addition, for `v_s, v_t`
//! in one class and `v_r v_t ∈ E`, also `v_r v_s ∈ E`.

mod oracle;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::{width_of, BranchDecomposition, CutMode};
use crate::support::verify_support;
use crate::{BipartiteGraph, Error, Graph, Result, SupportWitness};

pub use oracle::{min_thin_representation, pthin_oracle, thin_oracle, DEFAULT_THIN_GUARD};

/// A vertex ordering with a partition of the vertices into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinRepresentation {
    order: Vec<usize>,
    classes: Vec<Vec<usize>>,
    strong: bool,
}

impl ThinRepresentation {
    /// Validate against a graph on `n` vertices. Classes must be non-empty
    /// and partition `0..n`; `strong` records the claimed strength.
    pub fn new(order: Vec<usize>, classes: Vec<Vec<usize>>, strong: bool, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::MalformedRepresentation(format!(
                "order has {} entries for {n} vertices",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::MalformedRepresentation(format!("order is not a permutation at {v}")));
            }
            seen[v] = true;
        }
        let mut owner = vec![usize::MAX; n];
        let mut classes = classes;
        for (j, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::MalformedRepresentation(format!("class {j} is empty")));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n || owner[v] != usize::MAX {
                    return Err(Error::MalformedRepresentation(format!("vertex {v} is not in exactly one class")));
                }
                owner[v] = j;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::MalformedRepresentation(format!("vertex {v} is in no class")));
        }
        Ok(ThinRepresentation { order, classes, strong })
    }

    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    #[inline]
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn is_strong(&self) -> bool {
        self.strong
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    fn class_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.order.len()];
        for (j, class) in self.classes.iter().enumerate() {
            for &v in class {
                owner[v] = j;
            }
        }
        owner
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.vertex_count() != g.vertex_count() {
            return Err(Error::MalformedRepresentation(format!(
                "representation has {} vertices, graph has {}",
                self.vertex_count(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Does every co-classed pair `r < s` and later neighbour `t` of `r` have
/// `t` adjacent to `s` as well?
pub fn verify_consistent(g: &Graph, r: &ThinRepresentation) -> Result<bool> {
    r.check_size(g)?;
    Ok(forward_ok(g, r))
}

/// Both triple conditions. Agrees with the characterization that
/// `N[v] ∩ (V^j ∪ {v})` is consecutive in `V^j ∪ {v}` for every `v` and `j`.
pub fn verify_strongly_consistent(g: &Graph, r: &ThinRepresentation) -> Result<bool> {
    r.check_size(g)?;
    let triples = forward_ok(g, r) && backward_ok(g, r);
    debug_assert_eq!(triples, closed_neighbourhoods_consecutive(g, r));
    Ok(triples)
}

// For each t and class j, the neighbours of t among earlier class-j vertices
// form a suffix of them.
fn forward_ok(g: &Graph, r: &ThinRepresentation) -> bool {
    let owner = r.class_of();
    let k = r.class_count();
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &t in r.order() {
        for class in &earlier {
            if let Some(first) = class.iter().position(|&x| g.has_edge(x, t)) {
                if !class[first..].iter().all(|&x| g.has_edge(x, t)) {
                    return false;
                }
            }
        }
        earlier[owner[t]].push(t);
    }
    true
}

// For each r and class j, the neighbours of r among later class-j vertices
// form a prefix of them.
fn backward_ok(g: &Graph, r: &ThinRepresentation) -> bool {
    let owner = r.class_of();
    let k = r.class_count();
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &v in r.order().iter().rev() {
        for class in &later {
            // `later` holds the farthest vertex first, so the prefix is a suffix of the list
            if let Some(first) = class.iter().position(|&x| g.has_edge(x, v)) {
                if !class[first..].iter().all(|&x| g.has_edge(x, v)) {
                    return false;
                }
            }
        }
        later[owner[v]].push(v);
    }
    true
}

/// The closed-neighbourhood form of strong consistency: for every vertex `v`
/// and class `V^j`, `N[v] ∩ (V^j ∪ {v})` is consecutive in `V^j ∪ {v}`.
pub fn closed_neighbourhoods_consecutive(g: &Graph, r: &ThinRepresentation) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in r.order().iter().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        for class in r.classes() {
            let mut members: Vec<usize> = class.clone();
            if !members.contains(&v) {
                members.push(v);
            }
            members.sort_unstable_by_key(|&x| pos[x]);
            let hit: Vec<bool> = members.iter().map(|&x| x == v || g.has_edge(x, v)).collect();
            let first = hit.iter().position(|&h| h);
            let last = hit.iter().rposition(|&h| h);
            if let (Some(a), Some(b)) = (first, last) {
                if !hit[a..=b].iter().all(|&h| h) {
                    return false;
                }
            }
        }
    }
    true
}

/// A consistent representation with at most `2 + t(Δ − 2)` classes from a
/// tree support with `t` branching vertices and maximum degree `Δ`.
///
/// `B` is one class. The support is rooted at its least leaf; each node's
/// least child continues the parent's class and every other child opens a new
/// one. `A` follows the postorder and each `b` comes right after its last
/// neighbour; vertices of `B` without neighbours close the order.
pub fn thin_from_tree_support(g: &BipartiteGraph, w: &SupportWitness) -> Result<ThinRepresentation> {
    if !verify_support(g, w)? || !w.is_tree() {
        return Err(Error::InvalidWitness("witness is not a tree support of the graph".into()));
    }
    let n = g.a_size();
    let host = w.host();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    if g.b_size() > 0 {
        classes.push((0..g.b_size()).map(|b| g.b_vertex(b)).collect());
    }
    let mut post = Vec::with_capacity(n);
    if n > 0 {
        let root = (0..n).find(|&v| host.degree(v) <= 1).expect("trees have leaves");
        let mut class_of = vec![usize::MAX; n];
        class_of[root] = classes.len();
        classes.push(vec![root]);
        // iterative DFS producing preorder class labels and postorder
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            let children: Vec<usize> = host.neighbors(v).iter().copied().filter(|&c| c != parent).collect();
            if *next < children.len() {
                let c = children[*next];
                let first = *next == 0;
                *next += 1;
                if first {
                    class_of[c] = class_of[v];
                    classes[class_of[v]].push(c);
                } else {
                    class_of[c] = classes.len();
                    classes.push(vec![c]);
                }
                stack.push((c, v, 0));
            } else {
                post.push(v);
                stack.pop();
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &a) in post.iter().enumerate() {
        pos[a] = i;
    }
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut isolated = Vec::new();
    for b in 0..g.b_size() {
        match g.neighbourhood(b).iter().map(|&a| pos[a]).max() {
            Some(p) => after[p].push(g.b_vertex(b)),
            None => isolated.push(g.b_vertex(b)),
        }
    }
    let mut order = Vec::with_capacity(g.vertex_count());
    for (i, &a) in post.iter().enumerate() {
        order.push(a);
        order.extend_from_slice(&after[i]);
    }
    order.extend(isolated);
    ThinRepresentation::new(order, classes, false, g.vertex_count())
}

/// The caterpillar over the representation's order; its mim-width is at most
/// the number of classes.
pub fn linear_bd_from_thin(g: &Graph, r: &ThinRepresentation) -> Result<BranchDecomposition> {
    if !verify_consistent(g, r)? {
        return Err(Error::InconsistentRepresentation);
    }
    let d = BranchDecomposition::caterpillar_from_ordering(r.order())?;
    debug_assert!(width_of(g, &d, CutMode::Mim)?.0 <= r.class_count());
    Ok(d)
}

/// A sequence of bags covering the vertices and edges, with the bags holding
/// any one vertex consecutive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        PathDecomposition { bags }
    }

    /// Largest bag size minus one (0 without bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }
}

/// Validity of `p` for `g`, with its width.
pub fn verify_pathdecomp(g: &Graph, p: &PathDecomposition) -> (bool, usize) {
    (interval_of_bags(g, p).is_ok(), p.width())
}

// First and last bag of every vertex, or why `p` is not a path decomposition.
fn interval_of_bags(g: &Graph, p: &PathDecomposition) -> Result<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut span: Vec<Option<(usize, usize)>> = vec![None; n];
    for (i, bag) in p.bags.iter().enumerate() {
        let mut seen_here = Vec::with_capacity(bag.len());
        for &v in bag {
            if v >= n {
                return Err(Error::InvalidPathDecomposition(format!("bag {i} holds unknown vertex {v}")));
            }
            if seen_here.contains(&v) {
                continue;
            }
            seen_here.push(v);
            span[v] = match span[v] {
                None => Some((i, i)),
                Some((first, last)) if last + 1 == i => Some((first, i)),
                Some(_) => {
                    return Err(Error::InvalidPathDecomposition(format!("bags holding {v} are not consecutive")))
                }
            };
        }
    }
    let span: Vec<(usize, usize)> = span
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidPathDecomposition(format!("vertex {v} is in no bag"))))
        .collect::<Result<_>>()?;
    for (u, v) in g.edges() {
        let (a, b) = (span[u], span[v]);
        if a.0.max(b.0) > a.1.min(b.1) {
            return Err(Error::InvalidPathDecomposition(format!("no bag holds edge {u}-{v}")));
        }
    }
    Ok(span)
}

/// A strongly consistent representation with at most `2^q (q + 1)` classes
/// from a path decomposition of width `q`.
///
/// Vertices are ordered by first bag and coloured greedily so that no two
/// vertices sharing a bag get the same colour; each vertex then has at most
/// one earlier neighbour of each colour. Each colour class is split by the
/// set of other colours among a vertex's earlier neighbours.
pub fn pathdecomp_to_pthin(g: &Graph, p: &PathDecomposition) -> Result<ThinRepresentation> {
    let span = interval_of_bags(g, p)?;
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (span[v].0, v));
    let mut colour = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        let used: Vec<usize> = order[..i]
            .iter()
            .filter(|&&u| span[u].1 >= span[v].0)
            .map(|&u| colour[u])
            .collect();
        colour[v] = (0..).find(|c| !used.contains(c)).expect("some colour is free");
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // key: (colour, bitmask of colours of earlier neighbours)
    let mut keyed: Vec<((usize, u64), usize)> = (0..n)
        .map(|v| {
            let mut mask = 0u64;
            for &u in g.neighbors(v) {
                if pos[u] < pos[v] {
                    debug_assert!(mask >> colour[u] & 1 == 0, "at most one earlier neighbour per colour");
                    mask |= 1 << colour[u];
                }
            }
            ((colour[v], mask), v)
        })
        .collect();
    keyed.sort_unstable();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last_key = None;
    for (key, v) in keyed {
        if last_key != Some(key) {
            classes.push(Vec::new());
            last_key = Some(key);
        }
        classes.last_mut().expect("pushed above").push(v);
    }
    let mut rep = ThinRepresentation::new(order, classes, true, n)?;
    // greedy merging only lowers the count
    let mut i = 0;
    while i < rep.class_count() {
        let mut j = i + 1;
        while j < rep.class_count() {
            let mut classes = rep.classes().to_vec();
            let moved = classes.remove(j);
            classes[i].extend(moved);
            let trial = ThinRepresentation::new(rep.order().to_vec(), classes, true, n)?;
            if forward_ok(g, &trial) && backward_ok(g, &trial) {
                rep = trial;
            } else {
                j += 1;
            }
        }
        i += 1;
    }
    Ok(rep)
}
