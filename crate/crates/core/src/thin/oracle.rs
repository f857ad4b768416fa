//! Exact thinness and proper thinness for small graphs.
//!
//! Vertices are placed one at a time. For a fixed number of classes `k`, all
//! that later placements can observe about a class is
//! - the unplaced vertices adjacent to one of its members (each later member
//!   must be adjacent to all of them), and
//! - for proper thinness, the placed vertices that some later-placed member
//!   is not adjacent to (later members must avoid them), restricted to those
//!   with unplaced neighbours.
//!
//! A class with both sets empty is indistinguishable from an unused one, so a
//! search state is the unplaced set with the sorted list of non-trivial class
//! states. Failed states are memoised; `k` grows from 1.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::ThinRepresentation;
use crate::{Error, Graph, Result};

/// Largest instance the oracles accept unless told otherwise.
pub const DEFAULT_THIN_GUARD: usize = 13;

/// Exact thinness.
pub fn thin_oracle(g: &Graph, guard: usize) -> Result<usize> {
    Ok(min_thin_representation(g, false, guard)?.class_count())
}

/// Exact proper thinness.
pub fn pthin_oracle(g: &Graph, guard: usize) -> Result<usize> {
    Ok(min_thin_representation(g, true, guard)?.class_count())
}

/// A (strongly, if `strong`) consistent representation with the fewest
/// classes. The graph without vertices gets zero classes.
pub fn min_thin_representation(g: &Graph, strong: bool, guard: usize) -> Result<ThinRepresentation> {
    let n = g.vertex_count();
    if n > guard || n > 64 {
        return Err(Error::GuardExceeded { size: n, guard: guard.min(64) });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 1..=n.max(1) {
        let mut search = Search {
            nbr: &nbr,
            strong,
            k,
            failed: BTreeSet::new(),
            placed: Vec::with_capacity(n),
        };
        if search.run(all, Vec::new()) {
            let order: Vec<usize> = search.placed.iter().map(|&(v, _)| v).collect();
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for &(v, slot) in &search.placed {
                if slot == classes.len() {
                    classes.push(Vec::new());
                }
                classes[slot].push(v);
            }
            return ThinRepresentation::new(order, classes, strong, n);
        }
    }
    unreachable!("singleton classes are always strongly consistent")
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Class {
    // unplaced vertices every later member must be adjacent to
    pending: u64,
    // placed vertices later members must not be adjacent to
    closed: u64,
    // index in the output partition
    slot: usize,
}

struct Search<'a> {
    nbr: &'a [u64],
    strong: bool,
    k: usize,
    failed: BTreeSet<(u64, Vec<(u64, u64)>)>,
    placed: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn run(&mut self, unplaced: u64, classes: Vec<Class>) -> bool {
        if unplaced == 0 {
            return true;
        }
        let key = (unplaced, {
            let mut k: Vec<(u64, u64)> = classes.iter().map(|c| (c.pending, c.closed)).collect();
            k.sort_unstable();
            k
        });
        if self.failed.contains(&key) {
            return false;
        }
        let slots_used = self.placed.iter().map(|&(_, s)| s + 1).max().unwrap_or(0);
        let mut rest = unplaced;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let left = unplaced & !(1 << x);
            // every placed vertex with an unplaced neighbour, for trimming `closed`
            let reach = self.reach(left);
            let nx = self.nbr[x];
            let mut tried_fresh = false;
            for j in 0..=classes.len() {
                let fresh = j == classes.len();
                if fresh && (classes.len() >= self.k || tried_fresh) {
                    continue;
                }
                let base = if fresh {
                    Class { pending: 0, closed: 0, slot: usize::MAX }
                } else {
                    classes[j]
                };
                if base.pending & !(1 << x) & !nx != 0 || nx & base.closed != 0 {
                    continue;
                }
                tried_fresh |= fresh;
                let slot = if fresh { self.fresh_slot(&classes, slots_used) } else { base.slot };
                let mut next: Vec<Class> = Vec::with_capacity(classes.len() + 1);
                for (i, c) in classes.iter().enumerate() {
                    let mut c = if i == j {
                        self.extend(base, unplaced, nx)
                    } else {
                        *c
                    };
                    c.pending &= left;
                    c.closed &= reach;
                    if c.pending != 0 || c.closed != 0 {
                        next.push(c);
                    }
                }
                if fresh {
                    let mut c = self.extend(base, unplaced, nx);
                    c.slot = slot;
                    c.pending &= left;
                    c.closed &= reach;
                    if c.pending != 0 || c.closed != 0 {
                        next.push(c);
                    }
                }
                self.placed.push((x, slot));
                if self.run(left, next) {
                    return true;
                }
                self.placed.pop();
            }
        }
        self.failed.insert(key);
        false
    }

    fn extend(&self, mut c: Class, unplaced: u64, nx: u64) -> Class {
        c.pending |= nx & unplaced;
        if self.strong {
            // placed vertices before x that x is not adjacent to
            let placed = self.placed.iter().fold(0u64, |m, &(v, _)| m | 1 << v);
            c.closed |= placed & !nx;
        }
        c
    }

    fn reach(&self, unplaced: u64) -> u64 {
        if !self.strong {
            return 0;
        }
        let mut r = 0;
        let mut rest = unplaced;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            r |= self.nbr[v];
        }
        r
    }

    // An inactive slot to reuse, or a new one.
    fn fresh_slot(&self, classes: &[Class], slots_used: usize) -> usize {
        (0..slots_used)
            .find(|s| classes.iter().all(|c| c.slot != *s))
            .unwrap_or(slots_used)
    }
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::super::{verify_consistent, verify_strongly_consistent};
    use super::*;
    use crate::families::{gen_crown, gen_gk};

    // every order and every partition into at most k labelled classes
    fn brute(g: &Graph, strong: bool) -> usize {
        let n = g.vertex_count();
        let mut best = n.max(1);
        let mut order: Vec<usize> = (0..n).collect();
        permute(&mut order, 0, &mut |o| {
            let mut labels = vec![0usize; n];
            loop {
                let k = labels.iter().max().map_or(0, |m| m + 1);
                if k < best && labels.iter().enumerate().all(|(i, &l)| l <= labels[..i].iter().max().map_or(0, |m| m + 1)) {
                    let mut classes = vec![Vec::new(); k];
                    for v in 0..n {
                        classes[labels[v]].push(v);
                    }
                    if let Ok(r) = ThinRepresentation::new(o.to_vec(), classes, strong, n) {
                        let ok = if strong {
                            verify_strongly_consistent(g, &r).unwrap()
                        } else {
                            verify_consistent(g, &r).unwrap()
                        };
                        if ok {
                            best = k;
                        }
                    }
                }
                // next labelling in base n
                let mut i = 0;
                while i < n && labels[i] + 1 == n {
                    labels[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                labels[i] += 1;
            }
        });
        best
    }

    fn permute(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }

    #[test]
    fn edgeless_is_one() {
        assert_eq!(thin_oracle(&Graph::new(5), 13).unwrap(), 1);
        assert_eq!(pthin_oracle(&Graph::new(5), 13).unwrap(), 1);
        assert_eq!(thin_oracle(&Graph::new(0), 13).unwrap(), 0);
    }

    #[test]
    fn gk_values() {
        assert_eq!(pthin_oracle(&gen_gk(1).unwrap().to_graph(), 13).unwrap(), 1);
        assert_eq!(pthin_oracle(&gen_gk(2).unwrap().to_graph(), 13).unwrap(), 2);
    }

    #[test]
    fn witnesses_are_valid() {
        let (g, _) = gen_crown(4);
        let h = g.to_graph();
        let r = min_thin_representation(&h, true, 13).unwrap();
        assert!(verify_strongly_consistent(&h, &r).unwrap());
        let r = min_thin_representation(&h, false, 13).unwrap();
        assert!(verify_consistent(&h, &r).unwrap());
    }

    #[test]
    fn guard() {
        assert_eq!(thin_oracle(&Graph::new(14), 13), Err(Error::GuardExceeded { size: 14, guard: 13 }));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(60))]
        #[test]
        fn matches_brute_force(n in 1usize..6, bits in proptest::collection::vec(proptest::prelude::any::<bool>(), 15)) {
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
            let thin = thin_oracle(&g, 13).unwrap();
            let pthin = pthin_oracle(&g, 13).unwrap();
            proptest::prop_assert_eq!(thin, brute(&g, false));
            proptest::prop_assert_eq!(pthin, brute(&g, true));
            proptest::prop_assert!(thin <= pthin);
        }
    }
}
