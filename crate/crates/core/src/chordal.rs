//! Chordal bipartite recognition.
//!
//! An edge `ab` is bisimplicial when `N(a) ∪ N(b)` induces a complete
//! bipartite graph. A bipartite graph is chordal bipartite exactly when
//! deleting bisimplicial edges one at a time, in any order, removes every
//! edge: an induced cycle of length ≥ 6 never has a bisimplicial edge and
//! survives edge deletions outside it, while deleting a bisimplicial edge
//! cannot create such a cycle.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::BipartiteGraph;

pub fn is_chordal_bipartite(g: &BipartiteGraph) -> bool {
    let a_size = g.a_size();
    let b_size = g.b_size();
    // a_rows[a] ⊆ B, b_rows[b] ⊆ A
    let mut a_rows: Vec<FixedBitSet> = (0..a_size)
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(b_size);
            row.extend(g.a_neighbourhood(a).iter().copied());
            row
        })
        .collect();
    let mut b_rows: Vec<FixedBitSet> = (0..b_size)
        .map(|b| {
            let mut row = FixedBitSet::with_capacity(a_size);
            row.extend(g.neighbourhood(b).iter().copied());
            row
        })
        .collect();
    let mut remaining = g.edge_count();
    while remaining > 0 {
        let Some((a, b)) = find_bisimplicial(&a_rows, &b_rows) else {
            return false;
        };
        a_rows[a].set(b, false);
        b_rows[b].set(a, false);
        remaining -= 1;
    }
    true
}

fn find_bisimplicial(a_rows: &[FixedBitSet], b_rows: &[FixedBitSet]) -> Option<(usize, usize)> {
    for (a, row) in a_rows.iter().enumerate() {
        for b in row.ones() {
            // every a' ∈ N(b) must see all of N(a)
            if b_rows[b].ones().all(|a2| row.is_subset(&a_rows[a2])) {
                return Some((a, b));
            }
        }
    }
    None
}
