//! Closed-form width bounds asserted against measured values.

/// Width bound for linear decompositions of circular convex graphs.
pub const CIRCULAR_MIM_BOUND: usize = 2;

/// Width bound for the right-endpoint ordering of a convex graph.
pub const CONVEX_MIM_BOUND: usize = 1;

/// `max{2⌊(Δ/2)²⌋, 2Δ − 1}`: mim-width bound for `(1, Δ)`-tree convex graphs.
pub fn spider_bound(delta: usize) -> usize {
    // ⌊(Δ/2)²⌋ = ⌊Δ²/4⌋
    core::cmp::max(2 * (delta * delta / 4), (2 * delta).saturating_sub(1))
}

/// `spider_bound(Δ) + t²Δ`: mim-width bound for `(t, Δ)`-tree convex graphs.
pub fn tree_bound(t: usize, delta: usize) -> usize {
    spider_bound(delta) + t * t * delta
}

/// Upper bound on the cut across the splitting edge of the recursive construction.
pub fn split_cut_bound(t: usize, delta: usize) -> usize {
    delta * t.saturating_sub(1)
}

/// `2 + t(Δ − 2)`: thinness bound for `(t, Δ)`-tree convex graphs.
pub fn thinness_bound(t: usize, delta: usize) -> usize {
    2 + t * delta.saturating_sub(2)
}

/// `2^q (q + 1)`: proper-thinness bound from a width-`q` path decomposition.
/// Saturates at `usize::MAX`.
pub fn proper_thinness_bound(q: usize) -> usize {
    u32::try_from(q)
        .ok()
        .and_then(|s| 1usize.checked_shl(s))
        .and_then(|p| p.checked_mul(q + 1))
        .unwrap_or(usize::MAX)
}

/// Multijoin gluing bound `max{c⌊(p/2)²⌋, w + c(p − 1)}`.
pub fn multijoin_bound(parts: usize, cross: usize, max_part_width: usize) -> usize {
    if parts <= 1 {
        return max_part_width;
    }
    core::cmp::max(cross * (parts * parts / 4), max_part_width + cross * (parts - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_values() {
        assert_eq!(spider_bound(3), 5);
        assert_eq!(spider_bound(4), 8);
        assert_eq!(spider_bound(5), 12);
    }

    #[test]
    fn tree_values() {
        assert_eq!(tree_bound(1, 3), 8);
        assert_eq!(tree_bound(2, 3), 17);
        assert_eq!(tree_bound(2, 4), 24);
        assert_eq!(split_cut_bound(2, 3), 3);
    }

    #[test]
    fn thinness_values() {
        assert_eq!(thinness_bound(0, 3), 2);
        assert_eq!(thinness_bound(1, 3), 3);
        assert_eq!(thinness_bound(2, 3), 4);
        assert_eq!(thinness_bound(2, 4), 6);
        assert_eq!(proper_thinness_bound(1), 4);
        assert_eq!(proper_thinness_bound(2), 12);
        assert_eq!(proper_thinness_bound(3), 32);
        assert_eq!(proper_thinness_bound(64), usize::MAX);
    }
}
