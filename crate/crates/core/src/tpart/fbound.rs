/// The width bound of the recursive construction:
///
/// ```text
/// f(0, d, s) = max(s, 1)
/// f(k, d, s) = max(s(k+1), 2(k+1) + f(k-1, d, 4d(k+1)))   for k >= 1
/// ```
///
/// Evaluated bottom-up: below the top level, the call at level `j` always has
/// seed size `4d(j+2)`.
/// Saturates instead of overflowing.
pub fn f_bound(k: u64, d: u64, s: u64) -> u64 {
    if k == 0 {
        return s.max(1);
    }
    let mut inner = 8u64.saturating_mul(d).max(1);
    for j in 1..k {
        let seed = 4u64.saturating_mul(d).saturating_mul(j + 2);
        inner = seed.saturating_mul(j + 1).max((2 * (j + 1)).saturating_add(inner));
    }
    s.saturating_mul(k + 1).max((2 * (k + 1)).saturating_add(inner))
}

/// `4d(k+1)^2`, the closed-form bound that dominates `f(k, d, s)` whenever
/// `s <= 4d(k+1)` and `d >= 1`.
pub fn width_bound(k: u64, d: u64) -> u64 {
    4u64.saturating_mul(d).saturating_mul((k + 1).saturating_mul(k + 1))
}

/// Size bound for a non-root spine bag at recursion level `k >= 1`:
/// `2(k+1) + f(k-1, d, 4d(k+1))`.
pub fn level_bag_bound(k: u64, d: u64) -> u64 {
    debug_assert!(k >= 1);
    (2 * (k + 1)).saturating_add(f_bound(k - 1, d, 4u64.saturating_mul(d).saturating_mul(k + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unfolded_values() {
        for d in 0..5 {
            assert_eq!(f_bound(0, d, 0), 1);
        }
        assert_eq!(f_bound(0, 3, 7), 7);
        assert_eq!(f_bound(1, 3, 36), 72);
        assert_eq!(f_bound(2, 3, 0), 78);
        assert!(f_bound(2, 3, 0) <= width_bound(2, 3));
        assert_eq!(width_bound(2, 3), 108);
        assert_eq!(level_bag_bound(2, 3), 78);
    }

    #[test]
    fn saturates() {
        assert_eq!(f_bound(3, u64::MAX / 2, 0), u64::MAX);
    }
}
