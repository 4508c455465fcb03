//! Exhaustive enumeration of canonical signatures within explicit bounds.
//!
//! For a fixed `k` the tile count is pinned at `N = k² + 3`; for each grid
//! denominator `a` the enumerator walks size classes in ascending `m` by
//! depth-first search, choosing each class count `n` under the remaining
//! count and remaining area, and pruning when the residual area cannot be
//! met even if every remaining tile takes the smallest (current `m + 1`) or
//! largest (`a − 1`) admissible side. The walk is complete within bounds
//! and emits no duplicates.
//!
//! `a` is iterated outermost, so output order is deterministic (ascending
//! `a`, then lexicographic on the class list) and sweeps partition cleanly
//! by `a` for callers that want to parallelize.

use thiserror::Error;

use crate::exact::int;
use crate::signature::Signature;

/// A constraint on a single count (used for `n₁` and the class count).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFilter {
    Exactly(u64),
    AtLeast(u64),
    AtMost(u64),
}

impl CountFilter {
    pub fn admits(&self, v: u64) -> bool {
        match *self {
            CountFilter::Exactly(x) => v == x,
            CountFilter::AtLeast(x) => v >= x,
            CountFilter::AtMost(x) => v <= x,
        }
    }
}

/// Bounds making the infinite signature space finite. The tool never claims
/// results beyond them.
#[derive(Debug, Clone)]
pub struct EnumBounds {
    k: u64,
    a_min: u64,
    a_max: u64,
    max_classes: usize,
    n1_filter: Option<CountFilter>,
    class_filter: Option<CountFilter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(u64),
    #[error("k = {0} is too large: k^2 + 3 overflows")]
    KTooLarge(u64),
    #[error("a range must satisfy 2 <= a_min <= a_max, got {a_min}..={a_max}")]
    BadRange { a_min: u64, a_max: u64 },
    #[error("max_classes must be at least 1")]
    ZeroClasses,
}

impl EnumBounds {
    pub fn new(k: u64, a_min: u64, a_max: u64, max_classes: usize) -> Result<Self, BoundsError> {
        if k < 2 {
            return Err(BoundsError::KTooSmall(k));
        }
        if k.checked_mul(k).and_then(|k2| k2.checked_add(3)).is_none() {
            return Err(BoundsError::KTooLarge(k));
        }
        if a_min < 2 || a_max < a_min {
            return Err(BoundsError::BadRange { a_min, a_max });
        }
        if max_classes == 0 {
            return Err(BoundsError::ZeroClasses);
        }
        Ok(EnumBounds { k, a_min, a_max, max_classes, n1_filter: None, class_filter: None })
    }

    /// Restricts the smallest-tile count `n₁`.
    pub fn with_n1(mut self, f: CountFilter) -> Self {
        self.n1_filter = Some(f);
        self
    }

    /// Restricts the number of distinct size classes.
    pub fn with_class_count(mut self, f: CountFilter) -> Self {
        self.class_filter = Some(f);
        self
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn a_min(&self) -> u64 {
        self.a_min
    }

    pub fn a_max(&self) -> u64 {
        self.a_max
    }

    pub fn max_classes(&self) -> usize {
        self.max_classes
    }

    /// Tile count `k² + 3` pinned by `k`.
    pub fn tile_count(&self) -> u64 {
        self.k * self.k + 3
    }
}

/// Depth-first walk of all canonical class lists for one `a`, in
/// lexicographic order. Calls `visit` with the classes of each signature.
fn visit_raw_for_a(bounds: &EnumBounds, a: u64, visit: &mut impl FnMut(&[(u64, u64)])) {
    let n_total = bounds.tile_count();
    let area = u128::from(a) * u128::from(a);
    // No signature exists with a² < N, since every side multiplier is >= 1.
    if area < u128::from(n_total) {
        return;
    }
    let admits_classes = |c: usize| {
        bounds.class_filter.map_or(true, |f| f.admits(c as u64)) && c <= bounds.max_classes
    };

    let mut classes: Vec<(u64, u64)> = Vec::with_capacity(bounds.max_classes);
    // Canonical form forces the first class to m = 1.
    for n1 in 1..=n_total {
        if let Some(f) = bounds.n1_filter {
            if !f.admits(n1) {
                continue;
            }
        }
        let rem_n = n_total - n1;
        let rem_area = area - u128::from(n1);
        if rem_n > 0 {
            // Leftover tiles all have sides in [2, a-1].
            let lo = u128::from(rem_n) * 4;
            let hi = u128::from(rem_n) * u128::from(a - 1) * u128::from(a - 1);
            if lo > rem_area || hi < rem_area {
                continue;
            }
        }
        classes.push((1, n1));
        if rem_n == 0 {
            if rem_area == 0 && admits_classes(1) {
                visit(&classes);
            }
        } else if bounds.max_classes > 1 {
            descend(a, 1, rem_n, rem_area, &mut classes, bounds, &mut *visit);
        }
        classes.pop();
    }

    fn descend(
        a: u64,
        prev_m: u64,
        rem_n: u64,
        rem_area: u128,
        classes: &mut Vec<(u64, u64)>,
        bounds: &EnumBounds,
        visit: &mut impl FnMut(&[(u64, u64)]),
    ) {
        debug_assert!(rem_n > 0);
        let max_side = u128::from(a - 1) * u128::from(a - 1);
        let mut m = prev_m + 1;
        while m <= a.saturating_sub(1) {
            let m2 = u128::from(m) * u128::from(m);
            // Even a single tile of side m must fit in the residual area.
            if m2 > rem_area {
                break;
            }
            for n in 1..=rem_n {
                let used = u128::from(n) * m2;
                if used > rem_area {
                    break;
                }
                let (rn, ra) = (rem_n - n, rem_area - used);
                if rn == 0 {
                    if ra == 0 {
                        classes.push((m, n));
                        let c = classes.len();
                        if bounds.class_filter.map_or(true, |f| f.admits(c as u64))
                            && c <= bounds.max_classes
                        {
                            visit(classes);
                        }
                        classes.pop();
                    }
                    continue;
                }
                if classes.len() + 1 >= bounds.max_classes {
                    continue; // no room for the classes the leftover tiles need
                }
                // Residual area must be reachable: at least rn tiles of side m+1,
                // at most rn tiles of side a-1.
                let lo = u128::from(rn) * u128::from(m + 1) * u128::from(m + 1);
                let hi = u128::from(rn) * max_side;
                if lo > ra || hi < ra {
                    continue;
                }
                classes.push((m, n));
                descend(a, m, rn, ra, classes, bounds, visit);
                classes.pop();
            }
            m += 1;
        }
    }
}

/// All signatures for a single `a` within bounds, in lexicographic order.
///
/// The per-`a` slices are independent; concurrent callers can shard on `a`
/// and concatenate in ascending order to recover the deterministic stream.
pub fn signatures_for_a(bounds: &EnumBounds, a: u64) -> Vec<Signature> {
    let mut out = Vec::new();
    visit_raw_for_a(bounds, a, &mut |classes| {
        let sig = Signature::new(int(a as i64), classes.iter().map(|&(m, n)| (int(m as i64), int(n as i64))))
            .expect("enumerator emits only canonical, area-consistent signatures");
        out.push(sig);
    });
    out
}

/// Streams every canonical signature within bounds: `Σnᵢ = k²+3`,
/// `Σnᵢmᵢ² = a²`, `m₁ = 1`, `a ∈ [a_min, a_max]`, class count and `n₁`
/// passing the filters. Deterministic order, no duplicates, complete
/// within bounds. An empty stream is a valid result.
pub fn enumerate_signatures(bounds: &EnumBounds) -> impl Iterator<Item = Signature> + '_ {
    (bounds.a_min..=bounds.a_max).flat_map(move |a| signatures_for_a(bounds, a))
}

/// Number of signatures [`enumerate_signatures`] would emit.
pub fn count_signatures(bounds: &EnumBounds) -> u64 {
    let mut count = 0;
    for a in bounds.a_min..=bounds.a_max {
        visit_raw_for_a(bounds, a, &mut |_| count += 1);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes_of(sig: &Signature) -> Vec<(u64, u64)> {
        sig.as_u64().unwrap().1
    }

    #[test]
    fn k2_a4_yields_exactly_the_conjectured_family() {
        let bounds = EnumBounds::new(2, 4, 4, 4).unwrap();
        let sigs: Vec<_> = enumerate_signatures(&bounds).collect();
        assert_eq!(sigs.len(), 1);
        assert_eq!(sigs[0].a(), &int(4));
        assert_eq!(classes_of(&sigs[0]), vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn area_floor_makes_small_a_empty() {
        // a² = 4 cannot hold 7 tiles.
        let bounds = EnumBounds::new(2, 2, 2, 6).unwrap();
        assert_eq!(count_signatures(&bounds), 0);
        // No solution to Σn = 7, Σnm² = 9 either.
        let bounds = EnumBounds::new(2, 3, 3, 6).unwrap();
        assert_eq!(count_signatures(&bounds), 0);
    }

    #[test]
    fn k2_a7_with_unique_smallest_includes_the_three_size_case() {
        let bounds = EnumBounds::new(2, 7, 7, 3)
            .unwrap()
            .with_n1(CountFilter::Exactly(1));
        let sigs: Vec<_> = enumerate_signatures(&bounds).collect();
        assert!(sigs.iter().any(|s| classes_of(s) == vec![(1, 1), (2, 4), (4, 2)]));
    }

    #[test]
    fn stream_is_sorted_and_duplicate_free() {
        let bounds = EnumBounds::new(3, 2, 20, 4).unwrap();
        let sigs: Vec<_> = enumerate_signatures(&bounds).collect();
        assert!(!sigs.is_empty());
        for w in sigs.windows(2) {
            assert!(w[0] < w[1], "{} !< {}", w[0], w[1]);
        }
        assert_eq!(count_signatures(&bounds) as usize, sigs.len());
    }

    #[test]
    fn class_count_filter_is_exact() {
        let bounds = EnumBounds::new(4, 5, 5, 6)
            .unwrap()
            .with_class_count(CountFilter::Exactly(2));
        let sigs: Vec<_> = enumerate_signatures(&bounds).collect();
        assert!(sigs.iter().all(|s| s.class_count() == 2));
        assert!(sigs.iter().any(|s| classes_of(s) == vec![(1, 17), (2, 2)]));
    }

    #[test]
    fn bounds_validation() {
        assert_eq!(EnumBounds::new(1, 2, 4, 3).unwrap_err(), BoundsError::KTooSmall(1));
        assert_eq!(
            EnumBounds::new(2, 1, 4, 3).unwrap_err(),
            BoundsError::BadRange { a_min: 1, a_max: 4 }
        );
        assert_eq!(
            EnumBounds::new(2, 5, 4, 3).unwrap_err(),
            BoundsError::BadRange { a_min: 5, a_max: 4 }
        );
        assert_eq!(EnumBounds::new(2, 2, 4, 0).unwrap_err(), BoundsError::ZeroClasses);
        assert!(matches!(
            EnumBounds::new(u64::MAX, 2, 4, 3).unwrap_err(),
            BoundsError::KTooLarge(_)
        ));
    }
}
