//! Geometric realizability of signatures by exhaustive backtracking.
//!
//! A [`Signature`] scales to the integer `a × a` grid; a tiling exists iff
//! the grid can be covered by axis-aligned `m × m` squares with the
//! signature's multiplicities. The search always fills the lowest, then
//! leftmost uncovered cell and tries the available sizes in descending
//! order. The canonical-cell rule removes placement-order symmetry, so the
//! walk is exhaustive without duplicates: `Unrealizable` is claimed only
//! after the whole space is explored, while exhausting the budget makes no
//! claim either way.

use std::fmt;
use std::time::{Duration, Instant};


use crate::signature::Signature;

/// Caps on a single [`realize`] call. Node counting is deterministic; the
/// wall-clock limit is for CI safety and can flip a result between runs,
/// so reproducible pipelines should rely on `max_nodes`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    max_time: Duration,
}

impl SearchBudget {
    /// Both limits must be positive.
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        assert!(max_nodes > 0, "node budget must be positive");
        assert!(!max_time.is_zero(), "time budget must be positive");
        SearchBudget { max_nodes, max_time }
    }

    /// Node-limited budget with an effectively unlimited time cap.
    pub fn nodes(max_nodes: u64) -> Self {
        Self::new(max_nodes, Duration::from_secs(u64::MAX))
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_time(&self) -> Duration {
        self.max_time
    }
}

impl Default for SearchBudget {
    /// Generous desk-scale default: 5 million placement attempts, no
    /// practical time limit.
    fn default() -> Self {
        Self::nodes(5_000_000)
    }
}

/// One placed square: corner `(x, y)`, side `m`, in grid units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub x: u32,
    pub y: u32,
    pub m: u32,
}

/// A complete tiling of the `a × a` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub a: u32,
    pub placements: Vec<Placement>,
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}", self.a)?;
        for p in &self.placements {
            write!(f, " ({},{})x{}", p.x, p.y, p.m)?;
        }
        Ok(())
    }
}

/// Result of a realizability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// A tiling exists; the layout passes [`verify_layout`].
    Realized(Layout),
    /// The exhaustive search space was fully explored without a tiling.
    Unrealizable,
    /// The budget tripped first; no claim is made.
    BudgetExhausted,
}

impl Realization {
    pub fn name(&self) -> &'static str {
        match self {
            Realization::Realized(_) => "realized",
            Realization::Unrealizable => "unrealizable",
            Realization::BudgetExhausted => "budget-exhausted",
        }
    }
}

/// Search switches beyond the budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct RealizeOptions {
    /// Skip placements that put a strictly larger tile on a corner other
    /// than `(0, 0)`. Every tiling has a dihedral image whose `(0, 0)`
    /// tile is maximal among the corner tiles, so the restricted search
    /// still visits at least one representative per tiling and
    /// `Unrealizable` verdicts remain valid. Off by default until the
    /// count-preserving argument is needed; results never depend on it.
    pub symmetry_break: bool,
}

/// Grids beyond this many cells are not attempted (allocation safety);
/// the search reports `BudgetExhausted`, claiming nothing.
const MAX_GRID_CELLS: u64 = 1 << 26;

struct Search {
    a: u32,
    grid: Vec<bool>,
    /// `(m, remaining)` in descending `m`.
    sizes: Vec<(u32, u32)>,
    placements: Vec<Placement>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
    symmetry_break: bool,
}

impl Search {
    fn fits(&self, x: u32, y: u32, m: u32) -> bool {
        let a = self.a;
        if x + m > a || y + m > a {
            return false;
        }
        let a = a as usize;
        let (x, y, m) = (x as usize, y as usize, m as usize);
        // Cells below and left of the canonical cell are already covered,
        // so only the rest of row y and the rows above need checking.
        for cx in x + 1..x + m {
            if self.grid[y * a + cx] {
                return false;
            }
        }
        for cy in y + 1..y + m {
            let row = cy * a;
            for cx in x..x + m {
                if self.grid[row + cx] {
                    return false;
                }
            }
        }
        true
    }

    fn set(&mut self, x: u32, y: u32, m: u32, value: bool) {
        let a = self.a as usize;
        let (x, y, m) = (x as usize, y as usize, m as usize);
        for cy in y..y + m {
            let row = cy * a;
            for cx in x..x + m {
                self.grid[row + cx] = value;
            }
        }
    }

    fn touches_other_corner(&self, x: u32, y: u32, m: u32) -> bool {
        let a = self.a;
        let right = x + m == a;
        let top = y + m == a;
        (right && y == 0) || (top && x == 0) || (right && top)
    }

    fn solve(&mut self, from: usize) -> bool {
        let Some(offset) = self.grid[from..].iter().position(|&covered| !covered) else {
            return true;
        };
        let idx = from + offset;
        let (x, y) = ((idx % self.a as usize) as u32, (idx / self.a as usize) as u32);
        for si in 0..self.sizes.len() {
            let (m, remaining) = self.sizes[si];
            if remaining == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                self.exhausted = true;
                return false;
            }
            if self.nodes % 1024 == 0 {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        self.exhausted = true;
                        return false;
                    }
                }
            }
            if !self.fits(x, y, m) {
                continue;
            }
            if self.symmetry_break
                && !self.placements.is_empty()
                && self.touches_other_corner(x, y, m)
                && m > self.placements[0].m
            {
                continue;
            }
            self.set(x, y, m, true);
            self.sizes[si].1 -= 1;
            self.placements.push(Placement { x, y, m });
            if self.solve(idx) {
                return true;
            }
            self.placements.pop();
            self.sizes[si].1 += 1;
            self.set(x, y, m, false);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Decides whether `sig` is geometrically realizable on the `a × a` grid.
pub fn realize_with(sig: &Signature, budget: &SearchBudget, opts: RealizeOptions) -> Realization {
    let Some((a, classes)) = sig.as_u64() else {
        return Realization::BudgetExhausted;
    };
    if a > 1 << 16 || a * a > MAX_GRID_CELLS {
        return Realization::BudgetExhausted;
    }
    let a = a as u32;
    let mut sizes: Vec<(u32, u32)> = classes.iter().map(|&(m, n)| (m as u32, n as u32)).collect();
    sizes.sort_by(|l, r| r.0.cmp(&l.0));
    let tile_total: u64 = classes.iter().map(|&(_, n)| n).sum();

    let deadline = Instant::now().checked_add(budget.max_time);
    let mut search = Search {
        a,
        grid: vec![false; (a as usize) * (a as usize)],
        sizes,
        placements: Vec::with_capacity(tile_total.min(1 << 20) as usize),
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline,
        exhausted: false,
        symmetry_break: opts.symmetry_break,
    };
    if search.solve(0) {
        let layout = Layout { a, placements: search.placements.clone() };
        debug_assert!(verify_layout(&layout, sig));
        Realization::Realized(layout)
    } else if search.exhausted {
        Realization::BudgetExhausted
    } else {
        Realization::Unrealizable
    }
}

/// [`realize_with`] under default options (no symmetry breaking).
pub fn realize(sig: &Signature, budget: &SearchBudget) -> Realization {
    realize_with(sig, budget, RealizeOptions::default())
}

/// Independent witness checker: cell-by-cell coverage count plus multiset
/// comparison against the signature. Shares no logic with the search.
pub fn verify_layout(layout: &Layout, sig: &Signature) -> bool {
    let Some((sig_a, classes)) = sig.as_u64() else {
        return false;
    };
    if u64::from(layout.a) != sig_a {
        return false;
    }
    let a = layout.a as usize;
    let mut coverage = vec![0u32; a * a];
    for p in &layout.placements {
        let (x, y, m) = (p.x as usize, p.y as usize, p.m as usize);
        if m == 0 || x + m > a || y + m > a {
            return false;
        }
        for cy in y..y + m {
            for cx in x..x + m {
                coverage[cy * a + cx] += 1;
            }
        }
    }
    if coverage.iter().any(|&c| c != 1) {
        return false;
    }
    let mut found: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
    for p in &layout.placements {
        *found.entry(u64::from(p.m)).or_insert(0) += 1;
    }
    let expected: std::collections::BTreeMap<u64, u64> = classes.into_iter().collect();
    found == expected
}

/// One entry of the two-size unique-smallest-tile sweep.
#[derive(Debug, Clone)]
pub struct UniqueMinCheck {
    pub signature: Signature,
    pub outcome: Realization,
}

/// Enumerates every two-size signature with `n₁ = 1` and `a <= a_max`
/// (no tile-count constraint) and runs [`realize`] on each with a fresh
/// budget. No such signature corresponds to a tiling — a full-height stack
/// through the unique smallest tile would force `x·m₂ = y·m₂ + 1` — so
/// every entry must come back `Unrealizable` (or `BudgetExhausted`, which
/// claims nothing); a `Realized` entry would disprove the rule.
pub fn check_two_size_unique_min(a_max: u64, budget: &SearchBudget) -> Vec<UniqueMinCheck> {
    let mut out = Vec::new();
    for a in 3..=a_max.max(2) {
        for m in 2..a {
            let m2 = m * m;
            let body = a * a - 1;
            if body % m2 != 0 {
                continue;
            }
            let n2 = body / m2;
            let signature = Signature::from_ints(
                a as i64,
                &[(1, 1), (m as i64, n2 as i64)],
            )
            .expect("1 + n2*m^2 = a^2 holds by construction");
            let outcome = realize(&signature, budget);
            out.push(UniqueMinCheck { signature, outcome });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(a: i64, classes: &[(i64, i64)]) -> Signature {
        Signature::from_ints(a, classes).unwrap()
    }

    #[test]
    fn realizes_the_k2_family() {
        let s = sig(4, &[(1, 4), (2, 3)]);
        match realize(&s, &SearchBudget::default()) {
            Realization::Realized(layout) => {
                assert_eq!(layout.placements.len(), 7);
                assert!(verify_layout(&layout, &s));
            }
            other => panic!("expected Realized, got {other:?}"),
        }
    }

    #[test]
    fn realizes_the_unit_grid() {
        let s = sig(2, &[(1, 4)]);
        match realize(&s, &SearchBudget::default()) {
            Realization::Realized(layout) => {
                assert_eq!(layout.placements.len(), 4);
                assert!(verify_layout(&layout, &s));
            }
            other => panic!("expected Realized, got {other:?}"),
        }
    }

    #[test]
    fn proves_a3_unique_min_unrealizable() {
        // Every pair of 2x2 placements in a 3x3 grid overlaps.
        let s = sig(3, &[(1, 1), (2, 2)]);
        assert_eq!(realize(&s, &SearchBudget::default()), Realization::Unrealizable);
    }

    #[test]
    fn budget_exhaustion_claims_nothing() {
        let s = sig(3, &[(1, 1), (2, 2)]);
        assert_eq!(realize(&s, &SearchBudget::nodes(1)), Realization::BudgetExhausted);
    }

    #[test]
    fn symmetry_break_agrees_on_small_cases() {
        let opts = RealizeOptions { symmetry_break: true };
        let budget = SearchBudget::default();
        let realizable = sig(4, &[(1, 4), (2, 3)]);
        assert!(matches!(realize_with(&realizable, &budget, opts), Realization::Realized(_)));
        let impossible = sig(3, &[(1, 1), (2, 2)]);
        assert_eq!(realize_with(&impossible, &budget, opts), Realization::Unrealizable);
        let impossible5 = sig(5, &[(1, 1), (2, 6)]);
        assert_eq!(realize_with(&impossible5, &budget, opts), Realization::Unrealizable);
    }

    #[test]
    fn verify_layout_rejects_mutations() {
        let s = sig(4, &[(1, 4), (2, 3)]);
        let layout = match realize(&s, &SearchBudget::default()) {
            Realization::Realized(layout) => layout,
            other => panic!("expected Realized, got {other:?}"),
        };
        assert!(verify_layout(&layout, &s));

        // Coverage gap + count mismatch.
        let mut shorter = layout.clone();
        let removed = shorter
            .placements
            .iter()
            .position(|p| p.m == 1)
            .expect("has a unit tile");
        shorter.placements.remove(removed);
        assert!(!verify_layout(&shorter, &s));

        // Overlap.
        let mut overlapping = layout.clone();
        let unit = overlapping.placements.iter().position(|p| p.m == 1).unwrap();
        let two = overlapping.placements.iter().find(|p| p.m == 2).copied().unwrap();
        overlapping.placements[unit] = Placement { x: two.x, y: two.y, m: 1 };
        assert!(!verify_layout(&overlapping, &s));

        // Wrong multiset for the signature.
        let other = sig(4, &[(1, 16)]);
        assert!(!verify_layout(&layout, &other));

        // Out-of-bounds placement.
        let mut oob = layout.clone();
        oob.placements[0] = Placement { x: 3, y: 3, m: 2 };
        assert!(!verify_layout(&oob, &s));
    }

    #[test]
    fn unique_min_sweep_small() {
        let budget = SearchBudget::default();
        let checks = check_two_size_unique_min(3, &budget);
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].signature, sig(3, &[(1, 1), (2, 2)]));
        assert_eq!(checks[0].outcome, Realization::Unrealizable);

        let checks = check_two_size_unique_min(5, &budget);
        let sigs: Vec<_> = checks.iter().map(|c| c.signature.clone()).collect();
        assert!(sigs.contains(&sig(5, &[(1, 1), (2, 6)])));
        assert!(checks.iter().all(|c| c.outcome == Realization::Unrealizable));

        assert!(check_two_size_unique_min(2, &budget).is_empty());
    }
}
