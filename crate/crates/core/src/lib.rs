//! Exact search and verification engine for MTP tilings of the unit square.
//!
//! A tiling of the unit square by axis-aligned squares has the *minimal
//! tile property* (MTP) when every tile can be tiled by copies of the
//! smallest tile. For tilings with `k² + 3` tiles the conjectured maximum
//! of the total side length `σ` is `k + 1/k`, attained by the `k × k` grid
//! with one cell split into four. This crate provides the pieces needed to
//! probe that conjecture mechanically, with every verdict computed in
//! exact integer/rational arithmetic:
//!
//! - [`exact`]: arbitrary-precision integers and reduced rationals;
//! - [`signature`]: canonical size signatures and the σ/γ/δ functionals;
//! - [`enumerate`]: complete, deterministic signature enumeration within
//!   explicit bounds;
//! - [`lemma`]: the case-by-case classification of signatures and the
//!   candidate-counterexample filter;
//! - [`tiler`]: exhaustive geometric realizability search with an
//!   independent layout checker.

pub mod enumerate;
pub mod exact;
pub mod lemma;
pub mod signature;
pub mod tiler;

pub use exact::{ratio_string, ExactInt, Ratio};
pub use signature::{
    attains_conjecture, delta, delta_implies_below_target, exceeds_conjecture, gamma, k_of,
    make_signature, sigma, tile_count, ConjectureError, ConjectureTarget, Signature,
    SignatureError, SizeClass,
};
pub use enumerate::{count_signatures, enumerate_signatures, signatures_for_a, CountFilter, EnumBounds};
pub use lemma::{
    classify_many_size, classify_signature, classify_three_size, classify_two_size,
    decomposition_terms, resolve_verdict, theorem_filter, unit_spread_bound, ClassifyError,
    Verdict, VerdictTag,
};
pub use tiler::{
    check_two_size_unique_min, realize, realize_with, verify_layout, Layout, Placement,
    Realization, RealizeOptions, SearchBudget, UniqueMinCheck,
};
