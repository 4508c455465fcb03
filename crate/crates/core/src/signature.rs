//! Size signatures of MTP tilings and the σ/γ/δ functionals.
//!
//! A tiling of the unit square by axis-aligned squares has the minimal tile
//! property (MTP) when every tile can itself be tiled by copies of the
//! smallest tile, i.e. every side length is an integer multiple of the
//! smallest side `1/a`. Collapsing a tiling to its multiset of side lengths
//! gives a [`Signature`]: the grid denominator `a` together with size
//! classes `(mᵢ, nᵢ)` (side `mᵢ/a`, count `nᵢ`) satisfying the area
//! identity `Σ nᵢmᵢ² = a²`. A signature is a necessary, not sufficient,
//! condition for a tiling to exist; geometric realizability is decided by
//! [`crate::tiler`].

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{gcd_all, int, perfect_sqrt, ratio, ExactInt, Ratio};

/// One size class: `n` tiles of side `m/a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizeClass {
    m: ExactInt,
    n: ExactInt,
}

impl SizeClass {
    /// Side multiplier, `>= 1`.
    pub fn m(&self) -> &ExactInt {
        &self.m
    }

    /// Tile count, `>= 1`.
    pub fn n(&self) -> &ExactInt {
        &self.n
    }

    /// `(m, n)` as machine integers when they fit.
    pub fn as_u64(&self) -> Option<(u64, u64)> {
        Some((self.m.to_u64()?, self.n.to_u64()?))
    }
}

/// Reasons a class list fails to form a canonical [`Signature`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    /// `a < 2` (before or after canonical reduction), an empty class list,
    /// or a side multiplier / count below 1.
    #[error("non-positive input: {0}")]
    NonPositive(&'static str),
    /// Two classes share the same side multiplier.
    #[error("duplicate size class m={0}")]
    DuplicateSize(ExactInt),
    /// The gcd of the side multipliers does not divide `a`, so the class
    /// list cannot be reduced to canonical form.
    #[error("non-canonicalizable: gcd {gcd} of side multipliers does not divide a={a}")]
    NonCanonicalizable { gcd: ExactInt, a: ExactInt },
    /// The smallest side does not divide every side, so no tiling with
    /// these sizes has the minimal tile property.
    #[error("not MTP: smallest side m1={m1} does not divide every side")]
    NotMtp { m1: ExactInt },
    /// The area identity `Σ nᵢmᵢ² = a²` fails (checked after reduction).
    #[error("area mismatch: sum n*m^2 = {actual}, expected a^2 = {expected}")]
    AreaMismatch { actual: ExactInt, expected: ExactInt },
}

/// Canonical size signature: denominator `a >= 2` plus size classes with
/// strictly increasing `m`, `m₁ = 1`, and `Σ nᵢmᵢ² = a²`.
///
/// Construction through [`Signature::new`] (or [`make_signature`]) is the
/// only way to obtain a value, so every `Signature` in the program upholds
/// the invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    a: ExactInt,
    classes: Vec<SizeClass>,
}

impl Signature {
    /// Canonicalizes and validates a raw `(a, [(m, n), ..])` description.
    ///
    /// If the gcd `g` of all side multipliers exceeds 1 the whole signature
    /// is divided through by `g` (requires `g | a`); classes are sorted by
    /// ascending `m`; the area identity is checked last.
    pub fn new<I>(a: ExactInt, classes: I) -> Result<Self, SignatureError>
    where
        I: IntoIterator<Item = (ExactInt, ExactInt)>,
    {
        let mut classes: Vec<(ExactInt, ExactInt)> = classes.into_iter().collect();
        if classes.is_empty() {
            return Err(SignatureError::NonPositive("empty class list"));
        }
        if a < int(2) {
            return Err(SignatureError::NonPositive("a must be at least 2"));
        }
        for (m, n) in &classes {
            if m < &int(1) {
                return Err(SignatureError::NonPositive("side multiplier m must be at least 1"));
            }
            if n < &int(1) {
                return Err(SignatureError::NonPositive("class count n must be at least 1"));
            }
        }
        classes.sort();
        for w in classes.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(SignatureError::DuplicateSize(w[0].0.clone()));
            }
        }

        let sides: Vec<ExactInt> = classes.iter().map(|(m, _)| m.clone()).collect();
        let g = gcd_all(&sides);
        let mut a = a;
        if g > ExactInt::one() {
            if !(&a % &g).is_zero() {
                return Err(SignatureError::NonCanonicalizable { gcd: g, a });
            }
            a /= &g;
            for (m, _) in &mut classes {
                *m /= &g;
            }
        }
        if !classes[0].0.is_one() {
            return Err(SignatureError::NotMtp { m1: classes[0].0.clone() });
        }
        if a < int(2) {
            // Only the whole-square "tiling" reduces to a=1; it carries no content.
            return Err(SignatureError::NonPositive("a must be at least 2 after reduction"));
        }

        let area: ExactInt = classes.iter().map(|(m, n)| n * m * m).sum();
        let expected = &a * &a;
        if area != expected {
            return Err(SignatureError::AreaMismatch { actual: area, expected });
        }

        Ok(Signature {
            a,
            classes: classes.into_iter().map(|(m, n)| SizeClass { m, n }).collect(),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(a: i64, classes: &[(i64, i64)]) -> Result<Self, SignatureError> {
        Self::new(int(a), classes.iter().map(|&(m, n)| (int(m), int(n))))
    }

    /// Grid denominator `a`.
    pub fn a(&self) -> &ExactInt {
        &self.a
    }

    /// Size classes in strictly ascending `m`; the first always has `m = 1`.
    pub fn classes(&self) -> &[SizeClass] {
        &self.classes
    }

    /// Number of distinct tile sizes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Count of smallest tiles `n₁`.
    pub fn n1(&self) -> &ExactInt {
        &self.classes[0].n
    }

    /// `a` and all classes as machine integers when they fit.
    pub fn as_u64(&self) -> Option<(u64, Vec<(u64, u64)>)> {
        let a = self.a.to_u64()?;
        let classes = self
            .classes
            .iter()
            .map(|c| c.as_u64())
            .collect::<Option<Vec<_>>>()?;
        Some((a, classes))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} [", self.a)?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", c.m, c.n)?;
        }
        write!(f, "]")
    }
}

/// Canonicalizes and validates a raw description; see [`Signature::new`].
pub fn make_signature<I>(a: ExactInt, classes: I) -> Result<Signature, SignatureError>
where
    I: IntoIterator<Item = (ExactInt, ExactInt)>,
{
    Signature::new(a, classes)
}

/// Total tile count `N = Σ nᵢ`.
pub fn tile_count(sig: &Signature) -> ExactInt {
    sig.classes.iter().map(|c| &c.n).sum()
}

/// Returns `k >= 2` with `tile_count = k² + 3`, if it exists.
pub fn k_of(sig: &Signature) -> Option<ExactInt> {
    let n = tile_count(sig) - int(3);
    let k = perfect_sqrt(&n)?;
    (k >= int(2)).then_some(k)
}

/// Total side length `σ = (Σ nᵢmᵢ)/a` of all tiles.
pub fn sigma(sig: &Signature) -> Ratio {
    let total: ExactInt = sig.classes.iter().map(|c| &c.n * &c.m).sum();
    ratio(total, sig.a.clone())
}

/// Pairwise spread `γ = (Σ_{i<j} nᵢnⱼ(mᵢ−mⱼ)²)/a²`.
pub fn gamma(sig: &Signature) -> Ratio {
    ratio(pair_spread(sig), &sig.a * &sig.a)
}

/// Integer discriminant `δ = Σ_{i<j} nᵢnⱼ(mᵢ−mⱼ)² − Σᵢ nᵢmᵢ²`.
///
/// `δ >= 0` certifies `σ < k + 1/k` (see [`lemma1_implication`]).
pub fn delta(sig: &Signature) -> ExactInt {
    let area: ExactInt = sig.classes.iter().map(|c| &c.n * &c.m * &c.m).sum();
    pair_spread(sig) - area
}

fn pair_spread(sig: &Signature) -> ExactInt {
    let mut sum = ExactInt::zero();
    for (i, ci) in sig.classes.iter().enumerate() {
        for cj in &sig.classes[i + 1..] {
            let d = &ci.m - &cj.m;
            sum += &ci.n * &cj.n * &d * &d;
        }
    }
    sum
}

/// Errors from comparisons against the conjectured maximum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    /// The conjecture is stated for `k >= 2` only.
    #[error("k must be at least 2, got {0}")]
    KTooSmall(ExactInt),
    /// The signature's tile count is not `k² + 3` for the supplied `k`.
    #[error("tile count {actual} is not k^2+3 = {expected} for k={k}")]
    KMismatch {
        k: ExactInt,
        expected: ExactInt,
        actual: ExactInt,
    },
}

/// The conjectured maximum `(k²+1)/k` of σ over MTP tilings with `k²+3` tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureTarget {
    k: ExactInt,
    value: Ratio,
}

impl ConjectureTarget {
    pub fn new(k: ExactInt) -> Result<Self, ConjectureError> {
        if k < int(2) {
            return Err(ConjectureError::KTooSmall(k));
        }
        let value = ratio(&k * &k + int(1), k.clone());
        Ok(ConjectureTarget { k, value })
    }

    pub fn k(&self) -> &ExactInt {
        &self.k
    }

    /// The target value `k + 1/k` as an exact ratio.
    pub fn value(&self) -> &Ratio {
        &self.value
    }

    /// Tile count `k² + 3` a compared signature must have.
    pub fn tile_count(&self) -> ExactInt {
        &self.k * &self.k + int(3)
    }

    fn check_count(&self, sig: &Signature) -> Result<(), ConjectureError> {
        let actual = tile_count(sig);
        let expected = self.tile_count();
        if actual != expected {
            return Err(ConjectureError::KMismatch {
                k: self.k.clone(),
                expected,
                actual,
            });
        }
        Ok(())
    }

    /// `σ(sig) > k + 1/k`, by exact integer cross-multiplication.
    pub fn exceeded_by(&self, sig: &Signature) -> Result<bool, ConjectureError> {
        self.check_count(sig)?;
        let total: ExactInt = sig.classes.iter().map(|c| &c.n * &c.m).sum();
        Ok(&self.k * total > (&self.k * &self.k + int(1)) * &sig.a)
    }

    /// `σ(sig) = k + 1/k` exactly.
    pub fn attained_by(&self, sig: &Signature) -> Result<bool, ConjectureError> {
        self.check_count(sig)?;
        let total: ExactInt = sig.classes.iter().map(|c| &c.n * &c.m).sum();
        Ok(&self.k * total == (&self.k * &self.k + int(1)) * &sig.a)
    }
}

/// True iff `σ(sig)` strictly exceeds the conjectured maximum `k + 1/k`.
///
/// Attaining the value exactly does not count; see
/// [`attains_conjecture`] for that.
pub fn exceeds_conjecture(sig: &Signature, k: &ExactInt) -> Result<bool, ConjectureError> {
    ConjectureTarget::new(k.clone())?.exceeded_by(sig)
}

/// True iff `σ(sig)` equals the conjectured maximum `k + 1/k` exactly.
pub fn attains_conjecture(sig: &Signature, k: &ExactInt) -> Result<bool, ConjectureError> {
    ConjectureTarget::new(k.clone())?.attained_by(sig)
}

/// Evaluates the implication `δ >= 0 ⇒ σ < k + 1/k` exactly.
///
/// This must hold for every signature (it follows from
/// `σ = sqrt(N − γ)` and the area identity); sweeps assert it as a
/// runtime check rather than assuming it.
pub fn delta_implies_below_target(sig: &Signature, k: &ExactInt) -> Result<bool, ConjectureError> {
    let target = ConjectureTarget::new(k.clone())?;
    target.check_count(sig)?;
    if delta(sig).is_negative() {
        return Ok(true);
    }
    Ok(&sigma(sig) < target.value())
}
