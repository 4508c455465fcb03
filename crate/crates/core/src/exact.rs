//! Exact integer and rational arithmetic.
//!
//! Every verdict in this crate is an equality or a strict inequality between
//! exact quantities; rounding anywhere would be fatal. All arithmetic that
//! feeds a verdict therefore runs on arbitrary-precision integers
//! ([`ExactInt`]) and reduced rationals ([`Ratio`]). Floating point is
//! allowed only in rendering cosmetics, never in comparisons.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision signed integer. No silent overflow at any input scale.
pub type ExactInt = BigInt;

/// Reduced rational with positive denominator; equality is structural
/// equality on the reduced form, ordering is exact cross-multiplication.
pub type Ratio = BigRational;

/// Shorthand for building an [`ExactInt`] from a machine integer.
pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

/// Builds the reduced ratio `num/den`. Panics if `den` is zero.
pub fn ratio(num: ExactInt, den: ExactInt) -> Ratio {
    Ratio::new(num, den)
}

/// Formats a ratio as `p/q` with the denominator always spelled out
/// (`2/1`, `0/1`), so exactness survives every serialization boundary.
pub fn ratio_string(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Floor square root of a non-negative integer.
pub fn floor_sqrt(v: &ExactInt) -> ExactInt {
    debug_assert!(!v.is_negative());
    v.sqrt()
}

/// Returns `Some(r)` with `r*r == v` if `v` is a perfect square.
pub fn perfect_sqrt(v: &ExactInt) -> Option<ExactInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    if &r * &r == *v {
        Some(r)
    } else {
        None
    }
}

/// Greatest common divisor of a non-empty slice, ignoring signs.
pub fn gcd_all(values: &[ExactInt]) -> ExactInt {
    let mut g = ExactInt::zero();
    for v in values {
        g = g.gcd(v);
        if g == int(1) {
            break;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_string_spells_out_unit_denominators() {
        assert_eq!(ratio_string(&ratio(int(2), int(1))), "2/1");
        assert_eq!(ratio_string(&ratio(int(0), int(5))), "0/1");
        assert_eq!(ratio_string(&ratio(int(10), int(4))), "5/2");
        assert_eq!(ratio_string(&ratio(int(-10), int(4))), "-5/2");
    }

    #[test]
    fn ratio_reduces_and_normalizes_sign() {
        let r = ratio(int(6), int(-4));
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
    }

    #[test]
    fn perfect_sqrt_detects_squares() {
        assert_eq!(perfect_sqrt(&int(49)), Some(int(7)));
        assert_eq!(perfect_sqrt(&int(48)), None);
        assert_eq!(perfect_sqrt(&int(0)), Some(int(0)));
        assert_eq!(perfect_sqrt(&int(-4)), None);
    }

    #[test]
    fn gcd_all_handles_mixed_values() {
        assert_eq!(gcd_all(&[int(12), int(18), int(30)]), int(6));
        assert_eq!(gcd_all(&[int(5)]), int(5));
        assert_eq!(gcd_all(&[int(7), int(11)]), int(1));
    }
}
