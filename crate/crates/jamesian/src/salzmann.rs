//! The Salzmann operation: a commutative proper loop on the real line with
//! unit 0, inverse `x ↦ -x`, the inverse property, and strictly increasing
//! translations. The operation is piecewise affine and the piece is selected
//! by the ratio `x / t`:
//!
//! | case   | ratio `x / t`                | value       |
//! |--------|------------------------------|-------------|
//! | OUTER  | `(-inf, -3/2] ∪ [1, +inf)`   | `x + t/2`   |
//! | MIDDLE | `[-2/3, 1]`                  | `x/2 + t`   |
//! | STEEP  | `[-3/2, -2/3]`               | `2x + 2t`   |
//! | T_ZERO | `t = 0`                      | `x`         |
//!
//! Adjacent formulas agree on the shared boundary ratios `1`, `-3/2` and
//! `-2/3`, so the case chosen there does not affect the value; the tie-break
//! picks the higher-priority case in the order OUTER, MIDDLE, STEEP. The
//! formulas are rational on rational inputs, so the operation also carries an
//! exact backend in which the power identities hold with no tolerance at all.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::loops::{Carrier, ExactLoopOps, RealLoop};

/// Which piece of the case table applies to a pair of arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SalzmannCase {
    /// `x/t` in `(-inf, -3/2] ∪ [1, +inf)`; value `x + t/2`.
    Outer,
    /// `x/t` in `[-2/3, 1]`; value `x/2 + t`.
    Middle,
    /// `x/t` in `[-3/2, -2/3]`; value `2x + 2t`.
    Steep,
    /// `t = 0`; value `x`.
    TZero,
}

impl SalzmannCase {
    /// Apply this case's affine rule.
    pub fn apply(&self, x: f64, t: f64) -> f64 {
        match self {
            SalzmannCase::Outer => x + 0.5 * t,
            SalzmannCase::Middle => 0.5 * x + t,
            SalzmannCase::Steep => 2.0 * x + 2.0 * t,
            SalzmannCase::TZero => x,
        }
    }

    pub fn apply_exact(&self, x: &BigRational, t: &BigRational) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        match self {
            SalzmannCase::Outer => x + t / &two,
            SalzmannCase::Middle => x / &two + t,
            SalzmannCase::Steep => (x + t) * &two,
            SalzmannCase::TZero => x.clone(),
        }
    }

    /// Human-readable membership condition for the ratio `x/t`.
    pub fn ratio_condition(&self) -> &'static str {
        match self {
            SalzmannCase::Outer => "x/t in (-inf, -3/2] U [1, +inf)",
            SalzmannCase::Middle => "x/t in [-2/3, 1]",
            SalzmannCase::Steep => "x/t in [-3/2, -2/3]",
            SalzmannCase::TZero => "t = 0",
        }
    }
}

impl std::fmt::Display for SalzmannCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SalzmannCase::Outer => "OUTER",
            SalzmannCase::Middle => "MIDDLE",
            SalzmannCase::Steep => "STEEP",
            SalzmannCase::TZero => "T_ZERO",
        };
        f.write_str(s)
    }
}

/// Select the case for `(x, t)`. Boundary ratios are resolved by the
/// priority OUTER, then MIDDLE, then STEEP; the adjacent formulas agree
/// there, so the choice is observationally irrelevant (and tested to be).
/// `x = 0` with `t != 0` has ratio 0 and lands in MIDDLE, which returns `t`
/// and keeps the operation commutative against the T_ZERO row.
pub fn classify_case(x: f64, t: f64) -> SalzmannCase {
    if t == 0.0 {
        return SalzmannCase::TZero;
    }
    let r = x / t;
    if r >= 1.0 || r <= -1.5 {
        SalzmannCase::Outer
    } else if r >= -2.0 / 3.0 {
        SalzmannCase::Middle
    } else {
        SalzmannCase::Steep
    }
}

/// Exact twin of [`classify_case`].
pub fn classify_case_exact(x: &BigRational, t: &BigRational) -> SalzmannCase {
    if t.is_zero() {
        return SalzmannCase::TZero;
    }
    let r = x / t;
    let neg_three_halves = BigRational::new(BigInt::from(-3), BigInt::from(2));
    let neg_two_thirds = BigRational::new(BigInt::from(-2), BigInt::from(3));
    if r >= BigRational::one() || r <= neg_three_halves {
        SalzmannCase::Outer
    } else if r >= neg_two_thirds {
        SalzmannCase::Middle
    } else {
        SalzmannCase::Steep
    }
}

/// The Salzmann product `x * t`. Total on finite reals; commutative, with
/// `x * 0 = x` and `x * (-x) = 0`. Non-finite inputs propagate through the
/// arithmetic rather than being rejected; validation belongs to the callers
/// that accept external input.
pub fn salzmann_mul(x: f64, t: f64) -> f64 {
    classify_case(x, t).apply(x, t)
}

/// Exact-rational Salzmann product; agrees with [`salzmann_mul`] up to
/// floating-point rounding and is the backend on which the power identities
/// are certified with zero tolerance.
pub fn salzmann_mul_exact(x: &BigRational, t: &BigRational) -> BigRational {
    classify_case_exact(x, t).apply_exact(x, t)
}

/// Left-nested exact power under the Salzmann product; `n = 0` gives the
/// unit. Bracketings beyond the third power are a convention, not a value
/// the loop determines.
pub fn power_exact(x: &BigRational, n: u32) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    let mut acc = x.clone();
    for _ in 1..n {
        acc = salzmann_mul_exact(&acc, x);
    }
    acc
}

/// The Salzmann loop as a [`RealLoop`] on the reals, float and exact
/// backends both attached.
pub fn salzmann_loop() -> RealLoop {
    RealLoop::new("salzmann", Carrier::Reals, 0.0, salzmann_mul, |x| -x).with_exact(
        ExactLoopOps::new(salzmann_mul_exact, BigRational::zero(), |x| -x),
    )
}
