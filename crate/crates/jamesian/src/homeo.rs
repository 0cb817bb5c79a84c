//! Strictly increasing homeomorphisms `f : (0,1) -> R` with the odd
//! symmetry `f(1-x) = -f(x)`. These are the transfer maps that carry a loop
//! on the reals over to a loop on the unit interval, and conversely.
//!
//! Three families are provided with closed-form inverses, plus a
//! bisection-backed constructor for user-supplied forward maps.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::loops::CheckReport;
use crate::sweep;

/// Which family a homeomorphism belongs to.
#[derive(Debug, Clone, PartialEq)]
pub enum HomeoKind {
    /// `f(x) = ln(x / (1-x))`
    Logit,
    /// `f(x) = k ln(x / (1-x))`, `k > 0`
    ScaledLogit(f64),
    /// Identity shifted by 1/2 on `[eps, 1-eps]`, logarithmic tails outside.
    PiecewiseIdentity(f64),
    /// User-supplied forward map.
    Custom(String),
}

impl std::fmt::Display for HomeoKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomeoKind::Logit => write!(f, "logit"),
            HomeoKind::ScaledLogit(k) => write!(f, "scaled-logit({k})"),
            HomeoKind::PiecewiseIdentity(eps) => write!(f, "piecewise-identity({eps})"),
            HomeoKind::Custom(name) => write!(f, "custom({name})"),
        }
    }
}

/// How the inverse is computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InversionMode {
    ClosedForm,
    Bisection { tolerance: f64 },
}

type Map = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// An increasing bijection `(0,1) -> R` with `f(1-x) = -f(x)`, hence
/// `f(1/2) = 0`. Evaluation is pure and the value is immutable, so sharing
/// across threads is free.
#[derive(Clone)]
pub struct OddHomeomorphism {
    kind: HomeoKind,
    forward_fn: Map,
    inverse_fn: Map,
    inversion: InversionMode,
}

impl std::fmt::Debug for OddHomeomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OddHomeomorphism")
            .field("kind", &self.kind)
            .field("inversion", &self.inversion)
            .finish()
    }
}

impl OddHomeomorphism {
    pub fn kind(&self) -> &HomeoKind {
        &self.kind
    }

    pub fn inversion(&self) -> InversionMode {
        self.inversion
    }

    /// Evaluate the forward map. The argument must lie strictly inside
    /// (0, 1).
    pub fn forward(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::Domain(format!(
                "forward map is defined on (0, 1), got {x}"
            )));
        }
        let y = (self.forward_fn)(x);
        if y.is_nan() {
            return Err(Error::Numeric(format!("forward map returned NaN at {x}")));
        }
        Ok(y)
    }

    /// Evaluate the inverse map at any real `y`.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !y.is_finite() {
            return Err(Error::Domain(format!("inverse argument must be finite, got {y}")));
        }
        let x = (self.inverse_fn)(y);
        if !x.is_finite() {
            return Err(Error::Numeric(format!(
                "inverse evaluation failed at {y} (mode {:?})",
                self.inversion
            )));
        }
        Ok(x)
    }

    pub(crate) fn forward_raw(&self) -> Map {
        Arc::clone(&self.forward_fn)
    }

    pub(crate) fn inverse_raw(&self) -> Map {
        Arc::clone(&self.inverse_fn)
    }
}

/// The logit map `x ↦ ln(x/(1-x))` with sigmoid inverse.
pub fn logit() -> OddHomeomorphism {
    OddHomeomorphism {
        kind: HomeoKind::Logit,
        forward_fn: Arc::new(|x| (x / (1.0 - x)).ln()),
        inverse_fn: Arc::new(|y| 1.0 / (1.0 + (-y).exp())),
        inversion: InversionMode::ClosedForm,
    }
}

/// `x ↦ k ln(x/(1-x))` for `k > 0`. Scaling the transfer map leaves the
/// quasi-difference representation unchanged but is a distinct map, which is
/// what some of the distinctness experiments need.
pub fn scaled_logit(k: f64) -> Result<OddHomeomorphism> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidInput(format!("scale must be positive, got {k}")));
    }
    Ok(OddHomeomorphism {
        kind: HomeoKind::ScaledLogit(k),
        forward_fn: Arc::new(move |x| k * (x / (1.0 - x)).ln()),
        inverse_fn: Arc::new(move |y| 1.0 / (1.0 + (-y / k).exp())),
        inversion: InversionMode::ClosedForm,
    })
}

/// The map that is exactly `x - 1/2` on `[eps, 1-eps]`, extended to a
/// homeomorphism onto the whole line by logarithmic tails:
/// `f(x) = (eps - 1/2) + ln(x/eps)` on `(0, eps)` and by odd reflection on
/// `(1-eps, 1)`. Requires `0 < eps < 1/2`.
pub fn piecewise_identity(eps: f64) -> Result<OddHomeomorphism> {
    if !eps.is_finite() || eps <= 0.0 || eps >= 0.5 {
        return Err(Error::InvalidInput(format!(
            "piecewise identity needs 0 < eps < 1/2, got {eps}"
        )));
    }
    let lo = eps - 0.5;
    let hi = 0.5 - eps;
    Ok(OddHomeomorphism {
        kind: HomeoKind::PiecewiseIdentity(eps),
        forward_fn: Arc::new(move |x| {
            if x < eps {
                lo + (x / eps).ln()
            } else if x <= 1.0 - eps {
                x - 0.5
            } else {
                -(lo + ((1.0 - x) / eps).ln())
            }
        }),
        inverse_fn: Arc::new(move |y| {
            if y < lo {
                eps * (y - lo).exp()
            } else if y <= hi {
                y + 0.5
            } else {
                1.0 - eps * (hi - y).exp()
            }
        }),
        inversion: InversionMode::ClosedForm,
    })
}

/// Wrap a user-supplied strictly increasing forward map, inverting it by
/// bisection at the given tolerance. The forward map is taken on trust; run
/// [`check_odd_symmetry`] and the round-trip checks to certify it.
pub fn from_forward<F>(name: impl Into<String>, forward: F, tolerance: f64) -> Result<OddHomeomorphism>
where
    F: Fn(f64) -> f64 + Send + Sync + 'static,
{
    if !tolerance.is_finite() || tolerance <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "bisection tolerance must be positive and finite, got {tolerance}"
        )));
    }
    let forward = Arc::new(forward);
    let fwd = Arc::clone(&forward);
    Ok(OddHomeomorphism {
        kind: HomeoKind::Custom(name.into()),
        forward_fn: forward,
        inverse_fn: Arc::new(move |y| {
            invert_by_bisection(|x| fwd(x), y, tolerance).unwrap_or(f64::NAN)
        }),
        inversion: InversionMode::Bisection { tolerance },
    })
}

/// Invert a strictly increasing surjective map `(0,1) -> R` at `y`.
///
/// The bracket is found by repeatedly halving the distance from the probe to
/// the relevant endpoint of (0, 1), then plain bisection runs until
/// `|forward(x) - y| <= tolerance * max(1, |y|)`. The procedure is fully
/// deterministic. A map that is not surjective exhausts the bracket search
/// and reports a numeric error.
// The negated comparisons in the bracket loops are load-bearing: a NaN from
// the forward map must keep the loop running into the step guard, which
// turns it into a numeric error instead of a bogus bracket.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn invert_by_bisection<F>(forward: F, y: f64, tolerance: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !tolerance.is_finite() || tolerance <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "bisection tolerance must be positive and finite, got {tolerance}"
        )));
    }
    if !y.is_finite() {
        return Err(Error::Domain(format!("bisection target must be finite, got {y}")));
    }
    let accept = tolerance * y.abs().max(1.0);

    let mut lo = 0.25;
    let mut steps = 0;
    while !(forward(lo) <= y) {
        lo *= 0.5;
        steps += 1;
        if lo == 0.0 || steps > 1200 {
            return Err(Error::Numeric(format!(
                "no lower bracket for {y}: forward map does not reach it"
            )));
        }
    }
    let mut hi = 0.75;
    steps = 0;
    while !(forward(hi) >= y) {
        hi = 1.0 - 0.5 * (1.0 - hi);
        steps += 1;
        if hi >= 1.0 || steps > 1200 {
            return Err(Error::Numeric(format!(
                "no upper bracket for {y}: forward map does not reach it"
            )));
        }
    }

    for _ in 0..256 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = forward(mid);
        if (fm - y).abs() <= accept {
            return Ok(mid);
        }
        if fm < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    for x in [lo, hi] {
        if (forward(x) - y).abs() <= accept {
            return Ok(x);
        }
    }
    Err(Error::Numeric(format!(
        "bisection stalled before reaching tolerance {tolerance} at target {y}"
    )))
}

/// Residual check of the odd symmetry `f(1-x) = -f(x)` over a grid in (0,1).
pub fn check_odd_symmetry(
    f: &OddHomeomorphism,
    grid: &[f64],
    tolerance: f64,
) -> Result<CheckReport> {
    for &x in grid {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::Domain(format!("grid point {x} is not in (0, 1)")));
        }
    }
    let fwd = f.forward_raw();
    let (idx, max_residual) = sweep::scan_max(grid.len(), |i| {
        let x = grid[i];
        (fwd(1.0 - x) + fwd(x)).abs()
    })
    .unwrap_or((0, 0.0));
    let worst = grid.get(idx).copied().map(|x| vec![x]).unwrap_or_default();
    Ok(CheckReport {
        property: "odd_symmetry".to_string(),
        samples: grid.len(),
        max_residual,
        worst_case: worst,
        passed: max_residual.is_finite() && max_residual <= tolerance,
        tolerance,
        seed: None,
    })
}
