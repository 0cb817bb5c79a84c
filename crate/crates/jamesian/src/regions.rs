//! The explicit piecewise description of the Salzmann-transfer function
//! built from the near-identity transfer map.
//!
//! With the transfer map equal to `x - 1/2` on `I_eps = [eps, 1-eps]`, the
//! composite `f⁻¹(f(a) * f(1-b))` collapses to one of three affine formulas
//! whenever `a` and `b` lie in `I_eps` and the intermediate product lands in
//! `I'_eps = [eps - 1/2, 1/2 - eps]`. The three sets where that happens are
//! keyed on the ratio `(a - 1/2) / (1/2 - b)`, mirroring the case table of
//! the underlying operation:
//!
//! * `A1`: ratio in `(-inf, -3/2] ∪ [1, inf)` and `a - b/2 - 1/4` in `I'`,
//!   value `a - b/2 + 1/4`;
//! * `A2`: ratio in `[-2/3, 1]` and `a/2 - b + 1/4` in `I'`,
//!   value `a/2 - b + 3/4`;
//! * `A3`: ratio in `[-3/2, -2/3]` and `2a - 2b` in `I'`,
//!   value `2a - 2b + 1/2`.
//!
//! The line `b = 1/2`, where the ratio is undefined, gets its own label with
//! value `a`. Everywhere else the generic evaluator must be used. Points
//! with `a` or `b` outside `I_eps` are outside the explicit region even when
//! the displayed ratio and affine conditions hold, because the transfer map
//! is no longer the shifted identity there.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homeo::piecewise_identity;
use crate::james::JamesianFunction;
use crate::loops::CheckReport;
use crate::salzmann::salzmann_loop;
use crate::sweep;

/// Default width parameter; keeps the headline defect triple inside the
/// identity region.
pub const DEFAULT_EPSILON: f64 = 0.1;

/// The parameters of the explicit region: `eps`, the identity interval
/// `I_eps = [eps, 1-eps]` and its shifted image `I'_eps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExplicitRegionSpec {
    epsilon: f64,
}

impl ExplicitRegionSpec {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(Error::InvalidInput(format!(
                "explicit region needs 0 < eps < 1/2, got {epsilon}"
            )));
        }
        Ok(ExplicitRegionSpec { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `I_eps = [eps, 1-eps]`, where the transfer map is `x - 1/2`.
    pub fn identity_interval(&self) -> (f64, f64) {
        (self.epsilon, 1.0 - self.epsilon)
    }

    /// `I'_eps = [eps - 1/2, 1/2 - eps]`, the image of `I_eps` under
    /// `x ↦ x - 1/2`.
    pub fn image_interval(&self) -> (f64, f64) {
        (self.epsilon - 0.5, 0.5 - self.epsilon)
    }

    fn in_identity(&self, x: f64) -> bool {
        let (lo, hi) = self.identity_interval();
        x >= lo && x <= hi
    }

    fn in_image(&self, y: f64) -> bool {
        let (lo, hi) = self.image_interval();
        y >= lo && y <= hi
    }
}

/// Label of a point of the open unit square relative to the explicit region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionLabel {
    A1,
    A2,
    A3,
    #[serde(rename = "OUTSIDE")]
    Outside,
    /// The degenerate line `b = 1/2` where the ratio is undefined; the value
    /// there is `a`.
    #[serde(rename = "B_HALF")]
    BHalf,
}

impl RegionLabel {
    /// True on the explicit pieces where a closed-form value exists.
    pub fn is_explicit(&self) -> bool {
        !matches!(self, RegionLabel::Outside)
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegionLabel::A1 => "A1",
            RegionLabel::A2 => "A2",
            RegionLabel::A3 => "A3",
            RegionLabel::Outside => "OUTSIDE",
            RegionLabel::BHalf => "B_HALF",
        };
        f.write_str(s)
    }
}

/// Classify a point of the open unit square. Shared ratio boundaries are
/// resolved by the priority A1 > A2 > A3; the affine formulas agree there,
/// so the tie-break never changes a value.
pub fn classify(a: f64, b: f64, spec: &ExplicitRegionSpec) -> Result<RegionLabel> {
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return Err(Error::Domain(format!(
            "({a}, {b}) is not in the open unit square"
        )));
    }
    if b == 0.5 {
        return Ok(RegionLabel::BHalf);
    }
    if !spec.in_identity(a) || !spec.in_identity(b) {
        return Ok(RegionLabel::Outside);
    }
    let ratio = (a - 0.5) / (0.5 - b);
    if (ratio >= 1.0 || ratio <= -1.5) && spec.in_image(a - b / 2.0 - 0.25) {
        Ok(RegionLabel::A1)
    } else if (-2.0 / 3.0..=1.0).contains(&ratio) && spec.in_image(a / 2.0 - b + 0.25) {
        Ok(RegionLabel::A2)
    } else if (-1.5..=-2.0 / 3.0).contains(&ratio) && spec.in_image(2.0 * a - 2.0 * b) {
        Ok(RegionLabel::A3)
    } else {
        Ok(RegionLabel::Outside)
    }
}

/// Closed-form value on the explicit region; an error outside it, where the
/// generic evaluator is the only option.
pub fn explicit_eval(a: f64, b: f64, spec: &ExplicitRegionSpec) -> Result<f64> {
    match classify(a, b, spec)? {
        RegionLabel::A1 => Ok(a - b / 2.0 + 0.25),
        RegionLabel::A2 => Ok(a / 2.0 - b + 0.75),
        RegionLabel::A3 => Ok(2.0 * a - 2.0 * b + 0.5),
        RegionLabel::BHalf => Ok(a),
        RegionLabel::Outside => Err(Error::OutsideExplicitRegion { a, b }),
    }
}

const CROSS_VALIDATE_TOLERANCE: f64 = 1e-12;

/// Pinned points that the cross-validation always includes ahead of the
/// random draw (the three affine pieces plus the `b = 1/2` line).
const PINNED_POINTS: [(f64, f64); 5] = [
    (0.6, 0.55),
    (0.55, 0.6),
    (0.55, 0.57),
    (0.3, 0.5),
    (0.7, 0.5),
];

/// Compare the closed-form evaluation against the generic transfer
/// evaluator on pinned points plus `samples` uniform draws, discarding
/// points outside the explicit region. Both paths are exact affine
/// arithmetic on the region, so agreement is required at 1e-12.
pub fn cross_validate(spec: &ExplicitRegionSpec, samples: usize, seed: u64) -> Result<CheckReport> {
    let j = JamesianFunction::loop_transfer(salzmann_loop(), piecewise_identity(spec.epsilon())?)?;
    let mut points: Vec<(f64, f64)> = PINNED_POINTS.to_vec();
    let mut rng = StdRng::seed_from_u64(seed);
    points.extend((0..samples).map(|_| {
        (
            rng.random_range(1e-9..1.0 - 1e-9),
            rng.random_range(1e-9..1.0 - 1e-9),
        )
    }));
    let compared: Vec<(f64, f64)> = points
        .into_iter()
        .filter(|&(a, b)| {
            classify(a, b, spec)
                .map(|label| label.is_explicit())
                .unwrap_or(false)
        })
        .collect();
    let (idx, max_residual) = sweep::scan_max(compared.len(), |i| {
        let (a, b) = compared[i];
        let explicit = explicit_eval(a, b, spec).expect("point was classified explicit");
        (explicit - j.eval_unchecked(a, b)).abs()
    })
    .unwrap_or((0, 0.0));
    let worst = compared
        .get(idx)
        .map(|&(a, b)| vec![a, b])
        .unwrap_or_default();
    Ok(CheckReport {
        property: "explicit_region_cross_validation".to_string(),
        samples: compared.len(),
        max_residual,
        worst_case: worst,
        passed: max_residual.is_finite() && max_residual <= CROSS_VALIDATE_TOLERANCE,
        tolerance: CROSS_VALIDATE_TOLERANCE,
        seed: Some(seed),
    })
}

/// Row-major labeling of the interior lattice `(i/(n+1), j/(n+1))`, the raw
/// data for a picture of the region.
pub fn region_grid(
    spec: &ExplicitRegionSpec,
    resolution: usize,
) -> Result<Vec<(f64, f64, RegionLabel)>> {
    if resolution < 2 {
        return Err(Error::InvalidInput(format!(
            "region grid resolution must be at least 2, got {resolution}"
        )));
    }
    let n = resolution;
    let pts: Vec<f64> = (1..=n).map(|i| i as f64 / (n + 1) as f64).collect();
    let cells = sweep::map_collect(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        let label = classify(a, b, spec).expect("lattice point is interior");
        (a, b, label)
    });
    Ok(cells)
}
