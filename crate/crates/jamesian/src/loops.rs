//! Binary operations on the real line or the open unit interval, together
//! with generic checkers for the loop axioms: two-sided unit, two-sided
//! inverses, the inverse property, commutativity, strictly increasing
//! translations, and a search for associativity failures.
//!
//! A loop satisfies every group axiom except, possibly, associativity. The
//! checkers certify each axiom numerically on caller-supplied samples and
//! report the worst residual found; the witness search looks for concrete
//! triples where associativity breaks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sweep;

/// Default residual tolerance for floating-point checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The set a loop operation is defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Carrier {
    /// All of the real line.
    Reals,
    /// The open interval (0, 1).
    OpenUnit,
}

impl Carrier {
    pub fn contains(&self, x: f64) -> bool {
        match self {
            Carrier::Reals => x.is_finite(),
            Carrier::OpenUnit => x.is_finite() && x > 0.0 && x < 1.0,
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            Carrier::Reals => "the real line",
            Carrier::OpenUnit => "the open interval (0, 1)",
        }
    }
}

/// Numeric mode of a loop: plain floating point, or floating point with an
/// exact-rational twin for operations that are rational-valued on rational
/// inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Backend {
    Float,
    FloatAndRational,
}

type BinOp = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
type UnOp = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type BinOpExact = Arc<dyn Fn(&BigRational, &BigRational) -> BigRational + Send + Sync>;
type UnOpExact = Arc<dyn Fn(&BigRational) -> BigRational + Send + Sync>;

/// Exact-rational twin of a loop operation.
#[derive(Clone)]
pub struct ExactLoopOps {
    op: BinOpExact,
    unit: BigRational,
    inv: UnOpExact,
}

impl ExactLoopOps {
    pub fn new<F, G>(op: F, unit: BigRational, inv: G) -> Self
    where
        F: Fn(&BigRational, &BigRational) -> BigRational + Send + Sync + 'static,
        G: Fn(&BigRational) -> BigRational + Send + Sync + 'static,
    {
        ExactLoopOps {
            op: Arc::new(op),
            unit,
            inv: Arc::new(inv),
        }
    }

    pub fn op(&self, x: &BigRational, y: &BigRational) -> BigRational {
        (self.op)(x, y)
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn inv(&self, x: &BigRational) -> BigRational {
        (self.inv)(x)
    }
}

/// A binary operation on an interval of the real line, with a two-sided
/// unit and a two-sided inverse map. Immutable after construction; all
/// evaluation is pure.
#[derive(Clone)]
pub struct RealLoop {
    name: String,
    carrier: Carrier,
    unit: f64,
    op: BinOp,
    inv: UnOp,
    exact: Option<ExactLoopOps>,
}

impl std::fmt::Debug for RealLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RealLoop")
            .field("name", &self.name)
            .field("carrier", &self.carrier)
            .field("unit", &self.unit)
            .field("backend", &self.backend())
            .finish()
    }
}

impl RealLoop {
    pub fn new<F, G>(name: impl Into<String>, carrier: Carrier, unit: f64, op: F, inv: G) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        RealLoop {
            name: name.into(),
            carrier,
            unit,
            op: Arc::new(op),
            inv: Arc::new(inv),
            exact: None,
        }
    }

    /// Attach an exact-rational twin of the operation.
    pub fn with_exact(mut self, exact: ExactLoopOps) -> Self {
        self.exact = Some(exact);
        self
    }

    /// The additive group of the real numbers, the reference associative case.
    pub fn additive() -> Self {
        RealLoop::new("additive", Carrier::Reals, 0.0, |x, t| x + t, |x| -x).with_exact(
            ExactLoopOps::new(|x, t| x + t, BigRational::from_integer(BigInt::from(0)), |x| -x),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn unit(&self) -> f64 {
        self.unit
    }

    pub fn backend(&self) -> Backend {
        if self.exact.is_some() {
            Backend::FloatAndRational
        } else {
            Backend::Float
        }
    }

    pub fn exact(&self) -> Option<&ExactLoopOps> {
        self.exact.as_ref()
    }

    /// Raw evaluation; total, with non-finite values signalling failure.
    pub fn op(&self, x: f64, y: f64) -> f64 {
        (self.op)(x, y)
    }

    pub fn inv(&self, x: f64) -> f64 {
        (self.inv)(x)
    }

    fn require_in_carrier(&self, x: f64, what: &str) -> Result<()> {
        if self.carrier.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} {x} is not in {}",
                self.carrier.describe()
            )))
        }
    }
}

/// Outcome of a single property check: the worst residual seen over the
/// sample set, the inputs that produced it, and a verdict against the stated
/// tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub samples: usize,
    pub max_residual: f64,
    /// Inputs reproducing `max_residual` when re-evaluated.
    pub worst_case: Vec<f64>,
    pub passed: bool,
    pub tolerance: f64,
    /// Seed of the sampling RNG when the sample set was randomly drawn.
    pub seed: Option<u64>,
}

impl CheckReport {
    fn from_residual(
        property: &str,
        samples: usize,
        max_residual: f64,
        worst_case: Vec<f64>,
        tolerance: f64,
    ) -> Self {
        CheckReport {
            property: property.to_string(),
            samples,
            max_residual,
            worst_case,
            passed: max_residual.is_finite() && max_residual <= tolerance,
            tolerance,
            seed: None,
        }
    }

    /// Record the seed that generated the sample set.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// A concrete triple on which associativity fails, with both bracketings.
#[derive(Debug, Clone, Serialize)]
pub struct AssociativityWitness {
    pub triple: [f64; 3],
    /// `op(op(x, y), z)`
    pub lhs: f64,
    /// `op(x, op(y, z))`
    pub rhs: f64,
    pub defect: f64,
}

/// How to look for an associativity witness: a deterministic family of
/// power-derived candidates first, then seeded uniform random triples.
#[derive(Debug, Clone)]
pub struct SearchStrategy {
    /// Base points x for the candidate triples (x*x, x, x), (x, x, x*x),
    /// (x, x*x, x). Power computations make these the first place
    /// associativity tends to break.
    pub power_base: Vec<f64>,
    pub random_triples: usize,
    pub seed: u64,
    /// Sampling interval for random triples when the carrier is the reals.
    pub real_range: (f64, f64),
}

impl SearchStrategy {
    /// Default strategy for a carrier: a fixed base grid plus `random`
    /// seeded triples.
    pub fn for_carrier(carrier: Carrier, random_triples: usize, seed: u64) -> Self {
        let power_base = match carrier {
            Carrier::Reals => vec![1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 3.0, 0.25],
            Carrier::OpenUnit => vec![
                0.6, 0.7, 0.75, 0.8, 0.3, 0.25, 0.2, 0.55, 0.65, 0.4, 0.45, 0.35, 0.9, 0.1,
            ],
        };
        SearchStrategy {
            power_base,
            random_triples,
            seed,
            real_range: (-5.0, 5.0),
        }
    }
}

fn max_over_samples<F>(n: usize, eval: F) -> (usize, f64)
where
    F: Fn(usize) -> f64 + Send + Sync,
{
    sweep::scan_max(n, eval).unwrap_or((0, 0.0))
}

/// Check the two-sided unit law `op(x, e) = x = op(e, x)` on each sample.
pub fn check_identity(loop_: &RealLoop, samples: &[f64], tolerance: f64) -> Result<CheckReport> {
    for &x in samples {
        loop_.require_in_carrier(x, "sample")?;
    }
    let e = loop_.unit();
    let (idx, max_residual) = max_over_samples(samples.len(), |i| {
        let x = samples[i];
        (loop_.op(x, e) - x).abs().max((loop_.op(e, x) - x).abs())
    });
    let worst = samples.get(idx).copied().map(|x| vec![x]).unwrap_or_default();
    Ok(CheckReport::from_residual(
        "identity",
        samples.len(),
        max_residual,
        worst,
        tolerance,
    ))
}

/// Check `op(x, inv(x)) = e = op(inv(x), x)` and `inv(inv(x)) = x`.
pub fn check_inverse_elements(
    loop_: &RealLoop,
    samples: &[f64],
    tolerance: f64,
) -> Result<CheckReport> {
    for &x in samples {
        loop_.require_in_carrier(x, "sample")?;
    }
    let e = loop_.unit();
    let (idx, max_residual) = max_over_samples(samples.len(), |i| {
        let x = samples[i];
        let xi = loop_.inv(x);
        (loop_.op(x, xi) - e)
            .abs()
            .max((loop_.op(xi, x) - e).abs())
            .max((loop_.inv(xi) - x).abs())
    });
    let worst = samples.get(idx).copied().map(|x| vec![x]).unwrap_or_default();
    Ok(CheckReport::from_residual(
        "inverse_elements",
        samples.len(),
        max_residual,
        worst,
        tolerance,
    ))
}

/// Check the inverse property `x (x⁻¹ y) = y = (y x⁻¹) x` on each pair.
pub fn check_inverse_property(
    loop_: &RealLoop,
    samples: &[(f64, f64)],
    tolerance: f64,
) -> Result<CheckReport> {
    for &(x, y) in samples {
        loop_.require_in_carrier(x, "sample")?;
        loop_.require_in_carrier(y, "sample")?;
    }
    let (idx, max_residual) = max_over_samples(samples.len(), |i| {
        let (x, y) = samples[i];
        let xi = loop_.inv(x);
        let left = (loop_.op(x, loop_.op(xi, y)) - y).abs();
        let right = (loop_.op(loop_.op(y, xi), x) - y).abs();
        left.max(right)
    });
    let worst = samples
        .get(idx)
        .map(|&(x, y)| vec![x, y])
        .unwrap_or_default();
    Ok(CheckReport::from_residual(
        "inverse_property",
        samples.len(),
        max_residual,
        worst,
        tolerance,
    ))
}

/// Check `op(x, y) = op(y, x)` on each pair.
pub fn check_commutative(
    loop_: &RealLoop,
    samples: &[(f64, f64)],
    tolerance: f64,
) -> Result<CheckReport> {
    for &(x, y) in samples {
        loop_.require_in_carrier(x, "sample")?;
        loop_.require_in_carrier(y, "sample")?;
    }
    let (idx, max_residual) = max_over_samples(samples.len(), |i| {
        let (x, y) = samples[i];
        (loop_.op(x, y) - loop_.op(y, x)).abs()
    });
    let worst = samples
        .get(idx)
        .map(|&(x, y)| vec![x, y])
        .unwrap_or_default();
    Ok(CheckReport::from_residual(
        "commutative",
        samples.len(),
        max_residual,
        worst,
        tolerance,
    ))
}

/// Check that the right translation by `t` is strictly increasing along a
/// strictly increasing grid: `op(x_i, t) < op(x_{i+1}, t)` for consecutive
/// points. The residual is the worst decrease `op(x_i, t) - op(x_{i+1}, t)`;
/// it is negative when the check passes, and the check requires it to be
/// strictly below zero (the tolerance field is informational here).
pub fn check_translation_monotone(
    loop_: &RealLoop,
    t: f64,
    grid: &[f64],
) -> Result<CheckReport> {
    loop_.require_in_carrier(t, "translation argument")?;
    for &x in grid {
        loop_.require_in_carrier(x, "grid point")?;
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "grid must be strictly increasing".to_string(),
        ));
    }
    let values: Vec<f64> = sweep::map_collect(grid.len(), |i| loop_.op(grid[i], t));
    let pairs = grid.len().saturating_sub(1);
    let (idx, max_residual) = if pairs == 0 {
        (0, f64::NEG_INFINITY)
    } else {
        max_over_samples(pairs, |i| values[i] - values[i + 1])
    };
    let worst = if pairs == 0 {
        vec![]
    } else {
        vec![grid[idx], grid[idx + 1], t]
    };
    let mut report = CheckReport::from_residual(
        "translation_monotone",
        grid.len(),
        max_residual,
        worst,
        0.0,
    );
    report.passed = max_residual < 0.0;
    Ok(report)
}

fn associativity_defect(loop_: &RealLoop, t: [f64; 3]) -> (f64, f64, f64) {
    let [x, y, z] = t;
    let lhs = loop_.op(loop_.op(x, y), z);
    let rhs = loop_.op(x, loop_.op(y, z));
    (lhs, rhs, (lhs - rhs).abs())
}

/// Search for a triple witnessing an associativity defect of at least
/// `threshold`. Deterministic power-family candidates are tried first in
/// strategy order, then the seeded random triples; the first hit is
/// returned. `None` means the search budget was exhausted, which for a
/// representable loop is the expected outcome.
pub fn find_associativity_witness(
    loop_: &RealLoop,
    strategy: &SearchStrategy,
    threshold: f64,
) -> Result<Option<AssociativityWitness>> {
    if !threshold.is_finite() || threshold <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "witness threshold must be positive and finite, got {threshold}"
        )));
    }
    let mut candidates: Vec<[f64; 3]> = Vec::new();
    for &x in &strategy.power_base {
        if !loop_.carrier().contains(x) {
            continue;
        }
        let xx = loop_.op(x, x);
        if !loop_.carrier().contains(xx) {
            continue;
        }
        candidates.push([xx, x, x]);
        candidates.push([x, x, xx]);
        candidates.push([x, xx, x]);
    }
    let mut rng = StdRng::seed_from_u64(strategy.seed);
    let (lo, hi) = match loop_.carrier() {
        Carrier::Reals => strategy.real_range,
        Carrier::OpenUnit => (1e-9, 1.0 - 1e-9),
    };
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidInput(
            "random sampling range must be nonempty".to_string(),
        ));
    }
    for _ in 0..strategy.random_triples {
        candidates.push([
            rng.random_range(lo..hi),
            rng.random_range(lo..hi),
            rng.random_range(lo..hi),
        ]);
    }
    let hit = sweep::find_first(candidates.len(), |i| {
        let (_, _, d) = associativity_defect(loop_, candidates[i]);
        d.is_finite() && d >= threshold
    });
    Ok(hit.map(|i| {
        let triple = candidates[i];
        let (lhs, rhs, defect) = associativity_defect(loop_, triple);
        AssociativityWitness {
            triple,
            lhs,
            rhs,
            defect,
        }
    }))
}

/// Left-nested power `x^n = op(x^{n-1}, x)`, with `x^0` defined as the unit.
///
/// In a loop that is not power associative, values for `n >= 4` depend on
/// the bracketing; this function fixes the left-nested convention, so for
/// such loops the result is a convention rather than a canonical value.
pub fn power(loop_: &RealLoop, x: f64, n: u32) -> Result<f64> {
    loop_.require_in_carrier(x, "base")?;
    if n == 0 {
        return Ok(loop_.unit());
    }
    let mut acc = x;
    for _ in 1..n {
        acc = loop_.op(acc, x);
    }
    Ok(acc)
}

/// First violation found by an exact check, if any.
#[derive(Debug, Clone)]
pub struct ExactViolation {
    pub inputs: Vec<BigRational>,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Exact two-sided unit law over the rational backend.
pub fn check_identity_exact(ops: &ExactLoopOps, samples: &[BigRational]) -> Option<ExactViolation> {
    let e = ops.unit().clone();
    for x in samples {
        let right = ops.op(x, &e);
        if right != *x {
            return Some(ExactViolation {
                inputs: vec![x.clone()],
                lhs: right,
                rhs: x.clone(),
            });
        }
        let left = ops.op(&e, x);
        if left != *x {
            return Some(ExactViolation {
                inputs: vec![x.clone()],
                lhs: left,
                rhs: x.clone(),
            });
        }
    }
    None
}

/// Exact inverse law `op(x, inv(x)) = e` and `inv(inv(x)) = x`.
pub fn check_inverse_elements_exact(
    ops: &ExactLoopOps,
    samples: &[BigRational],
) -> Option<ExactViolation> {
    for x in samples {
        let xi = ops.inv(x);
        let prod = ops.op(x, &xi);
        if prod != *ops.unit() {
            return Some(ExactViolation {
                inputs: vec![x.clone()],
                lhs: prod,
                rhs: ops.unit().clone(),
            });
        }
        let back = ops.inv(&xi);
        if back != *x {
            return Some(ExactViolation {
                inputs: vec![x.clone()],
                lhs: back,
                rhs: x.clone(),
            });
        }
    }
    None
}

/// Exact inverse property `x (x⁻¹ y) = y = (y x⁻¹) x` over rational pairs.
pub fn check_inverse_property_exact(
    ops: &ExactLoopOps,
    samples: &[(BigRational, BigRational)],
) -> Option<ExactViolation> {
    for (x, y) in samples {
        let xi = ops.inv(x);
        let left = ops.op(x, &ops.op(&xi, y));
        if left != *y {
            return Some(ExactViolation {
                inputs: vec![x.clone(), y.clone()],
                lhs: left,
                rhs: y.clone(),
            });
        }
        let right = ops.op(&ops.op(y, &xi), x);
        if right != *y {
            return Some(ExactViolation {
                inputs: vec![x.clone(), y.clone()],
                lhs: right,
                rhs: y.clone(),
            });
        }
    }
    None
}
