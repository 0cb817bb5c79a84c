//! Involutive Jamesian functions: evaluators `J : (0,1)² -> (0,1)` that
//! predict the probability that a team with winning percentage `a` beats a
//! team with winning percentage `b`, subject to three axioms:
//!
//! 1. involution: `J(a, J(a, b)) = b`,
//! 2. complement: `J(a, b) + J(b, a) = 1`,
//! 3. strict monotonicity of `a ↦ J(a, b0)`.
//!
//! The module provides the classical closed form, the quasi-difference
//! family `f⁻¹(f(a) - f(b))`, and the loop-transfer family
//! `f⁻¹(f(a) * f(1-b))` over a loop on the reals. The transfer family over a
//! proper loop produces functions that satisfy every axiom yet fail the
//! transitivity identity `J(J(a,c), J(b,c)) = J(a,b)` that characterizes the
//! quasi-difference form; the checkers here measure that failure as a
//! concrete, reproducible defect.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homeo::{InversionMode, OddHomeomorphism};
use crate::loops::{self, Carrier, CheckReport, RealLoop};
use crate::sweep;

/// Certification tolerance for closed-form evaluation paths.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-12;
/// Certification tolerance for loop-transfer paths with closed-form inverses.
pub const TRANSFER_TOLERANCE: f64 = 1e-9;
/// Two functions are reported distinct when they differ by more than this.
pub const DISTINCTNESS_THRESHOLD: f64 = 1e-9;

/// The classical closed-form matchup probability
/// `a(1-b) / (a(1-b) + (1-a)b)` for `a, b` strictly inside (0, 1).
pub fn adams(a: f64, b: f64) -> Result<f64> {
    require_open_unit(a, "a")?;
    require_open_unit(b, "b")?;
    Ok(adams_raw(a, b))
}

fn adams_raw(a: f64, b: f64) -> f64 {
    let win = a * (1.0 - b);
    let lose = (1.0 - a) * b;
    win / (win + lose)
}

fn require_open_unit(x: f64, name: &str) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {x} is not in (0, 1)")))
    }
}

/// How a [`JamesianFunction`] was built; kept for reporting and for the
/// tolerance ladder.
#[derive(Clone)]
pub enum Construction {
    /// The closed form of [`adams`].
    Adams,
    /// `J(a, b) = f⁻¹(f(a) - f(b))`.
    Representable { transfer: OddHomeomorphism },
    /// `J(a, b) = f⁻¹(f(a) * f(1-b))` over a loop on the reals.
    LoopTransfer {
        loop_: RealLoop,
        transfer: OddHomeomorphism,
    },
    /// `J(a, b) = a · (1-b)` for a loop `·` on (0, 1).
    FromInduced { loop_: RealLoop },
    /// A user-supplied evaluator, named for reports.
    Custom { name: String },
}

type Eval = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// An involutive Jamesian function. Immutable and cheap to clone; evaluation
/// is pure, so grid sweeps can be partitioned across threads freely.
#[derive(Clone)]
pub struct JamesianFunction {
    construction: Construction,
    eval_fn: Eval,
    tolerance: f64,
}

impl std::fmt::Debug for JamesianFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("JamesianFunction")
            .field("construction", &self.name())
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

fn certified(base: f64, f: &OddHomeomorphism) -> f64 {
    match f.inversion() {
        InversionMode::ClosedForm => base,
        InversionMode::Bisection { tolerance } => (10.0 * tolerance).max(base),
    }
}

impl JamesianFunction {
    /// The classical closed form.
    pub fn adams() -> Self {
        JamesianFunction {
            construction: Construction::Adams,
            eval_fn: Arc::new(adams_raw),
            tolerance: CLOSED_FORM_TOLERANCE,
        }
    }

    /// The quasi-difference form `f⁻¹(f(a) - f(b))`. Every odd increasing
    /// homeomorphism yields a valid Jamesian function this way, and the
    /// logit map reproduces [`adams`].
    pub fn representable(transfer: OddHomeomorphism) -> Self {
        let fwd = transfer.forward_raw();
        let inv = transfer.inverse_raw();
        let tolerance = certified(CLOSED_FORM_TOLERANCE, &transfer);
        JamesianFunction {
            construction: Construction::Representable { transfer },
            eval_fn: Arc::new(move |a, b| inv(fwd(a) - fwd(b))),
            tolerance,
        }
    }

    /// The transfer form `f⁻¹(f(a) * f(1-b))` over a loop on the reals.
    ///
    /// The loop must be commutative with unit 0, inverse `x ↦ -x`, the
    /// inverse property and strictly increasing translations; these
    /// hypotheses are checked at construction on a deterministic sample set
    /// and the first failure is reported by name. When the loop is proper,
    /// the resulting function is involutive Jamesian but not expressible as
    /// a quasi-difference, and its transitivity defect is positive
    /// somewhere.
    pub fn loop_transfer(loop_: RealLoop, transfer: OddHomeomorphism) -> Result<Self> {
        validate_transfer_loop(&loop_)?;
        let fwd = transfer.forward_raw();
        let inv = transfer.inverse_raw();
        let op = loop_.clone();
        let tolerance = certified(TRANSFER_TOLERANCE, &transfer);
        Ok(JamesianFunction {
            eval_fn: Arc::new(move |a, b| inv(op.op(fwd(a), fwd(1.0 - b)))),
            construction: Construction::LoopTransfer { loop_, transfer },
            tolerance,
        })
    }

    /// `J(a, b) = a · (1-b)` from a loop on (0, 1) with unit 1/2, inverse
    /// `a ↦ 1-a`, commutativity, the inverse property and increasing
    /// translations; hypotheses checked at construction.
    pub fn from_induced(loop_: RealLoop) -> Result<Self> {
        validate_jamesian_loop(&loop_)?;
        let op = loop_.clone();
        Ok(JamesianFunction {
            eval_fn: Arc::new(move |a, b| op.op(a, 1.0 - b)),
            construction: Construction::FromInduced { loop_ },
            tolerance: TRANSFER_TOLERANCE,
        })
    }

    /// Wrap an arbitrary evaluator, e.g. to run the axiom suite against a
    /// candidate function. Nothing is validated here; that is the point.
    pub fn from_fn<F>(name: impl Into<String>, tolerance: f64, eval: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        JamesianFunction {
            construction: Construction::Custom { name: name.into() },
            eval_fn: Arc::new(eval),
            tolerance,
        }
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// Default certification tolerance for this construction.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn name(&self) -> String {
        match &self.construction {
            Construction::Adams => "adams".to_string(),
            Construction::Representable { transfer } => {
                format!("representable({})", transfer.kind())
            }
            Construction::LoopTransfer { loop_, transfer } => {
                format!("{}-transfer({})", loop_.name(), transfer.kind())
            }
            Construction::FromInduced { loop_ } => format!("from-induced({})", loop_.name()),
            Construction::Custom { name } => name.clone(),
        }
    }

    /// Evaluate at a point of the open square.
    pub fn eval(&self, a: f64, b: f64) -> Result<f64> {
        require_open_unit(a, "a")?;
        require_open_unit(b, "b")?;
        let v = (self.eval_fn)(a, b);
        if v.is_nan() {
            return Err(Error::Numeric(format!(
                "{} produced NaN at ({a}, {b})",
                self.name()
            )));
        }
        Ok(v)
    }

    /// Evaluate without domain validation. Intended for sweeps over inputs
    /// that were validated once up front; non-finite values propagate.
    pub fn eval_unchecked(&self, a: f64, b: f64) -> f64 {
        (self.eval_fn)(a, b)
    }

    /// The unique continuous extension to the closed square minus the two
    /// corners (0,0) and (1,1): a sure win against a hopeless opponent, a
    /// sure loss against a perfect one. The boundary values are pinned
    /// constants, not computed limits.
    pub fn eval_extended(&self, a: f64, b: f64) -> Result<f64> {
        for (v, name) in [(a, "a"), (b, "b")] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain(format!("{name} = {v} is not in [0, 1]")));
            }
        }
        if (a == 0.0 && b == 0.0) || (a == 1.0 && b == 1.0) {
            return Err(Error::UndefinedCorner(a, b));
        }
        if a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0 {
            return self.eval(a, b);
        }
        if b == 0.0 {
            return Ok(1.0);
        }
        if b == 1.0 {
            return Ok(0.0);
        }
        Ok(if a == 0.0 { 0.0 } else { 1.0 })
    }

    /// Both sides and the defect of the transitivity identity at one triple:
    /// `(J(J(a,c), J(b,c)), J(a,b), |difference|)`.
    pub fn transitivity_at(&self, triple: [f64; 3]) -> (f64, f64, f64) {
        let [a, b, c] = triple;
        let lhs = self.eval_unchecked(self.eval_unchecked(a, c), self.eval_unchecked(b, c));
        let rhs = self.eval_unchecked(a, b);
        (lhs, rhs, (lhs - rhs).abs())
    }

    /// The loop `a · b = J(a, 1-b)` on (0, 1), with unit 1/2 and inverse
    /// `a ↦ 1-a`. The function is representable exactly when this loop is a
    /// group, so associativity searches on it are the loop-level face of the
    /// transitivity defect.
    pub fn induced_loop(&self) -> InducedLoop {
        let f = Arc::clone(&self.eval_fn);
        let inner = RealLoop::new(
            format!("induced({})", self.name()),
            Carrier::OpenUnit,
            0.5,
            move |a, b| f(a, 1.0 - b),
            |a| 1.0 - a,
        );
        InducedLoop { inner }
    }
}

/// The loop induced by a Jamesian function on (0, 1).
#[derive(Clone)]
pub struct InducedLoop {
    inner: RealLoop,
}

impl InducedLoop {
    pub fn as_loop(&self) -> &RealLoop {
        &self.inner
    }

    pub fn into_loop(self) -> RealLoop {
        self.inner
    }

    pub fn op(&self, a: f64, b: f64) -> f64 {
        self.inner.op(a, b)
    }

    pub fn unit(&self) -> f64 {
        self.inner.unit()
    }

    pub fn inv(&self, a: f64) -> f64 {
        self.inner.inv(a)
    }
}

fn hypothesis_error(property: &str, report: &CheckReport) -> Error {
    Error::LoopHypothesis {
        property: property.to_string(),
        max_residual: report.max_residual,
        tolerance: report.tolerance,
    }
}

fn validate_transfer_loop(loop_: &RealLoop) -> Result<()> {
    if loop_.carrier() != Carrier::Reals {
        return Err(Error::InvalidInput(
            "transfer construction needs a loop on the reals".to_string(),
        ));
    }
    let tol = loops::DEFAULT_TOLERANCE;
    if loop_.unit().abs() > tol {
        return Err(Error::LoopHypothesis {
            property: "unit_is_zero".to_string(),
            max_residual: loop_.unit().abs(),
            tolerance: tol,
        });
    }
    let xs: Vec<f64> = vec![
        -3.0, -2.0, -1.5, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0,
    ];
    let negation = xs
        .iter()
        .map(|&x| (loop_.inv(x) + x).abs())
        .fold(0.0, f64::max);
    if negation.is_nan() || negation > tol {
        return Err(Error::LoopHypothesis {
            property: "inverse_is_negation".to_string(),
            max_residual: negation,
            tolerance: tol,
        });
    }
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| xs.iter().map(move |&y| (x, y)))
        .collect();
    let checks = [
        ("identity", loops::check_identity(loop_, &xs, tol)?),
        (
            "inverse_elements",
            loops::check_inverse_elements(loop_, &xs, tol)?,
        ),
        ("commutative", loops::check_commutative(loop_, &pairs, tol)?),
        (
            "inverse_property",
            loops::check_inverse_property(loop_, &pairs, tol)?,
        ),
    ];
    for (property, report) in &checks {
        if !report.passed {
            return Err(hypothesis_error(property, report));
        }
    }
    let grid: Vec<f64> = (0..=40).map(|i| -4.0 + 0.2 * i as f64).collect();
    for &t in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
        let report = loops::check_translation_monotone(loop_, t, &grid)?;
        if !report.passed {
            return Err(hypothesis_error("increasing_translations", &report));
        }
    }
    Ok(())
}

fn validate_jamesian_loop(loop_: &RealLoop) -> Result<()> {
    if loop_.carrier() != Carrier::OpenUnit {
        return Err(Error::InvalidInput(
            "induced construction needs a loop on (0, 1)".to_string(),
        ));
    }
    let tol = loops::DEFAULT_TOLERANCE;
    if (loop_.unit() - 0.5).abs() > tol {
        return Err(Error::LoopHypothesis {
            property: "unit_is_half".to_string(),
            max_residual: (loop_.unit() - 0.5).abs(),
            tolerance: tol,
        });
    }
    let xs: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let complement = xs
        .iter()
        .map(|&x| (loop_.inv(x) - (1.0 - x)).abs())
        .fold(0.0, f64::max);
    if complement.is_nan() || complement > tol {
        return Err(Error::LoopHypothesis {
            property: "inverse_is_complement".to_string(),
            max_residual: complement,
            tolerance: tol,
        });
    }
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| xs.iter().map(move |&y| (x, y)))
        .collect();
    let checks = [
        ("identity", loops::check_identity(loop_, &xs, tol)?),
        (
            "inverse_elements",
            loops::check_inverse_elements(loop_, &xs, tol)?,
        ),
        ("commutative", loops::check_commutative(loop_, &pairs, tol)?),
        (
            "inverse_property",
            loops::check_inverse_property(loop_, &pairs, tol)?,
        ),
    ];
    for (property, report) in &checks {
        if !report.passed {
            return Err(hypothesis_error(property, report));
        }
    }
    let grid: Vec<f64> = (1..=49).map(|i| 0.02 * i as f64).collect();
    for &t in &[0.2, 0.4, 0.6, 0.8] {
        let report = loops::check_translation_monotone(loop_, t, &grid)?;
        if !report.passed {
            return Err(hypothesis_error("increasing_translations", &report));
        }
    }
    Ok(())
}

/// An interior lattice: `resolution` equally spaced points per axis,
/// `i / (resolution + 1)` for `i = 1 ..= resolution`.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    resolution: usize,
}

impl GridSpec {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::InvalidInput("grid resolution must be at least 1".into()));
        }
        Ok(GridSpec { resolution })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.resolution;
        (1..=n).map(|i| i as f64 / (n + 1) as f64).collect()
    }
}

/// Run the full axiom suite for `j` over the lattice: the three defining
/// axioms plus the derived identities `J(a,b) = J(1-b, 1-a)`, `J(a,a) = 1/2`,
/// `J(a, 1/2) = a` and the solution symmetry `J(a, J(a,b)) = b` read as
/// "`c = J(a,b)` solves `J(a,c) = b`". One report per property.
pub fn check_axioms(
    j: &JamesianFunction,
    grid: &GridSpec,
    tolerance: f64,
) -> Result<Vec<CheckReport>> {
    let pts = grid.points();
    let n = pts.len();
    let report = |property: &str, samples: usize, max_residual: f64, worst: Vec<f64>| CheckReport {
        property: property.to_string(),
        samples,
        max_residual,
        worst_case: worst,
        passed: max_residual.is_finite() && max_residual <= tolerance,
        tolerance,
        seed: None,
    };

    let mut reports = Vec::with_capacity(7);

    let (idx, r) = sweep::scan_max(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        (j.eval_unchecked(a, j.eval_unchecked(a, b)) - b).abs()
    })
    .unwrap_or((0, 0.0));
    reports.push(report(
        "involutive",
        n * n,
        r,
        vec![pts[idx / n], pts[idx % n]],
    ));

    let (idx, r) = sweep::scan_max(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        (j.eval_unchecked(a, b) + j.eval_unchecked(b, a) - 1.0).abs()
    })
    .unwrap_or((0, 0.0));
    reports.push(report(
        "complement",
        n * n,
        r,
        vec![pts[idx / n], pts[idx % n]],
    ));

    let (idx, r) = sweep::scan_max(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        (j.eval_unchecked(a, b) - j.eval_unchecked(1.0 - b, 1.0 - a)).abs()
    })
    .unwrap_or((0, 0.0));
    reports.push(report(
        "reflection",
        n * n,
        r,
        vec![pts[idx / n], pts[idx % n]],
    ));

    let (idx, r) = sweep::scan_max(n, |i| (j.eval_unchecked(pts[i], pts[i]) - 0.5).abs())
        .unwrap_or((0, 0.0));
    reports.push(report("diagonal_half", n, r, vec![pts[idx]]));

    let (idx, r) = sweep::scan_max(n, |i| (j.eval_unchecked(pts[i], 0.5) - pts[i]).abs())
        .unwrap_or((0, 0.0));
    reports.push(report("unit_second_arg", n, r, vec![pts[idx]]));

    let (idx, r) = sweep::scan_max(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        let c = j.eval_unchecked(a, b);
        (j.eval_unchecked(a, c) - b).abs()
    })
    .unwrap_or((0, 0.0));
    reports.push(report(
        "solution_symmetry",
        n * n,
        r,
        vec![pts[idx / n], pts[idx % n]],
    ));

    // Strict monotonicity in the first argument: the residual is the worst
    // decrease along the lattice and must be strictly negative.
    let pairs = n.saturating_sub(1);
    let (idx, r) = sweep::scan_max(n * pairs, |q| {
        let b0 = pts[q / pairs];
        let i = q % pairs;
        j.eval_unchecked(pts[i], b0) - j.eval_unchecked(pts[i + 1], b0)
    })
    .unwrap_or((0, f64::NEG_INFINITY));
    let worst = if pairs == 0 {
        vec![]
    } else {
        vec![pts[idx % pairs], pts[idx % pairs + 1], pts[idx / pairs]]
    };
    let mut mono = report("monotone_first_arg", n * pairs, r, worst);
    mono.tolerance = 0.0;
    mono.passed = r < 0.0;
    reports.push(mono);

    Ok(reports)
}

/// Verdict of a transitivity-defect measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DefectVerdict {
    /// No defect above threshold was found: consistent with representability.
    RepresentableConsistent,
    /// A triple with defect above threshold certifies non-transitivity,
    /// hence non-representability.
    NonTransitiveWitnessFound,
}

/// Worst transitivity defect found over a triple set, with the triple that
/// produced it.
#[derive(Debug, Clone, Serialize)]
pub struct DefectReport {
    pub max_defect: f64,
    pub argmax: [f64; 3],
    pub samples: usize,
    pub threshold: f64,
    pub verdict: DefectVerdict,
    pub seed: u64,
}

/// Triple set for transitivity measurements: caller-pinned deterministic
/// triples first, then seeded uniform random triples.
#[derive(Debug, Clone)]
pub struct TripleSampler {
    pub pinned: Vec<[f64; 3]>,
    pub random: usize,
    pub seed: u64,
}

impl TripleSampler {
    pub fn new(random: usize, seed: u64) -> Self {
        TripleSampler {
            pinned: Vec::new(),
            random,
            seed,
        }
    }

    pub fn pin(mut self, triple: [f64; 3]) -> Self {
        self.pinned.push(triple);
        self
    }

    fn collect(&self) -> Result<Vec<[f64; 3]>> {
        for t in &self.pinned {
            for &v in t {
                require_open_unit(v, "pinned triple entry")?;
            }
        }
        let mut triples = self.pinned.clone();
        let mut rng = StdRng::seed_from_u64(self.seed);
        triples.extend((0..self.random).map(|_| {
            [
                rng.random_range(1e-9..1.0 - 1e-9),
                rng.random_range(1e-9..1.0 - 1e-9),
                rng.random_range(1e-9..1.0 - 1e-9),
            ]
        }));
        Ok(triples)
    }
}

/// Measure the worst residual of `J(J(a,c), J(b,c)) = J(a,b)` over the
/// sampler's triples. A defect above `threshold` certifies that `J` is not
/// expressible as a quasi-difference; a clean sweep is consistent with (but
/// does not prove) representability.
pub fn transitivity_defect(
    j: &JamesianFunction,
    sampler: &TripleSampler,
    threshold: f64,
) -> Result<DefectReport> {
    if !threshold.is_finite() || threshold < 0.0 {
        return Err(Error::InvalidInput(format!(
            "defect threshold must be finite and nonnegative, got {threshold}"
        )));
    }
    let triples = sampler.collect()?;
    if triples.is_empty() {
        return Err(Error::InvalidInput(
            "transitivity sampler produced no triples".to_string(),
        ));
    }
    let (idx, max_defect) = sweep::scan_max(triples.len(), |i| j.transitivity_at(triples[i]).2)
        .expect("nonempty triple set");
    let verdict = if max_defect > threshold {
        DefectVerdict::NonTransitiveWitnessFound
    } else {
        DefectVerdict::RepresentableConsistent
    };
    Ok(DefectReport {
        max_defect,
        argmax: triples[idx],
        samples: triples.len(),
        threshold,
        verdict,
        seed: sampler.seed,
    })
}

/// A triple certifying a transitivity failure, with both sides of the
/// identity.
#[derive(Debug, Clone, Serialize)]
pub struct TransitivityWitness {
    pub triple: [f64; 3],
    /// `J(J(a,c), J(b,c))`
    pub lhs: f64,
    /// `J(a,b)`
    pub rhs: f64,
    pub defect: f64,
}

/// First triple (pinned first, then seeded random draws) whose transitivity
/// defect reaches `threshold`. `None` when the budget is exhausted, which is
/// the expected outcome for a representable function.
pub fn find_transitivity_witness(
    j: &JamesianFunction,
    sampler: &TripleSampler,
    threshold: f64,
) -> Result<Option<TransitivityWitness>> {
    if !threshold.is_finite() || threshold <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "witness threshold must be positive and finite, got {threshold}"
        )));
    }
    let triples = sampler.collect()?;
    let hit = sweep::find_first(triples.len(), |i| {
        let (_, _, defect) = j.transitivity_at(triples[i]);
        defect.is_finite() && defect >= threshold
    });
    Ok(hit.map(|i| {
        let (lhs, rhs, defect) = j.transitivity_at(triples[i]);
        TransitivityWitness {
            triple: triples[i],
            lhs,
            rhs,
            defect,
        }
    }))
}

/// A lattice point where two functions visibly differ.
#[derive(Debug, Clone, Serialize)]
pub struct DistinctnessWitness {
    pub point: (f64, f64),
    pub gap: f64,
}

/// Largest pointwise gap between two functions over the lattice, reported as
/// a witness when it exceeds [`DISTINCTNESS_THRESHOLD`].
pub fn distinctness_witness(
    j1: &JamesianFunction,
    j2: &JamesianFunction,
    grid: &GridSpec,
) -> Result<Option<DistinctnessWitness>> {
    let pts = grid.points();
    let n = pts.len();
    let (idx, gap) = sweep::scan_max(n * n, |p| {
        let (a, b) = (pts[p / n], pts[p % n]);
        (j1.eval_unchecked(a, b) - j2.eval_unchecked(a, b)).abs()
    })
    .expect("nonempty lattice");
    if gap.is_finite() && gap > DISTINCTNESS_THRESHOLD {
        Ok(Some(DistinctnessWitness {
            point: (pts[idx / n], pts[idx % n]),
            gap,
        }))
    } else if gap.is_finite() {
        Ok(None)
    } else {
        Err(Error::Numeric(
            "distinctness sweep produced a non-finite gap".to_string(),
        ))
    }
}
