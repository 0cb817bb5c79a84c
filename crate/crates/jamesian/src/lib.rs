//! Involutive Jamesian functions and the loop algebra underneath them.
//!
//! A Jamesian function `J(a, b)` predicts the probability that a team with
//! winning percentage `a` beats a team with percentage `b`. The involutive
//! ones satisfy `J(a, J(a, b)) = b`, `J(a, b) + J(b, a) = 1`, and strict
//! monotonicity in the first argument. Every quasi-difference
//! `f⁻¹(f(a) - f(b))` over an odd increasing homeomorphism `f` is such a
//! function, but not every such function is a quasi-difference: conjugating
//! a commutative proper loop on the reals (the piecewise-affine Salzmann
//! operation) through `f` produces involutive Jamesian functions whose
//! transitivity identity `J(J(a,c), J(b,c)) = J(a,b)` visibly fails.
//!
//! The crate provides:
//!
//! * [`loops`]: a generic loop interface with numerical checkers for the
//!   unit, inverse, inverse-property, commutativity and translation axioms,
//!   and a deterministic associativity-witness search;
//! * [`salzmann`]: the concrete proper loop, in floating-point and
//!   exact-rational arithmetic;
//! * [`homeo`]: odd-symmetric transfer maps with closed-form or bisection
//!   inverses;
//! * [`james`]: the function constructions, the axiom suite, transitivity
//!   defects, boundary extension and distinctness witnesses;
//! * [`regions`]: the subset of the unit square where the transfer
//!   function built from the near-identity map has closed-form affine
//!   values, cross-validated against the generic evaluator;
//! * [`sweep`]: the data-parallel max-reductions the checkers run on
//!   (rayon under the `parallel` feature, sequential otherwise).

pub mod error;
pub mod homeo;
pub mod james;
pub mod loops;
pub mod regions;
pub mod salzmann;
pub mod sweep;

pub use error::{Error, Result};
pub use homeo::{
    check_odd_symmetry, from_forward, invert_by_bisection, logit, piecewise_identity,
    scaled_logit, HomeoKind, InversionMode, OddHomeomorphism,
};
pub use james::{
    adams, check_axioms, distinctness_witness, find_transitivity_witness, transitivity_defect,
    Construction, DefectReport, DefectVerdict, DistinctnessWitness, GridSpec, InducedLoop,
    JamesianFunction, TransitivityWitness, TripleSampler,
};
pub use loops::{
    check_commutative, check_identity, check_identity_exact, check_inverse_elements,
    check_inverse_elements_exact, check_inverse_property, check_inverse_property_exact,
    check_translation_monotone, find_associativity_witness, power, AssociativityWitness, Backend,
    Carrier, CheckReport, ExactLoopOps, ExactViolation, RealLoop, SearchStrategy,
    DEFAULT_TOLERANCE,
};
pub use regions::{
    classify, cross_validate, explicit_eval, region_grid, ExplicitRegionSpec, RegionLabel,
};
pub use salzmann::{
    classify_case, classify_case_exact, power_exact, salzmann_loop, salzmann_mul,
    salzmann_mul_exact, SalzmannCase,
};
