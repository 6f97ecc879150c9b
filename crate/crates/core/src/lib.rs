//! Toolkit for bifurcation control of planar plants with a nilpotent
//! double-zero singularity of generalized cusp type.
//!
//! The crate splits into an exact half and a numeric half:
//!
//! * [`algebra`] computes in the graded Lie algebra of planar vector
//!   fields over exact coefficient fields (rationals, or rational
//!   functions of a symbolic leading coefficient) and hosts the
//!   fixed-grade hypernormalization solver.
//! * [`nfmaps`] evaluates the closed-form maps from plant constants and
//!   controller gains to unfolding coefficients for each worked case.
//! * [`varieties`] evaluates transition-set residuals, samples their
//!   curves and classifies parameter points into regions.
//! * [`dynamics`] is the planar ODE engine: adaptive integration with
//!   dense output, equilibrium and limit-cycle detection, portrait
//!   summaries, Melnikov quadrature and bisection oracles.
//! * [`ship`] builds the closed-loop ship-course tracking systems and
//!   their error metrics.
//!
//! Numeric code is generic over the scalar via [`scalar::Real`]; the
//! exact code over [`scalar::Field`]. The aliases below fix the concrete
//! types used across the crate.

pub mod algebra;
pub mod dynamics;
pub mod nfmaps;
pub mod scalar;
pub mod ship;
pub mod varieties;

/// Exact rational scalar.
pub type Rat = scalar::Rat;
/// Rational functions of the symbolic leading coefficient, Q(a).
pub type Qa = scalar::Qa;
/// Default floating scalar for simulation.
pub type F = f64;
/// Planar polynomial field over the default floating scalar.
pub type PlanarField64 = dynamics::PlanarField<f64>;
