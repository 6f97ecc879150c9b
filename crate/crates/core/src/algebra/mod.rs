//! Exact computation in the graded Lie algebra of planar nilpotent normal
//! forms: structure constants, generator identities, grading, and the
//! fixed-grade hypernormalization solver.

pub mod basis;
pub mod convert;
pub mod generators;
pub mod hyper;
pub mod identities;
pub mod plant;
pub mod structure;

pub use basis::{BasisTerm, Kind, Lc};
pub use generators::{aa_r, build_generator, GeneratorName};
pub use hyper::{hypernormalize, HyperOptions, HyperReport};
pub use identities::{verify_identity, IdentityCase, ALL_CASES};
pub use structure::{lie_bracket, module_action, pochhammer, ring_mul, AlgebraError};
