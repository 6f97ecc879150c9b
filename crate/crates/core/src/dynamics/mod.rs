//! Planar ODE engine: integration, equilibria, limit cycles, portraits,
//! Melnikov quadrature and bisection oracles.

pub mod field;

pub use field::{Hamiltonian, PlanarField, Poly2};
