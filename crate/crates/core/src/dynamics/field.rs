//! Bivariate polynomial planar fields, the simulation-side representation
//! of every plant and normal form.

use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Polynomial in x, y as an exponent-pair coefficient map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Poly2<T> {
    pub coeffs: BTreeMap<(u32, u32), T>,
}

impl<T: Real> Default for Poly2<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> Poly2<T> {
    pub fn zero() -> Self {
        Poly2 {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: &[(u32, u32, T)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c == T::zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_insert_with(T::zero);
        *e = *e + c;
        if *e == T::zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn eval(&self, x: T, y: T) -> T {
        let mut acc = T::zero();
        for (&(i, j), &c) in &self.coeffs {
            acc = acc + c * x.powi(i as i32) * y.powi(j as i32);
        }
        acc
    }

    pub fn dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if i > 0 {
                out.add_term(i - 1, j, c * T::of(i as f64));
            }
        }
        out
    }

    pub fn dy(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if j > 0 {
                out.add_term(i, j - 1, c * T::of(j as f64));
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// Coefficient-level point reflection (x,y) -> (-x,-y) with sign flip,
    /// used by the equivariance checks: returns -p(-x,-y).
    pub fn odd_reflected(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            let sign = if (i + j) % 2 == 0 { -T::one() } else { T::one() };
            out.add_term(i, j, c * sign);
        }
        out
    }
}

/// Planar polynomial vector field with an optional time-reversal flag.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanarField<T> {
    pub fx: Poly2<T>,
    pub fy: Poly2<T>,
    /// When set, trajectories are run in reversed time and stability
    /// labels are swapped by the classifiers.
    #[serde(default)]
    pub time_reversed: bool,
}

impl<T: Real> PlanarField<T> {
    pub fn new(fx: Poly2<T>, fy: Poly2<T>) -> Self {
        PlanarField {
            fx,
            fy,
            time_reversed: false,
        }
    }

    pub fn from_terms(fx: &[(u32, u32, T)], fy: &[(u32, u32, T)]) -> Self {
        Self::new(Poly2::from_terms(fx), Poly2::from_terms(fy))
    }

    pub fn with_time_reversal(mut self, flag: bool) -> Self {
        self.time_reversed = flag;
        self
    }

    /// Right-hand side honoring the time-reversal flag.
    pub fn eval(&self, x: T, y: T) -> (T, T) {
        let s = if self.time_reversed { -T::one() } else { T::one() };
        (s * self.fx.eval(x, y), s * self.fy.eval(x, y))
    }

    /// Jacobian honoring the time-reversal flag.
    pub fn jacobian(&self, x: T, y: T) -> [[T; 2]; 2] {
        let s = if self.time_reversed { -T::one() } else { T::one() };
        [
            [s * self.fx.dx().eval(x, y), s * self.fx.dy().eval(x, y)],
            [s * self.fy.dx().eval(x, y), s * self.fy.dy().eval(x, y)],
        ]
    }

    /// Exact coefficient test of Z2 equivariance: f(-x,-y) = -f(x,y).
    pub fn is_z2_equivariant(&self) -> bool {
        self.fx
            .coeffs
            .keys()
            .chain(self.fy.coeffs.keys())
            .all(|&(i, j)| (i + j) % 2 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.fx.coeffs.is_empty() && self.fy.coeffs.is_empty()
    }
}

/// Scalar polynomial sibling for first integrals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hamiltonian<T> {
    pub h: Poly2<T>,
}

impl<T: Real> Hamiltonian<T> {
    pub fn new(h: Poly2<T>) -> Self {
        Hamiltonian { h }
    }

    pub fn eval(&self, x: T, y: T) -> T {
        self.h.eval(x, y)
    }

    /// The Hamiltonian field (H_y, -H_x).
    pub fn field(&self) -> PlanarField<T> {
        let mut fy = self.h.dx();
        for (_, c) in fy.coeffs.iter_mut() {
            *c = -*c;
        }
        PlanarField::new(self.h.dy(), fy)
    }
}
