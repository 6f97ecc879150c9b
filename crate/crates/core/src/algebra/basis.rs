//! Basis terms of the vector-field Lie algebra and the time-rescaling ring.
//!
//! Vector fields are spanned by
//!
//! ```text
//! A[l,k] = (k-l+1)/(k+2) x^{l+1} y^{k-l} d/dx - (l+1)/(k+2) x^l y^{k-l+1} d/dy
//! B[l,k] = x^{l+1} y^{k-l} d/dx + x^l y^{k-l+1} d/dy
//! ```
//!
//! with -1 <= l <= k+1 for A and 0 <= l <= k for B. Scalar monomials
//! `Z[l,k] = x^l y^{k-l}` (0 <= l <= k) generate the ring acting on fields
//! by multiplication. Note the x-exponent of `Z[l,k]` is the superscript;
//! this is the convention the structure constants demand (superscripts and
//! subscripts are additive under every product).
//!
//! Every term may carry a monomial in small parameters, tracked as an
//! exponent vector.

use crate::scalar::Field;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    Z,
}

/// One basis monomial `mu^m * X[sup, sub]` with `X` in {A, B, Z}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct BasisTerm {
    pub kind: Kind,
    pub sup: i64,
    pub sub: i64,
    /// Exponents of the parameters; trailing zeros are trimmed.
    pub param: Vec<u32>,
}

impl BasisTerm {
    pub fn new(kind: Kind, sup: i64, sub: i64) -> Self {
        BasisTerm {
            kind,
            sup,
            sub,
            param: Vec::new(),
        }
    }

    pub fn with_param(kind: Kind, sup: i64, sub: i64, mut param: Vec<u32>) -> Self {
        while param.last() == Some(&0) {
            param.pop();
        }
        BasisTerm {
            kind,
            sup,
            sub,
            param,
        }
    }

    pub fn a(sup: i64, sub: i64) -> Self {
        Self::new(Kind::A, sup, sub)
    }

    pub fn b(sup: i64, sub: i64) -> Self {
        Self::new(Kind::B, sup, sub)
    }

    pub fn z(sup: i64, sub: i64) -> Self {
        Self::new(Kind::Z, sup, sub)
    }

    pub fn is_valid(&self) -> bool {
        match self.kind {
            Kind::A => self.sub >= -1 && -1 <= self.sup && self.sup <= self.sub + 1,
            Kind::B => self.sub >= 0 && 0 <= self.sup && self.sup <= self.sub,
            Kind::Z => self.sub >= 0 && 0 <= self.sup && self.sup <= self.sub,
        }
    }

    pub fn param_degree(&self) -> u32 {
        self.param.iter().sum()
    }

    /// Grading for cusp index `r`: `sup*r + 2*sub + (2r+1)|m|`.
    ///
    /// The same formula serves A, B and Z terms; for Z it is the unique
    /// choice compatible with `R_l L_k ⊆ L_{l+k}` under the module action.
    pub fn grade(&self, r: i64) -> i64 {
        self.sup * r + 2 * self.sub + (2 * r + 1) * i64::from(self.param_degree())
    }

    fn param_mul(&self, other: &BasisTerm) -> Vec<u32> {
        let n = self.param.len().max(other.param.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(
                self.param.get(i).copied().unwrap_or(0) + other.param.get(i).copied().unwrap_or(0),
            );
        }
        out
    }

    /// Index-wise product bookkeeping: result superscripts and subscripts add.
    pub fn combine(&self, other: &BasisTerm, kind: Kind) -> BasisTerm {
        BasisTerm::with_param(
            kind,
            self.sup + other.sup,
            self.sub + other.sub,
            self.param_mul(other),
        )
    }
}

impl fmt::Display for BasisTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::A => "A",
            Kind::B => "B",
            Kind::Z => "Z",
        };
        write!(f, "{}[{},{}]", k, self.sup, self.sub)?;
        if !self.param.is_empty() {
            write!(f, "*mu^{:?}", self.param)?;
        }
        Ok(())
    }
}

/// Finite linear combination of basis terms over an exact field.
///
/// Zero coefficients are never stored; iteration order is deterministic.
#[derive(Clone, PartialEq, Debug)]
pub struct Lc<F: Field> {
    terms: BTreeMap<BasisTerm, F>,
}

impl<F: Field> Lc<F> {
    pub fn zero() -> Self {
        Lc {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(t: BasisTerm, c: F) -> Self {
        let mut lc = Lc::zero();
        lc.add_term(t, c);
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisTerm, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &BasisTerm) -> F {
        self.terms.get(t).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, t: BasisTerm, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert!(t.is_valid(), "invalid basis term {t} with nonzero coefficient");
        let entry = self.terms.entry(t.clone()).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add_assign(&mut self, other: &Lc<F>) {
        for (t, c) in other.iter() {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Lc<F>) -> Lc<F> {
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }

    pub fn add(&self, other: &Lc<F>) -> Lc<F> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, s: &F) -> Lc<F> {
        if s.is_zero() {
            return Lc::zero();
        }
        let mut out = Lc::zero();
        for (t, c) in self.iter() {
            out.add_term(t.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn neg(&self) -> Lc<F> {
        self.scale(&(-F::one()))
    }

    /// Keep only terms with the given grade.
    pub fn graded_part(&self, r: i64, grade: i64) -> Lc<F> {
        let mut out = Lc::zero();
        for (t, c) in self.iter() {
            if t.grade(r) == grade {
                out.add_term(t.clone(), c.clone());
            }
        }
        out
    }

    /// Drop terms above a grade cap or parameter-degree cap.
    pub fn truncate(&self, r: i64, max_grade: i64, max_param: Option<u32>) -> Lc<F> {
        let mut out = Lc::zero();
        for (t, c) in self.iter() {
            if t.grade(r) > max_grade {
                continue;
            }
            if let Some(mp) = max_param {
                if t.param_degree() > mp {
                    continue;
                }
            }
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn grades(&self, r: i64) -> Vec<i64> {
        let mut gs: Vec<i64> = self.iter().map(|(t, _)| t.grade(r)).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    pub fn kinds_ok(&self, allowed: &[Kind]) -> bool {
        self.iter().all(|(t, _)| allowed.contains(&t.kind))
    }
}

impl<F: Field> fmt::Display for Lc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {}", c, t)?;
        }
        Ok(())
    }
}
