//! Conversion between the A/B/Z basis and explicit bivariate polynomials.
//!
//! Vector monomials decompose uniquely: writing the x-component coefficient
//! of `x^{l+1} y^{k-l}` as `P_{l+1}` and the y-component coefficient of
//! `x^l y^{k-l+1}` as `Q_l`, one gets `alpha_l = P_{l+1} - Q_l` for the A
//! coefficient and `beta_l = Q_l + alpha_l (l+1)/(k+2)` for the B
//! coefficient, degree by degree. This module is also the ground truth the
//! structure constants are tested against.

use super::basis::{BasisTerm, Kind, Lc};
use crate::scalar::Field;
use std::collections::BTreeMap;

/// Monomial key: x exponent, y exponent, parameter exponents (trimmed).
pub type Mono = (i64, i64, Vec<u32>);

/// Exact bivariate polynomial (optionally with parameter monomials).
#[derive(Clone, PartialEq, Debug)]
pub struct XyPoly<F: Field> {
    pub terms: BTreeMap<Mono, F>,
}

impl<F: Field> XyPoly<F> {
    pub fn zero() -> Self {
        XyPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, mut mono: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        while mono.2.last() == Some(&0) {
            mono.2.pop();
        }
        let e = self.terms.entry(mono.clone()).or_insert_with(F::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in o.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in o.terms.iter() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = XyPoly::zero();
        for ((i1, j1, p1), c1) in self.terms.iter() {
            for ((i2, j2, p2), c2) in o.terms.iter() {
                let n = p1.len().max(p2.len());
                let mut p = Vec::with_capacity(n);
                for k in 0..n {
                    p.push(p1.get(k).copied().unwrap_or(0) + p2.get(k).copied().unwrap_or(0));
                }
                out.add_term((i1 + i2, j1 + j2, p), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn dx(&self) -> Self {
        let mut out = XyPoly::zero();
        for ((i, j, p), c) in self.terms.iter() {
            if *i > 0 {
                out.add_term((i - 1, *j, p.clone()), c.clone() * F::from_i64(*i));
            }
        }
        out
    }

    pub fn dy(&self) -> Self {
        let mut out = XyPoly::zero();
        for ((i, j, p), c) in self.terms.iter() {
            if *j > 0 {
                out.add_term((*i, j - 1, p.clone()), c.clone() * F::from_i64(*j));
            }
        }
        out
    }
}

/// Planar polynomial vector field with exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct XyField<F: Field> {
    pub fx: XyPoly<F>,
    pub fy: XyPoly<F>,
}

impl<F: Field> XyField<F> {
    pub fn zero() -> Self {
        XyField {
            fx: XyPoly::zero(),
            fy: XyPoly::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        XyField {
            fx: self.fx.add(&o.fx),
            fy: self.fy.add(&o.fy),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        XyField {
            fx: self.fx.sub(&o.fx),
            fy: self.fy.sub(&o.fy),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.fx.is_zero() && self.fy.is_zero()
    }

    /// Jacobian bracket `[u, v] = Dv u - Du v`.
    pub fn bracket(&self, v: &Self) -> Self {
        let fx = v
            .fx
            .dx()
            .mul(&self.fx)
            .add(&v.fx.dy().mul(&self.fy))
            .sub(&self.fx.dx().mul(&v.fx))
            .sub(&self.fx.dy().mul(&v.fy));
        let fy = v
            .fy
            .dx()
            .mul(&self.fx)
            .add(&v.fy.dy().mul(&self.fy))
            .sub(&self.fy.dx().mul(&v.fx))
            .sub(&self.fy.dy().mul(&v.fy));
        XyField { fx, fy }
    }

    /// Scalar multiple of the field.
    pub fn scalar_mul(&self, s: &XyPoly<F>) -> Self {
        XyField {
            fx: self.fx.mul(s),
            fy: self.fy.mul(s),
        }
    }
}

/// Expand a single basis term into explicit polynomial data.
///
/// A and B terms expand to fields, Z terms to a scalar stored in `fx`.
pub fn term_to_field<F: Field>(t: &BasisTerm, c: &F) -> XyField<F> {
    let mut out = XyField::zero();
    let (l, k) = (t.sup, t.sub);
    let p = t.param.clone();
    match t.kind {
        Kind::A => {
            // (k-l+1)/(k+2) x^{l+1} y^{k-l} dx - (l+1)/(k+2) x^l y^{k-l+1} dy
            let den = F::from_i64(k + 2);
            if k - l >= 0 {
                out.fx.add_term(
                    (l + 1, k - l, p.clone()),
                    c.clone() * F::from_i64(k - l + 1) / den.clone(),
                );
            }
            if l >= 0 {
                out.fy
                    .add_term((l, k - l + 1, p), -(c.clone() * F::from_i64(l + 1) / den));
            }
        }
        Kind::B => {
            out.fx.add_term((l + 1, k - l, p.clone()), c.clone());
            out.fy.add_term((l, k - l + 1, p), c.clone());
        }
        Kind::Z => {
            // Z[l,k] = x^l y^{k-l}
            out.fx.add_term((l, k - l, p), c.clone());
        }
    }
    out
}

/// Expand a linear combination of A/B terms into an explicit planar field.
pub fn lc_to_field<F: Field>(lc: &Lc<F>) -> XyField<F> {
    let mut out = XyField::zero();
    for (t, c) in lc.iter() {
        debug_assert!(t.kind != Kind::Z);
        out = out.add(&term_to_field(t, c));
    }
    out
}

/// Expand a linear combination of Z terms into an explicit scalar polynomial.
pub fn lc_to_scalar<F: Field>(lc: &Lc<F>) -> XyPoly<F> {
    let mut out = XyPoly::zero();
    for (t, c) in lc.iter() {
        debug_assert!(t.kind == Kind::Z);
        out.add_term((t.sup, t.sub - t.sup, t.param.clone()), c.clone());
    }
    out
}

/// Decompose an explicit planar polynomial field into the A/B basis.
///
/// Exact for any polynomial pair; constants land on `A[-1,-1]` and
/// `A[0,-1]`.
pub fn field_to_lc<F: Field>(f: &XyField<F>) -> Lc<F> {
    // group monomial coefficients by (degree k, param): P[x-exponent], Q[x-exponent]
    type Key = (i64, Vec<u32>);
    let mut groups: BTreeMap<Key, (BTreeMap<i64, F>, BTreeMap<i64, F>)> = BTreeMap::new();
    for ((i, j, p), c) in f.fx.terms.iter() {
        let k = i + j - 1;
        groups
            .entry((k, p.clone()))
            .or_default()
            .0
            .insert(*i, c.clone());
    }
    for ((i, j, p), c) in f.fy.terms.iter() {
        let k = i + j - 1;
        groups
            .entry((k, p.clone()))
            .or_default()
            .1
            .insert(*i, c.clone());
    }

    let mut out = Lc::zero();
    for ((k, p), (px, qy)) in groups {
        for l in -1..=(k + 1) {
            let pv = px.get(&(l + 1)).cloned().unwrap_or_else(F::zero);
            let qv = qy.get(&l).cloned().unwrap_or_else(F::zero);
            let alpha = pv - qv.clone();
            out.add_term(
                BasisTerm::with_param(Kind::A, l, k, p.clone()),
                alpha.clone(),
            );
            if l >= 0 && l <= k {
                let beta = qv + alpha * F::from_i64(l + 1) / F::from_i64(k + 2);
                out.add_term(BasisTerm::with_param(Kind::B, l, k, p.clone()), beta);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::structure::{lie_bracket, module_action};
    use crate::scalar::rat;

    fn all_ab(max_sub: i64) -> Vec<BasisTerm> {
        let mut v = Vec::new();
        for k in -1..=max_sub {
            for l in -1..=(k + 1) {
                v.push(BasisTerm::a(l, k));
            }
            for l in 0..=k {
                v.push(BasisTerm::b(l, k));
            }
        }
        v
    }

    #[test]
    fn round_trip_decomposition() {
        for t in all_ab(5) {
            let lc = Lc::term(t.clone(), rat(1, 1));
            let back = field_to_lc(&lc_to_field(&lc));
            assert_eq!(back, lc, "round trip failed for {t}");
        }
    }

    #[test]
    fn structure_constants_match_polynomial_brackets() {
        // every bracket rule is checked against the explicit Jacobian bracket
        let basis = all_ab(4);
        for u in &basis {
            for v in &basis {
                if u.sub < 0 || v.sub < 0 {
                    continue;
                }
                let lu = Lc::term(u.clone(), rat(1, 1));
                let lv = Lc::term(v.clone(), rat(1, 1));
                let alg = lie_bracket(&lu, &lv).unwrap();
                let direct = lc_to_field(&lu).bracket(&lc_to_field(&lv));
                assert!(
                    lc_to_field(&alg).sub(&direct).is_zero(),
                    "bracket mismatch for [{u}, {v}]"
                );
            }
        }
    }

    #[test]
    fn module_action_matches_polynomial_product() {
        let basis = all_ab(4);
        let mut zs = Vec::new();
        for k in 0..=4i64 {
            for l in 0..=k {
                zs.push(BasisTerm::z(l, k));
            }
        }
        for z in &zs {
            let lz = Lc::term(z.clone(), rat(1, 1));
            let s = lc_to_scalar(&lz);
            for v in &basis {
                let lv = Lc::term(v.clone(), rat(1, 1));
                let alg = module_action(&lz, &lv).unwrap();
                let direct = lc_to_field(&lv).scalar_mul(&s);
                assert!(
                    lc_to_field(&alg).sub(&direct).is_zero(),
                    "module action mismatch for {z} * {v}"
                );
            }
        }
    }

    #[test]
    fn antisymmetry_and_jacobi() {
        let basis = all_ab(4);
        let valid: Vec<_> = basis.into_iter().filter(|t| t.sub >= 0).collect();
        for u in &valid {
            for v in &valid {
                let lu = Lc::term(u.clone(), rat(1, 1));
                let lv = Lc::term(v.clone(), rat(1, 1));
                let uv = lie_bracket(&lu, &lv).unwrap();
                let vu = lie_bracket(&lv, &lu).unwrap();
                assert!(uv.add(&vu).is_zero(), "antisymmetry failed [{u},{v}]");
            }
        }
        // a deterministic spread of triples
        let n = valid.len();
        for step in 1..4usize {
            for i in 0..n {
                let (u, v, w) = (
                    &valid[i],
                    &valid[(i + step) % n],
                    &valid[(i + 3 * step + 1) % n],
                );
                let lu = Lc::term(u.clone(), rat(1, 1));
                let lv = Lc::term(v.clone(), rat(2, 3));
                let lw = Lc::term(w.clone(), rat(-5, 7));
                let t1 = lie_bracket(&lu, &lie_bracket(&lv, &lw).unwrap()).unwrap();
                let t2 = lie_bracket(&lv, &lie_bracket(&lw, &lu).unwrap()).unwrap();
                let t3 = lie_bracket(&lw, &lie_bracket(&lu, &lv).unwrap()).unwrap();
                assert!(
                    t1.add(&t2).add(&t3).is_zero(),
                    "jacobi failed on ({u},{v},{w})"
                );
            }
        }
    }

    #[test]
    fn grading_is_additive() {
        let basis = all_ab(4);
        for r in 1..=3i64 {
            for u in &basis {
                for v in &basis {
                    if u.sub < 0 || v.sub < 0 {
                        continue;
                    }
                    let w = lie_bracket(&Lc::term(u.clone(), rat(1, 1)), &Lc::term(v.clone(), rat(1, 1)))
                        .unwrap();
                    for (t, _) in w.iter() {
                        assert_eq!(t.grade(r), u.grade(r) + v.grade(r));
                    }
                }
            }
        }
    }
}
