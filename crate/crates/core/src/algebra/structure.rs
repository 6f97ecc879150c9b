//! Structure constants: Lie brackets of A/B fields and the ring action of Z
//! monomials, plus the Pochhammer product used throughout the generator
//! formulas.

use super::basis::{BasisTerm, Kind, Lc};
use crate::scalar::Field;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("lie_bracket operands must contain only A/B terms, found {0}")]
    BracketOnScalar(String),
    #[error("module_action multiplier must contain only Z terms, found {0}")]
    ActionOnField(String),
    #[error("invalid index range for {0}")]
    InvalidIndex(String),
}

/// Pochhammer product `(a)_b^n = a (a+b) (a+2b) ... (a+(n-1)b)`.
///
/// `n = 0` is the empty product. Negative `n` follows the usual analytic
/// continuation `(a)_b^{-n} = 1 / ((a-b)(a-2b)...(a-nb))`, which is what the
/// degenerate edges of the generator formulas require.
pub fn pochhammer<F: Field>(a: F, b: F, n: i64) -> F {
    if n >= 0 {
        let mut acc = F::one();
        let mut x = a;
        for _ in 0..n {
            acc = acc * x.clone();
            x = x + b.clone();
        }
        acc
    } else {
        let mut acc = F::one();
        let mut x = a - b.clone();
        for _ in 0..(-n) {
            acc = acc * x.clone();
            x = x - b.clone();
        }
        F::one() / acc
    }
}

fn fi<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

/// Bracket of two single basis fields; accumulates into `out`.
fn bracket_terms<F: Field>(u: &BasisTerm, cu: &F, v: &BasisTerm, cv: &F, out: &mut Lc<F>) {
    let c = cu.clone() * cv.clone();
    let (m, n) = (u.sup, u.sub);
    let (l, k) = (v.sup, v.sub);
    match (u.kind, v.kind) {
        (Kind::A, Kind::A) => {
            // (n+k+2) ((l+1)/(k+2) - (m+1)/(n+2)) A[m+l, n+k]
            let coef = fi::<F>(n + k + 2)
                * (fi::<F>(l + 1) / fi::<F>(k + 2) - fi::<F>(m + 1) / fi::<F>(n + 2));
            out.add_term(u.combine(v, Kind::A), c * coef);
        }
        (Kind::B, Kind::B) => {
            let coef = fi::<F>(k - n);
            out.add_term(u.combine(v, Kind::B), c * coef);
        }
        (Kind::A, Kind::B) => {
            // (k+2)/(k+n+2) (l - k(m+1)/(n+2)) B[m+l, n+k] - n A[m+l, n+k]
            let bc = fi::<F>(k + 2) / fi::<F>(k + n + 2)
                * (fi::<F>(l) - fi::<F>(k) * fi::<F>(m + 1) / fi::<F>(n + 2));
            out.add_term(u.combine(v, Kind::B), c.clone() * bc);
            out.add_term(u.combine(v, Kind::A), c * (-fi::<F>(n)));
        }
        (Kind::B, Kind::A) => {
            bracket_terms(v, cv, u, &(-cu.clone()), out);
        }
        _ => unreachable!("Z kinds rejected before dispatch"),
    }
}

/// Lie bracket `[u, v]`, bilinear over the structure constants.
pub fn lie_bracket<F: Field>(u: &Lc<F>, v: &Lc<F>) -> Result<Lc<F>, AlgebraError> {
    for lc in [u, v] {
        if let Some((t, _)) = lc.iter().find(|(t, _)| t.kind == Kind::Z) {
            return Err(AlgebraError::BracketOnScalar(t.to_string()));
        }
    }
    let mut out = Lc::zero();
    for (tu, cu) in u.iter() {
        for (tv, cv) in v.iter() {
            bracket_terms(tu, cu, tv, cv, &mut out);
        }
    }
    Ok(out)
}

/// Module action `t * v` of a scalar combination on a field combination.
pub fn module_action<F: Field>(t: &Lc<F>, v: &Lc<F>) -> Result<Lc<F>, AlgebraError> {
    if let Some((bt, _)) = t.iter().find(|(bt, _)| bt.kind != Kind::Z) {
        return Err(AlgebraError::ActionOnField(bt.to_string()));
    }
    if let Some((bt, _)) = v.iter().find(|(bt, _)| bt.kind == Kind::Z) {
        return Err(AlgebraError::BracketOnScalar(bt.to_string()));
    }
    let mut out = Lc::zero();
    for (tz, cz) in t.iter() {
        let (m, n) = (tz.sup, tz.sub);
        for (tv, cv) in v.iter() {
            let c = cz.clone() * cv.clone();
            let (l, k) = (tv.sup, tv.sub);
            match tv.kind {
                Kind::B => {
                    out.add_term(tz.combine(tv, Kind::B), c);
                }
                Kind::A => {
                    // A[m+l, n+k] + ((k+2)m - n(l+1)) / ((k+2)(k+n+2)) B[m+l, n+k]
                    out.add_term(tz.combine(tv, Kind::A), c.clone());
                    let bc = (fi::<F>(k + 2) * fi::<F>(m) - fi::<F>(n) * fi::<F>(l + 1))
                        / (fi::<F>(k + 2) * fi::<F>(k + n + 2));
                    out.add_term(tz.combine(tv, Kind::B), c * bc);
                }
                Kind::Z => unreachable!(),
            }
        }
    }
    Ok(out)
}

/// Product inside the scalar ring: `Z[m,n] Z[l,k] = Z[m+l, n+k]`.
pub fn ring_mul<F: Field>(a: &Lc<F>, b: &Lc<F>) -> Result<Lc<F>, AlgebraError> {
    for lc in [a, b] {
        if let Some((t, _)) = lc.iter().find(|(t, _)| t.kind != Kind::Z) {
            return Err(AlgebraError::ActionOnField(t.to_string()));
        }
    }
    let mut out = Lc::zero();
    for (ta, ca) in a.iter() {
        for (tb, cb) in b.iter() {
            out.add_term(ta.combine(tb, Kind::Z), ca.clone() * cb.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn one() -> Rat {
        rat(1, 1)
    }

    #[test]
    fn pochhammer_examples() {
        // (5)_2^0 = 1, (2)_1^3 = 24, (3)_{-2}^2 = 3
        assert_eq!(pochhammer(rat(5, 1), rat(2, 1), 0), rat(1, 1));
        assert_eq!(pochhammer(rat(2, 1), rat(1, 1), 3), rat(24, 1));
        assert_eq!(pochhammer(rat(3, 1), rat(-2, 1), 2), rat(3, 1));
        // analytic continuation: (a)_b^{-1} = 1/(a-b)
        assert_eq!(pochhammer(rat(0, 1), rat(-2, 1), -1), rat(1, 2));
    }

    #[test]
    fn bracket_examples() {
        // [B01, B02] = B03
        let u = Lc::term(BasisTerm::b(0, 1), one());
        let v = Lc::term(BasisTerm::b(0, 2), one());
        let w = lie_bracket(&u, &v).unwrap();
        assert_eq!(w, Lc::term(BasisTerm::b(0, 3), one()));

        // antisymmetry on a diagonal entry
        let a10 = Lc::term(BasisTerm::a(1, 0), one());
        assert!(lie_bracket(&a10, &a10).unwrap().is_zero());

        // [A01, A-11] = -(4/3) A-12
        let u = Lc::term(BasisTerm::a(0, 1), one());
        let v = Lc::term(BasisTerm::a(-1, 1), one());
        let w = lie_bracket(&u, &v).unwrap();
        assert_eq!(w, Lc::term(BasisTerm::a(-1, 2), rat(-4, 3)));
    }

    #[test]
    fn module_action_examples() {
        // Z01 B01 = B02
        let t = Lc::term(BasisTerm::z(0, 1), one());
        let v = Lc::term(BasisTerm::b(0, 1), one());
        assert_eq!(
            module_action(&t, &v).unwrap(),
            Lc::term(BasisTerm::b(0, 2), one())
        );

        // Z00 A10 = A10
        let t = Lc::term(BasisTerm::z(0, 0), one());
        let v = Lc::term(BasisTerm::a(1, 0), one());
        assert_eq!(module_action(&t, &v).unwrap(), v);

        // Z11 A-11 = A02 + (1/4) B02
        let t = Lc::term(BasisTerm::z(1, 1), one());
        let v = Lc::term(BasisTerm::a(-1, 1), one());
        let got = module_action(&t, &v).unwrap();
        let mut want = Lc::term(BasisTerm::a(0, 2), one());
        want.add_term(BasisTerm::b(0, 2), rat(1, 4));
        assert_eq!(got, want);
    }

    #[test]
    fn z_inputs_rejected() {
        let z = Lc::term(BasisTerm::z(0, 1), one());
        let v = Lc::term(BasisTerm::b(0, 1), one());
        assert!(lie_bracket(&z, &v).is_err());
        assert!(module_action(&v, &v).is_err());
    }
}
