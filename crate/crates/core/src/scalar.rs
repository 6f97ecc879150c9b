//! Scalar types for the exact and floating-point halves of the crate.
//!
//! The algebra side works over an exact field: plain rationals, or rational
//! functions in one indeterminate adjoined to a field (`RatFn`). Nesting
//! `RatFn<RatFn<Rat>>` gives towers like Q(a)(b) when a second symbolic
//! coefficient is needed. The dynamics side works over any [`Real`] scalar.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact arithmetic rational.
pub type Rat = BigRational;

/// Rational functions of one indeterminate over the rationals, Q(a).
pub type Qa = RatFn<Rat>;

/// Exact coefficient field.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Field for Rat {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

/// Floating scalar for simulation code; `f32` and `f64` qualify.
pub trait Real: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + 'static {
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
}

impl Real for f32 {}
impl Real for f64 {}

fn rat_to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Convert an exact rational to any `Real`.
pub fn rat_to_real<T: Real>(q: &Rat) -> T {
    T::of(rat_to_f64(q))
}

/// Dense univariate polynomial over a field, lowest degree first.
///
/// The coefficient vector never ends in a zero.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = F::one() / self.leading();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); (self.degree() - d.degree() + 1).max(0) as usize];
        let dlead = d.leading();
        while !rem.is_zero() && rem.degree() >= d.degree() {
            let shift = (rem.degree() - d.degree()) as usize;
            let c = rem.leading() / dlead.clone();
            quot[shift] = c.clone();
            let mut coeffs = rem.coeffs.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                coeffs[i + shift] = coeffs[i + shift].clone() - c.clone() * dc.clone();
            }
            // force the leading coefficient out even under rounding-free arithmetic
            coeffs.truncate(rem.coeffs.len() - 1);
            rem = Poly::new(coeffs);
        }
        (Poly::new(quot), rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(a + b);
        }
        Poly::new(out)
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Self {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(vec![]);
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if i == 1 {
                write!(f, "({})*a", c)?;
            } else {
                write!(f, "({})*a^{}", c, i)?;
            }
        }
        Ok(())
    }
}

/// Fraction field of `Poly<F>`: rational functions with monic denominator
/// and `gcd(num, den) = 1` after every operation.
#[derive(Clone)]
pub struct RatFn<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFn<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFn { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::constant(F::one());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.leading();
        if !(lead.clone() - F::one()).is_zero() {
            let inv = F::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFn {
            num: p,
            den: Poly::constant(F::one()),
        }
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    /// Substitute a field value for the indeterminate.
    pub fn eval(&self, x: &F) -> F {
        self.num.eval(x) / self.den.eval(x)
    }
}

impl<F: Field> PartialEq for RatFn<F> {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplied comparison avoids relying on canonical form
        (self.num.clone() * other.den.clone()) == (other.num.clone() * self.den.clone())
    }
}

impl<F: Field> Add for RatFn<F> {
    type Output = RatFn<F>;
    fn add(self, rhs: Self) -> Self {
        RatFn::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Field> Sub for RatFn<F> {
    type Output = RatFn<F>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for RatFn<F> {
    type Output = RatFn<F>;
    fn neg(self) -> Self {
        RatFn {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Mul for RatFn<F> {
    type Output = RatFn<F>;
    fn mul(self, rhs: Self) -> Self {
        RatFn::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<F: Field> Div for RatFn<F> {
    type Output = RatFn<F>;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RatFn::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<F: Field> Zero for RatFn<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::new(vec![]))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFn<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> fmt::Debug for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> fmt::Display for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> Field for RatFn<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

/// Shorthand for an exact rational constant.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa(n: i64, d: i64) -> Qa {
        Qa::constant(rat(n, d))
    }

    #[test]
    fn poly_division_and_gcd() {
        // (a^2 - 1) / (a - 1) = a + 1
        let a = Poly::<Rat>::var();
        let num = a.clone() * a.clone() - Poly::constant(rat(1, 1));
        let den = a.clone() - Poly::constant(rat(1, 1));
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero());
        assert_eq!(q, a.clone() + Poly::constant(rat(1, 1)));

        let g = num.gcd(&(den.clone() * den.clone()));
        assert_eq!(g, den.monic());
    }

    #[test]
    fn ratfn_is_a_field() {
        let a = Qa::var();
        // a/(a+1) + 1/(a+1) = 1
        let one_over = Qa::one() / (a.clone() + Qa::one());
        let x = a.clone() * one_over.clone() + one_over;
        assert_eq!(x, Qa::one());

        // denominator normalized monic
        let y = Qa::one() / (qa(2, 1) * a.clone() + qa(2, 1));
        assert_eq!(y.denominator().leading(), rat(1, 1));
    }

    #[test]
    fn tower_field_compiles_and_reduces() {
        // Q(a)(b): (b^2 - a^2)/(b - a) = b + a
        type Qab = RatFn<Qa>;
        let b = Qab::var();
        let a = Qab::constant(Qa::var());
        let num = b.clone() * b.clone() - a.clone() * a.clone();
        let den = b.clone() - a.clone();
        assert_eq!(num / den, b + a);
    }
}
