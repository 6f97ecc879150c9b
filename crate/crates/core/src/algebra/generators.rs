//! Closed-form transformation generators used by the hypernormalization
//! lemmas: the fraktur series removing non-resonant A/B terms against
//! `AA_r = A[1,0] + a A[-1,r]`, the curly kernel combinations, and the
//! scalar/state pairs built from Z monomials.
//!
//! All coefficients live in the caller's field; pass `a = RatFn::var()` for
//! a symbolic leading coefficient or any rational for a numeric one.

use super::basis::{BasisTerm, Lc};
use super::structure::{pochhammer, AlgebraError};
use crate::scalar::Field;

fn fi<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

fn poch<F: Field>(a: i64, b: i64, n: i64) -> F {
    pochhammer(fi::<F>(a), fi::<F>(b), n)
}

fn fdiv(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn apow<F: Field>(a: &F, n: i64) -> F {
    assert!(n >= 0);
    let mut acc = F::one();
    for _ in 0..n {
        acc = acc * a.clone();
    }
    acc
}

/// The normalizing field `AA_r = A[1,0] + a A[-1,r]`.
pub fn aa_r<F: Field>(a: &F, r: i64) -> Lc<F> {
    let mut lc = Lc::term(BasisTerm::a(1, 0), F::one());
    lc.add_term(BasisTerm::a(-1, r), a.clone());
    lc
}

/// Names of the generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorName {
    /// Fraktur A series, removes `A[m,n]` terms.
    FrakA,
    /// Fraktur B series, removes `B[m,n]` terms.
    FrakB,
    /// Curly A kernel element with leading term `A[k+1,k]`.
    CalA,
    /// Curly B kernel element with leading term `(k+2) B[k,k]`.
    CalB,
    /// Curly Z state-part paired with the rescaling `Z[m,n]`.
    CalZ,
}

/// Build one generator; `sup`/`sub` follow each family's own index names.
pub fn build_generator<F: Field>(
    name: GeneratorName,
    sup: i64,
    sub: i64,
    a: &F,
    r: i64,
) -> Result<Lc<F>, AlgebraError> {
    let lc = match name {
        GeneratorName::FrakA => frak_a(sup, sub, a, r)?,
        GeneratorName::FrakB => frak_b(sup, sub, a, r)?,
        GeneratorName::CalA => {
            if sup != sub + 1 {
                return Err(AlgebraError::InvalidIndex(format!(
                    "CalA requires sup = sub+1, got [{sup},{sub}]"
                )));
            }
            cal_a(sub, a, r)?
        }
        GeneratorName::CalB => {
            if sup != sub {
                return Err(AlgebraError::InvalidIndex(format!(
                    "CalB requires sup = sub, got [{sup},{sub}]"
                )));
            }
            cal_b(sub, a, r)?
        }
        GeneratorName::CalZ => cal_z(sup, sub, a, r)?,
    };
    // every generator is grade homogeneous; a violated range would break this
    debug_assert!(lc.grades(r).len() <= 1, "inhomogeneous generator {name:?}");
    Ok(lc)
}

/// `frak_a(m, n)`: satisfies `A[m,n] + [frak_a, AA_r] = resonant A[-1,..]`.
pub fn frak_a<F: Field>(m: i64, n: i64, a: &F, r: i64) -> Result<Lc<F>, AlgebraError> {
    if n < 1 || m < -1 || m > n + 1 {
        return Err(AlgebraError::InvalidIndex(format!("frak_a[{m},{n}]")));
    }
    let mut out = Lc::zero();
    for l in 0..=fdiv(m, 2) {
        let num = -(apow(a, l) * poch::<F>(m, -2, l) * fi::<F>(n + l * r + 2));
        let den = fi::<F>(n + 2) * poch::<F>(n - m + 2, r + 2, l + 1);
        out.add_term(BasisTerm::a(m - (2 * l + 1), n + l * r), num / den);
    }
    Ok(out)
}

/// `frak_b(m, n)`: satisfies `B[m,n] + [frak_b, AA_r] = resonant terms`.
///
/// The descending B series carries the closed-form coefficients; the
/// accompanying A series is determined by back-substitution along the
/// bracket ladder so that every non-resonant position cancels.
pub fn frak_b<F: Field>(m: i64, n: i64, a: &F, r: i64) -> Result<Lc<F>, AlgebraError> {
    if n < 1 || m < 0 || m > n {
        return Err(AlgebraError::InvalidIndex(format!("frak_b[{m},{n}]")));
    }
    let mut out = Lc::zero();
    let mut betas = Vec::new();
    for l in 0..=fdiv(m - 1, 2) {
        let num = -(apow(a, l) * poch::<F>(n + 2, r, l) * poch::<F>(m - 1, -2, l));
        let den = poch::<F>(n - m + 1, r + 2, l + 1) * poch::<F>(n + r + 2, r, l);
        let beta = num / den;
        out.add_term(BasisTerm::b(m - (2 * l + 1), n + l * r), beta.clone());
        betas.push(beta);
    }
    // A ladder: the junk site (m-2j-2, n+r(j+1)) collects the raising
    // bracket of alpha_j, the lowering bracket of alpha_{j-1}, and the
    // lowering A part of beta_j; each alpha_j is solved in turn.
    let mut alpha_prev = F::zero();
    for j in 0..=fdiv(m - 2, 2) {
        let up = fi::<F>(n + r * (j + 1) - m + 2 * j + 4);
        let down_prev = if j == 0 {
            F::zero()
        } else {
            a.clone() * alpha_prev.clone() * fi::<F>(n + r * j + r + 2) * fi::<F>(m - 2 * j)
                / fi::<F>(n + r * j + 2)
        };
        let beta_j = betas
            .get(j as usize)
            .cloned()
            .unwrap_or_else(F::zero);
        let alpha = (down_prev - a.clone() * fi::<F>(r) * beta_j) / up;
        out.add_term(
            BasisTerm::a(m - 2 * j - 3, n + r * (j + 1)),
            alpha.clone(),
        );
        alpha_prev = alpha;
    }
    Ok(out)
}

/// `cal_a(k)`: kernel element with leading term `A[k+1,k]`.
pub fn cal_a<F: Field>(k: i64, a: &F, r: i64) -> Result<Lc<F>, AlgebraError> {
    if k < 0 {
        return Err(AlgebraError::InvalidIndex(format!("cal_a[{k}]")));
    }
    let mut out = Lc::zero();
    for l in -1..=fdiv(k, 2) {
        let num = apow(a, l + 1) * fi::<F>(k + r * (l + 1) + 2) * poch::<F>(k, -2, l);
        let den = poch::<F>(r + 2, r + 2, l + 1);
        out.add_term(BasisTerm::a(k - (2 * l + 1), k + r * (l + 1)), num / den);
    }
    Ok(out)
}

/// `cal_b(k)`: kernel element with leading term `(k+2) B[k,k]`.
///
/// Both descending ladders `B[k-2i, k+ri]` and `A[k-2i, k+ri]` are
/// determined by back-substitution from the leading coefficient `k+2`:
/// every bracket against `AA_r` lands on the ladder one site further down,
/// so requiring all non-resonant positions to cancel fixes the series.
pub fn cal_b<F: Field>(k: i64, a: &F, r: i64) -> Result<Lc<F>, AlgebraError> {
    if k < 0 {
        return Err(AlgebraError::InvalidIndex(format!("cal_b[{k}]")));
    }
    let mut out = Lc::zero();
    // B ladder: site (k-2i+1, k+ri) balance
    //   i(r+2) beta_i = a beta_{i-1} (k+ri-r+2)(k-2i+2) / (k+ri+2)
    let mut betas = vec![fi::<F>(k + 2)];
    out.add_term(BasisTerm::b(k, k), fi::<F>(k + 2));
    let mut i = 1i64;
    while k - 2 * i >= 0 {
        let prev = betas.last().cloned().unwrap();
        let beta = a.clone() * prev * fi::<F>(k + r * i - r + 2) * fi::<F>(k - 2 * i + 2)
            / (fi::<F>(k + r * i + 2) * fi::<F>(i * (r + 2)));
        out.add_term(BasisTerm::b(k - 2 * i, k + r * i), beta.clone());
        betas.push(beta);
        i += 1;
    }
    // A ladder: site (k-2i+1, k+ri) balance
    //   alpha_i (i(r+2)+1) = a alpha_{i-1} (k+ri+2)(k-2i+3)/(k+ri-r+2) - a r beta_{i-1}
    let mut alpha_prev = F::zero();
    let mut i = 1i64;
    while k - 2 * i + 1 >= 0 {
        let beta_prev = betas
            .get((i - 1) as usize)
            .cloned()
            .unwrap_or_else(F::zero);
        let down = a.clone() * alpha_prev.clone() * fi::<F>(k + r * i + 2) * fi::<F>(k - 2 * i + 3)
            / fi::<F>(k + r * i - r + 2);
        let alpha = (down - a.clone() * fi::<F>(r) * beta_prev) / fi::<F>(i * (r + 2) + 1);
        out.add_term(BasisTerm::a(k - 2 * i, k + r * i), alpha.clone());
        alpha_prev = alpha;
        i += 1;
    }
    Ok(out)
}

/// `cal_z(m, n)`: state-transformation partner of the rescaling `Z[m,n]`.
pub fn cal_z<F: Field>(m: i64, n: i64, a: &F, r: i64) -> Result<Lc<F>, AlgebraError> {
    if m < 0 || m > n || n < 1 {
        return Err(AlgebraError::InvalidIndex(format!("cal_z[{m},{n}]")));
    }
    let mut out = Lc::term(BasisTerm::a(m, n), F::one() / fi::<F>(m - n - 1));
    out.add_term(BasisTerm::b(m, n), F::one() / fi::<F>(n + 2));
    for l in 0..=fdiv(m - 1, 2) {
        let num = apow(a, l + 1) * fi::<F>(n + r * (l + 1) + 2) * poch::<F>(m - 1, -2, l);
        let den = poch::<F>(n - m + 1, r + 2, l + 2);
        out.add_term(
            BasisTerm::a(m - 2 * (l + 1), n + r * (l + 1)),
            -(num / den),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Field, Qa, Rat};
    use num_traits::One;

    #[test]
    fn cal_a_at_zero_is_the_normalizer() {
        // cal_a(0) = A[1,0] + a A[-1,r]; the leading coefficient is 1
        let a = Qa::var();
        let g = cal_a(0, &a, 1).unwrap();
        assert_eq!(g.coeff(&BasisTerm::a(1, 0)), Qa::one());
        assert_eq!(g, aa_r(&a, 1));
    }

    #[test]
    fn frak_a_single_term_case() {
        // frak_a(0, 2) = -(1/4) A[-1,2] for r = 1
        let g = frak_a::<Rat>(0, 2, &rat(7, 3), 1).unwrap();
        assert_eq!(g, Lc::term(BasisTerm::a(-1, 2), rat(-1, 4)));
    }

    #[test]
    fn cal_z_example() {
        // cal_z(1,1) = -A[1,1] + (1/3) B[1,1] - a A[-1,2] for r = 1
        let a = Qa::var();
        let g = cal_z(1, 1, &a, 1).unwrap();
        let mut want = Lc::term(BasisTerm::a(1, 1), -Qa::one());
        want.add_term(BasisTerm::b(1, 1), Qa::from_ratio(1, 3));
        want.add_term(BasisTerm::a(-1, 2), -a);
        assert_eq!(g, want);
    }
}
