//! Fixed-grade hypernormalization.
//!
//! At each grade the achievable changes are `T v + [S, v]` for scalar
//! generators `T` and field generators `S` drawn from a window of lower
//! grades (the window depth is the level). Generator combinations whose
//! total effect vanishes below the working grade are exactly the kernel
//! elements the inductive operators feed on, so one linear solve per grade
//! recovers the staircase: compute the nullspace of the below-grade block,
//! project the surviving freedom onto the working grade, and eliminate
//! with a fixed pivot priority (B terms before A terms, higher
//! superscripts first). The chosen combination is applied exactly through
//! the exponential of its action, so grades below the working one are
//! never disturbed.

use super::basis::{BasisTerm, Kind, Lc};
use super::structure::{lie_bracket, module_action, AlgebraError};
use crate::scalar::Field;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct HyperOptions {
    /// Cusp index r of the grading.
    pub r: i64,
    /// Highest grade that is normalized (and kept) in the output.
    pub max_grade: i64,
    /// Staircase depth; `None` uses every admissible lower grade.
    pub level: Option<i64>,
    /// Number of unfolding parameters carried by the terms.
    pub num_params: usize,
    /// Cap on total parameter degree; mandatory when `num_params > 0`.
    pub param_cap: Option<u32>,
}

impl HyperOptions {
    pub fn plain(r: i64, max_grade: i64) -> Self {
        HyperOptions {
            r,
            max_grade,
            level: None,
            num_params: 0,
            param_cap: None,
        }
    }

    pub fn parametric(r: i64, max_grade: i64, num_params: usize, param_cap: u32) -> Self {
        HyperOptions {
            r,
            max_grade,
            level: None,
            num_params,
            param_cap: Some(param_cap),
        }
    }
}

/// One grade-homogeneous transformation generator.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// Time rescaling by a scalar monomial.
    Rescale(BasisTerm),
    /// Coordinate change generated by a field basis term.
    Transform(BasisTerm),
}

/// Outcome of one fixed-grade reduction.
#[derive(Clone, Debug)]
pub struct GradeReduction {
    pub grade: i64,
    /// Basis positions eliminated at this grade.
    pub eliminated: Vec<BasisTerm>,
    /// Dimension of the generator combinations acting trivially below the
    /// grade but mapping to zero at it as well.
    pub kernel_dim: usize,
    /// Generators entering the applied combination with nonzero weight.
    pub used_generators: Vec<Generator>,
}

/// Full report of a run across grades.
#[derive(Clone, Debug)]
pub struct HyperReport<F: Field> {
    pub normal_form: Lc<F>,
    pub per_grade: Vec<GradeReduction>,
}

impl<F: Field> HyperReport<F> {
    /// Surviving basis positions (parameter-free view of the pattern).
    pub fn surviving_terms(&self) -> Vec<BasisTerm> {
        self.normal_form.iter().map(|(t, _)| t.clone()).collect()
    }
}

/// Statement of a single fixed-grade problem.
#[derive(Clone, Debug)]
pub struct GradedOperatorProblem<F: Field> {
    /// Working grade k.
    pub grade: i64,
    /// Level: how many generator grades below `k - r` may participate.
    pub level: Option<i64>,
    /// Current normalizing field, all grade components together.
    pub normalizer: Lc<F>,
}

fn enumerate_param_monomials(num_params: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; num_params]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for m in &out {
            let deg: u32 = m.iter().sum();
            if deg < cap {
                for i in 0..num_params {
                    let mut mm = m.clone();
                    mm[i] += 1;
                    next.push(mm);
                }
            }
        }
        out.extend(next);
        out.sort();
        out.dedup();
    }
    out
}

/// All admissible generators of a given grade.
fn generators_of_grade(g: i64, opts: &HyperOptions) -> Vec<Generator> {
    let mut out = Vec::new();
    let monos = enumerate_param_monomials(opts.num_params, opts.param_cap.unwrap_or(0));
    for m in monos {
        let mdeg: i64 = m.iter().map(|&x| i64::from(x)).sum();
        if mdeg == 0 && g < 1 {
            continue; // near-identity needs positive grade or a parameter factor
        }
        let g_xy = g - (2 * opts.r + 1) * mdeg;
        // A terms: sup*r + 2 sub = g_xy, sub >= -1, -1 <= sup <= sub+1
        for sub in -1..=(g_xy + opts.r) / 2 {
            let rem = g_xy - 2 * sub;
            if rem % opts.r != 0 {
                continue;
            }
            let sup = rem / opts.r;
            if (-1..=sub + 1).contains(&sup) {
                let t = BasisTerm::with_param(Kind::A, sup, sub, m.clone());
                if t.is_valid() {
                    out.push(Generator::Transform(t));
                }
            }
            if (0..=sub).contains(&sup) && sub >= 0 {
                let t = BasisTerm::with_param(Kind::B, sup, sub, m.clone());
                if t.is_valid() {
                    out.push(Generator::Transform(t));
                }
                let t = BasisTerm::with_param(Kind::Z, sup, sub, m.clone());
                if t.is_valid() && !(t.sup == 0 && t.sub == 0 && mdeg == 0) {
                    out.push(Generator::Rescale(t));
                }
            }
        }
    }
    out
}

fn apply_generator<F: Field>(gen: &Generator, w: &Lc<F>) -> Result<Lc<F>, AlgebraError> {
    match gen {
        Generator::Rescale(t) => module_action(&Lc::term(t.clone(), F::one()), w),
        Generator::Transform(t) => lie_bracket(&Lc::term(t.clone(), F::one()), w),
    }
}

/// Action of a weighted generator combination on a field.
fn combo_action<F: Field>(
    combo: &[(Generator, F)],
    w: &Lc<F>,
    opts: &HyperOptions,
) -> Result<Lc<F>, AlgebraError> {
    let mut out = Lc::zero();
    for (g, c) in combo {
        let e = apply_generator(g, w)?;
        out.add_assign(&e.scale(c));
    }
    Ok(out.truncate(opts.r, opts.max_grade, opts.param_cap))
}

/// Exact transformation `v -> exp(action(combo)) v` under the truncation.
fn apply_exp<F: Field>(
    combo: &[(Generator, F)],
    v: &Lc<F>,
    opts: &HyperOptions,
) -> Result<Lc<F>, AlgebraError> {
    let mut acc = v.clone();
    let mut term = v.clone();
    let mut j = 1i64;
    while !term.is_zero() {
        term = combo_action(combo, &term, opts)?.scale(&(F::one() / F::from_i64(j)));
        acc.add_assign(&term);
        j += 1;
        assert!(
            j < 200,
            "exponential series failed to terminate under truncation"
        );
    }
    Ok(acc)
}

/// Pivot priority: B before A, higher superscripts first, lower parameter
/// degree first. Lower keys are eliminated first.
fn priority_key(t: &BasisTerm) -> (u8, i64, u32, Vec<u32>, i64) {
    let kind_rank = match t.kind {
        Kind::B => 0,
        Kind::A => 1,
        Kind::Z => 2,
    };
    (kind_rank, -t.sup, t.param_degree(), t.param.clone(), t.sub)
}

/// Solve one fixed-grade problem against the current field.
///
/// Returns the updated field and a description of what was removed.
pub fn hypernormalize_fixed_grade<F: Field>(
    problem: &GradedOperatorProblem<F>,
    opts: &HyperOptions,
) -> Result<(Lc<F>, GradeReduction), AlgebraError> {
    let k = problem.grade;
    if k > opts.max_grade {
        return Err(AlgebraError::InvalidIndex(format!(
            "grade {k} exceeds cap {}",
            opts.max_grade
        )));
    }
    let mut v = problem.normalizer.clone();
    let mut eliminated = Vec::new();
    let mut used = Vec::new();
    let mut kernel_dim = 0usize;

    // low-grade generators can re-dirty the working grade at higher
    // parameter degree; iterate until stable
    for _pass in 0..16 {
        let gen_lo = match problem.level {
            Some(lv) => (k - opts.r - (lv - 1)).max(0),
            None => 0,
        };
        // a generator of grade g only reaches grade k by pairing with a
        // component of grade k - g, so the lowest component grade bounds g
        let min_comp = v.grades(opts.r).first().copied().unwrap_or(opts.r).max(0);
        let gen_hi = k - min_comp;
        if gen_hi < gen_lo {
            break;
        }
        let mut gens = Vec::new();
        for g in gen_lo..=gen_hi {
            gens.extend(generators_of_grade(g, opts));
        }

        // effects truncated at the working grade
        let mut effects = Vec::new();
        let mut kept_gens = Vec::new();
        for g in gens {
            let e = apply_generator(&g, &v)?.truncate(opts.r, k, opts.param_cap);
            if !e.is_zero() {
                effects.push(e);
                kept_gens.push(g);
            }
        }
        if kept_gens.is_empty() {
            break;
        }

        // row spaces
        let mut forbidden: BTreeSet<BasisTerm> = BTreeSet::new();
        let mut targets: BTreeSet<BasisTerm> = BTreeSet::new();
        for e in &effects {
            for (t, _) in e.iter() {
                if t.grade(opts.r) < k {
                    forbidden.insert(t.clone());
                } else {
                    targets.insert(t.clone());
                }
            }
        }
        let forbidden: Vec<BasisTerm> = forbidden.into_iter().collect();
        let mut targets: Vec<BasisTerm> = targets.into_iter().collect();
        targets.sort_by_key(priority_key);

        // nullspace of the forbidden block
        let ncols = effects.len();
        let mut rows: Vec<Vec<F>> = forbidden
            .iter()
            .map(|t| effects.iter().map(|e| e.coeff(t)).collect())
            .collect();
        let null_basis = nullspace(&mut rows, ncols);
        if null_basis.is_empty() {
            break;
        }

        // images of the admissible combinations at the working grade
        let imgs: Vec<Vec<F>> = null_basis
            .iter()
            .map(|w| {
                targets
                    .iter()
                    .map(|t| {
                        let mut acc = F::zero();
                        for (c, e) in w.iter().zip(effects.iter()) {
                            if !c.is_zero() {
                                acc = acc + c.clone() * e.coeff(t);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();

        // column reduction with row priority
        let mut cols = imgs;
        let mut combos: Vec<Vec<F>> = null_basis;
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (target row, column)
        for row in 0..targets.len() {
            let Some(col) = (0..cols.len())
                .find(|&c| !pivots.iter().any(|&(_, pc)| pc == c) && !cols[c][row].is_zero())
            else {
                continue;
            };
            let inv = F::one() / cols[col][row].clone();
            for x in cols[col].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for x in combos[col].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for c in 0..cols.len() {
                if c != col && !cols[c][row].is_zero() {
                    let f = cols[c][row].clone();
                    for i in 0..targets.len() {
                        cols[c][i] = cols[c][i].clone() - f.clone() * cols[col][i].clone();
                    }
                    for i in 0..ncols {
                        combos[c][i] = combos[c][i].clone() - f.clone() * combos[col][i].clone();
                    }
                }
            }
            pivots.push((row, col));
        }
        kernel_dim = combos.len() - pivots.len();

        // assemble the combination cancelling the pivot components of v at
        // grade k
        let vk = v.graded_part(opts.r, k);
        let mut weights = vec![F::zero(); ncols];
        let mut any = false;
        let mut removed_now = Vec::new();
        for &(row, col) in &pivots {
            let c = vk.coeff(&targets[row]);
            if c.is_zero() {
                continue;
            }
            any = true;
            removed_now.push(targets[row].clone());
            for i in 0..ncols {
                weights[i] = weights[i].clone() - c.clone() * combos[col][i].clone();
            }
        }
        if !any {
            break;
        }

        let combo: Vec<(Generator, F)> = kept_gens
            .iter()
            .cloned()
            .zip(weights.iter().cloned())
            .filter(|(_, w)| !w.is_zero())
            .collect();
        for (g, _) in &combo {
            if !used.contains(g) {
                used.push(g.clone());
            }
        }
        v = apply_exp(&combo, &v, opts)?;
        for t in removed_now {
            debug_assert!(
                v.coeff(&t).is_zero(),
                "pivot {t} not cleared at grade {k}"
            );
            if !eliminated.contains(&t) {
                eliminated.push(t);
            }
        }
        if opts.num_params == 0 {
            // without parameters a single pass settles the grade
            break;
        }
    }

    Ok((
        v,
        GradeReduction {
            grade: k,
            eliminated,
            kernel_dim,
            used_generators: used,
        },
    ))
}

/// Normalize every grade from 1 through the cap.
pub fn hypernormalize<F: Field>(
    start: &Lc<F>,
    opts: &HyperOptions,
) -> Result<HyperReport<F>, AlgebraError> {
    let mut v = start.truncate(opts.r, opts.max_grade, opts.param_cap);
    let mut per_grade = Vec::new();
    for k in 1..=opts.max_grade {
        let problem = GradedOperatorProblem {
            grade: k,
            level: opts.level,
            normalizer: v.clone(),
        };
        let (nv, red) = hypernormalize_fixed_grade(&problem, opts)?;
        v = nv;
        per_grade.push(red);
    }
    Ok(HyperReport {
        normal_form: v,
        per_grade,
    })
}

/// Nullspace of the matrix given by rows; vectors of length `ncols`.
fn nullspace<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    rows[i][j] = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let pivot_cols: BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut vec = vec![F::zero(); ncols];
        vec[free] = F::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            vec[pc] = -rows[row][free].clone();
        }
        basis.push(vec);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generators::aa_r;
    use crate::scalar::{rat, Field, Qa};
    use num_traits::Zero;

    fn qa(n: i64, d: i64) -> Qa {
        Qa::constant(rat(n, d))
    }

    #[test]
    fn empty_tail_is_fixed() {
        let a = Qa::var();
        let v = aa_r(&a, 1);
        let rep = hypernormalize(&v, &HyperOptions::plain(1, 8)).unwrap();
        assert_eq!(rep.normal_form, v);
        assert!(rep.per_grade.iter().all(|g| g.eliminated.is_empty()));
    }

    #[test]
    fn classic_tail_example_r1() {
        // tail b1 B[0,1] + a2 A[-1,2]: the A term dies, B[0,1] survives
        let a = Qa::var();
        let mut v = aa_r(&a, 1);
        v.add_term(BasisTerm::b(0, 1), qa(5, 7));
        v.add_term(BasisTerm::a(-1, 2), qa(3, 2));
        let rep = hypernormalize(&v, &HyperOptions::plain(1, 4)).unwrap();
        assert!(rep.normal_form.coeff(&BasisTerm::a(-1, 2)).is_zero());
        assert_eq!(rep.normal_form.coeff(&BasisTerm::b(0, 1)), qa(5, 7));
        assert_eq!(rep.normal_form.coeff(&BasisTerm::a(-1, 1)), a);
    }
}
