//! Controlled plants expressed in the A/B basis with parameter tracking,
//! ready for parametric hypernormalization.

use super::basis::Lc;
use super::convert::{field_to_lc, XyField};
use crate::scalar::Field;

/// Builder for a planar plant `x' = fx, y' = -x + fy` with polynomial
/// right-hand sides whose coefficients may carry parameter monomials.
pub struct PlantBuilder<F: Field> {
    field: XyField<F>,
    num_params: usize,
}

impl<F: Field> PlantBuilder<F> {
    pub fn new(num_params: usize) -> Self {
        let mut field = XyField::zero();
        // the nilpotent linear part -x d/dy
        field.fy.add_term((1, 0, vec![]), -F::one());
        PlantBuilder { field, num_params }
    }

    fn pad(&self, param: &[u32]) -> Vec<u32> {
        let mut p = param.to_vec();
        p.resize(self.num_params.max(p.len()), 0);
        p
    }

    /// Add `c * mu^param * x^i y^j` to the x equation.
    pub fn x_term(mut self, i: i64, j: i64, param: &[u32], c: F) -> Self {
        self.field.fx.add_term((i, j, self.pad(param)), c);
        self
    }

    /// Add `c * mu^param * x^i y^j` to the y equation.
    pub fn y_term(mut self, i: i64, j: i64, param: &[u32], c: F) -> Self {
        self.field.fy.add_term((i, j, self.pad(param)), c);
        self
    }

    pub fn build(self) -> Lc<F> {
        field_to_lc(&self.field)
    }
}

/// Quadratic plant with linear controllers:
/// `x' = d1 y^2 + d2 xy + d3 x^2 + mu1 + mu2 x + mu3 y`,
/// `y' = -x + d4 y^2 + d5 xy + d6 x^2 + mu4 + mu5 x + mu6 y`.
///
/// Parameter slots are `mu1..mu6` in order; unused slots may simply never
/// be referenced downstream.
pub fn quadratic_plant<F: Field>(d: &[F; 6]) -> Lc<F> {
    let one = F::one;
    let mut b = PlantBuilder::new(6)
        .x_term(0, 2, &[], d[0].clone())
        .x_term(1, 1, &[], d[1].clone())
        .x_term(2, 0, &[], d[2].clone())
        .y_term(0, 2, &[], d[3].clone())
        .y_term(1, 1, &[], d[4].clone())
        .y_term(2, 0, &[], d[5].clone());
    b = b
        .x_term(0, 0, &[1, 0, 0, 0, 0, 0], one())
        .x_term(1, 0, &[0, 1, 0, 0, 0, 0], one())
        .x_term(0, 1, &[0, 0, 1, 0, 0, 0], one())
        .y_term(0, 0, &[0, 0, 0, 1, 0, 0], one())
        .y_term(1, 0, &[0, 0, 0, 0, 1, 0], one())
        .y_term(0, 1, &[0, 0, 0, 0, 0, 1], one());
    b.build()
}

/// Cubic plant with the symmetric linear controller pair
/// `u1 = mu1 x + mu3 y` in the x equation (controller slots `[mu1, mu3]`):
/// `x' = d1 x^3 + d2 y^3 + d3 x y^2 + d4 y x^2 + mu1 x + mu3 y`,
/// `y' = -x + d5 x^3 + d6 y^3 + d7 x y^2 + d8 y x^2`.
pub fn cubic_plant_z2<F: Field>(d: &[F; 8]) -> Lc<F> {
    let one = F::one;
    PlantBuilder::new(2)
        .x_term(3, 0, &[], d[0].clone())
        .x_term(0, 3, &[], d[1].clone())
        .x_term(1, 2, &[], d[2].clone())
        .x_term(2, 1, &[], d[3].clone())
        .y_term(3, 0, &[], d[4].clone())
        .y_term(0, 3, &[], d[5].clone())
        .y_term(1, 2, &[], d[6].clone())
        .y_term(2, 1, &[], d[7].clone())
        .x_term(1, 0, &[1, 0], one())
        .x_term(0, 1, &[0, 1], one())
        .build()
}

/// Quadratic plant with controller channels mapped linearly onto two gain
/// parameters: each `(channel, weight_on_param0, weight_on_param1)` entry
/// adds `weight * alpha_k` to one of the six controller slots. Channels
/// follow the quadratic plant layout: 0 -> constant in x', 1 -> x in x',
/// 2 -> y in x', 3 -> constant in y', 4 -> x in y', 5 -> y in y'.
pub fn quadratic_plant_with_gains<F: Field>(
    d: &[F; 6],
    wiring: &[(usize, F, F)],
) -> Lc<F> {
    let mut b = PlantBuilder::new(2)
        .x_term(0, 2, &[], d[0].clone())
        .x_term(1, 1, &[], d[1].clone())
        .x_term(2, 0, &[], d[2].clone())
        .y_term(0, 2, &[], d[3].clone())
        .y_term(1, 1, &[], d[4].clone())
        .y_term(2, 0, &[], d[5].clone());
    for (channel, w0, w1) in wiring {
        let (i, j, on_x) = match channel {
            0 => (0, 0, true),
            1 => (1, 0, true),
            2 => (0, 1, true),
            3 => (0, 0, false),
            4 => (1, 0, false),
            5 => (0, 1, false),
            _ => panic!("controller channel out of range"),
        };
        for (slot, w) in [(0usize, w0), (1usize, w1)] {
            if w.is_zero() {
                continue;
            }
            let mut param = vec![0u32; 2];
            param[slot] = 1;
            b = if on_x {
                b.x_term(i, j, &param, w.clone())
            } else {
                b.y_term(i, j, &param, w.clone())
            };
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis::{BasisTerm, Kind};
    use crate::scalar::{rat, Rat};

    #[test]
    fn quadratic_plant_has_nilpotent_linear_part() {
        let d = [rat(1, 1), rat(1, 1), rat(2, 1), rat(1, 1), rat(3, 1), rat(19, 28)];
        let lc = quadratic_plant::<Rat>(&d);
        assert_eq!(lc.coeff(&BasisTerm::a(1, 0)), rat(1, 1));
        // d1 y^2 in x' is the A[-1,1] slot
        assert_eq!(lc.coeff(&BasisTerm::a(-1, 1)), rat(1, 1));
        // mu1 slot sits on the constant field
        let t = BasisTerm::with_param(Kind::A, -1, -1, vec![1]);
        assert_eq!(lc.coeff(&t), rat(1, 1));
    }
}
