use super::Poly;
use crate::scalars::{AlgebraParams, Mode, Scalar};
use serde::{Deserialize, Serialize};

/// `b_ij = q z_i - q^-1 z_j` (multiplicative) or `u_i - u_j + b`
/// (additive). Indices past `n` wrap round: `z_{i+n} = a^-2 z_i` and
/// `u_{i+n} = u_i + c + 2b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    pub i: usize,
    pub j: usize,
}

impl LinearForm {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn to_poly(self, n: usize, mode: Mode) -> Poly {
        b_form(n, self.i, self.j, mode)
    }
}

/// The variable `z_k` or `u_k` for any `k >= 1`, with the cyclic rule.
pub fn cyclic_var(n: usize, k: usize, mode: Mode) -> Poly {
    let (base, wraps) = ((k - 1) % n + 1, ((k - 1) / n) as i32);
    let z = Poly::var(n, base);
    match mode {
        Mode::Bmw => z.scale(&AlgebraParams::bmw().a.pow(-2 * wraps)),
        Mode::Brauer => {
            let shift = (Scalar::y() + Scalar::x() * Scalar::integer(2)) * Scalar::integer(wraps as i64);
            &z + &Poly::constant(n, shift)
        }
    }
}

pub fn b_form(n: usize, i: usize, j: usize, mode: Mode) -> Poly {
    let (zi, zj) = (cyclic_var(n, i, mode), cyclic_var(n, j, mode));
    match mode {
        Mode::Bmw => {
            let q = Scalar::x();
            &zi.scale(&q) - &zj.scale(&q.pow(-1))
        }
        Mode::Brauer => &(&zi - &zj) + &Poly::constant(n, Scalar::x()),
    }
}
