//! Exact arithmetic in the rational function field Q(x, y) of two formal
//! parameters.
//!
//! In the main algebra the parameters are bound to `(q, p)`; in the
//! Brauer limit the same kernel is reused with `(b, c)`. A value is kept as
//! `x^i y^j * N / D` where `N`, `D` are integer polynomials with no monomial
//! factor, `gcd(N, D) = 1` and the leading coefficient of `D` positive. This
//! makes structural equality coincide with field equality.

mod dense;
mod params;
mod parse;

pub use dense::{Dense, Domain, P1, P2};
pub use params::{AlgebraParams, Mode, ParamNames};
pub use parse::parse_scalar;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: [i32; 2],
    num: P2,
    den: P2,
}

fn p2_is_monomial_free(p: &P2) -> bool {
    p.low_order() == 0 && p.coeffs().iter().map(|c| c.low_order()).min().unwrap_or(0) == 0
}

/// Removes the largest monomial factor; returns (x-exponent, y-exponent, rest).
fn split_monomial(p: &P2) -> (usize, usize, P2) {
    if p.is_zero() {
        return (0, 0, p.clone());
    }
    let ky = p.low_order();
    let kx = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.low_order())
        .min()
        .unwrap_or(0);
    if kx == 0 && ky == 0 {
        return (0, 0, p.clone());
    }
    let rest = Dense::from_coeffs(
        p.coeffs()[ky..]
            .iter()
            .map(|c| c.shift_down(kx))
            .collect(),
    );
    (kx, ky, rest)
}

fn times_mono(p: &P2, kx: usize, ky: usize) -> P2 {
    if kx == 0 && ky == 0 {
        return p.clone();
    }
    Dense::from_coeffs(p.coeffs().iter().map(|c| c.shift_up(kx)).collect()).shift_up(ky)
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            shift: [0, 0],
            num: P2::zero(),
            den: P2::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        if Zero::is_zero(&c) {
            return Self::zero();
        }
        Self {
            shift: [0, 0],
            num: Dense::constant(Dense::constant(c)),
            den: P2::one(),
        }
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::integer(n) / Self::integer(d)
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::from_bigint(r.numer().clone()) / Self::from_bigint(r.denom().clone())
    }

    /// `c * x^i * y^j` with possibly negative exponents.
    pub fn monomial(c: i64, i: i32, j: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            shift: [i, j],
            num: Dense::constant(Dense::constant(BigInt::from(c))),
            den: P2::one(),
        }
    }

    /// First formal parameter (`q`, or `b` in the Brauer limit).
    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// Second formal parameter (`p`, or `c` in the Brauer limit).
    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Laurent polynomial from `(coefficient, x-exponent, y-exponent)` terms.
    pub fn laurent(terms: &[(i64, i32, i32)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, i, j)| acc + Self::monomial(c, i, j))
    }

    fn from_parts(shift: [i32; 2], num: P2, den: P2) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (nx, ny, mut num) = split_monomial(&num);
        let (dx, dy, mut den) = split_monomial(&den);
        let shift = [
            shift[0] + nx as i32 - dx as i32,
            shift[1] + ny as i32 - dy as i32,
        ];
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
            if den.leading_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        Self { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == [0, 0] && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a monomial (the value is a Laurent polynomial).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> Scalar {
        Self {
            shift: self.shift,
            num: self.num.clone(),
            den: P2::one(),
        }
    }

    pub fn denominator(&self) -> Scalar {
        Self {
            shift: [0, 0],
            num: self.den.clone(),
            den: P2::one(),
        }
    }

    /// Exponent shift and the two monomial-free polynomials of the canonical form.
    pub fn parts(&self) -> ([i32; 2], &P2, &P2) {
        (self.shift, &self.num, &self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = Self {
            shift: [-self.shift[0], -self.shift[1]],
            num: self.den.clone(),
            den: self.num.clone(),
        };
        if s.den.leading_negative() {
            s.num = s.num.neg();
            s.den = s.den.neg();
        }
        Ok(s)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parameter inversion `x -> 1/x`, `y -> 1/y` (the Hermitian conjugation on coefficients).
    pub fn invert_params(&self) -> Self {
        let flip = |p: &P2| -> (usize, usize, P2) {
            let dy = p.degree().unwrap_or(0);
            let dx = p
                .coeffs()
                .iter()
                .filter_map(|c| c.degree())
                .max()
                .unwrap_or(0);
            let coeffs = p
                .coeffs()
                .iter()
                .rev()
                .map(|c| {
                    let mut v: Vec<BigInt> = c.coeffs().to_vec();
                    v.resize(dx + 1, <BigInt as Zero>::zero());
                    v.reverse();
                    Dense::from_coeffs(v)
                })
                .collect();
            (dx, dy, Dense::from_coeffs(coeffs))
        };
        let (nx, ny, num) = flip(&self.num);
        let (dx, dy, den) = flip(&self.den);
        Self::from_parts(
            [
                -self.shift[0] - nx as i32 + dx as i32,
                -self.shift[1] - ny as i32 + dy as i32,
            ],
            num,
            den,
        )
    }

    /// Substitutes `y -> x^k`, giving a function of `x` alone.
    pub fn substitute_y_power_of_x(&self, k: i32) -> Result<Self> {
        let sub = |p: &P2| -> Scalar {
            let mut acc = Scalar::zero();
            for (j, c) in p.coeffs().iter().enumerate() {
                for (i, a) in c.coeffs().iter().enumerate() {
                    if !Zero::is_zero(a) {
                        acc = acc
                            + Scalar {
                                shift: [i as i32 + k * j as i32, 0],
                                num: Dense::constant(Dense::constant(a.clone())),
                                den: P2::one(),
                            };
                    }
                }
            }
            acc
        };
        let den = sub(&self.den);
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "denominator {} vanishes under the substitution",
                self.denominator()
            )));
        }
        let shift = Scalar::monomial(1, self.shift[0] + k * self.shift[1], 0);
        Ok(&(&sub(&self.num) * &shift) * &den.inv()?)
    }

    /// Exact value at `x = x0`, `y = y0`.
    pub fn specialize(&self, x0: &BigRational, y0: &BigRational) -> Result<BigRational> {
        let eval = |p: &P2| -> BigRational {
            p.eval_with(y0, |c| c.eval_with(x0, |a| BigRational::from_integer(a.clone())))
        };
        let d = eval(&self.den);
        if d.is_zero() {
            return Err(Error::Pole(format!(
                "denominator {} vanishes at ({x0}, {y0})",
                self.denominator()
            )));
        }
        let mono = |base: &BigRational, k: i32| -> Result<BigRational> {
            if k < 0 && base.is_zero() {
                return Err(Error::Pole("negative power of a zero parameter".into()));
            }
            Ok(if k >= 0 {
                num_traits::pow(base.clone(), k as usize)
            } else {
                num_traits::pow(base.recip(), (-k) as usize)
            })
        };
        Ok(eval(&self.num) / d * mono(x0, self.shift[0])? * mono(y0, self.shift[1])?)
    }

    pub fn specialize_i64(&self, x0: i64, y0: i64) -> Result<BigRational> {
        self.specialize(
            &BigRational::from_integer(x0.into()),
            &BigRational::from_integer(y0.into()),
        )
    }

    pub fn display_with(&self, names: ParamNames) -> String {
        parse::format_scalar(self, names)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let m = [
            self.shift[0].min(rhs.shift[0]),
            self.shift[1].min(rhs.shift[1]),
        ];
        let na = times_mono(
            &self.num,
            (self.shift[0] - m[0]) as usize,
            (self.shift[1] - m[1]) as usize,
        );
        let nb = times_mono(
            &rhs.num,
            (rhs.shift[0] - m[0]) as usize,
            (rhs.shift[1] - m[1]) as usize,
        );
        if self.den == rhs.den {
            return Scalar::from_parts(m, na.add(&nb), self.den.clone());
        }
        let num = na.mul(&rhs.den).add(&nb.mul(&self.den));
        Scalar::from_parts(m, num, self.den.mul(&rhs.den))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let shift = [self.shift[0] + rhs.shift[0], self.shift[1] + rhs.shift[1]];
        if self.den.is_one() && rhs.den.is_one() {
            let num = if self.num.is_one() {
                rhs.num.clone()
            } else if rhs.num.is_one() {
                self.num.clone()
            } else {
                self.num.mul(&rhs.num)
            };
            // products of monomial-free polynomials stay monomial-free
            debug_assert!(p2_is_monomial_free(&num));
            return Scalar {
                shift,
                num,
                den: P2::one(),
            };
        }
        Scalar::from_parts(shift, self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_scalar(self, ParamNames::QP))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::x()
    }
    fn p() -> Scalar {
        Scalar::y()
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (q() + q().pow(-1)) * (q() - q().pow(-1));
        assert_eq!(lhs, q().pow(2) - q().pow(-2));
        assert!(lhs.is_laurent());
    }

    #[test]
    fn self_division_is_one() {
        let x = (q() + p()) / (q() * p() - Scalar::integer(3));
        assert!((&x / &x).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn cancellation_reaches_canonical_form() {
        let a = (p() * p() - Scalar::one()) / (p() - Scalar::one());
        assert_eq!(a, p() + Scalar::one());
        let b = (q() - q().pow(-1)) / (q().pow(2) - Scalar::one());
        assert_eq!(b, q().pow(-1));
        let c = Scalar::integer(-2) / Scalar::integer(-4);
        assert_eq!(c, Scalar::rational(1, 2));
    }

    #[test]
    fn specialization() {
        let v = (q() + q().pow(-1)).specialize_i64(2, 1).unwrap();
        assert_eq!(v, BigRational::new(5.into(), 2.into()));
        let pole = (Scalar::one() / (p() - Scalar::one())).specialize_i64(2, 1);
        assert!(matches!(pole, Err(Error::Pole(_))));
    }

    #[test]
    fn parameter_inversion_is_an_involution() {
        let x = (q().pow(3) * p() + Scalar::integer(2)) / (p().pow(2) - q());
        let y = x.invert_params();
        assert_eq!(y.invert_params(), x);
        assert_eq!(
            y,
            (q().pow(-3) * p().pow(-1) + Scalar::integer(2)) / (p().pow(-2) - q().pow(-1))
        );
    }

    #[test]
    fn substitution_into_single_parameter() {
        let tau = AlgebraParams::bmw().tau;
        assert!(tau.substitute_y_power_of_x(-2).unwrap().is_one());
    }
}
