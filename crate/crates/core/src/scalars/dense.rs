//! Dense univariate polynomials over a GCD domain.
//!
//! `Dense<BigInt>` is Z[x] and `Dense<Dense<BigInt>>` is Z[x][y]; the
//! scalar field stores its numerator and denominator in the latter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// Ring operations needed for primitive-PRS gcd computations.
pub trait Domain: Clone + PartialEq + Eq + Hash + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q * other`, `None` when the division is not exact.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading integer coefficient.
    fn leading_negative(&self) -> bool;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn leading_negative(&self) -> bool {
        self.is_negative()
    }
}

/// Coefficients from low to high degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dense<R: Domain> {
    coeffs: Vec<R>,
}

impl<R: Domain> Dense<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest power of the variable dividing the polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    fn div_scalar_exact(&self, c: &R) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(coeffs))
    }

    /// gcd of the coefficients.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let pp = self
            .div_scalar_exact(&c)
            .expect("content divides every coefficient");
        if pp.leading_negative() {
            pp.neg()
        } else {
            pp
        }
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo-division by zero");
        let lc = divisor.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = r.scale(&lc).sub(&divisor.scale(&lr).shift_up(dr - dd));
        }
        r
    }

    /// Substitutes a value for the variable (Horner).
    pub fn eval_with<T, F>(&self, x: &T, mut conv: F) -> T
    where
        T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
        F: FnMut(&R) -> T,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + conv(c);
        }
        acc
    }
}

impl<R: Domain> Domain for Dense<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = R::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&z)
                        .add(other.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = R::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&z)
                        .sub(other.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }
    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let dd = other.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_one() {
            return Some(self.clone());
        }
        let lc = other.lead().unwrap();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let c = r.lead().unwrap().div_exact(lc)?;
            r = r.sub(&other.scale(&c).shift_up(dr - dd));
            q[dr - dd] = c;
        }
        Some(Self::from_coeffs(q))
    }
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == Some(0) {
                return Self::constant(c);
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            a = b;
            b = r.primitive_part();
        }
        b.primitive_part().scale(&c)
    }
    fn leading_negative(&self) -> bool {
        self.lead().is_some_and(|c| c.leading_negative())
    }
}

pub type P1 = Dense<BigInt>;
pub type P2 = Dense<P1>;

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(c: &[i64]) -> P1 {
        Dense::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p1(&[-2, 1, 1]);
        let b = p1(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p1(&[-1, 1]));
        assert_eq!(p1(&[6, 4]).gcd(&p1(&[9, 6])), p1(&[3, 2]));
    }

    #[test]
    fn bivariate_exact_division() {
        // (y + x)(y - x) / (y - x)
        let ypx: P2 = Dense::from_coeffs(vec![p1(&[0, 1]), p1(&[1])]);
        let ymx: P2 = Dense::from_coeffs(vec![p1(&[0, -1]), p1(&[1])]);
        let prod = ypx.mul(&ymx);
        assert_eq!(prod.div_exact(&ymx), Some(ypx.clone()));
        assert_eq!(prod.gcd(&ymx), ymx);
        assert_eq!(ypx.div_exact(&ymx), None);
    }
}
