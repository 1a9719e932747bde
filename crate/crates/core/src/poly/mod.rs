//! Polynomials in `z_1..z_n` (or `u_1..u_n`) with coefficients in the
//! scalar field, and the linear forms `b_ij`.

mod linear;

pub use linear::{b_form, cyclic_var, LinearForm};

use crate::error::{Error, Result};
use crate::scalars::{ParamNames, Scalar};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const MAX_VARS: usize = 16;

/// Exponent vector; entries past the variable count stay zero.
pub type Exp = [u8; MAX_VARS];

/// A polynomial with terms sorted lexicographically by exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exp, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term([0; MAX_VARS], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// The variable `z_i`, `1 <= i <= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, &[(i, 1)], Scalar::one())
    }

    /// `c * prod z_i^k` from `(i, k)` pairs with 1-based `i`.
    pub fn monomial(nvars: usize, powers: &[(usize, u8)], c: Scalar) -> Self {
        let mut e = [0; MAX_VARS];
        for &(i, k) in powers {
            assert!(i >= 1 && i <= nvars, "variable z_{i} out of range");
            e[i - 1] += k;
        }
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exp, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, e: Exp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exp) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&[0; MAX_VARS]).cloned(),
            _ => None,
        }
    }

    pub fn exp_slice<'a>(&self, e: &'a Exp) -> &'a [u8] {
        &e[..self.nvars]
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum::<usize>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn degree_in(&self, i: usize) -> Option<usize> {
        self.terms.keys().map(|e| e[i - 1] as usize).max()
    }

    /// Lexicographically largest exponent.
    pub fn leading(&self) -> Option<(&Exp, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (*e, f(x))))
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Poly> {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            p.add_term(*e, f(x)?);
        }
        Ok(p)
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges `z_i` and `z_j`.
    pub fn swap(&self, i: usize, j: usize) -> Poly {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    f.swap(i - 1, j - 1);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Renames variables: `z_i` becomes `z_{map[i-1]}` in a ring of
    /// `nvars` variables. Variables mapped to `0` must not occur.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> Result<Poly> {
        let mut p = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = [0; MAX_VARS];
            for (i, &k) in e[..self.nvars].iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map.get(i) {
                    Some(&t) if t >= 1 && t <= nvars => f[t - 1] += k,
                    _ => return Err(Error::Inconsistent(format!("variable z_{} cannot be renamed", i + 1))),
                }
            }
            p.add_term(f, c.clone());
        }
        Ok(p)
    }

    /// Substitutes `z_j -> factor * z_target`.
    /// `z_j -> z_target + s_j` for every `(j, s_j)` in `moves`, in one pass:
    /// each term is expanded binomially and accumulated by exponent.
    pub fn substitute_shifted(&self, target: usize, moves: &[(usize, Scalar)]) -> Poly {
        let top = self.terms.keys().flat_map(|e| moves.iter().map(move |(j, _)| e[j - 1])).max().unwrap_or(0) as usize;
        let mut binom = vec![vec![Scalar::one()]];
        for a in 1..=top {
            let prev = &binom[a - 1];
            let row = (0..=a)
                .map(|m| match (m.checked_sub(1).map(|k| &prev[k]), prev.get(m)) {
                    (Some(x), Some(y)) => x + y,
                    (Some(x), None) => x.clone(),
                    (None, Some(y)) => y.clone(),
                    (None, None) => Scalar::zero(),
                })
                .collect();
            binom.push(row);
        }
        // expansion[k][a] = [(m, C(a,m) s_k^(a-m))]
        let expansion: Vec<Vec<Vec<(u8, Scalar)>>> = moves
            .iter()
            .map(|(_, s)| {
                let mut pow = vec![Scalar::one()];
                for _ in 0..top {
                    let next = pow.last().unwrap() * s;
                    pow.push(next);
                }
                (0..=top)
                    .map(|a| (0..=a).map(|m| (m as u8, &binom[a][m] * &pow[a - m])).filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        let mut acc: HashMap<Exp, Scalar> = HashMap::new();
        for (e, c) in &self.terms {
            let mut base = *e;
            for (j, _) in moves {
                base[j - 1] = 0;
            }
            let mut partial = vec![(base, c.clone())];
            for (k, (j, _)) in moves.iter().enumerate() {
                let row = &expansion[k][e[j - 1] as usize];
                let mut next = Vec::with_capacity(partial.len() * row.len());
                for (f, x) in &partial {
                    for (m, y) in row {
                        let mut g = *f;
                        g[target - 1] += m;
                        next.push((g, x * y));
                    }
                }
                partial = next;
            }
            for (g, x) in partial {
                match acc.get_mut(&g) {
                    Some(v) => *v = &*v + &x,
                    None => {
                        acc.insert(g, x);
                    }
                }
            }
        }
        Poly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn substitute_scaled(&self, j: usize, target: usize, factor: &Scalar) -> Poly {
        let mut powers: Vec<Scalar> = vec![Scalar::one()];
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[j - 1] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * factor;
                powers.push(next);
            }
            let mut f = *e;
            f[j - 1] = 0;
            f[target - 1] += k as u8;
            p.add_term(f, c * &powers[k]);
        }
        p
    }

    /// Substitutes `z_j -> q` for a polynomial `q` free of `z_j`.
    pub fn substitute(&self, j: usize, q: &Poly) -> Poly {
        let mut by_power: BTreeMap<u8, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = f[j - 1];
            f[j - 1] = 0;
            by_power.entry(k).or_insert_with(|| Poly::zero(self.nvars)).add_term(f, c.clone());
        }
        let mut acc = Poly::zero(self.nvars);
        let mut cur = Poly::one(self.nvars);
        let mut at = 0u8;
        for (k, part) in by_power {
            while at < k {
                cur = &cur * q;
                at += 1;
            }
            acc = &acc + &(&part * &cur);
        }
        acc
    }

    /// Coefficient of `z_i^k`, as a polynomial free of `z_i`.
    pub fn coeff_in(&self, i: usize, k: u8) -> Poly {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i - 1] == k).map(|(e, c)| {
                let mut f = *e;
                f[i - 1] = 0;
                (f, c.clone())
            }),
        )
    }

    /// Multiplies by `z_i^k`.
    pub fn shift(&self, i: usize, k: u8) -> Poly {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    f[i - 1] += k;
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by a polynomial of degree one in some variable.
    pub fn div_linear(&self, l: &Poly) -> Result<Poly> {
        self.check_same(l)?;
        let v = (1..=self.nvars)
            .find(|&i| l.degree_in(i) == Some(1) && l.coeff_in(i, 1).as_constant().is_some())
            .ok_or_else(|| Error::Inconsistent("divisor is not linear in any variable".into()))?;
        let alpha_inv = l.coeff_in(v, 1).as_constant().unwrap().inv()?;
        let rest = l.coeff_in(v, 0);
        let Some(d) = self.degree_in(v) else {
            return Ok(Poly::zero(self.nvars));
        };
        let mut parts: Vec<Poly> = (0..=d as u8).map(|k| self.coeff_in(v, k)).collect();
        let mut quot = Poly::zero(self.nvars);
        for k in (1..=d).rev() {
            let qk = parts[k].scale(&alpha_inv);
            parts[k - 1] = &parts[k - 1] - &(&rest * &qk);
            quot = &quot + &qk.shift(v, (k - 1) as u8);
        }
        if !parts[0].is_zero() {
            return Err(Error::NotDivisible {
                divisor: l.to_string(),
                remainder: parts[0].to_string(),
            });
        }
        Ok(quot)
    }

    /// Exact value at rational parameters and variables.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational, z: &[BigRational]) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.specialize(x0, y0)?;
            for (i, &k) in e[..self.nvars].iter().enumerate() {
                for _ in 0..k {
                    t *= &z[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn display_with(&self, names: ParamNames, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e[..self.nvars]
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("{var}{}", i + 1) } else { format!("{var}{}^{x}", i + 1) })
                .collect();
            let cs = c.display_with(names);
            let simple = !cs[1..].contains([' ', '/']);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let body = if simple { body } else { format!("({body})") };
            out.push_str(match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{body}*{}", mono.join("*")));
            }
        }
        out
    }

    /// Multiplies by a polynomial with few terms, such as a linear form.
    fn mul_into(&self, other: &Poly) -> Poly {
        let mut acc: HashMap<Exp, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for k in 0..MAX_VARS {
                    e[k] += e2[k];
                }
                let t = c1 * c2;
                match acc.get_mut(&e) {
                    Some(x) => *x = &*x + &t,
                    None => {
                        acc.insert(e, t);
                    }
                }
            }
        }
        Self {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(ParamNames::QP, "z"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut p = big.clone();
        for (e, c) in &small.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, -c.clone());
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        if self.len() < other.len() {
            other.mul_into(self)
        } else {
            self.mul_into(other)
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, other: Poly) -> Poly {
                (&self).$m(&other)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, other: &Poly) -> Poly {
                (&self).$m(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Builds a polynomial from `(coefficient, exponents)` with small integer
/// coefficients; handy in tests.
pub fn poly_from(nvars: usize, terms: &[(Scalar, &[u8])]) -> Poly {
    Poly::from_terms(
        nvars,
        terms.iter().map(|(c, ex)| {
            let mut e = [0; MAX_VARS];
            e[..ex.len()].copy_from_slice(ex);
            (e, c.clone())
        }),
    )
}

#[cfg(test)]
mod tests;
