use super::ops::{is_symmetric, Flavor};
use super::property::{describe_failures, property_failures_with};
use crate::diagrams::{check_even, enumerate_basis};
use crate::error::{Error, Result};
use crate::poly::{Poly, MAX_VARS};
use crate::report::Assertion;
use crate::scalars::Scalar;
use std::collections::{BTreeMap, HashMap};

// Polynomials in z_1..z_n and q^{+-1} with integer coefficients, packed
// as 6 bits per z exponent and the q exponent offset in the top byte.
const BITS: u32 = 6;
const Q_SHIFT: u32 = 56;
const Q_ZERO: i64 = 96;

type Packed = HashMap<u64, i64>;

fn key(z: &[u32], qexp: i64) -> u64 {
    let mut k = ((qexp + Q_ZERO) as u64) << Q_SHIFT;
    for (i, &e) in z.iter().enumerate() {
        k |= (e as u64) << (BITS * i as u32);
    }
    k
}

fn z_exp(k: u64, i: usize) -> u32 {
    ((k >> (BITS * i as u32)) & ((1 << BITS) - 1)) as u32
}

fn q_exp(k: u64) -> i64 {
    (k >> Q_SHIFT) as i64 - Q_ZERO
}

fn mul(f: &Packed, g: &[(u64, i64)]) -> Packed {
    let mut out = HashMap::with_capacity(f.len() * 2);
    for (&kf, &cf) in f {
        for &(kg, cg) in g {
            // exponents add field-wise; the q offset is subtracted once
            let k = kf + kg - ((Q_ZERO as u64) << Q_SHIFT);
            *out.entry(k).or_insert(0) += cf * cg;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn monomial(n: usize, pairs: &[(usize, u32)], qexp: i64) -> u64 {
    let mut z = vec![0; n];
    for &(i, e) in pairs {
        z[i - 1] += e;
    }
    key(&z, qexp)
}

/// Exact division by `z_i - z_j`: with `f = sum_k f_k z_i^k`, the quotient
/// satisfies `g_{k-1} = f_k + z_j g_k`.
fn div_difference(f: &Packed, i: usize, j: usize) -> Result<Packed> {
    let unit_i = 1u64 << (BITS * (i - 1) as u32);
    let unit_j = 1u64 << (BITS * (j - 1) as u32);
    let mut by_deg: BTreeMap<u32, HashMap<u64, i64>> = BTreeMap::new();
    for (&k, &c) in f {
        let d = z_exp(k, i - 1);
        by_deg.entry(d).or_default().insert(k - unit_i * d as u64, c);
    }
    let top = by_deg.keys().next_back().copied().unwrap_or(0);
    let mut quot: Packed = HashMap::new();
    let mut carry: HashMap<u64, i64> = HashMap::new();
    for d in (1..=top).rev() {
        let mut g = by_deg.remove(&d).unwrap_or_default();
        for (k, c) in carry.drain() {
            *g.entry(k + unit_j).or_insert(0) += c;
        }
        g.retain(|_, c| *c != 0);
        for (&k, &c) in &g {
            quot.insert(k + unit_i * (d - 1) as u64, c);
        }
        carry = g;
    }
    let mut rem = by_deg.remove(&0).unwrap_or_default();
    for (k, c) in carry {
        *rem.entry(k + unit_j).or_insert(0) += c;
    }
    if rem.values().any(|&c| c != 0) {
        return Err(Error::Inconsistent(format!("not divisible by z{i} - z{j}")));
    }
    Ok(quot)
}

fn to_poly(n: usize, f: &Packed) -> Poly {
    let mut grouped: BTreeMap<Vec<u32>, Vec<(i64, i32, i32)>> = BTreeMap::new();
    for (&k, &c) in f {
        let z: Vec<u32> = (0..n).map(|i| z_exp(k, i)).collect();
        grouped.entry(z).or_default().push((c, q_exp(k) as i32, 0));
    }
    Poly::from_terms(
        n,
        grouped.into_iter().map(|(z, terms)| {
            let mut e = [0u8; MAX_VARS];
            for (i, &x) in z.iter().enumerate() {
                e[i] = x as u8;
            }
            (e, Scalar::laurent(&terms))
        }),
    )
}

/// `(-1)^crossings`, the sign of the matching as a permutation.
fn matching_sign(pairs: &[(usize, usize)]) -> i64 {
    let mut crossings = 0;
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[k + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                crossings += 1;
            }
        }
    }
    if crossings % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Pf(1/b_ij - 1/b_ji) prod_{i<j} b_ij b_ji / (z_i - z_j)`.
///
/// With `1/b_ij - 1/b_ji = -(q + q^-1)(z_i - z_j)/(b_ij b_ji)` the product
/// times the Vandermonde is an integer polynomial; the Vandermonde is then
/// divided out exactly, which fails if a denominator survives.
pub fn pfaffian_state(n: usize) -> Result<Poly> {
    check_even(n)?;
    if n > 8 {
        return Err(Error::ResourceLimit(format!("pfaffian state for n = {n}")));
    }
    let pair_product = |i: usize, j: usize| -> Vec<(u64, i64)> {
        vec![
            (monomial(n, &[(i, 1), (j, 1)], 2), 1),
            (monomial(n, &[(i, 1), (j, 1)], -2), 1),
            (monomial(n, &[(i, 2)], 0), -1),
            (monomial(n, &[(j, 2)], 0), -1),
        ]
    };
    let mut total: Packed = HashMap::new();
    for m in enumerate_basis(n)? {
        let pairs = m.strands().to_vec();
        let mut f: Packed = HashMap::from([(key(&vec![0; n], 0), matching_sign(&pairs))]);
        for i in 1..=n {
            for j in i + 1..=n {
                if pairs.contains(&(i, j)) {
                    f = mul(&f, &[(monomial(n, &[(i, 1)], 0), 1), (monomial(n, &[(j, 1)], 0), -1)]);
                } else {
                    f = mul(&f, &pair_product(i, j));
                }
            }
        }
        for (k, c) in f {
            *total.entry(k).or_insert(0) += c;
        }
    }
    total.retain(|_, c| *c != 0);
    for i in 1..=n {
        for j in i + 1..=n {
            total = div_difference(&total, i, j)?;
        }
    }
    let q = Scalar::x();
    let prefactor = (-(&q + &q.pow(-1))).pow((n / 2) as i32);
    Ok(to_poly(n, &total).scale(&prefactor))
}

pub fn pfaffian_checks(fl: &Flavor, n: usize) -> Result<(Poly, Vec<Assertion>)> {
    let pf = pfaffian_state(n)?;
    let mut out = vec![Assertion::new("pfaffian denominators clear", true, format!("{} terms", pf.len()))];
    let symmetric = (1..n).all(|i| is_symmetric(&pf, i));
    out.push(Assertion::new("pfaffian symmetric", symmetric, "all adjacent exchanges"));
    let degree = pf.homogeneous_degree();
    let expect = n * (n / 2 - 1);
    out.push(Assertion::new(
        "pfaffian degree",
        degree == Some(expect) || (n == 2 && degree == Some(0)),
        format!("{degree:?}, expected {expect}"),
    ));
    let at_cyclic = |g: Poly| g.try_map_coeffs(|c| c.substitute_y_power_of_x(-2)).ok();
    let mut p = describe_failures(property_failures_with(fl, &pf, &at_cyclic));
    p.name = "pfaffian property-p at p = q^-2".into();
    out.push(p);
    if n == 2 {
        let q = Scalar::x();
        let expect = Poly::constant(2, -(&q + &q.pow(-1)));
        out.push(Assertion::new("pfaffian n=2 value", pf == expect, pf.to_string()));
    }
    Ok((pf, out))
}
