use super::ops::{tbar_inverse, Flavor, TbarRoute};
use crate::diagrams::{check_even, enumerate_basis, Matching};
use crate::error::{Error, Result};
use crate::poly::Poly;
use super::property::{highest_monomial_check, independence_check, matched_divisibility, property_failures};
use crate::report::Assertion;
use crate::scalars::{Mode, ParamNames, Scalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// `prod_i prod_{0<k<n/2} b_{i,i+k}` with the cyclic rule.
pub fn rho_bar(fl: &Flavor, n: usize) -> Result<Poly> {
    check_even(n)?;
    let mut r = Poly::one(n);
    for i in 1..=n {
        for k in 1..n / 2 {
            r = &r * &fl.b(n, i, i + k);
        }
    }
    Ok(r)
}

/// One polynomial per basis matching, in basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityVector {
    n: usize,
    entries: Vec<(Matching, Poly)>,
}

impl DualityVector {
    pub fn new(n: usize, entries: Vec<(Matching, Poly)>) -> Self {
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Matching, Poly)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, m: &Matching) -> Option<&Poly> {
        self.entries.iter().find(|(k, _)| k == m).map(|(_, p)| p)
    }

    pub fn poly(&self, k: usize) -> &Poly {
        &self.entries[k].1
    }

    pub fn polys(&self) -> impl Iterator<Item = &Poly> {
        self.entries.iter().map(|(_, p)| p)
    }

    /// `sum_k c_k pi_k`.
    pub fn combine(&self, coeffs: &[crate::Scalar]) -> Poly {
        let mut acc = Poly::zero(self.n);
        for (c, (_, p)) in coeffs.iter().zip(&self.entries) {
            if !c.is_zero() {
                acc = &acc + &p.scale(c);
            }
        }
        acc
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(m, p)| Ok((m.clone(), f(p)?)))
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self, names: ParamNames) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(m, p)| {
                let terms: Vec<Value> = p
                    .terms()
                    .map(|(e, c)| json!({ "exp": &e[..self.n], "coeff": c.display_with(names) }))
                    .collect();
                json!({ "matching": m.to_pairs(), "poly": p.display_with(names, names.variable()), "terms": terms })
            })
            .collect();
        json!({ "n": self.n, "entries": entries })
    }
}

/// The generator exponent of the move `pi -> t_i^{+-1} pi` that swaps the
/// ends at `i`, `i+1` and removes one crossing, if there is one.
pub fn untwist(m: &Matching, i: usize) -> Option<(Matching, bool)> {
    if m.connects(i, i + 1) {
        return None;
    }
    let next = m.swapped(i);
    if next.crossing_number() + 1 != m.crossing_number() {
        return None;
    }
    let left_end = |k: usize| m.partner(k) > k;
    let positive = left_end(i) && !left_end(i + 1);
    Some((next, positive))
}

/// Breadth-first from the maximally crossed state, mirroring each untwist
/// by the dual generator. A matching reached twice must get the same
/// polynomial both times.
pub fn generate_basis(fl: &Flavor, n: usize, route: &dyn TbarRoute) -> Result<DualityVector> {
    check_even(n)?;
    let rho = Matching::maximally_crossed(n)?;
    let mut found: BTreeMap<Matching, Poly> = BTreeMap::new();
    found.insert(rho.clone(), rho_bar(fl, n)?);
    let mut frontier = vec![rho];
    while !frontier.is_empty() {
        let mut next_level: Vec<Matching> = Vec::new();
        for m in &frontier {
            let f = found[m].clone();
            for i in 1..n {
                let Some((target, positive)) = untwist(m, i) else { continue };
                let image = if positive {
                    route.apply(fl, &f, i)
                } else {
                    tbar_inverse(fl, route, &f, i)
                }
                .map_err(|e| Error::Inconsistent(format!("move {m} at {i}: {e}")))?;
                match found.get(&target) {
                    Some(prev) if prev != &image => {
                        return Err(Error::Inconsistent(format!("two paths to {target} disagree")));
                    }
                    Some(_) => {}
                    None => {
                        found.insert(target.clone(), image);
                        next_level.push(target);
                    }
                }
            }
        }
        frontier = next_level;
    }
    let order = enumerate_basis(n)?;
    if found.len() != order.len() {
        return Err(Error::Inconsistent(format!("reached {} of {} matchings", found.len(), order.len())));
    }
    let entries = order
        .into_iter()
        .map(|m| {
            let p = found.remove(&m).expect("all matchings reached");
            (m, p)
        })
        .collect();
    Ok(DualityVector::new(n, entries))
}

/// The three `n = 4` polynomials in basis order, written out by hand in
/// factored form.
pub fn reference_n4() -> [Poly; 3] {
    let (q, p) = (Scalar::x(), Scalar::y());
    let one = Scalar::one;
    let lin = |s1: Scalar, i: usize, s2: Scalar, j: usize| &Poly::var(4, i).scale(&s1) - &Poly::var(4, j).scale(&s2);
    let prod = |fs: [Poly; 4]| fs.iter().fold(Poly::one(4), |acc, f| &acc * f);
    let qi = q.pow(-1);
    let rho = prod([
        lin(q.clone(), 1, qi.clone(), 2),
        lin(q.clone(), 2, qi.clone(), 3),
        lin(q.clone(), 3, qi, 4),
        lin(q.clone(), 4, &p.pow(2) * &q.pow(3), 1),
    ]);
    let nested = &prod([
        lin(p.pow(2), 3, one(), 4),
        lin(q.pow(2), 3, one(), 4),
        lin(p.pow(2), 1, one(), 2),
        lin(q.pow(2), 1, one(), 2),
    ])
    .scale(&p.pow(-1))
        - &rho.scale(&p);
    let crossing_free = &prod([
        lin(q.pow(4), 1, one(), 4),
        lin(&p.pow(2) * &q.pow(2), 1, one(), 4),
        lin(p.pow(2), 2, one(), 3),
        lin(q.pow(2), 2, one(), 3),
    ])
    .scale(&(&q.pow(-2) * &p.pow(-1)))
        - &rho.scale(&p.pow(-1));
    [crossing_free, rho, nested]
}

fn double_factorial(n: usize) -> usize {
    (1..n).step_by(2).product()
}

/// Size, property (P), degree, leading exponents, divisibility and rank of
/// a generated basis; at `n = 4` in bmw mode also the hand-written values.
pub fn basis_checks(fl: &Flavor, v: &DualityVector) -> Vec<Assertion> {
    let n = v.n();
    let expect = double_factorial(n);
    let mut out = vec![Assertion::new("basis size", v.len() == expect, format!("{} of {expect}", v.len()))];
    let fails: Vec<String> = v
        .entries()
        .iter()
        .flat_map(|(m, f)| property_failures(fl, f).into_iter().map(move |t| format!("{m} at {:?} {}", t.triple, t.pattern)))
        .collect();
    let label = match fl.mode() {
        Mode::Bmw => "property-p on the basis",
        Mode::Brauer => "property-p' on the basis",
    };
    out.push(Assertion::new(label, fails.is_empty(), if fails.is_empty() { "every triple and pattern".into() } else { fails.join("; ") }));
    let degree = n * (n / 2 - 1);
    let degrees_ok = v.polys().all(|f| match fl.mode() {
        Mode::Bmw => f.homogeneous_degree() == Some(degree),
        Mode::Brauer => f.total_degree() == Some(degree),
    });
    out.push(Assertion::new("basis degree", degrees_ok, format!("expected {degree}")));
    if fl.mode() == Mode::Bmw {
        out.push(highest_monomial_check(v));
    }
    out.push(matched_divisibility(fl, v));
    out.push(independence_check(v, &[1, 2, 3]));
    if n == 4 && fl.mode() == Mode::Bmw {
        let same = v.polys().zip(reference_n4().iter()).all(|(f, g)| f == g);
        out.push(Assertion::new("n=4 basis matches the factored forms", same, "three polynomials"));
    }
    out
}
