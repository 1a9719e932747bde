use super::basis::DualityVector;
use super::ops::Flavor;
use crate::poly::Poly;
use crate::report::Assertion;
use rayon::prelude::*;
use serde::Serialize;

/// A triple `i < j < k` placed at one of the three shift patterns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleConstraint {
    pub triple: [usize; 3],
    pub pattern: String,
}

/// Every triple and pattern at which `f` fails to vanish identically.
pub fn property_failures(fl: &Flavor, f: &Poly) -> Vec<TripleConstraint> {
    property_failures_with(fl, f, &|g| Some(g))
}

/// Like [`property_failures`], but each placed polynomial is first passed
/// through `post` (a specialization of the parameters); `None` counts as
/// a failure.
pub fn property_failures_with(fl: &Flavor, f: &Poly, post: &(dyn Fn(Poly) -> Option<Poly> + Sync)) -> Vec<TripleConstraint> {
    let n = f.nvars();
    let patterns = fl.triple_patterns();
    let mut triples = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                triples.push([i, j, k]);
            }
        }
    }
    triples
        .par_iter()
        .flat_map_iter(|&[i, j, k]| {
            patterns.iter().filter_map(move |(name, [s2, s3])| {
                let g = post(fl.place_pair(f, i, (j, s2), (k, s3)));
                (!g.is_some_and(|g| g.is_zero())).then(|| TripleConstraint {
                    triple: [i, j, k],
                    pattern: name.clone(),
                })
            })
        })
        .collect()
}

pub fn check_property_p(fl: &Flavor, f: &Poly) -> Assertion {
    describe_failures(property_failures(fl, f))
}

pub fn describe_failures(fails: Vec<TripleConstraint>) -> Assertion {
    let detail = if fails.is_empty() {
        "vanishes at every triple".to_string()
    } else {
        let shown: Vec<String> = fails
            .iter()
            .take(6)
            .map(|t| format!("{:?} at {}", t.triple, t.pattern))
            .collect();
        format!("{} failing constraints: {}", fails.len(), shown.join(", "))
    };
    Assertion::new("property-p", fails.is_empty(), detail)
}

/// Divisibility of each basis polynomial by `b_jk` for every matched pair.
pub fn matched_divisibility(fl: &Flavor, v: &DualityVector) -> Assertion {
    let n = v.n();
    let fails: Vec<String> = v
        .entries()
        .par_iter()
        .flat_map_iter(|(m, f)| {
            let mut bad = Vec::new();
            for j in 1..=n {
                for k in j + 1..=n {
                    if m.matched(j, k) && f.div_linear(&fl.b(n, j, k)).is_err() {
                        bad.push(format!("{m}: b_{j}{k}"));
                    }
                }
            }
            bad
        })
        .collect();
    Assertion::new(
        "matched-divisibility",
        fails.is_empty(),
        if fails.is_empty() { "all matched pairs divide".into() } else { fails.join("; ") },
    )
}

/// `(n-2, n-2, n-4, n-4, ..., 0, 0)`.
pub fn expected_highest(n: usize) -> Vec<u8> {
    (0..n).map(|i| (n - 2 - 2 * (i / 2)) as u8).collect()
}

/// The lexicographically largest leading exponent over the basis.
pub fn highest_monomial(v: &DualityVector) -> (Vec<u8>, Vec<(String, Vec<u8>)>) {
    let n = v.n();
    let leads: Vec<(String, Vec<u8>)> = v
        .entries()
        .iter()
        .filter_map(|(m, f)| f.leading().map(|(e, _)| (m.to_string(), e[..n].to_vec())))
        .collect();
    let top = leads.iter().map(|(_, e)| e.clone()).max().unwrap_or_default();
    (top, leads)
}

pub fn highest_monomial_check(v: &DualityVector) -> Assertion {
    let (top, leads) = highest_monomial(v);
    let expect = expected_highest(v.n());
    let listed: Vec<String> = leads.iter().map(|(m, e)| format!("{m}->{e:?}")).collect();
    Assertion::new(
        "highest-monomial",
        top == expect,
        format!("max {top:?}, expected {expect:?}; {}", listed.join(", ")),
    )
}

/// Rank of the basis evaluated at random rational parameters and random
/// points, computed modulo a large prime.
pub fn numeric_rank(v: &DualityVector, seed: u64) -> crate::error::Result<usize> {
    use crate::linalg::{mul_mod, rank_mod, small_rational, to_mod, PRIME};
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (x0, y0) = (small_rational(&mut rng, 9), small_rational(&mut rng, 9));
    let points: Vec<Vec<u64>> = (0..v.len() + 3)
        .map(|_| (0..v.n()).map(|_| rng.gen_range(1..PRIME)).collect())
        .collect();
    let mut rows = Vec::with_capacity(v.len());
    for f in v.polys() {
        let mut coeffs = Vec::with_capacity(f.len());
        for (e, c) in f.terms() {
            let value = to_mod(&c.specialize(&x0, &y0)?)
                .ok_or_else(|| crate::error::Error::Pole("parameter sample".into()))?;
            coeffs.push((*e, value));
        }
        let row = points
            .iter()
            .map(|z| {
                coeffs.iter().fold(0u64, |acc, (e, c)| {
                    let mut t = *c;
                    for (i, &k) in e[..v.n()].iter().enumerate() {
                        for _ in 0..k {
                            t = mul_mod(t, z[i]);
                        }
                    }
                    (acc + t) % PRIME
                })
            })
            .collect();
        rows.push(row);
    }
    Ok(rank_mod(rows))
}

pub fn independence_check(v: &DualityVector, seeds: &[u64]) -> Assertion {
    let ranks: Vec<String> = seeds
        .iter()
        .map(|&s| numeric_rank(v, s).map(|r| r.to_string()).unwrap_or_else(|e| e.to_string()))
        .collect();
    let full = ranks.iter().any(|r| r == &v.len().to_string());
    Assertion::new("linear independence", full, format!("ranks {} of {}", ranks.join(", "), v.len()))
}
