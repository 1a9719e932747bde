use crate::diagrams::{Generators, Letter, OpMatrix};
use crate::error::{Error, Result};
use crate::linalg::small_rational;
use crate::polyrep::DualityVector;
use crate::report::Assertion;
use crate::scalars::Scalar;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `[(b - u)(c - u t_i) + c u e_i] / ((b + u)(c + u))`.
pub fn brauer_yang_baxter_matrix(gens: &Generators, i: usize, u: &Scalar) -> Result<OpMatrix> {
    let (b, c) = (Scalar::x(), Scalar::y());
    let denom = &(&b + u) * &(&c + u);
    if denom.is_zero() {
        return Err(Error::Pole(format!("u = {u}")));
    }
    let inner = gens.identity().scale(&c).sub(&gens.get(Letter::T(i)).scale(u));
    let num = inner.scale(&(&b - u)).add(&gens.get(Letter::E(i)).scale(&(&c * u)));
    Ok(num.scale(&denom.inv()?))
}

/// `Y(u) Y(-u) = 1` with `u` formal: the numerator
/// `N(u) = bc - u (b t + c - c e) + u^2 t` must satisfy
/// `N(u) N(-u) = (b+u)(c+u)(b-u)(c-u)`.
pub fn brauer_unitarity_symbolic(gens: &Generators, i: usize) -> Assertion {
    let (b, c) = (Scalar::x(), Scalar::y());
    let t = gens.get(Letter::T(i));
    let e = gens.get(Letter::E(i));
    let id = gens.identity();
    let n0 = id.scale(&(&b * &c));
    let n1 = t.scale(&b).add(&id.scale(&c)).sub(&e.scale(&c)).scale(&-Scalar::one());
    let n2 = t.clone();
    let plus = [n0.clone(), n1.clone(), n2.clone()];
    let minus = [n0, n1.scale(&-Scalar::one()), n2];
    // (b^2 - u^2)(c^2 - u^2)
    let (b2, c2) = (b.pow(2), c.pow(2));
    let target = [&b2 * &c2, Scalar::zero(), -(&b2 + &c2), Scalar::zero(), Scalar::one()];
    let mut bad = Vec::new();
    for (deg, want) in target.iter().enumerate() {
        let mut lhs = OpMatrix::zero(gens.n, gens.basis());
        for a in 0..=2usize {
            if deg >= a && deg - a <= 2 {
                lhs = lhs.add(&plus[a].mul(&minus[deg - a]));
            }
        }
        if !lhs.sub(&id.scale(want)).is_zero() {
            bad.push(deg.to_string());
        }
    }
    Assertion::new(
        format!("unitarity Y{i}(u) Y{i}(-u) = 1"),
        bad.is_empty(),
        if bad.is_empty() { "all five u-coefficients agree".into() } else { format!("coefficients of u^{} differ", bad.join(", u^")) },
    )
}

fn y_at(gens: &Generators, i: usize, u: &BigRational, b0: &BigRational, c0: &BigRational) -> Result<OpMatrix> {
    let y = brauer_yang_baxter_matrix(gens, i, &Scalar::from_ratio(u))?;
    crate::polyrep::specialize_matrix(&y, b0, c0)
}

/// `Y12(u) Y23(u+v) Y12(v) = Y23(v) Y12(u+v) Y23(u)` at random rationals.
pub fn brauer_braid_check(gens: &Generators, samples: usize, seed: u64) -> Result<Assertion> {
    let n = gens.n;
    if n < 3 {
        return Err(Error::IndexOutOfRange { n, index: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < samples {
        let (b0, c0) = (small_rational(&mut rng, 7), small_rational(&mut rng, 7));
        let (u, v) = (small_rational(&mut rng, 9), small_rational(&mut rng, 9));
        let uv = &u + &v;
        let i = rng.gen_range(1..n - 1);
        let attempt = (|| -> Result<bool> {
            let y = |k: usize, s: &BigRational| y_at(gens, k, s, &b0, &c0);
            let lhs = OpMatrix::product(&[&y(i, &u)?, &y(i + 1, &uv)?, &y(i, &v)?]);
            let rhs = OpMatrix::product(&[&y(i + 1, &v)?, &y(i, &uv)?, &y(i + 1, &u)?]);
            Ok(lhs.sub(&rhs).is_zero())
        })();
        match attempt {
            Ok(ok) => {
                if !ok {
                    failures.push(format!("i={i} b={b0} c={c0} u={u} v={v}"));
                }
                done += 1;
            }
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(Assertion::new(
        "brauer yang-baxter braid identity",
        failures.is_empty(),
        if failures.is_empty() { format!("{samples} samples, seed {seed}") } else { failures.join("; ") },
    ))
}

/// `Y_{i,i+1}(u_i - u_{i+1}) Psi = Psi k_{i,i+1}` at random rational points.
/// Returns the assertion and the number of failures of the opposite sign.
pub fn brauer_exchange_check(gens: &Generators, v: &DualityVector, samples: usize, seed: u64) -> Result<(Assertion, usize)> {
    let n = v.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut opposite_failures = 0;
    let mut done = 0;
    while done < samples {
        let (b0, c0) = (small_rational(&mut rng, 7), small_rational(&mut rng, 7));
        let u: Vec<BigRational> = (0..n).map(|_| small_rational(&mut rng, 9)).collect();
        let i = rng.gen_range(1..n);
        let mut swapped = u.clone();
        swapped.swap(i - 1, i);
        let attempt = (|| -> Result<(bool, bool)> {
            let at = |pt: &[BigRational]| -> Result<Vec<BigRational>> { v.polys().map(|f| f.eval(&b0, &c0, pt)).collect() };
            let (psi, target) = (at(&u)?, at(&swapped)?);
            let apply = |m: &OpMatrix| -> Result<Vec<BigRational>> {
                (0..m.dim())
                    .map(|r| {
                        let mut acc = BigRational::zero();
                        for (c, x) in psi.iter().enumerate() {
                            acc += m.get(r, c).specialize(&b0, &c0)? * x;
                        }
                        Ok(acc)
                    })
                    .collect()
            };
            let diff = &u[i - 1] - &u[i];
            let forward = apply(&y_at(gens, i, &diff, &b0, &c0)?)? == target;
            let opposite = apply(&y_at(gens, i, &-diff, &b0, &c0)?)? == target;
            Ok((forward, opposite))
        })();
        match attempt {
            Ok((f, g)) => {
                done += 1;
                if !f {
                    failures.push(format!("i={i} b={b0} c={c0}"));
                }
                if !g {
                    opposite_failures += 1;
                }
            }
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let detail = format!(
        "{samples} samples, seed {seed}; u_i - u_(i+1) fails {}, u_(i+1) - u_i fails {opposite_failures}",
        failures.len()
    );
    Ok((Assertion::new("brauer exchange identity Y Psi = Psi k", failures.is_empty(), detail), opposite_failures))
}
