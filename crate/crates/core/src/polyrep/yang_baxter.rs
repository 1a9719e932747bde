use super::basis::DualityVector;
use crate::diagrams::{Generators, Letter, OpMatrix};
use crate::error::{Error, Result};
use crate::linalg::small_rational;
use crate::report::Assertion;
use crate::scalars::Scalar;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `D(z) = (z - q^2)(z - p^2) p^-1 z^-1`.
pub fn normalization(z: &Scalar) -> Result<Scalar> {
    let (q, p) = (Scalar::x(), Scalar::y());
    let d = &(&(z - &q.pow(2)) * &(z - &p.pow(2))) * &(&p * z).inv()?;
    if d.is_zero() {
        return Err(Error::Pole(format!("D({z}) = 0")));
    }
    Ok(d)
}

/// `[(z-1) p^-1 a^-1 t_i - eps (1 - p^-1 a^-1) + (z^-1 - 1) t_i^-1] / D(z)`.
pub fn yang_baxter_matrix(gens: &Generators, i: usize, z: &Scalar) -> Result<OpMatrix> {
    let d = normalization(z)?;
    let params = &gens.params;
    let k = (&Scalar::y() * &params.a).inv()?;
    let one = Scalar::one();
    let t = gens.get(Letter::T(i)).scale(&(&(z - &one) * &k));
    let tinv = gens.get(Letter::TInv(i)).scale(&(&z.inv()? - &one));
    let shift = gens.identity().scale(&-(&params.epsilon * &(&one - &k)));
    Ok(t.add(&shift).add(&tinv).scale(&d.inv()?))
}

/// Coefficients of `z^2 M(1/z)` and `M(z)` in `z`, where `M(z) = z D(z) Y(z)`.
fn unitarity_factors(gens: &Generators, i: usize) -> Result<([OpMatrix; 3], [OpMatrix; 3])> {
    let params = &gens.params;
    let k = (&Scalar::y() * &params.a).inv()?;
    let t = gens.get(Letter::T(i));
    let tinv = gens.get(Letter::TInv(i));
    let middle = t
        .scale(&-k.clone())
        .sub(tinv)
        .sub(&gens.identity().scale(&(&params.epsilon * &(&Scalar::one() - &k))));
    let m = [tinv.clone(), middle.clone(), t.scale(&k)];
    let reflected = [t.scale(&k), middle, tinv.clone()];
    Ok((reflected, m))
}

/// `Y(1/z) Y(z) = 1` as an identity of matrix polynomials in a formal `z`:
/// `z^2 M(1/z) M(z) = z^2 w(1/z) w(z)` with `w(z) = z D(z) = p^-1 (z - q^2)(z - p^2)`.
pub fn unitarity_symbolic(gens: &Generators, i: usize) -> Result<Assertion> {
    let (left, right) = unitarity_factors(gens, i)?;
    let (q, p) = (Scalar::x(), Scalar::y());
    let (q2, p2) = (q.pow(2), p.pow(2));
    let pinv = p.inv()?;
    // w(z) = p^-1 (q^2 p^2 - (q^2 + p^2) z + z^2), z^2 w(1/z) has the reversed coefficients
    let w = [&pinv * &(&q2 * &p2), -(&pinv * &(&q2 + &p2)), pinv.clone()];
    let w_rev = [w[2].clone(), w[1].clone(), w[0].clone()];
    let id = gens.identity();
    let mut bad = Vec::new();
    for deg in 0..=4 {
        let mut lhs = OpMatrix::zero(gens.n, gens.basis());
        let mut scalar = Scalar::zero();
        for a in 0..=2usize {
            if deg >= a && deg - a <= 2 {
                lhs = lhs.add(&left[a].mul(&right[deg - a]));
                scalar = &scalar + &(&w_rev[a] * &w[deg - a]);
            }
        }
        if !lhs.sub(&id.scale(&scalar)).is_zero() {
            bad.push(deg.to_string());
        }
    }
    Ok(Assertion::new(
        format!("unitarity Y{i}(1/z) Y{i}(z) = 1"),
        bad.is_empty(),
        if bad.is_empty() { "all five z-coefficients agree".into() } else { format!("coefficients of z^{} differ", bad.join(", z^")) },
    ))
}

/// `D(z) Y(z) e_i = D(z) e_i` holds exactly when the bracket acts as `D(z)`
/// on `e_i`; the scalar `[(z-1)q^2 a - eps(1-q^2) + (z^-1-1)a^-1] / D(z)`
/// at a formal sample `z` is returned.
pub fn contraction_factor(gens: &Generators, z: &Scalar) -> Result<Scalar> {
    let params = &gens.params;
    let k = (&Scalar::y() * &params.a).inv()?;
    let one = Scalar::one();
    let bracket = &(&(&(z - &one) * &k) * &params.a) - &(&params.epsilon * &(&one - &k));
    let bracket = &bracket + &(&(&z.inv()? - &one) * &params.a.inv()?);
    bracket.checked_div(&normalization(z)?)
}

pub(crate) fn specialize_matrix(m: &OpMatrix, x0: &BigRational, y0: &BigRational) -> Result<OpMatrix> {
    m.try_map(|s| Ok(Scalar::from_ratio(&s.specialize(x0, y0)?)))
}

struct Sample {
    x0: BigRational,
    y0: BigRational,
    gens: Generators,
}

fn sample_generators(gens: &Generators, rng: &mut ChaCha8Rng) -> Result<Sample> {
    loop {
        let (x0, y0) = (small_rational(rng, 7), small_rational(rng, 7));
        let mut specialized = gens.clone();
        let ok = (|| -> Result<()> {
            for m in specialized.t.iter_mut().chain(specialized.tinv.iter_mut()).chain(specialized.e.iter_mut()) {
                *m = specialize_matrix(m, &x0, &y0)?;
            }
            Ok(())
        })();
        if ok.is_ok() {
            return Ok(Sample { x0, y0, gens: specialized });
        }
    }
}

/// `Y(z)` on specialized generators, with `q, p` substituted into `D`.
fn y_at(s: &Sample, i: usize, z: &BigRational) -> Result<OpMatrix> {
    let y = yang_baxter_matrix(&s.gens, i, &Scalar::from_ratio(z))?;
    specialize_matrix(&y, &s.x0, &s.y0)
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    small_rational(rng, 9)
}

/// `Y12(z) Y23(zw) Y12(w) = Y23(w) Y12(zw) Y23(z)` at random rational
/// `(q, p, z, w)`, for every adjacent pair `(i, i+1)`.
pub fn braid_check(gens: &Generators, samples: usize, seed: u64) -> Result<Assertion> {
    let n = gens.n;
    if n < 3 {
        return Err(Error::IndexOutOfRange { n, index: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < samples {
        let s = sample_generators(gens, &mut rng)?;
        let (z, w) = (nonzero_rational(&mut rng), nonzero_rational(&mut rng));
        let zw = &z * &w;
        let i = rng.gen_range(1..n - 1);
        let attempt = (|| -> Result<bool> {
            let lhs = OpMatrix::product(&[&y_at(&s, i, &z)?, &y_at(&s, i + 1, &zw)?, &y_at(&s, i, &w)?]);
            let rhs = OpMatrix::product(&[&y_at(&s, i + 1, &w)?, &y_at(&s, i, &zw)?, &y_at(&s, i + 1, &z)?]);
            Ok(lhs.sub(&rhs).is_zero())
        })();
        match attempt {
            Ok(ok) => {
                if !ok {
                    failures.push(format!("i={i} q={} p={} z={z} w={w}", s.x0, s.y0));
                }
                done += 1;
            }
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(Assertion::new(
        "yang-baxter braid identity",
        failures.is_empty(),
        if failures.is_empty() { format!("{samples} samples, seed {seed}") } else { failures.join("; ") },
    ))
}

/// Outcome of the exchange identity for the two candidate spectral ratios.
#[derive(Clone, Debug, Default)]
pub struct ExchangeOutcome {
    pub samples: usize,
    pub forward_failures: usize,
    pub inverse_failures: usize,
}

/// `Y_{i,i+1}(z_{i+1}/z_i) Psi = Psi k_{i,i+1}` at random rational points,
/// with `Psi = sum_pi pi pibar`. The inverse ratio is evaluated alongside.
pub fn exchange_check(gens: &Generators, v: &DualityVector, samples: usize, seed: u64) -> Result<(Assertion, ExchangeOutcome)> {
    let n = v.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ExchangeOutcome::default();
    let mut failures = Vec::new();
    while out.samples < samples {
        let s = sample_generators(gens, &mut rng)?;
        let z: Vec<BigRational> = (0..n).map(|_| nonzero_rational(&mut rng)).collect();
        let i = rng.gen_range(1..n);
        let mut swapped = z.clone();
        swapped.swap(i - 1, i);
        let attempt = (|| -> Result<(bool, bool)> {
            let at = |pt: &[BigRational]| -> Result<Vec<BigRational>> { v.polys().map(|f| f.eval(&s.x0, &s.y0, pt)).collect() };
            let (psi, target) = (at(&z)?, at(&swapped)?);
            let apply = |m: &OpMatrix| -> Result<Vec<BigRational>> {
                (0..m.dim())
                    .map(|r| {
                        let mut acc = BigRational::zero();
                        for (c, x) in psi.iter().enumerate() {
                            acc += m.get(r, c).specialize(&s.x0, &s.y0)? * x;
                        }
                        Ok(acc)
                    })
                    .collect()
            };
            let ratio = &z[i] / &z[i - 1];
            let forward = apply(&y_at(&s, i, &ratio)?)? == target;
            let inverse = apply(&y_at(&s, i, &(BigRational::from_integer(1.into()) / &ratio))?)? == target;
            Ok((forward, inverse))
        })();
        match attempt {
            Ok((f, g)) => {
                out.samples += 1;
                if !f {
                    out.forward_failures += 1;
                    failures.push(format!("i={i} q={} p={}", s.x0, s.y0));
                }
                if !g {
                    out.inverse_failures += 1;
                }
            }
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let detail = format!(
        "{} samples, seed {seed}; ratio z_(i+1)/z_i fails {}, inverse ratio fails {}",
        out.samples, out.forward_failures, out.inverse_failures
    );
    Ok((Assertion::new("exchange identity Y Psi = Psi k", failures.is_empty(), detail), out))
}
