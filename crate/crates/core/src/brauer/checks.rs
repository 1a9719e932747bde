use crate::diagrams::{Matching, ReducedWord};
use crate::error::Result;
use crate::poly::{Poly, MAX_VARS};
use crate::polyrep::{brauer_ebar, check_property_p, is_symmetric, rho_bar, DualityVector, Flavor, TbarRoute};
use crate::report::Assertion;
use crate::scalars::Scalar;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn brauer_rho_bar(n: usize) -> Result<Poly> {
    rho_bar(&Flavor::brauer(), n)
}

pub fn brauer_property_p(f: &Poly) -> Assertion {
    let mut a = check_property_p(&Flavor::brauer(), f);
    a.name = "property-p'".into();
    a
}

/// `(-1)^len prod_{i<j} (u_i - u_j) / prod_{i~j} (u_i - u_j)`, with `len`
/// the number of transpositions in the reduced word of `m`.
pub fn expected_brauer_top(m: &Matching) -> Poly {
    let n = m.n();
    let mut out = Poly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if m.partner(i) != j {
                out = &out * &(&Poly::var(n, i) - &Poly::var(n, j));
            }
        }
    }
    if ReducedWord::from_matching(m).length() % 2 == 1 {
        out = out.scale(&-Scalar::one());
    }
    out
}

/// The top-degree part of `f` with `b = c = 0` in its coefficients.
pub fn top_form(f: &Poly) -> Result<Poly> {
    let n = f.nvars();
    let degree = |e: &[u8; MAX_VARS]| e[..n].iter().map(|&k| k as usize).sum::<usize>();
    let top = f.terms().map(|(e, _)| degree(e)).max().unwrap_or(0);
    let zero = BigRational::zero();
    let mut out = Poly::zero(n);
    for (e, c) in f.terms() {
        if degree(e) == top {
            out.add_term(*e, Scalar::from_ratio(&c.specialize(&zero, &zero)?));
        }
    }
    Ok(out)
}

pub fn brauer_highest_monomial_check(v: &DualityVector) -> Result<Assertion> {
    let mut bad = Vec::new();
    for (m, f) in v.entries() {
        let top = top_form(f)?;
        if top != expected_brauer_top(m) {
            bad.push(format!("{m}: {top}"));
        }
    }
    Ok(Assertion::new(
        "brauer highest monomial",
        bad.is_empty(),
        if bad.is_empty() { format!("{} basis elements", v.len()) } else { bad.join("; ") },
    ))
}

fn random_upoly(n: usize, rng: &mut ChaCha8Rng) -> Poly {
    let mut f = Poly::zero(n);
    for _ in 0..rng.gen_range(2..6) {
        let mut e = [0u8; MAX_VARS];
        for _ in 0..rng.gen_range(0..4) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = Scalar::laurent(&[(rng.gen_range(-4..=4), rng.gen_range(0..=1), rng.gen_range(0..=1))]);
        f.add_term(e, c);
    }
    f
}

/// The additive commutation rules of `t_i` on `count` random inputs
/// `f = b_{i,i+1} g`:
/// `(f u_{i+1}) t - (f t) u_i = -c f`, `(f u_j) t = (f t) u_j` for `j` off the
/// pair, `(f t) b_{1i} + c f = (f b_{1,i+1}) t`, `t^2 = 1` and `b t = -b`.
pub fn degenerate_affine_check(route: &dyn TbarRoute, n: usize, count: usize, seed: u64) -> Result<Assertion> {
    let fl = Flavor::brauer();
    let c = Scalar::y();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    let b_identity = route.apply(&fl, &fl.b(n, 1, 2), 1)?;
    if b_identity != fl.b(n, 1, 2).scale(&-Scalar::one()) {
        bad.push("b t = -b".to_string());
    }
    for k in 0..count {
        let i = 1 + k % (n - 1);
        let f = &fl.b(n, i, i + 1) * &random_upoly(n, &mut rng);
        let ft = route.apply(&fl, &f, i)?;
        let lhs = &route.apply(&fl, &(&f * &Poly::var(n, i + 1)), i)? - &(&ft * &Poly::var(n, i));
        if lhs != f.scale(&-c.clone()) {
            bad.push(format!("sample {k}: exchange rule at i={i}"));
        }
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            if route.apply(&fl, &(&f * &Poly::var(n, j)), i)? != &ft * &Poly::var(n, j) {
                bad.push(format!("sample {k}: u{j} through t{i}"));
            }
        }
        if i >= 2 {
            let left = &(&ft * &fl.b(n, 1, i)) + &f.scale(&c);
            if left != route.apply(&fl, &(&f * &fl.b(n, 1, i + 1)), i)? {
                bad.push(format!("sample {k}: b-form rule at i={i}"));
            }
        }
        if route.apply(&fl, &ft, i)? != f {
            bad.push(format!("sample {k}: t{i}^2"));
        }
    }
    Ok(Assertion::new(
        format!("degenerate affine relations ({})", route.name()),
        bad.is_empty(),
        if bad.is_empty() { format!("{count} random inputs, seed {seed}") } else { bad.join("; ") },
    ))
}

/// `e^2 = tau e` and `e(sym) = tau sym` for the closed-form contraction.
pub fn ebar_projector_check(n: usize, count: usize, seed: u64) -> Result<Assertion> {
    let fl = Flavor::brauer();
    let tau = &fl.params.tau;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for k in 0..count {
        let i = 1 + k % (n - 1);
        let f = random_upoly(n, &mut rng);
        let once = brauer_ebar(&fl, &f, i)?;
        if brauer_ebar(&fl, &once, i)? != once.scale(tau) {
            bad.push(format!("sample {k}: e{i}^2"));
        }
        if !is_symmetric(&once, i) {
            bad.push(format!("sample {k}: image not symmetric"));
        }
        let sym = &f + &crate::polyrep::exchange(&f, i);
        if brauer_ebar(&fl, &sym, i)? != sym.scale(tau) {
            bad.push(format!("sample {k}: symmetric input"));
        }
    }
    Ok(Assertion::new(
        "brauer contraction projector",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} random inputs, seed {seed}") } else { bad.join("; ") },
    ))
}

/// `rho_4 = (u1-u2+b)(u2-u3+b)(u3-u4+b)(u4-u1-c-b)`.
pub fn rho4_reference() -> Poly {
    let n = 4;
    let (b, c) = (Scalar::x(), Scalar::y());
    let lin = |i: usize, j: usize, s: Scalar| &(&Poly::var(n, i) - &Poly::var(n, j)) + &Poly::constant(n, s);
    let mut out = Poly::one(n);
    for i in 1..4 {
        out = &out * &lin(i, i + 1, b.clone());
    }
    &out * &lin(4, 1, -(&c + &b))
}
