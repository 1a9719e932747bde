use super::basis::DualityVector;
use super::ops::{brauer_ebar, exchange, sigma_bar, tbar_inverse, Flavor, TbarRoute};
use crate::diagrams::{Generators, Letter, OpMatrix};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::report::Assertion;
use crate::scalars::Mode;
use rayon::prelude::*;

/// `sum_pi m[r][pi] pibar` for every row `r`: the polynomial a dual operator
/// must produce from the row's own basis polynomial.
pub fn dual_rows(m: &OpMatrix, v: &DualityVector) -> Vec<Poly> {
    (0..m.dim())
        .into_par_iter()
        .map(|r| v.combine(&m.entries()[r]))
        .collect()
}

/// Polynomial-side images of one basis polynomial under `t_i`, `t_i^-1`, `e_i`.
pub struct DualImages {
    pub t: Poly,
    pub tinv: Poly,
    pub e: Poly,
}

/// Images of a basis polynomial `f` under the dual generators at `i`.
///
/// When `i`, `i+1` are joined, `f = S0 + R` with `S0` symmetric and `R`
/// divisible by `b_{i,i+1}`; `e_i` acts as `tau` on `S0` and kills `R`, and
/// `t_i` acts as `a` on `S0`. The `e_i` row gives `S0 = f + off / tau`,
/// where `off` is the row without its diagonal entry; the properties of
/// `S0` are checked before it is used.
pub fn dual_images(fl: &Flavor, route: &dyn TbarRoute, f: &Poly, joined: bool, off: &Poly, i: usize) -> Result<DualImages> {
    let n = f.nvars();
    if !joined {
        return Ok(DualImages {
            t: route.apply(fl, f, i)?,
            tinv: tbar_inverse(fl, route, f, i)?,
            e: Poly::zero(n),
        });
    }
    let tau = &fl.params.tau;
    if (f - &exchange(f, i)).scale(tau) != &exchange(off, i) - off {
        return Err(Error::Inconsistent(format!("e_{i} row is not symmetric")));
    }
    off.div_linear(&fl.b(n, i, i + 1))?;
    if fl.mode() == Mode::Brauer && &(&brauer_ebar(fl, f, i)? - &f.scale(tau)) != off {
        return Err(Error::Inconsistent(format!("closed-form e_{i} differs from the row")));
    }
    let a = &fl.params.a;
    let a_inv = a.inv()?;
    let tau_inv = tau.inv()?;
    let t = &off.scale(a) - &route.apply(fl, off, i)?;
    let tinv = &off.scale(&a_inv) - &tbar_inverse(fl, route, off, i)?;
    Ok(DualImages {
        t: &f.scale(a) + &t.scale(&tau_inv),
        tinv: &f.scale(&a_inv) + &tinv.scale(&tau_inv),
        e: &f.scale(tau) + off,
    })
}

fn mismatch_detail(bad: &[String]) -> String {
    if bad.is_empty() {
        "all rows agree".into()
    } else {
        format!("{} rows differ: {}", bad.len(), bad.join(", "))
    }
}

/// Row identities `pibar' g = sum_pi g[pi'][pi] pibar` for every generator.
/// With the basis independent this is entry-by-entry agreement.
pub fn verify_duality(fl: &Flavor, gens: &Generators, v: &DualityVector, route: &dyn TbarRoute) -> Vec<Assertion> {
    let n = v.n();
    let mut out = Vec::new();
    if gens.basis() != v.entries().iter().map(|(m, _)| m.clone()).collect::<Vec<_>>() {
        out.push(Assertion::new("duality basis order", false, "tangle and polynomial bases differ"));
        return out;
    }
    for i in 1..n {
        let rows = |g: Letter| dual_rows(gens.get(g), v);
        let (t_rows, tinv_rows, e_rows) = (rows(Letter::T(i)), rows(Letter::TInv(i)), rows(Letter::E(i)));
        let e = gens.get(Letter::E(i));
        let results: Vec<(String, [bool; 3], bool)> = v
            .entries()
            .par_iter()
            .enumerate()
            .map(|(r, (m, f))| {
                let joined = m.connects(i, i + 1);
                let mut coeffs = e.entries()[r].clone();
                let diagonal = std::mem::replace(&mut coeffs[r], crate::Scalar::zero());
                let off = v.combine(&coeffs);
                match dual_images(fl, route, f, joined, &off, i) {
                    Ok(img) => {
                        let ok = [img.t == t_rows[r], img.tinv == tinv_rows[r], img.e == e_rows[r]];
                        let shape = if joined { diagonal == fl.params.tau } else { e_rows[r].is_zero() };
                        (m.to_string(), ok, shape)
                    }
                    Err(_) => (m.to_string(), [false; 3], false),
                }
            })
            .collect();
        for (k, label) in [(0, format!("t{i}")), (1, format!("t{i}^-1")), (2, format!("e{i}"))] {
            let bad: Vec<String> = results.iter().filter(|r| !r.1[k]).map(|r| r.0.clone()).collect();
            out.push(Assertion::new(format!("duality {label}"), bad.is_empty(), mismatch_detail(&bad)));
        }
        let bad: Vec<String> = results.iter().filter(|r| !r.2).map(|r| r.0.clone()).collect();
        out.push(Assertion::new(
            format!("e{i} rows symmetric or zero"),
            bad.is_empty(),
            mismatch_detail(&bad),
        ));
    }
    let sigma = gens.sigma();
    let s_rows = dual_rows(&sigma, v);
    let bad: Vec<String> = v
        .entries()
        .par_iter()
        .zip(s_rows.par_iter())
        .filter(|((_, f), row)| sigma_bar(fl, f).map(|s| &s != *row).unwrap_or(true))
        .map(|((m, _), _)| m.to_string())
        .collect();
    out.push(Assertion::new("duality sigma", bad.is_empty(), mismatch_detail(&bad)));
    out
}
