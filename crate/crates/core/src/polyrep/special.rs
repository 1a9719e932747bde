use super::basis::{rho_bar, DualityVector};
use super::duality::dual_rows;
use super::ops::{brauer_ebar, e_prime, is_symmetric, split_pair, tbar_inverse, Flavor, TbarRoute};
use super::pfaffian::pfaffian_state;
use super::property::check_property_p;
use crate::diagrams::{Generators, Letter, OpMatrix};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::report::Assertion;
use crate::scalars::{Mode, Scalar};

/// `f e_i` for `f = sum_r c_r pibar_r`, through the `e_i` matrix.
pub fn ebar_apply(gens: &Generators, v: &DualityVector, coeffs: &[Scalar], i: usize) -> Poly {
    let rows = dual_rows(gens.get(Letter::E(i)), v);
    let mut acc = Poly::zero(v.n());
    for (c, row) in coeffs.iter().zip(&rows) {
        if !c.is_zero() {
            acc = &acc + &row.scale(c);
        }
    }
    acc
}

/// `f = S0 + b (S1 + N S2)` with `S0` given; checks that `S0` is symmetric
/// and that `f - S0` is divisible by `b_{i,i+1}`.
pub fn decompose(fl: &Flavor, f: &Poly, i: usize, s0: &Poly) -> Result<(Poly, Poly, Poly)> {
    if !is_symmetric(s0, i) {
        return Err(Error::Inconsistent(format!("S0 is not symmetric in z{i}, z{}", i + 1)));
    }
    let g = (f - s0).div_linear(&fl.b(f.nvars(), i, i + 1))?;
    let (s1, s2) = split_pair(fl, &g, i)?;
    Ok((s0.clone(), s1, s2))
}

/// The three pieces `S0`, `b S1`, `b N S2` as polynomials.
pub fn reassembled_pieces(fl: &Flavor, i: usize, parts: &(Poly, Poly, Poly)) -> [Poly; 3] {
    let n = parts.0.nvars();
    let b = fl.b(n, i, i + 1);
    let upper = &b * &fl.second_form(n, i);
    [parts.0.clone(), &b * &parts.1, &upper * &parts.2]
}

fn apply_steps(fl: &Flavor, route: &dyn TbarRoute, f: &Poly, steps: &[(usize, bool)]) -> Result<Poly> {
    let mut g = f.clone();
    for &(i, positive) in steps {
        g = if positive { route.apply(fl, &g, i)? } else { tbar_inverse(fl, route, &g, i)? };
    }
    Ok(g)
}

/// `(pibar_0, pibar_2)`: `rho t_{n/2} ... t_2` and
/// `sum_{i=2}^{n/2} rho t_{n/2} ... t_{i+1} t_{i-1}^-1 ... t_2^-1`.
pub fn sn_components(fl: &Flavor, route: &dyn TbarRoute, n: usize) -> Result<(Poly, Poly)> {
    let rho = rho_bar(fl, n)?;
    let h = n / 2;
    let down: Vec<(usize, bool)> = (2..=h).rev().map(|i| (i, true)).collect();
    let pi0 = apply_steps(fl, route, &rho, &down)?;
    let mut pi2 = Poly::zero(n);
    for i in 2..=h {
        let mut steps: Vec<(usize, bool)> = (i + 1..=h).rev().map(|k| (k, true)).collect();
        steps.extend((2..i).rev().map(|k| (k, false)));
        pi2 = &pi2 + &apply_steps(fl, route, &rho, &steps)?;
    }
    Ok((pi0, pi2))
}

/// `a^{n/2-1} rho_{n-2}(z_3..z_n) prod_{k=3}^{n/2+1} b_1k b_2k prod_{k=n/2+2}^n b_{k,n+1} b_{k,n+2}`.
pub fn sn_factorized(fl: &Flavor, n: usize) -> Result<Poly> {
    let inner = rho_bar(fl, n - 2)?;
    let map: Vec<usize> = (3..=n).collect();
    let twist = fl.params.a.pow((n / 2 - 1) as i32);
    let mut out = inner.rename(n, &map)?.scale(&twist);
    for k in 3..=n / 2 + 1 {
        out = &out * &(&fl.b(n, 1, k) * &fl.b(n, 2, k));
    }
    for k in n / 2 + 2..=n {
        out = &out * &(&fl.b(n, k, n + 1) * &fl.b(n, k, n + 2));
    }
    Ok(out)
}

pub fn sn_factorization_check(fl: &Flavor, route: &dyn TbarRoute, n: usize) -> Result<Vec<Assertion>> {
    if n < 4 {
        return Err(Error::IndexOutOfRange { n, index: 2 });
    }
    let (pi0, pi2) = sn_components(fl, route, n)?;
    let b12 = fl.b(n, 1, 2);
    let weight = match fl.mode() {
        Mode::Bmw => Poly::var(n, 2).scale(&(&fl.params.epsilon * &Scalar::x().pow(-1))),
        Mode::Brauer => Poly::constant(n, Scalar::y()),
    };
    let s_n = &pi0 + &(&weight * &pi2.div_linear(&b12)?);
    let rhs = sn_factorized(fl, n)?;
    let mut out = vec![
        Assertion::new("sn factorized form", s_n == rhs, format!("{} terms, constant a^{}", s_n.len(), n / 2 - 1)),
        Assertion::new("sn symmetric in 1,2", is_symmetric(&s_n, 1), "exchange of the first two variables"),
    ];
    match fl.mode() {
        Mode::Bmw => {
            let twisted = &pi2.scale(&fl.params.a) + &tbar_inverse(fl, route, &pi2, 1)?;
            let row = &pi0.scale(&fl.params.tau) + &twisted;
            out.push(Assertion::new("e1 row of pi0 symmetric", is_symmetric(&row, 1), "tau pi0 + pi2 (a + t1^-1)"));
        }
        Mode::Brauer => {
            let lifted = &pi0.scale(&fl.params.tau) - &brauer_ebar(fl, &pi0, 1)?;
            let sum = &(&lifted + &pi2) + &route.apply(fl, &pi2, 1)?;
            out.push(Assertion::new("e1 row of pi0 dual identity", sum.is_zero(), "pi0 (tau - e1) + pi2 (1 + t1)"));
        }
    }
    Ok(out)
}

/// Specializes every coefficient at `p = q^-2`.
pub fn at_cyclic_point(f: &Poly) -> Result<Poly> {
    f.try_map_coeffs(|c| c.substitute_y_power_of_x(-2))
}

fn pi2_members(gens: &Generators, i: usize) -> Vec<(usize, usize)> {
    let t = gens.get(Letter::T(i));
    let basis = gens.basis();
    let mut out = Vec::new();
    for (c, m) in basis.iter().enumerate() {
        if m.connects(i, i + 1) {
            continue;
        }
        let partner = t.index_of(&m.swapped(i)).expect("swapped matching in basis");
        let unit = (0..t.dim()).all(|r| {
            let x = t.get(r, c);
            if r == partner {
                x.is_one()
            } else {
                x.is_zero()
            }
        });
        if unit {
            out.push((c, partner));
        }
    }
    out
}

/// The checks at `p = q^-2`, where `a = tau = 1`.
pub fn cyclic_sum_check(gens: &Generators, v: &DualityVector) -> Result<(Vec<Assertion>, Scalar)> {
    let n = v.n();
    let params = &gens.params;
    let a = params.a.substitute_y_power_of_x(-2)?;
    let tau = params.tau.substitute_y_power_of_x(-2)?;
    let mut out = vec![Assertion::new("cyclic a = tau = 1", a.is_one() && tau.is_one(), format!("a = {a}, tau = {tau}"))];
    let mut sum = Poly::zero(n);
    for f in v.polys() {
        sum = &sum + &at_cyclic_point(f)?;
    }
    let symmetric = (1..n).all(|i| is_symmetric(&sum, i));
    out.push(Assertion::new("cyclic sum symmetric", symmetric, "all adjacent exchanges"));
    let pf = at_cyclic_point(&pfaffian_state(n)?)?;
    let ratio = match (sum.leading(), pf.leading()) {
        (Some((e1, c1)), Some((e2, c2))) if e1 == e2 => c1.checked_div(c2)?,
        _ => Scalar::zero(),
    };
    let proportional = !ratio.is_zero() && pf.scale(&ratio) == sum;
    out.push(Assertion::new("cyclic sum proportional to pfaffian", proportional, format!("constant {ratio}")));
    let mut sums_ok = true;
    for i in 1..n {
        for g in [Letter::T(i), Letter::E(i)] {
            let m = gens.get(g).try_map(|x| x.substitute_y_power_of_x(-2))?;
            for c in 0..m.dim() {
                let s: Scalar = (0..m.dim()).map(|r| m.get(r, c).clone()).sum();
                sums_ok &= s.is_one();
            }
        }
    }
    out.push(Assertion::new("cyclic column sums are one", sums_ok, "every t_i and e_i column"));
    Ok((out, ratio))
}

/// At `p = q^-2`, whether every column of the block `Pi0 e_i Pi2` has a
/// single nonzero entry equal to one. The failing columns are listed.
pub fn cyclic_v_block_check(gens: &Generators) -> Result<Assertion> {
    let basis = gens.basis();
    let mut bad = Vec::new();
    for i in 1..gens.n {
        let e = gens.get(Letter::E(i)).try_map(|x| x.substitute_y_power_of_x(-2))?;
        for (col, _) in pi2_members(gens, i) {
            let nonzero: Vec<(usize, &Scalar)> = (0..e.dim())
                .filter(|&r| basis[r].connects(i, i + 1))
                .map(|r| (r, e.get(r, col)))
                .filter(|(_, x)| !x.is_zero())
                .collect();
            if !(nonzero.len() == 1 && nonzero[0].1.is_one()) {
                let shown: Vec<String> = nonzero.iter().map(|(r, x)| format!("{}: {x}", basis[*r])).collect();
                bad.push(format!("e{i} column {} -> [{}]", basis[col], shown.join(", ")));
            }
        }
    }
    Ok(Assertion::new(
        "cyclic v columns are unit vectors",
        bad.is_empty(),
        if bad.is_empty() { "every Pi2 column".into() } else { bad.join("; ") },
    ))
}

/// `U = e1 e2 e1 - e1` on the polynomial basis, and `E'` of each `psi U`.
pub fn tl_collapse_check(gens: &Generators, v: &DualityVector, c_prime: &Scalar) -> Result<Vec<Assertion>> {
    let e1 = gens.get(Letter::E(1));
    let e2 = gens.get(Letter::E(2));
    let u = OpMatrix::product(&[e1, e2, e1]).sub(e1);
    let mut out = vec![Assertion::new("U is zero", u.is_zero(), format!("{} nonzero entries", u.diff(&u.scale(&Scalar::zero())).len()))];
    let rows = dual_rows(&u, v);
    let mut bad = Vec::new();
    for ((m, _), row) in v.entries().iter().zip(&rows) {
        match e_prime(row, c_prime) {
            Ok(img) if img.is_zero() => {}
            Ok(img) => bad.push(format!("{m}: {img}")),
            Err(err) => bad.push(format!("{m}: {err}")),
        }
    }
    out.push(Assertion::new("E'(psi U) = 0", bad.is_empty(), if bad.is_empty() { "every basis row".into() } else { bad.join("; ") }));
    let images: Vec<String> = v
        .entries()
        .iter()
        .filter_map(|(m, f)| e_prime(f, c_prime).ok().map(|g| format!("{m} -> {} terms", g.len())))
        .collect();
    out.push(Assertion::new("E' defined on the basis", images.len() == v.len(), images.join(", ")));
    Ok(out)
}

/// `(P)` on every basis polynomial and on the three pieces of a
/// decomposition at each `i`, using `S0` from the `e_i` action.
pub fn decomposition_check(fl: &Flavor, gens: &Generators, v: &DualityVector, coeffs: &[Scalar]) -> Result<Vec<Assertion>> {
    let n = v.n();
    let f = v.combine(coeffs);
    let mut out = Vec::new();
    for i in 1..n {
        let s0 = ebar_apply(gens, v, coeffs, i).scale(&fl.params.tau.inv()?);
        let parts = decompose(fl, &f, i, &s0)?;
        let pieces = reassembled_pieces(fl, i, &parts);
        let total = &(&pieces[0] + &pieces[1]) + &pieces[2];
        let sym = is_symmetric(&parts.1, i) && is_symmetric(&parts.2, i);
        let prop = pieces.iter().all(|p| check_property_p(fl, p).passed());
        out.push(Assertion::new(
            format!("decomposition at {i}"),
            total == f && sym && prop,
            format!("reassembles: {}, symmetric: {sym}, property-p: {prop}", total == f),
        ));
    }
    Ok(out)
}
