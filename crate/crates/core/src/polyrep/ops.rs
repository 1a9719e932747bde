use crate::error::{Error, Result};
use crate::poly::{b_form, Poly};
use crate::scalars::{AlgebraParams, Mode, Scalar};
use std::collections::HashMap;

/// The mode-dependent data of the dual operators.
///
/// On polynomials divisible by `b = b_{i,i+1}` the generator `t_i` has two
/// eigenvalues. Writing `f = b (S1 + N S2)` with `S1`, `S2` symmetric in the
/// pair and `N` the form below, `b S1` has eigenvalue `minus` and
/// `b N S2` has eigenvalue `plus`.
#[derive(Clone, Debug)]
pub struct Flavor {
    pub params: AlgebraParams,
    pub plus: Scalar,
    pub minus: Scalar,
}

impl Flavor {
    pub fn new(mode: Mode) -> Self {
        match mode {
            Mode::Bmw => {
                let p = Scalar::y();
                Self {
                    params: AlgebraParams::bmw(),
                    minus: -p.pow(-1),
                    plus: p,
                }
            }
            Mode::Brauer => Self {
                params: AlgebraParams::brauer(),
                plus: Scalar::one(),
                minus: -Scalar::one(),
            },
        }
    }

    pub fn bmw() -> Self {
        Self::new(Mode::Bmw)
    }

    pub fn brauer() -> Self {
        Self::new(Mode::Brauer)
    }

    pub fn mode(&self) -> Mode {
        self.params.mode
    }

    pub fn b(&self, n: usize, i: usize, j: usize) -> Poly {
        b_form(n, i, j, self.mode())
    }

    /// `p z_i - p^-1 z_{i+1}`, or `u_i - u_{i+1} + c`.
    pub fn second_form(&self, n: usize, i: usize) -> Poly {
        let (zi, zj) = (Poly::var(n, i), Poly::var(n, i + 1));
        match self.mode() {
            Mode::Bmw => {
                let p = Scalar::y();
                &zi.scale(&p) - &zj.scale(&p.pow(-1))
            }
            Mode::Brauer => &(&zi - &zj) + &Poly::constant(n, Scalar::y()),
        }
    }

    /// The term picked up when one variable of the pair is moved through
    /// `t_i`: `eps z_i` multiplicatively, `c` additively.
    fn commutator(&self, f: &Poly, i: usize) -> Poly {
        match self.mode() {
            Mode::Bmw => f.shift(i, 1).scale(&self.params.epsilon),
            Mode::Brauer => f.scale(&Scalar::y()),
        }
    }

    /// The substitution of a fresh variable into a triple, one closure per
    /// shift pattern: `(z, s z, s' z)` or `(u, u + s, u + s')`.
    pub fn triple_patterns(&self) -> Vec<(String, [Scalar; 2])> {
        let (x, y) = (Scalar::x(), Scalar::y());
        match self.mode() {
            Mode::Bmw => vec![
                ("(z,q^2z,q^4z)".into(), [x.pow(2), x.pow(4)]),
                ("(z,p^2z,q^2p^2z)".into(), [y.pow(2), &x.pow(2) * &y.pow(2)]),
                ("(z,q^2z,q^2p^2z)".into(), [x.pow(2), &x.pow(2) * &y.pow(2)]),
            ],
            Mode::Brauer => vec![
                ("(u,u+b,u+2b)".into(), [x.clone(), &x * &Scalar::integer(2)]),
                ("(u,u+c,u+c+b)".into(), [y.clone(), &y + &x]),
                ("(u,u+b,u+c+b)".into(), [x.clone(), &y + &x]),
            ],
        }
    }

    /// Places `z_j` at `s_j` times (or plus) `z_i` and `z_k` at `s_k`.
    pub fn place_pair(&self, f: &Poly, i: usize, (j, sj): (usize, &Scalar), (k, sk): (usize, &Scalar)) -> Poly {
        match self.mode() {
            Mode::Bmw => self.place(&self.place(f, i, j, sj), i, k, sk),
            Mode::Brauer => f.substitute_shifted(i, &[(j, sj.clone()), (k, sk.clone())]),
        }
    }

    /// Places `z_j` (and `z_k`) at a shift of `z_i`.
    pub fn place(&self, f: &Poly, i: usize, j: usize, s: &Scalar) -> Poly {
        match self.mode() {
            Mode::Bmw => f.substitute_scaled(j, i, s),
            Mode::Brauer => f.substitute_shifted(i, &[(j, s.clone())]),
        }
    }
}

pub fn exchange(f: &Poly, i: usize) -> Poly {
    f.swap(i, i + 1)
}

pub fn is_symmetric(f: &Poly, i: usize) -> bool {
    &exchange(f, i) == f
}

fn difference(n: usize, i: usize, j: usize) -> Poly {
    &Poly::var(n, i) - &Poly::var(n, j)
}

/// `(g - k g) / (z_i - z_{i+1})`, symmetric in the pair.
pub fn divided_difference(g: &Poly, i: usize) -> Poly {
    let anti = g - &exchange(g, i);
    anti.div_linear(&difference(g.nvars(), i, i + 1))
        .expect("antisymmetric polynomials are divisible by z_i - z_{i+1}")
}

fn check_index(f: &Poly, i: usize) -> Result<()> {
    let n = f.nvars();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { n, index: i });
    }
    Ok(())
}

/// One way of computing `f t_i` for `f` divisible by `b_{i,i+1}`.
pub trait TbarRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn apply(&self, fl: &Flavor, f: &Poly, i: usize) -> Result<Poly>;
}

fn quotient(fl: &Flavor, f: &Poly, i: usize) -> Result<(Poly, Poly)> {
    check_index(f, i)?;
    let b = fl.b(f.nvars(), i, i + 1);
    let g = f.div_linear(&b)?;
    Ok((b, g))
}

/// Through the projector onto the `minus` eigenspace, `t - plus`.
pub struct MinusP;

impl TbarRoute for MinusP {
    fn name(&self) -> &'static str {
        "minus-p"
    }

    fn apply(&self, fl: &Flavor, f: &Poly, i: usize) -> Result<Poly> {
        let (b, g) = quotient(fl, f, i)?;
        let n = f.nvars();
        let w = &g * &exchange(&fl.second_form(n, i), i);
        let s = (&w - &exchange(&w, i)).div_linear(&difference(n, i + 1, i))?;
        Ok(&f.scale(&fl.plus) - &(&b * &s))
    }
}

/// Through the projector onto the `plus` eigenspace, `t - minus`.
pub struct PlusInverseP;

impl TbarRoute for PlusInverseP {
    fn name(&self) -> &'static str {
        "plus-inverse-p"
    }

    fn apply(&self, fl: &Flavor, f: &Poly, i: usize) -> Result<Poly> {
        let (b, g) = quotient(fl, f, i)?;
        let h = divided_difference(&g, i);
        let image = &(&b * &fl.second_form(f.nvars(), i)) * &h;
        Ok(&image + &f.scale(&fl.minus))
    }
}

/// Commutes `t_i` through the monomials of `f / b`, ending on `b t_i = minus b`.
pub struct AffineHecke;

impl TbarRoute for AffineHecke {
    fn name(&self) -> &'static str {
        "affine-hecke"
    }

    fn apply(&self, fl: &Flavor, f: &Poly, i: usize) -> Result<Poly> {
        let (b, g) = quotient(fl, f, i)?;
        let n = f.nvars();
        let mut groups: HashMap<(u8, u8), Poly> = HashMap::new();
        for (e, c) in g.terms() {
            let key = (e[i - 1], e[i]);
            let mut rest = *e;
            rest[i - 1] = 0;
            rest[i] = 0;
            groups.entry(key).or_insert_with(|| Poly::zero(n)).add_term(rest, c.clone());
        }
        let mut memo: HashMap<(u8, u8), Poly> = HashMap::new();
        let mut out = Poly::zero(n);
        for (key, part) in groups {
            let image = pair_image(fl, &b, i, key, &mut memo);
            out = &out + &(&part * &image);
        }
        Ok(out)
    }
}

/// `(b z_i^al z_{i+1}^be) t_i`.
fn pair_image(fl: &Flavor, b: &Poly, i: usize, key: (u8, u8), memo: &mut HashMap<(u8, u8), Poly>) -> Poly {
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (al, be) = key;
    let out = if al > 0 {
        // psi z_i t = (psi t) z_{i+1} + [eps psi z_i | c psi]
        let prev = pair_image(fl, b, i, (al - 1, be), memo);
        let psi = b.shift(i, al - 1).shift(i + 1, be);
        &prev.shift(i + 1, 1) + &fl.commutator(&psi, i)
    } else if be > 0 {
        // psi z_{i+1} t = (psi t) z_i - [eps psi z_i | c psi]
        let prev = pair_image(fl, b, i, (0, be - 1), memo);
        let psi = b.shift(i + 1, be - 1);
        &prev.shift(i, 1) - &fl.commutator(&psi, i)
    } else {
        b.scale(&fl.minus)
    };
    memo.insert(key, out.clone());
    out
}

/// Splits `f / b` along the two eigenspaces and scales each piece.
pub struct BEigen;

impl TbarRoute for BEigen {
    fn name(&self) -> &'static str {
        "b-eigen"
    }

    fn apply(&self, fl: &Flavor, f: &Poly, i: usize) -> Result<Poly> {
        let (b, g) = quotient(fl, f, i)?;
        let (s1, s2) = split_pair(fl, &g, i)?;
        let lower = &b * &s1;
        let upper = &(&b * &fl.second_form(f.nvars(), i)) * &s2;
        Ok(&lower.scale(&fl.minus) + &upper.scale(&fl.plus))
    }
}

/// `g = S1 + N S2` with `S1`, `S2` symmetric in `(z_i, z_{i+1})`.
pub fn split_pair(fl: &Flavor, g: &Poly, i: usize) -> Result<(Poly, Poly)> {
    let gap = (&fl.plus - &fl.minus).inv()?;
    let s2 = divided_difference(g, i).scale(&gap);
    let s1 = g - &(&fl.second_form(g.nvars(), i) * &s2);
    Ok((s1, s2))
}

pub const TBAR_ROUTES: [&str; 4] = ["minus-p", "plus-inverse-p", "affine-hecke", "b-eigen"];

pub fn tbar_route(name: &str) -> Option<Box<dyn TbarRoute>> {
    match name {
        "minus-p" => Some(Box::new(MinusP)),
        "plus-inverse-p" => Some(Box::new(PlusInverseP)),
        "affine-hecke" => Some(Box::new(AffineHecke)),
        "b-eigen" => Some(Box::new(BEigen)),
        _ => None,
    }
}

pub fn default_route() -> Box<dyn TbarRoute> {
    Box::new(PlusInverseP)
}

/// `f t_i^-1 = f t_i - eps f` on polynomials divisible by `b_{i,i+1}`.
pub fn tbar_inverse(fl: &Flavor, route: &dyn TbarRoute, f: &Poly, i: usize) -> Result<Poly> {
    let image = route.apply(fl, f, i)?;
    Ok(&image - &f.scale(&fl.params.epsilon))
}

/// `(1 - k_12) (z_1 - z_2)^-1 (p z_1 - p^-1 z_2)(q z_1 - q^-1 z_2) (q + q^-1)/(p - p^-1)`.
pub fn fbar1(f: &Poly) -> Result<Poly> {
    let n = f.nvars();
    if n < 2 {
        return Err(Error::IndexOutOfRange { n, index: 1 });
    }
    let fl = Flavor::bmw();
    let (q, p) = (Scalar::x(), Scalar::y());
    let c = (&q + &q.pow(-1)).checked_div(&(&p - &p.pow(-1)))?;
    let h = divided_difference(f, 1);
    let forms = &fl.second_form(n, 1) * &fl.b(n, 1, 2);
    Ok((&h * &forms).scale(&c))
}

/// `f sigma = a^{2|mu|/n} f(z_{i+1})` with `z_{n+1} = a^-2 z_1`;
/// additively `u_{n+1} = u_1 + c + 2b` and no prefactor.
pub fn sigma_bar(fl: &Flavor, f: &Poly) -> Result<Poly> {
    let n = f.nvars();
    let map: Vec<usize> = (1..=n).map(|i| if i == n { 1 } else { i + 1 }).collect();
    match fl.mode() {
        Mode::Bmw => {
            let Some(d) = f.homogeneous_degree() else {
                return if f.is_zero() { Ok(f.clone()) } else { Err(Error::NotHomogeneous) };
            };
            if (2 * d) % n != 0 {
                return Err(Error::Inconsistent(format!("2|mu|/n is not integral for degree {d}")));
            }
            let a = &fl.params.a;
            let mut out = Poly::zero(n);
            for (e, c) in f.terms() {
                let mut g = [0; crate::poly::MAX_VARS];
                for (i, &k) in e[..n].iter().enumerate() {
                    g[map[i] - 1] += k;
                }
                out.add_term(g, c * &a.pow(-2 * e[n - 1] as i32));
            }
            Ok(out.scale(&a.pow((2 * d / n) as i32)))
        }
        Mode::Brauer => {
            let shifted = f.rename(n + 1, &(2..=n + 1).collect::<Vec<_>>())?;
            let wrap = crate::poly::cyclic_var(n, n + 1, Mode::Brauer);
            let lifted = Poly::from_terms(n + 1, wrap.terms().map(|(e, c)| (*e, c.clone())));
            let mut out = shifted.substitute(n + 1, &lifted);
            out = Poly::from_terms(n, out.terms().map(|(e, c)| (*e, c.clone())));
            Ok(out)
        }
    }
}

/// `c' f(z_1 = z, z_2 = q^2 z, z_i) / prod_{i>=3} (q^4 z - z_i)(p^2 q^2 z - z_i)`,
/// returned in the variables `z_3..z_n` renamed to `1..n-2`.
pub fn e_prime(f: &Poly, c_prime: &Scalar) -> Result<Poly> {
    let n = f.nvars();
    if n < 2 {
        return Err(Error::IndexOutOfRange { n, index: 2 });
    }
    let (q, p) = (Scalar::x(), Scalar::y());
    let mut g = f.substitute_scaled(2, 1, &q.pow(2));
    let z = Poly::var(n, 1);
    for i in 3..=n {
        let zi = Poly::var(n, i);
        g = g.div_linear(&(&z.scale(&q.pow(4)) - &zi))?;
        g = g.div_linear(&(&z.scale(&(&p.pow(2) * &q.pow(2))) - &zi))?;
    }
    if g.degree_in(1).unwrap_or(0) > 0 {
        return Err(Error::Inconsistent("E' image still depends on z".into()));
    }
    let mut map = vec![0, 0];
    map.extend(1..=n - 2);
    Ok(g.rename(n - 2, &map)?.scale(c_prime))
}

/// `tau f - c^-1 b_{i,i+1} (u_i - u_{i+1} + c) (f - k f)/(u_i - u_{i+1})`:
/// the additive `e_i` on polynomials without a `b`-divisible middle piece.
pub fn brauer_ebar(fl: &Flavor, f: &Poly, i: usize) -> Result<Poly> {
    check_index(f, i)?;
    let n = f.nvars();
    let lift = &(&fl.b(n, i, i + 1) * &fl.second_form(n, i)) * &divided_difference(f, i);
    Ok(&f.scale(&fl.params.tau) - &lift.scale(&Scalar::y().inv()?))
}
