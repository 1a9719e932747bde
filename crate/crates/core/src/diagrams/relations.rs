//! Exact checks of the defining relations and of the structure of the
//! generator matrices.

use super::matching::{Letter, Matching};
use super::matrix::{Generators, OpMatrix};
use super::AlgebraElement;
use crate::linalg::{rank, ratio};
use crate::report::Assertion;
use crate::scalars::{AlgebraParams, Scalar};

struct Family {
    name: &'static str,
    checked: usize,
    failed: Vec<String>,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failed: Vec::new(),
        }
    }

    fn eq(&mut self, what: String, lhs: &OpMatrix, rhs: &OpMatrix) {
        self.checked += 1;
        let d = lhs.diff(rhs);
        if !d.is_empty() {
            self.failed.push(format!("{what} ({} entries differ)", d.len()));
        }
    }

    fn finish(self) -> Assertion {
        let ok = self.failed.is_empty();
        let detail = if ok {
            format!("{} instances", self.checked)
        } else {
            self.failed.join("; ")
        };
        Assertion::new(self.name, ok, detail)
    }
}

/// Every defining relation, for all admissible indices.
pub fn relation_suite(g: &Generators) -> Vec<Assertion> {
    let n = g.n;
    let AlgebraParams { a, tau, epsilon, .. } = &g.params;
    let one = g.identity();
    let (t, ti, e) = (|i: usize| &g.t[i - 1], |i: usize| &g.tinv[i - 1], |i: usize| &g.e[i - 1]);
    let ainv = a.inv().expect("a is a unit");

    let mut inverse = Family::new("t_i t_i^-1 = 1");
    let mut idem = Family::new("e_i^2 = tau e_i");
    let mut skein = Family::new("t_i - t_i^-1 = eps (1 - e_i)");
    let mut untwist = Family::new("e_i t_i = t_i e_i = a e_i");
    let mut braid = Family::new("t_i t_j t_i = t_j t_i t_j, |i-j| = 1");
    let mut far = Family::new("far generators commute");
    let mut ete = Family::new("e_i t_j e_i = a^-1 e_i, |i-j| = 1");
    let mut tte = Family::new("t_j t_i e_j = e_i t_j t_i = e_i e_j, |i-j| = 1");
    let mut eee = Family::new("e_i e_j e_i = e_i, |i-j| = 1");

    for i in 1..n {
        inverse.eq(format!("i={i}"), &t(i).mul(ti(i)), &one);
        inverse.eq(format!("i={i} (left)"), &ti(i).mul(t(i)), &one);
        idem.eq(format!("i={i}"), &e(i).mul(e(i)), &e(i).scale(tau));
        skein.eq(format!("i={i}"), &t(i).sub(ti(i)), &one.sub(e(i)).scale(epsilon));
        untwist.eq(format!("e t, i={i}"), &e(i).mul(t(i)), &e(i).scale(a));
        untwist.eq(format!("t e, i={i}"), &t(i).mul(e(i)), &e(i).scale(a));
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                braid.eq(
                    format!("i={i} j={j}"),
                    &OpMatrix::product(&[t(i), t(j), t(i)]),
                    &OpMatrix::product(&[t(j), t(i), t(j)]),
                );
                ete.eq(
                    format!("i={i} j={j}"),
                    &OpMatrix::product(&[e(i), t(j), e(i)]),
                    &e(i).scale(&ainv),
                );
                let ee = e(i).mul(e(j));
                tte.eq(format!("t_j t_i e_j, i={i} j={j}"), &OpMatrix::product(&[t(j), t(i), e(j)]), &ee);
                tte.eq(format!("e_i t_j t_i, i={i} j={j}"), &OpMatrix::product(&[e(i), t(j), t(i)]), &ee);
                eee.eq(format!("i={i} j={j}"), &OpMatrix::product(&[e(i), e(j), e(i)]), e(i));
            }
            if i + 2 <= j {
                for (x, y, tag) in [
                    (t(i), t(j), "t t"),
                    (e(i), e(j), "e e"),
                    (t(i), e(j), "t e"),
                    (e(i), t(j), "e t"),
                ] {
                    far.eq(format!("{tag} i={i} j={j}"), &x.mul(y), &y.mul(x));
                }
            }
        }
    }
    [inverse, idem, skein, untwist, braid, far, ete, tte, eee]
        .into_iter()
        .map(Family::finish)
        .collect()
}

/// The relation suite re-read in the mirror algebra.
pub fn mirror_suite(g: &Generators) -> Vec<Assertion> {
    relation_suite(&g.mirrored())
        .into_iter()
        .map(|a| Assertion { name: format!("mirror: {}", a.name), ..a })
        .collect()
}

/// Expected matrices for `n = 4`: `(label, entries)` in the basis order
/// `{(1,2),(3,4)}, {(1,3),(2,4)}, {(1,4),(2,3)}`.
pub fn reference_h4(p: &AlgebraParams) -> Vec<(&'static str, [[Scalar; 3]; 3])> {
    let (a, tau, eps) = (p.a.clone(), p.tau.clone(), p.epsilon.clone());
    let ai = a.inv().expect("a is a unit");
    let (z, o) = (Scalar::zero, Scalar::one);
    vec![
        ("e1", [[tau.clone(), a.clone(), o()], [z(), z(), z()], [z(), z(), z()]]),
        ("e2", [[z(), z(), z()], [z(), z(), z()], [o(), ai, tau]]),
        ("t1", [[a.clone(), -(&a * &eps), z()], [z(), eps.clone(), o()], [z(), o(), z()]]),
        ("t2", [[eps.clone(), o(), z()], [o(), z(), z()], [-eps.clone(), z(), a]]),
        ("sigma", [[z(), eps.clone(), o()], [z(), o(), z()], [o(), -eps, z()]]),
    ]
}

pub fn matches_reference(m: &OpMatrix, expect: &[[Scalar; 3]; 3]) -> bool {
    m.dim() == 3 && (0..3).all(|i| (0..3).all(|j| m.get(i, j) == &expect[i][j]))
}

/// `a^-1 t_1 ... t_{n-1}`
pub fn sigma_inverse(g: &Generators) -> OpMatrix {
    let word: Vec<Letter> = (1..g.n).map(Letter::T).collect();
    let ai = g.params.a.inv().expect("a is a unit");
    g.word(&word).expect("indices in range").scale(&ai).with_label("sigma^-1")
}

/// Affine generators `sigma^-1 x_{n-1} sigma`, closing the index range
/// cyclically.
pub fn affine_generators(g: &Generators) -> (OpMatrix, OpMatrix) {
    let (s, si) = (g.sigma(), sigma_inverse(g));
    let n = g.n;
    let conj = |x: &OpMatrix| OpMatrix::product(&[&si, x, &s]);
    (conj(&g.t[n - 2]).with_label(format!("t{n}")), conj(&g.e[n - 2]).with_label(format!("e{n}")))
}

/// `sigma` shifts generator indices down by one.
pub fn sigma_shift_suite(g: &Generators) -> Assertion {
    let (s, si) = (g.sigma(), sigma_inverse(g));
    let mut fam = Family::new("sigma x_{i+1} sigma^-1 = x_i");
    fam.eq("sigma sigma^-1".into(), &s.mul(&si), &g.identity());
    for i in 1..g.n - 1 {
        fam.eq(format!("t, i={i}"), &OpMatrix::product(&[&s, &g.t[i], &si]), &g.t[i - 1]);
        fam.eq(format!("e, i={i}"), &OpMatrix::product(&[&s, &g.e[i], &si]), &g.e[i - 1]);
    }
    fam.finish()
}

/// Block form of `e_i`, `t_i`. Besides the tangles joining `i` to `i+1`,
/// the basis splits into pairs `{pi, pi'}` exchanged by swapping the ends at
/// `i, i+1`; in each pair exactly one member is sent by `t_i` to the other
/// with coefficient one. With `v` the block of `e_i` on those members, every
/// other entry of `e_i`, `t_i` is fixed by `tau`, `a`, `eps` and `v`.
pub fn block_structure(g: &Generators, i: usize) -> Assertion {
    let basis = g.basis();
    let (t, e) = (&g.t[i - 1], &g.e[i - 1]);
    let AlgebraParams { a, tau, epsilon, .. } = &g.params;
    let idx = |m: &Matching| basis.iter().position(|b| b == m).unwrap();
    let unit_at = |c: usize, r: usize| (0..basis.len()).all(|k| t.get(k, c) == &if k == r { Scalar::one() } else { Scalar::zero() });
    let mut problems = Vec::new();

    let mut exp_t = OpMatrix::zero(g.n, basis.clone());
    let mut exp_e = OpMatrix::zero(g.n, basis.clone());
    for (c, m) in basis.iter().enumerate() {
        if m.block(i) == 0 {
            exp_t.set(c, c, a.clone());
            exp_e.set(c, c, tau.clone());
            continue;
        }
        let partner = idx(&m.swapped(i));
        match (unit_at(c, partner), unit_at(partner, c)) {
            (true, false) => {}
            (false, true) => continue,
            _ => {
                problems.push(format!("no unique t_{i} image between {m} and {}", basis[partner]));
                continue;
            }
        }
        exp_t.set(partner, c, Scalar::one());
        exp_t.set(c, partner, Scalar::one());
        exp_t.set(partner, partner, epsilon.clone());
        for (r, row) in basis.iter().enumerate() {
            if row.block(i) == 0 {
                let v = e.get(r, c).clone();
                exp_e.set(r, c, v.clone());
                exp_e.set(r, partner, a * &v);
                exp_t.set(r, partner, -(a * epsilon * &v));
            }
        }
    }
    let (dt, de) = (t.diff(&exp_t), e.diff(&exp_e));
    if !dt.is_empty() {
        problems.push(format!("t_{i}: {} entries off the block form", dt.len()));
    }
    if !de.is_empty() {
        problems.push(format!("e_{i}: {} entries off the block form", de.len()));
    }
    let ok = problems.is_empty();
    Assertion::new(
        format!("block structure i={i}"),
        ok,
        if ok { "matches".to_string() } else { problems.join("; ") },
    )
}

/// `sigma pi = pi shifted + terms with fewer crossings`, and the row of the
/// maximally crossed state is a unit vector.
pub fn sigma_triangularity(g: &Generators) -> Assertion {
    let s = g.sigma();
    let basis = g.basis();
    let mut problems = Vec::new();
    for (c, pi) in basis.iter().enumerate() {
        let shifted = pi.rotated();
        let col = s.column(c);
        if col.coeff(&shifted) != Scalar::one() {
            problems.push(format!("coefficient of {shifted} in sigma {pi}"));
        }
        for (m, _) in col.terms() {
            if m != &shifted && m.crossing_number() >= pi.crossing_number() {
                problems.push(format!("sigma {pi} contains {m}"));
            }
        }
    }
    let rho = Matching::maximally_crossed(g.n).expect("n is even");
    let r = s.index_of(&rho).unwrap();
    for c in 0..s.dim() {
        let want = if c == r { Scalar::one() } else { Scalar::zero() };
        if s.get(r, c) != &want {
            problems.push(format!("row of rho at column {c}"));
        }
    }
    let ok = problems.is_empty();
    Assertion::new("sigma triangular in crossing order", ok, problems.join("; "))
}

/// Repeated action of the generators on the minimal projector spans the
/// module, measured by rank at a rational point.
pub fn module_generation(g: &Generators) -> Assertion {
    let basis = g.basis();
    let (q0, p0) = (ratio(3, 2), ratio(5, 7));
    let signature = |v: &AlgebraElement| -> Vec<_> {
        basis
            .iter()
            .map(|m| v.coeff(m).specialize(&q0, &p0).expect("generic point"))
            .collect()
    };
    let mut found = vec![AlgebraElement::basis(Matching::alpha(g.n).expect("n is even"))];
    let mut frontier = found.clone();
    let mut r = 1;
    while !frontier.is_empty() && r < basis.len() {
        let mut next = Vec::new();
        for v in &frontier {
            for m in g.t.iter().chain(&g.tinv).chain(&g.e) {
                let w = m.apply(v);
                let mut rows: Vec<_> = found.iter().map(signature).collect();
                rows.push(signature(&w));
                let rr = rank(rows);
                if rr > r {
                    r = rr;
                    found.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Assertion::new(
        "generators acting on alpha span the module",
        r == basis.len(),
        format!("rank {r} of {}", basis.len()),
    )
}
