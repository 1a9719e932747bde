use crate::diagrams::relations::relation_suite;
use crate::diagrams::{enumerate_basis, Generators, Matching, OpMatrix};
use crate::error::Result;
use crate::report::Assertion;
use crate::scalars::{AlgebraParams, Scalar};

/// `t_i` on a link pattern: exchange the partners of `i` and `i+1`, or
/// leave the pattern alone when they are linked to each other.
fn transpose(m: &Matching, i: usize) -> Matching {
    if m.connects(i, i + 1) {
        m.clone()
    } else {
        m.swapped(i)
    }
}

/// `e_i` on a link pattern: link `i` to `i+1` and their former partners to
/// each other, with the loop factor when they were already linked.
fn contract(m: &Matching, i: usize) -> Result<(Matching, bool)> {
    if m.connects(i, i + 1) {
        return Ok((m.clone(), true));
    }
    let (a, b) = (m.partner(i), m.partner(i + 1));
    let mut strands: Vec<(usize, usize)> = m
        .strands()
        .iter()
        .copied()
        .filter(|&(x, y)| ![x, y].contains(&i) && ![x, y].contains(&(i + 1)))
        .collect();
    strands.push((i, i + 1));
    strands.push((a.min(b), a.max(b)));
    Ok((Matching::new(strands)?, false))
}

/// Generator matrices on link patterns with crossings ignored: `a = 1`,
/// `eps = 0`, `t_i^-1 = t_i`, loops weigh `tau = 2(1 + b/c)`.
pub fn link_generators(n: usize) -> Result<Generators> {
    let params = AlgebraParams::brauer();
    let basis = enumerate_basis(n)?;
    let dim = basis.len();
    let index = |m: &Matching| basis.iter().position(|x| x == m).expect("link pattern in basis");
    let mut t = Vec::new();
    let mut e = Vec::new();
    for i in 1..n {
        let mut tm = vec![vec![Scalar::zero(); dim]; dim];
        let mut em = vec![vec![Scalar::zero(); dim]; dim];
        for (c, m) in basis.iter().enumerate() {
            tm[index(&transpose(m, i))][c] = Scalar::one();
            let (img, looped) = contract(m, i)?;
            em[index(&img)][c] = if looped { params.tau.clone() } else { Scalar::one() };
        }
        t.push(OpMatrix::new(n, format!("t{i}"), basis.clone(), tm));
        e.push(OpMatrix::new(n, format!("e{i}"), basis.clone(), em));
    }
    Ok(Generators { n, params, tinv: t.clone(), t, e })
}

/// The defining relations at `a = 1`, `eps = 0`, together with `t_i^2 = 1`.
pub fn brauer_relation_suite(g: &Generators) -> Vec<Assertion> {
    let mut out = relation_suite(g);
    let one = g.identity();
    let bad: Vec<String> = (0..g.n - 1)
        .filter(|&k| !g.t[k].mul(&g.t[k]).sub(&one).is_zero())
        .map(|k| format!("i={}", k + 1))
        .collect();
    out.push(Assertion::new(
        "t_i^2 = 1",
        bad.is_empty(),
        if bad.is_empty() { format!("{} instances", g.n - 1) } else { bad.join("; ") },
    ));
    out
}
