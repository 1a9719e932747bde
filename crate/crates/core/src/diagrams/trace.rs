use super::matching::{Letter, Matching, ReducedWord};
use super::matrix::Generators;
use super::skein::{skein_reduce, FirstBad, RewriteOrder};
use super::tangle::TangleBuilder;
use crate::error::{Error, Result};
use crate::report::Assertion;
use crate::scalars::{AlgebraParams, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closure of a word on `n` strands, divided by `tau^n` so that the empty
/// word has trace one.
pub fn markov_trace(n: usize, word: &[Letter], params: &AlgebraParams) -> Result<Scalar> {
    markov_trace_with(n, word, params, &mut FirstBad)
}

pub fn markov_trace_with(n: usize, word: &[Letter], params: &AlgebraParams, order: &mut dyn RewriteOrder) -> Result<Scalar> {
    let mut b = TangleBuilder::strands(n);
    b.apply_word(word)?;
    let closed = b.close();
    let value = skein_reduce(&closed, params, order);
    let empty = Matching::new(Vec::new())?;
    if value.terms().any(|(m, _)| m != &empty) {
        return Err(Error::Inconsistent("closed diagram left open strands".into()));
    }
    value.coeff(&empty).checked_div(&params.tau.pow(n as i32))
}

/// Conjugate word: letters reversed and `t <-> t^-1`.
pub fn star(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|g| g.star()).collect()
}

/// `<w1|w2>` defined by `w1* w2 = <w1|w2> alpha`.
pub fn scalar_product(g: &Generators, w1: &ReducedWord, w2: &ReducedWord) -> Result<Scalar> {
    let alpha = Matching::alpha(g.n)?;
    let m = g.word(&star(&w1.letters()))?;
    let col = m.index_of(&w2.to_matching()).expect("basis vector");
    let v = m.column(col);
    let lambda = v.coeff(&alpha);
    if v.terms().any(|(k, _)| k != &alpha) {
        return Err(Error::Inconsistent(format!(
            "w1* w2 is not proportional to alpha for {:?}, {:?}",
            w1.descents(),
            w2.descents()
        )));
    }
    Ok(lambda)
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> Vec<Letter> {
    if strands < 2 {
        return Vec::new();
    }
    (0..rng.gen_range(0..=max_len))
        .map(|_| {
            let i = rng.gen_range(1..strands);
            match rng.gen_range(0..3) {
                0 => Letter::T(i),
                1 => Letter::TInv(i),
                _ => Letter::E(i),
            }
        })
        .collect()
}

/// `tr(1) = 1` and the conditional expectations
/// `tr(x t) = tr(x)/(tau a)`, `tr(x t^-1) = a tr(x)/tau`, `tr(x e) = tr(x)/tau`
/// for `count` random words `x` on the first `n - 1` strands.
pub fn markov_checks(n: usize, params: &AlgebraParams, count: usize, seed: u64) -> Result<Vec<Assertion>> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { n, index: 1 });
    }
    let one = markov_trace(n, &[], params)?;
    let mut out = vec![Assertion::new("markov tr(1) = 1", one.is_one(), one.to_string())];
    let tau = &params.tau;
    let a = &params.a;
    let factors = [
        (Letter::T(n - 1), (tau * a).inv()?),
        (Letter::TInv(n - 1), a.checked_div(tau)?),
        (Letter::E(n - 1), tau.inv()?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for k in 0..count {
        let x = random_word(&mut rng, n - 1, 6);
        let base = markov_trace(n, &x, params)?;
        for (g, f) in &factors {
            let mut xg = x.clone();
            xg.push(*g);
            if markov_trace(n, &xg, params)? != &base * f {
                bad.push(format!("word {k} {x:?} . {g:?}"));
            }
        }
    }
    out.push(Assertion::new(
        "markov conditional expectations",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} random words, seed {seed}") } else { bad.join("; ") },
    ));
    Ok(out)
}
