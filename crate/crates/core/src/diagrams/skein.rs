//! Skein reduction of [`CrossedTangle`]s to the matching basis.
//!
//! Components are ordered (open strands by decreasing right end, then closed
//! components) and traversed from a base point. A diagram is descending when
//! every crossing is first met on its over strand; such a diagram is a stack
//! of unknotted pieces and equals `tau^loops * a^writhe` times the tangle of
//! its matching. Otherwise one bad crossing is rewritten by
//!
//! ```text
//! X = X_switched + s * eps * (X_{01|23} - X_{12|30})
//! ```
//!
//! with `s = +1` when the over strand of `X` uses slots `0, 2` and `-1`
//! otherwise. Switching a bad crossing makes it good without touching the
//! others and smoothing lowers the crossing count, so the rewriting stops.

use super::matching::Matching;
use super::tangle::CrossedTangle;
use super::AlgebraElement;
use crate::scalars::{AlgebraParams, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Chooses which bad crossing to rewrite next.
pub trait RewriteOrder: Send {
    fn name(&self) -> &'static str;
    /// `bad` lists the bad crossings in traversal order; returns a position in it.
    fn pick(&mut self, bad: &[usize]) -> usize;
}

/// Always rewrites the first bad crossing met along the traversal.
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstBad;

impl RewriteOrder for FirstBad {
    fn name(&self) -> &'static str {
        "first-bad"
    }
    fn pick(&mut self, _bad: &[usize]) -> usize {
        0
    }
}

/// Rewrites a uniformly random bad crossing.
#[derive(Clone, Debug)]
pub struct SeededRandom(ChaCha8Rng);

impl SeededRandom {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RewriteOrder for SeededRandom {
    fn name(&self) -> &'static str {
        "random"
    }
    fn pick(&mut self, bad: &[usize]) -> usize {
        self.0.gen_range(0..bad.len())
    }
}

/// Names accepted by [`rewrite_order`].
pub const REWRITE_ORDERS: [&str; 2] = ["first-bad", "random"];

pub fn rewrite_order(name: &str, seed: u64) -> Option<Box<dyn RewriteOrder>> {
    match name {
        "first-bad" => Some(Box::new(FirstBad)),
        "random" => Some(Box::new(SeededRandom::new(seed))),
        _ => None,
    }
}

#[derive(Clone, Copy, Default)]
struct Passage {
    comp: usize,
    slot: usize,
}

/// Result of traversing a diagram.
enum Survey {
    Bad(Vec<usize>),
    Descending {
        matching: Matching,
        loops: u32,
        writhe: i32,
    },
}

fn survey(d: &CrossedTangle) -> Survey {
    let n = d.ends();
    let nc = d.alive.len();
    let mut first: Vec<Option<Passage>> = vec![None; nc];
    let mut second: Vec<Option<Passage>> = vec![None; nc];
    let mut bad = Vec::new();
    let mut used = vec![false; d.link.len()];

    let mut visit = |p: Passage, c: usize, first: &mut Vec<Option<Passage>>, bad: &mut Vec<usize>| {
        if first[c].is_none() {
            first[c] = Some(p);
            let over = (p.slot % 2 == 0) == d.over02[c];
            if !over {
                bad.push(c);
            }
        } else {
            second[c] = Some(p);
        }
    };

    let mut partner = vec![0usize; n + 1];
    for k in 1..=n {
        partner[k] = d.partner_of_end(k);
    }
    let mut strands: Vec<(usize, usize)> = (1..=n).filter(|&k| k < partner[k]).map(|k| (k, partner[k])).collect();
    strands.sort_by(|x, y| y.1.cmp(&x.1));

    let mut comp = 0;
    for &(a, _) in &strands {
        let mut cur = d.link[a - 1];
        while let Some((c, s)) = d.decode(cur) {
            used[cur] = true;
            visit(Passage { comp, slot: s }, c, &mut first, &mut bad);
            let out = d.slot(c, s + 2);
            used[out] = true;
            cur = d.link[out];
        }
        comp += 1;
    }
    let mut closed = 0;
    for start in n..d.link.len() {
        let (c0, _) = d.decode(start).unwrap();
        if !d.alive[c0] || used[start] {
            continue;
        }
        let mut cur = start;
        loop {
            let (c, s) = d.decode(cur).unwrap();
            used[cur] = true;
            visit(Passage { comp, slot: s }, c, &mut first, &mut bad);
            let out = d.slot(c, s + 2);
            used[out] = true;
            cur = d.link[out];
            if cur == start {
                break;
            }
        }
        comp += 1;
        closed += 1;
    }

    if !bad.is_empty() {
        return Survey::Bad(bad);
    }
    let mut writhe = 0;
    for c in (0..nc).filter(|&c| d.alive[c]) {
        let (o, u) = (first[c].unwrap(), second[c].unwrap());
        if o.comp == u.comp {
            writhe += if u.slot == (o.slot + 1) % 4 { 1 } else { -1 };
        }
    }
    Survey::Descending {
        matching: Matching::new(strands).expect("ends pair up"),
        loops: d.loops + closed,
        writhe,
    }
}

/// Monomial `sign * eps^e * tau^l * a^w` bookkeeping for the result.
type Key = (Matching, u32, u32, i32);

/// Reduces a diagram to a combination of matchings.
pub fn skein_reduce(d: &CrossedTangle, params: &AlgebraParams, order: &mut dyn RewriteOrder) -> AlgebraElement {
    let mut acc: HashMap<Key, i64> = HashMap::new();
    let mut stack: Vec<(CrossedTangle, i64, u32)> = vec![(d.clone(), 1, 0)];
    while let Some((d, sign, eps)) = stack.pop() {
        match survey(&d) {
            Survey::Descending { matching, loops, writhe } => {
                *acc.entry((matching, eps, loops, writhe)).or_default() += sign;
            }
            Survey::Bad(bad) => {
                let c = bad[order.pick(&bad)];
                let s = if d.over02[c] { sign } else { -sign };
                stack.push((d.smoothed(c, 0), s, eps + 1));
                stack.push((d.smoothed(c, 1), -s, eps + 1));
                stack.push((d.switched(c), sign, eps));
            }
        }
    }
    let mut out = AlgebraElement::zero(d.ends());
    let mut keys: Vec<_> = acc.into_iter().filter(|(_, v)| *v != 0).collect();
    keys.sort_by(|x, y| x.0.cmp(&y.0));
    for ((m, e, l, w), k) in keys {
        let coeff = Scalar::integer(k) * params.epsilon.pow(e as i32) * params.tau.pow(l as i32) * params.a.pow(w);
        out.add_term(m, coeff);
    }
    out
}
