//! Planar diagrams with explicit crossings.
//!
//! A diagram has `n` free ends at the bottom, numbered `1..=n` from left to
//! right, and a set of crossings. Each crossing owns four slots numbered
//! counterclockwise; slots `0, 2` lie on one strand and `1, 3` on the other.
//! Every live slot and every end is linked to exactly one partner. Closed
//! loops without crossings are only counted.
//!
//! Diagrams are built by [`TangleBuilder`]: a top piece (a tangle of a
//! matching, or open strands for a closure) followed by generators glued
//! below it one at a time.

use super::matching::{Letter, Matching};
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::collections::HashMap;

/// Whether the braid generator `t_i` has its over strand on slots `0, 2`.
///
/// In the local picture of `t_i` the slots are NE, NW, SW, SE. The over
/// strand of `t_i` runs from the upper left to the lower right.
const T_OVER02: bool = false;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedTangle {
    pub(crate) ends: usize,
    pub(crate) over02: Vec<bool>,
    pub(crate) alive: Vec<bool>,
    pub(crate) link: Vec<usize>,
    pub(crate) loops: u32,
}

pub(crate) const DEAD: usize = usize::MAX;

impl CrossedTangle {
    pub fn ends(&self) -> usize {
        self.ends
    }

    pub fn crossing_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn free_loops(&self) -> u32 {
        self.loops
    }

    pub(crate) fn slot(&self, c: usize, s: usize) -> usize {
        self.ends + 4 * c + (s % 4)
    }

    /// Splits a node id into `(crossing, slot)`, or `None` for an end.
    pub(crate) fn decode(&self, id: usize) -> Option<(usize, usize)> {
        (id >= self.ends).then(|| ((id - self.ends) / 4, (id - self.ends) % 4))
    }

    fn connect(&mut self, x: usize, y: usize) {
        self.link[x] = y;
        self.link[y] = x;
    }

    /// Flips which strand of crossing `c` passes over.
    pub fn switched(&self, c: usize) -> Self {
        let mut d = self.clone();
        d.over02[c] = !d.over02[c];
        d
    }

    /// Removes crossing `c`, joining its slots in the pairs `(s, s+1)` and
    /// `(s+2, s+3)`.
    pub fn smoothed(&self, c: usize, s: usize) -> Self {
        let mut d = self.clone();
        let ids: Vec<usize> = (0..4).map(|k| d.slot(c, s + k)).collect();
        for (x, y) in [(ids[0], ids[1]), (ids[2], ids[3])] {
            let px = d.link[x];
            let py = d.link[y];
            d.link[x] = DEAD;
            d.link[y] = DEAD;
            if px == y {
                d.loops += 1;
            } else {
                d.connect(px, py);
            }
        }
        d.alive[c] = false;
        d
    }

    /// Checks that the link map is an involution without fixed points on the
    /// live nodes.
    pub fn validate(&self) -> Result<()> {
        for id in 0..self.link.len() {
            let live = self.decode(id).is_none_or(|(c, _)| self.alive[c]);
            let l = self.link[id];
            if live != (l != DEAD) || (live && (l == id || self.link[l] != id)) {
                return Err(Error::MalformedDiagram(format!("node {id} is badly linked")));
            }
        }
        Ok(())
    }

    /// Point reached from end `k` (1-based).
    pub fn partner_of_end(&self, k: usize) -> usize {
        let mut cur = self.link[k - 1];
        while let Some((c, s)) = self.decode(cur) {
            cur = self.link[self.slot(c, s + 2)];
        }
        cur + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Term {
    End(usize),
    Slot(usize, usize),
    Virt(usize),
}

/// Layered construction of a [`CrossedTangle`].
#[derive(Clone, Debug)]
pub struct TangleBuilder {
    width: usize,
    over02: Vec<bool>,
    virt: usize,
    edges: Vec<(Term, Term)>,
    open: Vec<Term>,
    top: Vec<Term>,
}

impl TangleBuilder {
    /// Open strands at every position, remembered for a later closure.
    pub fn strands(width: usize) -> Self {
        let mut b = Self::empty(width);
        b.open = (0..width).map(|_| b.fresh()).collect();
        b.top = b.open.clone();
        b
    }

    /// The tangle of a matching drawn as semicircles above the baseline, with
    /// point `k` placed at abscissa `k^2` so that no three strands meet up to
    /// `n = 12`. With `crossed`, interleaved strands cross once and the strand with the
    /// larger right end passes over; otherwise the matching must be planar.
    pub fn arcs(m: &Matching, crossed: bool) -> Self {
        let mut b = Self::empty(m.n());
        b.open = (0..m.n()).map(|_| b.fresh()).collect();
        let strands = m.strands();
        // crossings met along each strand, keyed by abscissa
        let mut along: Vec<Vec<(BigRational, usize, usize, usize)>> = vec![Vec::new(); strands.len()];
        for (ip, &(a1, b1)) in strands.iter().enumerate() {
            for (iq, &(a2, b2)) in strands.iter().enumerate() {
                if !(a1 < a2 && a2 < b1 && b1 < b2) {
                    continue;
                }
                assert!(crossed, "planar arcs requested for a crossed matching");
                let [a1, b1, a2, b2] = [a1, b1, a2, b2].map(|k| (k * k) as i64);
                let x = BigRational::new((a2 * b2 - a1 * b1).into(), ((a2 + b2) - (a1 + b1)).into());
                let c = b.over02.len();
                b.over02.push(false);
                along[ip].push((x.clone(), c, 2, 0));
                along[iq].push((x, c, 3, 1));
            }
        }
        for (k, &(a, z)) in strands.iter().enumerate() {
            let path = &mut along[k];
            path.sort_by(|u, v| u.0.cmp(&v.0));
            assert!(
                path.windows(2).all(|w| w[0].0 != w[1].0),
                "three strands meet at one point"
            );
            let mut prev = b.open[a - 1];
            for &(_, c, s_in, s_out) in path.iter() {
                b.edges.push((prev, Term::Slot(c, s_in)));
                prev = Term::Slot(c, s_out);
            }
            b.edges.push((prev, b.open[z - 1]));
        }
        b
    }

    fn empty(width: usize) -> Self {
        Self {
            width,
            over02: Vec::new(),
            virt: 0,
            edges: Vec::new(),
            open: Vec::new(),
            top: Vec::new(),
        }
    }

    fn fresh(&mut self) -> Term {
        self.virt += 1;
        Term::Virt(self.virt - 1)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Glues one generator below the current diagram.
    pub fn apply(&mut self, g: Letter) -> Result<&mut Self> {
        let i = g.index();
        if i == 0 || i >= self.width {
            return Err(Error::IndexOutOfRange {
                n: self.width,
                index: i,
            });
        }
        let (l, r) = (self.open[i - 1], self.open[i]);
        match g {
            Letter::T(_) | Letter::TInv(_) => {
                let c = self.over02.len();
                self.over02
                    .push(if matches!(g, Letter::T(_)) { T_OVER02 } else { !T_OVER02 });
                self.edges.push((l, Term::Slot(c, 1)));
                self.edges.push((r, Term::Slot(c, 0)));
                self.open[i - 1] = Term::Slot(c, 2);
                self.open[i] = Term::Slot(c, 3);
            }
            Letter::E(_) => {
                self.edges.push((l, r));
                let (x, y) = (self.fresh(), self.fresh());
                self.edges.push((x, y));
                self.open[i - 1] = x;
                self.open[i] = y;
            }
        }
        Ok(self)
    }

    /// Glues the letters of a word so that the leftmost letter ends up at the
    /// bottom, i.e. the word acts on what is above it.
    pub fn apply_word(&mut self, word: &[Letter]) -> Result<&mut Self> {
        for &g in word.iter().rev() {
            self.apply(g)?;
        }
        Ok(self)
    }

    /// Ends the open strands at the free ends `1..=width`.
    pub fn finish(&self) -> CrossedTangle {
        let mut b = self.clone();
        for k in 0..b.width {
            b.edges.push((b.open[k], Term::End(k)));
        }
        b.contract(b.width)
    }

    /// Joins each bottom strand to the top strand at the same position, going
    /// round the right-hand side.
    pub fn close(&self) -> CrossedTangle {
        assert!(!self.top.is_empty() || self.width == 0, "closure needs open top strands");
        let mut b = self.clone();
        for k in 0..b.width {
            b.edges.push((b.open[k], b.top[k]));
        }
        b.contract(0)
    }

    fn contract(&self, ends: usize) -> CrossedTangle {
        let nc = self.over02.len();
        let id = |t: Term| match t {
            Term::End(k) => Some(k),
            Term::Slot(c, s) => Some(ends + 4 * c + s),
            Term::Virt(_) => None,
        };
        let mut incident: HashMap<Term, Vec<usize>> = HashMap::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            incident.entry(u).or_default().push(e);
            incident.entry(v).or_default().push(e);
        }
        let mut used = vec![false; self.edges.len()];
        let mut link = vec![DEAD; ends + 4 * nc];
        for (&t, es) in &incident {
            let Some(start) = id(t) else { continue };
            assert_eq!(es.len(), 1, "node {t:?} is not 1-valent");
            if used[es[0]] {
                continue;
            }
            let (mut at, mut e) = (t, es[0]);
            loop {
                used[e] = true;
                let (u, v) = self.edges[e];
                let next = if u == at { v } else { u };
                if let Some(j) = id(next) {
                    link[start] = j;
                    link[j] = start;
                    break;
                }
                let pair = &incident[&next];
                assert_eq!(pair.len(), 2, "pass-through node is not 2-valent");
                e = if pair[0] == e { pair[1] } else { pair[0] };
                at = next;
            }
        }
        let mut loops = 0;
        for e0 in 0..self.edges.len() {
            if used[e0] {
                continue;
            }
            loops += 1;
            let (mut at, mut e) = (self.edges[e0].0, e0);
            while !used[e] {
                used[e] = true;
                let (u, v) = self.edges[e];
                at = if u == at { v } else { u };
                let pair = &incident[&at];
                e = if pair[0] == e { pair[1] } else { pair[0] };
            }
        }
        let t = CrossedTangle {
            ends,
            over02: self.over02.clone(),
            alive: vec![true; nc],
            link,
            loops,
        };
        debug_assert!(t.validate().is_ok());
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::matching::enumerate_basis;

    #[test]
    fn planar_arcs_link_their_ends() {
        for m in enumerate_basis(6).unwrap() {
            let t = TangleBuilder::arcs(&m, true).finish();
            t.validate().unwrap();
            assert_eq!(t.crossing_count(), m.crossing_number());
            for &(a, b) in m.strands() {
                assert_eq!(t.partner_of_end(a), b);
            }
        }
    }

    #[test]
    fn no_triple_points_up_to_twelve() {
        for n in [8, 10, 12] {
            for m in enumerate_basis(n).unwrap() {
                TangleBuilder::arcs(&m, true).finish();
            }
        }
    }

    #[test]
    fn contraction_counts_loops() {
        let alpha = Matching::alpha(2).unwrap();
        let mut b = TangleBuilder::arcs(&alpha, false);
        b.apply(Letter::E(1)).unwrap();
        let t = b.finish();
        assert_eq!(t.free_loops(), 1);
        assert_eq!(t.partner_of_end(1), 2);
        let closed = TangleBuilder::strands(3).close();
        assert_eq!(closed.free_loops(), 3);
    }

    #[test]
    fn smoothing_a_curl() {
        let alpha = Matching::alpha(2).unwrap();
        let mut b = TangleBuilder::arcs(&alpha, false);
        b.apply(Letter::T(1)).unwrap();
        let t = b.finish();
        let cap = t.smoothed(0, 0);
        assert_eq!((cap.free_loops(), cap.crossing_count()), (1, 0));
        let id = t.smoothed(0, 1);
        assert_eq!((id.free_loops(), id.crossing_count()), (0, 0));
        cap.validate().unwrap();
        id.validate().unwrap();
    }
}
