use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A perfect matching of the points `1..=n`, stored as strands `(a, b)` with
/// `a < b`, sorted by `a`.
///
/// It labels a basis tangle of the module. Crossings are implicit: when
/// strands `(a1, b1)` and `(a2, b2)` interleave with `b1 < b2`, the strand
/// ending further right passes over.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    strands: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut strands: Vec<(usize, usize)>) -> Result<Self> {
        for s in strands.iter_mut() {
            if s.0 > s.1 {
                *s = (s.1, s.0);
            }
        }
        strands.sort();
        let n = strands.len() * 2;
        let mut seen = vec![false; n + 1];
        for &(a, b) in &strands {
            for x in [a, b] {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidMatching(format!("{strands:?}")));
                }
                seen[x] = true;
            }
        }
        Ok(Self { strands })
    }

    pub fn n(&self) -> usize {
        2 * self.strands.len()
    }

    pub fn strands(&self) -> &[(usize, usize)] {
        &self.strands
    }

    /// The point joined to `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.strands
            .iter()
            .find_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("point out of range")
    }

    /// `partner` table indexed by point (index 0 unused).
    pub fn partner_table(&self) -> Vec<usize> {
        let mut t = vec![0; self.n() + 1];
        for &(a, b) in &self.strands {
            t[a] = b;
            t[b] = a;
        }
        t
    }

    pub fn from_partner_table(t: &[usize]) -> Self {
        let strands = (1..t.len()).filter(|&i| i < t[i]).map(|i| (i, t[i])).collect();
        Self { strands }
    }

    /// `(1,2), (3,4), ...`: the tangle of the minimal projector `e1 e3 ... e_{n-1}`.
    pub fn alpha(n: usize) -> Result<Self> {
        check_even(n)?;
        Ok(Self {
            strands: (0..n / 2).map(|k| (2 * k + 1, 2 * k + 2)).collect(),
        })
    }

    /// `(i, n/2 + i)` for `1 <= i <= n/2`.
    pub fn maximally_crossed(n: usize) -> Result<Self> {
        check_even(n)?;
        let h = n / 2;
        Ok(Self {
            strands: (1..=h).map(|i| (i, h + i)).collect(),
        })
    }

    pub fn crosses(s: (usize, usize), t: (usize, usize)) -> bool {
        (s.0 < t.0 && t.0 < s.1 && s.1 < t.1) || (t.0 < s.0 && s.0 < t.1 && t.1 < s.1)
    }

    pub fn crossing_number(&self) -> usize {
        let s = &self.strands;
        (0..s.len())
            .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| Self::crosses(s[i], s[j]))
            .count()
    }

    /// Whether `i` and `i + 1` are joined by a strand.
    pub fn connects(&self, i: usize, j: usize) -> bool {
        self.partner(i) == j
    }

    /// Points `j < k` are matched when no strand joins two points of `j..=k`.
    pub fn matched(&self, j: usize, k: usize) -> bool {
        let t = self.partner_table();
        !(j..=k).any(|x| t[x] > x && t[x] <= k)
    }

    /// Block of the point pair `(i, i+1)`: 0 when joined, 1 when the two
    /// strands cross, 2 otherwise.
    pub fn block(&self, i: usize) -> usize {
        let t = self.partner_table();
        if t[i] == i + 1 {
            return 0;
        }
        let s = (i.min(t[i]), i.max(t[i]));
        let u = ((i + 1).min(t[i + 1]), (i + 1).max(t[i + 1]));
        if Self::crosses(s, u) {
            1
        } else {
            2
        }
    }

    /// Relabels every point `i -> i - 1` cyclically (`1 -> n`).
    pub fn rotated(&self) -> Self {
        let n = self.n();
        let strands = self
            .strands
            .iter()
            .map(|&(a, b)| {
                let f = |x: usize| if x == 1 { n } else { x - 1 };
                (f(a), f(b))
            })
            .collect();
        Self::new(strands).expect("rotation preserves matchings")
    }

    /// The same matching with the two endpoints at `i`, `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Self {
        let mut t = self.partner_table();
        let (x, y) = (t[i], t[i + 1]);
        if x == i + 1 {
            return self.clone();
        }
        t[i] = y;
        t[y] = i;
        t[i + 1] = x;
        t[x] = i + 1;
        Self::from_partner_table(&t)
    }

    pub fn to_pairs(&self) -> Vec<[usize; 2]> {
        self.strands.iter().map(|&(a, b)| [a, b]).collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (a, b)) in self.strands.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn check_even(n: usize) -> Result<()> {
    if n < 2 || n % 2 == 1 {
        Err(Error::OddSize(n))
    } else {
        Ok(())
    }
}

/// All perfect matchings of `1..=n`, lexicographic on the sorted strand
/// sequence. There are `(n-1)!!` of them.
pub fn enumerate_basis(n: usize) -> Result<Vec<Matching>> {
    check_even(n)?;
    fn rec(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching {
                strands: acc.clone(),
            });
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free.remove(k);
            acc.push((a, b));
            rec(free, acc, out);
            acc.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// A basis word `(t^-1_{c_{n-1}} ... e_{n-1}) ... (t^-1_{c_3} t^-1_2 e_3) e_1`,
/// encoded by the descents `c_3, c_5, ..., c_{n-1}` with `1 <= c_{2p+1} <= 2p+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    descents: Vec<usize>,
}

/// A letter of a word in the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    T(usize),
    TInv(usize),
    E(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::T(i) | Letter::TInv(i) | Letter::E(i) => i,
        }
    }

    /// Hermitian conjugate: `t <-> t^-1`, `e -> e`.
    pub fn star(self) -> Letter {
        match self {
            Letter::T(i) => Letter::TInv(i),
            Letter::TInv(i) => Letter::T(i),
            Letter::E(i) => Letter::E(i),
        }
    }

    /// Parses `t2`, `T2`, `ti2`, `t2^-1`, `e3`.
    pub fn parse(s: &str) -> Result<Letter> {
        let bad = || Error::InvalidWord(s.to_string());
        let s = s.trim();
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, idx) = body.split_at(1.min(body.len()));
        let (kind, idx) = match idx.strip_prefix('i') {
            Some(rest) if kind == "t" => ("ti", rest),
            _ => (kind, idx),
        };
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match (kind, inv) {
            ("t", false) => Ok(Letter::T(i)),
            ("t", true) | ("ti", false) | ("T", false) => Ok(Letter::TInv(i)),
            ("e", false) => Ok(Letter::E(i)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "t{i}"),
            Letter::TInv(i) => write!(f, "t{i}^-1"),
            Letter::E(i) => write!(f, "e{i}"),
        }
    }
}

/// Parses a whitespace- or comma-separated word such as `"t1 e2 t3^-1"`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.split(|c: char| c.is_whitespace() || c == ',' || c == '.')
        .filter(|t| !t.is_empty())
        .map(Letter::parse)
        .collect()
}

impl ReducedWord {
    pub fn new(n: usize, descents: Vec<usize>) -> Result<Self> {
        check_even(n)?;
        if descents.len() != n / 2 - 1 {
            return Err(Error::InvalidWord(format!(
                "expected {} descents for n = {n}",
                n / 2 - 1
            )));
        }
        for (k, &c) in descents.iter().enumerate() {
            let top = 2 * k + 3;
            if c == 0 || c > top {
                return Err(Error::InvalidWord(format!("c_{top} = {c} out of 1..={top}")));
            }
        }
        Ok(Self { n, descents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    /// The `t^-1` letters of the word, leftmost first. The word equals this
    /// product applied to the minimal projector.
    pub fn braid_letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (k, &c) in self.descents.iter().enumerate().rev() {
            let top = 2 * k + 3;
            out.extend((c..top).map(Letter::TInv));
        }
        out
    }

    /// The full word including the `e` letters, leftmost first.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (k, &c) in self.descents.iter().enumerate().rev() {
            let top = 2 * k + 3;
            out.extend((c..top).map(Letter::TInv));
            out.push(Letter::E(top));
        }
        out.push(Letter::E(1));
        out
    }

    /// Number of braid letters.
    pub fn length(&self) -> usize {
        self.braid_letters().len()
    }

    /// Tangle of the word: recursively push the endpoints `>= c` of the
    /// smaller tangle one unit right and lay the strand `(c, n)` on top.
    pub fn to_matching(&self) -> Matching {
        let mut strands = vec![(1usize, 2usize)];
        for (k, &c) in self.descents.iter().enumerate() {
            let m = 2 * k + 4;
            let push = |x: usize| if x >= c { x + 1 } else { x };
            strands = strands.iter().map(|&(a, b)| (push(a), push(b))).collect();
            strands.push((c, m));
        }
        Matching::new(strands).expect("insertion yields a matching")
    }

    /// Inverse of [`ReducedWord::to_matching`].
    pub fn from_matching(m: &Matching) -> Self {
        let n = m.n();
        let mut descents = Vec::new();
        let mut cur = m.clone();
        while cur.n() > 2 {
            let top = cur.n();
            let c = cur.partner(top);
            descents.push(c);
            let pull = |x: usize| if x > c { x - 1 } else { x };
            let strands = cur
                .strands()
                .iter()
                .filter(|&&(_, b)| b != top)
                .map(|&(a, b)| (pull(a), pull(b)))
                .collect();
            cur = Matching::new(strands).expect("removal yields a matching");
        }
        descents.reverse();
        Self { n, descents }
    }

    /// Every reduced word for `n`, in the order of their matchings.
    pub fn all(n: usize) -> Result<Vec<ReducedWord>> {
        Ok(enumerate_basis(n)?.iter().map(Self::from_matching).collect())
    }
}

/// `(n-1)!!`
pub fn basis_size(n: usize) -> usize {
    (1..n).step_by(2).product::<usize>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &[(usize, usize)]) -> Matching {
        Matching::new(s.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_basis(2).unwrap(), vec![m(&[(1, 2)])]);
        assert_eq!(
            enumerate_basis(4).unwrap(),
            vec![m(&[(1, 2), (3, 4)]), m(&[(1, 3), (2, 4)]), m(&[(1, 4), (2, 3)])]
        );
        assert!(matches!(enumerate_basis(5), Err(Error::OddSize(5))));
    }

    /// Independent count: choose the partner of the smallest free point.
    fn brute_count(n: usize) -> usize {
        if n == 0 {
            1
        } else {
            (n - 1) * brute_count(n - 2)
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        for n in [2, 4, 6, 8] {
            let b = enumerate_basis(n).unwrap();
            assert_eq!(b.len(), brute_count(n));
            assert_eq!(b.len(), basis_size(n));
            assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(enumerate_basis(6).unwrap().len(), 15);
    }

    #[test]
    fn crossing_numbers() {
        assert_eq!(m(&[(1, 2), (3, 4)]).crossing_number(), 0);
        assert_eq!(m(&[(1, 3), (2, 4)]).crossing_number(), 1);
        assert_eq!(Matching::maximally_crossed(6).unwrap().crossing_number(), 3);
    }

    #[test]
    fn maximally_crossed_states() {
        assert_eq!(Matching::maximally_crossed(4).unwrap(), m(&[(1, 3), (2, 4)]));
        assert_eq!(Matching::maximally_crossed(2).unwrap(), m(&[(1, 2)]));
        assert_eq!(
            Matching::maximally_crossed(6).unwrap(),
            m(&[(1, 4), (2, 5), (3, 6)])
        );
    }

    #[test]
    fn word_insertion_rule() {
        let w = |c| ReducedWord::new(4, vec![c]).unwrap().to_matching();
        assert_eq!(w(3), m(&[(1, 2), (3, 4)]));
        assert_eq!(w(2), m(&[(1, 3), (2, 4)]));
        assert_eq!(w(1), m(&[(1, 4), (2, 3)]));
        assert!(ReducedWord::new(4, vec![4]).is_err());
    }

    #[test]
    fn words_biject_with_matchings() {
        for n in [2, 4, 6, 8] {
            let mut seen = std::collections::HashSet::new();
            for mt in enumerate_basis(n).unwrap() {
                let w = ReducedWord::from_matching(&mt);
                assert_eq!(w.to_matching(), mt);
                assert!(seen.insert(w));
            }
        }
    }

    #[test]
    fn blocks_and_matched_points() {
        let pi = m(&[(1, 3), (2, 4)]);
        assert_eq!(pi.block(1), 1);
        assert_eq!(pi.block(2), 1);
        assert_eq!(m(&[(1, 4), (2, 3)]).block(1), 2);
        assert_eq!(m(&[(1, 2), (3, 4)]).block(1), 0);
        assert!(pi.matched(1, 2));
        assert!(!m(&[(1, 2), (3, 4)]).matched(1, 2));
        assert!(m(&[(1, 4), (2, 3)]).matched(1, 2));
        assert!(!m(&[(1, 4), (2, 3)]).matched(1, 4));
    }

    #[test]
    fn letters_parse() {
        assert_eq!(
            parse_word("t1 t2^-1 e3").unwrap(),
            vec![Letter::T(1), Letter::TInv(2), Letter::E(3)]
        );
        assert!(parse_word("x1").is_err());
    }
}
