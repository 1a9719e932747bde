use super::matching::{check_even, enumerate_basis, Letter, Matching, ReducedWord};
use super::skein::{skein_reduce, FirstBad};
use super::tangle::{CrossedTangle, TangleBuilder};
use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalars::{AlgebraParams, ParamNames, Scalar};
use rayon::prelude::*;
use serde_json::{json, Value};

/// A square matrix indexed by a list of matchings. Column `j` holds the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpMatrix {
    n: usize,
    label: String,
    basis: Vec<Matching>,
    entries: Vec<Vec<Scalar>>,
}

impl OpMatrix {
    pub fn new(n: usize, label: impl Into<String>, basis: Vec<Matching>, entries: Vec<Vec<Scalar>>) -> Self {
        assert_eq!(entries.len(), basis.len());
        assert!(entries.iter().all(|r| r.len() == basis.len()));
        Self {
            n,
            label: label.into(),
            basis,
            entries,
        }
    }

    pub fn zero(n: usize, basis: Vec<Matching>) -> Self {
        let d = basis.len();
        Self::new(n, "0", basis, vec![vec![Scalar::zero(); d]; d])
    }

    pub fn identity(n: usize, basis: Vec<Matching>) -> Self {
        let mut m = Self::zero(n, basis);
        for i in 0..m.dim() {
            m.entries[i][i] = Scalar::one();
        }
        m.label = "1".into();
        m
    }

    pub fn from_columns(n: usize, label: impl Into<String>, basis: Vec<Matching>, cols: &[AlgebraElement]) -> Self {
        let d = basis.len();
        let mut entries = vec![vec![Scalar::zero(); d]; d];
        for (j, col) in cols.iter().enumerate() {
            for (m, c) in col.terms() {
                let i = basis.iter().position(|b| b == m).expect("result lies in the basis");
                entries[i][j] = c.clone();
            }
        }
        Self::new(n, label, basis, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn basis(&self) -> &[Matching] {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r][c] = v;
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    pub fn column(&self, c: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero(self.n);
        for (r, m) in self.basis.iter().enumerate() {
            e.add_term(m.clone(), self.entries[r][c].clone());
        }
        e
    }

    pub fn apply(&self, v: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for (m, c) in v.terms() {
            let j = self.index_of(m).expect("vector lies in the basis");
            for (r, b) in self.basis.iter().enumerate() {
                let x = &self.entries[r][j];
                if !x.is_zero() {
                    out.add_term(b.clone(), x * c);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &OpMatrix) -> OpMatrix {
        let d = self.dim();
        let entries = (0..d)
            .into_par_iter()
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut s = Scalar::zero();
                        for k in 0..d {
                            let (x, y) = (&self.entries[i][k], &other.entries[k][j]);
                            if !x.is_zero() && !y.is_zero() {
                                s = &s + &(x * y);
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Self::new(self.n, format!("{} {}", self.label, other.label), self.basis.clone(), entries)
    }

    pub fn product(ms: &[&OpMatrix]) -> OpMatrix {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = acc.mul(m);
        }
        acc
    }

    fn zip(&self, other: &OpMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar, label: String) -> OpMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| f(x, y)).collect())
            .collect();
        Self::new(self.n, label, self.basis.clone(), entries)
    }

    pub fn add(&self, other: &OpMatrix) -> OpMatrix {
        self.zip(other, |x, y| x + y, format!("{} + {}", self.label, other.label))
    }

    pub fn sub(&self, other: &OpMatrix) -> OpMatrix {
        self.zip(other, |x, y| x - y, format!("{} - {}", self.label, other.label))
    }

    pub fn scale(&self, c: &Scalar) -> OpMatrix {
        self.map(|x| x * c)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> OpMatrix {
        let entries = self.entries.iter().map(|r| r.iter().map(&f).collect()).collect();
        Self::new(self.n, self.label.clone(), self.basis.clone(), entries)
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<OpMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.n, self.label.clone(), self.basis.clone(), entries))
    }

    pub fn transpose(&self) -> OpMatrix {
        let d = self.dim();
        let entries = (0..d).map(|i| (0..d).map(|j| self.entries[j][i].clone()).collect()).collect();
        Self::new(self.n, format!("({})^T", self.label), self.basis.clone(), entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    /// Positions `(row, column)` where two matrices differ.
    pub fn diff(&self, other: &OpMatrix) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.entries[i][j] != other.entries[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self, names: ParamNames) -> Value {
        json!({
            "n": self.n,
            "generator": self.label,
            "basis": self.basis.iter().map(Matching::to_pairs).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| x.display_with(names)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// How the diagram of `word * pi` is assembled before reduction.
pub trait ColumnPath: Sync + Send {
    fn name(&self) -> &'static str;
    fn diagram(&self, pi: &Matching, word: &[Letter]) -> Result<CrossedTangle>;
}

/// The basis tangle drawn with its crossings, with the word glued below.
#[derive(Clone, Copy, Debug, Default)]
pub struct CrossedArcs;

impl ColumnPath for CrossedArcs {
    fn name(&self) -> &'static str {
        "crossed-arcs"
    }
    fn diagram(&self, pi: &Matching, word: &[Letter]) -> Result<CrossedTangle> {
        let mut b = TangleBuilder::arcs(pi, true);
        b.apply_word(word)?;
        Ok(b.finish())
    }
}

/// The minimal projector with the braid letters of the reduced word of the
/// basis vector, then the word, glued below.
#[derive(Clone, Copy, Debug, Default)]
pub struct StackedWord;

impl ColumnPath for StackedWord {
    fn name(&self) -> &'static str {
        "stacked-word"
    }
    fn diagram(&self, pi: &Matching, word: &[Letter]) -> Result<CrossedTangle> {
        let mut b = TangleBuilder::arcs(&Matching::alpha(pi.n())?, false);
        b.apply_word(&ReducedWord::from_matching(pi).braid_letters())?;
        b.apply_word(word)?;
        Ok(b.finish())
    }
}

pub const COLUMN_PATHS: [&str; 2] = ["crossed-arcs", "stacked-word"];

pub fn column_path(name: &str) -> Option<Box<dyn ColumnPath>> {
    match name {
        "crossed-arcs" => Some(Box::new(CrossedArcs)),
        "stacked-word" => Some(Box::new(StackedWord)),
        _ => None,
    }
}

fn label_of(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

/// Matrix of the left action of a word, one reduced diagram per column.
pub fn word_matrix(n: usize, word: &[Letter], params: &AlgebraParams, path: &dyn ColumnPath) -> Result<OpMatrix> {
    let basis = enumerate_basis(n)?;
    for g in word {
        if g.index() == 0 || g.index() >= n {
            return Err(Error::IndexOutOfRange { n, index: g.index() });
        }
    }
    let cols = basis
        .par_iter()
        .map(|pi| Ok(skein_reduce(&path.diagram(pi, word)?, params, &mut FirstBad)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OpMatrix::from_columns(n, label_of(word), basis, &cols))
}

pub fn generator_matrix(n: usize, g: Letter, params: &AlgebraParams) -> Result<OpMatrix> {
    word_matrix(n, &[g], params, &CrossedArcs)
}

/// All generator matrices for one `n`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub n: usize,
    pub params: AlgebraParams,
    pub t: Vec<OpMatrix>,
    pub tinv: Vec<OpMatrix>,
    pub e: Vec<OpMatrix>,
}

impl Generators {
    pub fn build(n: usize, params: &AlgebraParams) -> Result<Self> {
        check_even(n)?;
        let make = |f: fn(usize) -> Letter| -> Result<Vec<OpMatrix>> {
            (1..n).map(|i| generator_matrix(n, f(i), params)).collect()
        };
        Ok(Self {
            n,
            params: params.clone(),
            t: make(Letter::T)?,
            tinv: make(Letter::TInv)?,
            e: make(Letter::E)?,
        })
    }

    pub fn basis(&self) -> Vec<Matching> {
        enumerate_basis(self.n).expect("n was checked")
    }

    pub fn identity(&self) -> OpMatrix {
        OpMatrix::identity(self.n, self.basis())
    }

    pub fn get(&self, g: Letter) -> &OpMatrix {
        match g {
            Letter::T(i) => &self.t[i - 1],
            Letter::TInv(i) => &self.tinv[i - 1],
            Letter::E(i) => &self.e[i - 1],
        }
    }

    /// Product of the generator matrices of a word.
    pub fn word(&self, word: &[Letter]) -> Result<OpMatrix> {
        let mut acc = self.identity();
        for &g in word {
            if g.index() == 0 || g.index() >= self.n {
                return Err(Error::IndexOutOfRange { n: self.n, index: g.index() });
            }
            acc = acc.mul(self.get(g));
        }
        Ok(acc.with_label(label_of(word)))
    }

    /// The same matrices read in the mirror algebra: `t` and `t^-1` swap
    /// and the parameters become `(tau, 1/a, -eps)`.
    pub fn mirrored(&self) -> Self {
        Self {
            n: self.n,
            params: self.params.mirrored(),
            t: self.tinv.clone(),
            tinv: self.t.clone(),
            e: self.e.clone(),
        }
    }

    /// `a t_{n-1}^-1 ... t_1^-1`
    pub fn sigma(&self) -> OpMatrix {
        let word: Vec<Letter> = (1..self.n).rev().map(Letter::TInv).collect();
        self.word(&word).expect("indices in range").scale(&self.params.a).with_label("sigma")
    }
}

pub fn sigma_matrix(n: usize, params: &AlgebraParams) -> Result<OpMatrix> {
    Ok(Generators::build(n, params)?.sigma())
}
