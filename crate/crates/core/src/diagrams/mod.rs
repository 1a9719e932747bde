//! The algebra on its tangle module: matchings, reduced words, skein
//! reduction, generator matrices, the rotation, the trace and the scalar
//! product.

pub mod matching;
pub mod matrix;
pub mod relations;
pub mod skein;
pub mod tangle;
pub mod trace;

pub use matching::{basis_size, check_even, enumerate_basis, parse_word, Letter, Matching, ReducedWord};
pub use matrix::{column_path, generator_matrix, sigma_matrix, word_matrix, ColumnPath, Generators, OpMatrix, COLUMN_PATHS};
pub use skein::{rewrite_order, skein_reduce, FirstBad, RewriteOrder, SeededRandom, REWRITE_ORDERS};
pub use tangle::{CrossedTangle, TangleBuilder};
pub use trace::{markov_checks, markov_trace, markov_trace_with, scalar_product, star};

use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// A finite combination of basis tangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Matching, Scalar>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: Matching) -> Self {
        let mut e = Self::zero(m.n());
        e.add_term(m, Scalar::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, m: Matching, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, m: &Matching) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests;
