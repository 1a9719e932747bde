//! Exact construction of the Birman-Wenzl-Murakami algebra on its tangle
//! module, its dual representation on polynomials vanishing at q-shifted
//! triples, and the Brauer rational limit.

pub mod brauer;
pub mod commands;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod polyrep;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{AlgebraParams, Mode, ParamNames, Scalar};
