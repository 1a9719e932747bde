//! Named batch commands behind a common trait, looked up at run time.
//!
//! Every command turns a [`RunConfig`] into a [`Report`]. The registry is a
//! static table, so a front end only needs [`lookup`] or [`run`].

mod suite;

use crate::diagrams::{basis_size, check_even};
use crate::error::{Error, Result};
use crate::polyrep::{tbar_route, TbarRoute};
use crate::report::Report;
use crate::scalars::{parse_scalar, Mode, Scalar};

/// Largest basis the driver will build, reached at `n = 12`.
pub const MAX_BASIS: usize = 10_395;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Random specializations per sampled identity.
    pub samples: usize,
    /// `E'` normalization as a scalar string; `1` when absent.
    pub c_prime: Option<String>,
    /// Name of the dual braid generator strategy.
    pub route: String,
    pub max_n: usize,
    /// Positional arguments after the command name.
    pub args: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 4,
            mode: Mode::Bmw,
            seed: 0,
            samples: 20,
            c_prime: None,
            route: "minus-p".into(),
            max_n: 8,
            args: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn new(n: usize, mode: Mode) -> Self {
        Self { n, mode, ..Self::default() }
    }

    pub fn route(&self) -> Result<Box<dyn TbarRoute>> {
        tbar_route(&self.route).ok_or_else(|| Error::UnknownStrategy(self.route.clone()))
    }

    pub fn c_prime(&self) -> Result<Scalar> {
        match &self.c_prime {
            Some(s) => parse_scalar(s, self.mode.names()),
            None => Ok(Scalar::one()),
        }
    }

    /// Even `n`, inside both the `--max-n` guard and the hard basis cap.
    pub fn validate(&self) -> Result<()> {
        check_even(self.n)?;
        if self.n > self.max_n {
            return Err(Error::ResourceLimit(format!("n = {} exceeds --max-n {}", self.n, self.max_n)));
        }
        if self.n > 12 || basis_size(self.n) > MAX_BASIS {
            return Err(Error::ResourceLimit(format!("basis for n = {} exceeds {MAX_BASIS} elements", self.n)));
        }
        Ok(())
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn modes(&self) -> &'static [Mode] {
        &[Mode::Bmw, Mode::Brauer]
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()>;
}

static COMMANDS: &[&dyn Command] = &[
    &suite::Relations,
    &suite::Basis,
    &suite::Duality,
    &suite::PropertyP,
    &suite::Pfaffian,
    &suite::Cyclic,
    &suite::SnFactorization,
    &suite::TlCollapse,
    &suite::YangBaxter,
    &suite::Trace,
    &suite::Affine,
    &suite::HighestMonomial,
    &suite::Projector,
];

pub fn registry() -> &'static [&'static dyn Command] {
    COMMANDS
}

pub fn lookup(name: &str) -> Option<&'static dyn Command> {
    COMMANDS.iter().copied().find(|c| c.name() == name)
}

/// Validates the configuration and runs the named command.
pub fn run(name: &str, cfg: &RunConfig) -> Result<Report> {
    let cmd = lookup(name).ok_or_else(|| Error::UnknownCommand(name.to_string()))?;
    cfg.validate()?;
    if !cmd.modes().contains(&cfg.mode) {
        return Err(Error::Unsupported(format!("{name} in {} mode", cfg.mode)));
    }
    let mut report = Report::new(name, cfg.n, cfg.mode.to_string());
    cmd.run(cfg, &mut report)?;
    Ok(report)
}

#[cfg(test)]
mod tests;
