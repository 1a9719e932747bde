use super::Scalar;
use serde::{Deserialize, Serialize};

/// Which algebra the two formal parameters describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Bmw,
    Brauer,
}

impl Mode {
    pub fn names(self) -> ParamNames {
        match self {
            Mode::Bmw => ParamNames::QP,
            Mode::Brauer => ParamNames::BC,
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Bmw => "bmw",
            Mode::Brauer => "brauer",
        })
    }
}

/// Display names bound to the abstract parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamNames(pub &'static str, pub &'static str);

impl ParamNames {
    pub const QP: ParamNames = ParamNames("q", "p");
    pub const BC: ParamNames = ParamNames("b", "c");

    /// Name of the polynomial variables that go with these parameters.
    pub fn variable(self) -> &'static str {
        if self == Self::BC {
            "u"
        } else {
            "z"
        }
    }
}

/// The constants `a`, `tau`, `epsilon` of the algebra.
///
/// In bmw mode `a = p^-1 q^-2`, `epsilon = p - p^-1` and
/// `tau = 1 - (a - a^-1)/epsilon`. In brauer mode `a = 1`, `epsilon = 0` and
/// `tau = 2(1 + b/c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    pub a: Scalar,
    pub tau: Scalar,
    pub epsilon: Scalar,
    pub mode: Mode,
}

impl AlgebraParams {
    pub fn bmw() -> Self {
        let (q, p) = (Scalar::x(), Scalar::y());
        let a = p.pow(-1) * q.pow(-2);
        let epsilon = &p - &p.pow(-1);
        let tau = Scalar::one() - (&a - &a.pow(-1)) / &epsilon;
        Self {
            a,
            tau,
            epsilon,
            mode: Mode::Bmw,
        }
    }

    pub fn brauer() -> Self {
        let (b, c) = (Scalar::x(), Scalar::y());
        Self {
            a: Scalar::one(),
            tau: Scalar::integer(2) * (Scalar::one() + b / c),
            epsilon: Scalar::zero(),
            mode: Mode::Brauer,
        }
    }

    pub fn for_mode(mode: Mode) -> Self {
        match mode {
            Mode::Bmw => Self::bmw(),
            Mode::Brauer => Self::brauer(),
        }
    }

    /// Parameters of the image under `t -> t^-1`: `(tau, a^-1, -epsilon)`.
    pub fn mirrored(&self) -> Self {
        Self {
            a: self.a.pow(-1),
            tau: self.tau.clone(),
            epsilon: -&self.epsilon,
            mode: self.mode,
        }
    }

    pub fn names(&self) -> ParamNames {
        self.mode.names()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn tau_closed_form() {
        let (q, p) = (Scalar::x(), Scalar::y());
        let pr = AlgebraParams::bmw();
        let closed = (&p * &q - p.pow(-1) * q.pow(-1)) * (&q + q.pow(-1)) / (&p - p.pow(-1));
        assert_eq!(pr.tau, closed);
    }

    #[test]
    fn tau_epsilon_identity() {
        let pr = AlgebraParams::bmw();
        assert_eq!(
            &pr.tau * &pr.epsilon,
            &pr.epsilon - &pr.a + pr.a.pow(-1)
        );
    }

    #[test]
    fn cyclic_point_values() {
        let pr = AlgebraParams::bmw();
        let q0 = BigRational::from_integer(3.into());
        let p0 = BigRational::new(1.into(), 9.into());
        assert_eq!(pr.a.specialize(&q0, &p0).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(pr.tau.specialize(&q0, &p0).unwrap(), BigRational::from_integer(1.into()));
    }
}
