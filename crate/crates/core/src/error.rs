use core::fmt;

use crate::covers::{Inadmissible, SixTuple};
use crate::field::FVec2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Moduli must be primes in `2..=31`.
    InvalidModulus(u32),
    SingularMatrix,
    NotAdmissible(Inadmissible),
    /// The weighted branch sum of a character is not divisible by `n`.
    NonIntegralSheaf { chi: FVec2 },
    /// A symmetry generator maps a tuple outside the set being partitioned.
    NotClosed { tuple: SixTuple },
    /// The two curves do not meet, so there is no local ideal there.
    NotIncident(usize, usize),
    /// Every generator of a local ideal shares a monomial factor.
    CommonFactor,
    EmptyBasis,
    /// The canonical image is not a surface in `P³`.
    GeometricGenus { found: u32 },
    /// `K_Y + L_χ` is not trivial, so the basis section is not a pure
    /// ramification monomial.
    TwistedSection { chi: FVec2 },
    ResidueCount { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(n) => write!(f, "modulus {n} is not a prime in 2..=31"),
            Error::SingularMatrix => f.write_str("matrix is not invertible"),
            Error::NotAdmissible(why) => write!(f, "tuple is not admissible: {why}"),
            Error::NonIntegralSheaf { chi } => {
                write!(f, "branch sum of character {chi} is not divisible by the modulus")
            }
            Error::NotClosed { tuple } => {
                write!(f, "symmetry maps {tuple} outside of the input set")
            }
            Error::NotIncident(i, j) => write!(f, "curves {i} and {j} do not intersect"),
            Error::CommonFactor => f.write_str("local ideal has a common monomial factor"),
            Error::EmptyBasis => f.write_str("canonical system is empty"),
            Error::GeometricGenus { found } => {
                write!(f, "canonical image needs p_g = 4, found p_g = {found}")
            }
            Error::TwistedSection { chi } => {
                write!(f, "K_Y + L{chi} is not trivial; section is not a ramification monomial")
            }
            Error::ResidueCount { expected, found } => {
                write!(f, "expected {expected} residues, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

impl From<Inadmissible> for Error {
    fn from(why: Inadmissible) -> Self {
        Error::NotAdmissible(why)
    }
}
