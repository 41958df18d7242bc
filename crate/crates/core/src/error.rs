use thiserror::Error;

/// A violated precondition of the companion-homotopy constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyViolation {
    NotMonic,
    DegreeMismatch { a: usize, b: usize },
    /// `A(0) != B(0)`: the products of the roots differ.
    RootProductMismatch,
    /// `A(0) = 0`: some root is zero.
    ZeroRoot,
    /// `A(1) != B(1)`: the products of `(1 - root)` differ.
    OneMinusRootProductMismatch,
    /// `A(1) = 0`: some root equals one.
    UnitRoot,
}

impl std::fmt::Display for HomotopyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomotopyViolation::NotMonic => write!(f, "polynomials must be monic"),
            HomotopyViolation::DegreeMismatch { a, b } => {
                write!(f, "degrees differ ({a} vs {b})")
            }
            HomotopyViolation::RootProductMismatch => {
                write!(f, "product constraint A(0) = B(0) fails")
            }
            HomotopyViolation::ZeroRoot => write!(f, "A(0) = 0 (a root equals 0)"),
            HomotopyViolation::OneMinusRootProductMismatch => {
                write!(f, "product constraint A(1) = B(1) fails")
            }
            HomotopyViolation::UnitRoot => write!(f, "A(1) = 0 (a root equals 1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the factorization limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("matrices {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("matrix {index} is not invertible over the coefficient ring (det = {det})")]
    NotInvertible { index: usize, det: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("{0} is not a finite extension of {1}")]
    NotExtension(String, String),
    #[error("symbol has a zero coordinate")]
    ZeroCoordinate,
    #[error("no complete invariant available: {0}")]
    Unsupported(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("companion homotopy preconditions fail: {}", join(.0))]
    Homotopy(Vec<HomotopyViolation>),
}

fn join(v: &[HomotopyViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
