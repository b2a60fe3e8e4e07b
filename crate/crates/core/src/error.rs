use std::fmt;

use thiserror::Error;

/// Resource limits that abort a computation instead of letting it run open-ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapKind {
    /// Degree of a squarefree part handed to the modular factorizer.
    FactorDegree { degree: usize, cap: usize },
    /// Reduction steps spent inside one Buchberger run.
    GroebnerSteps { cap: usize },
    /// Unknown coefficients in an ansatz.
    AnsatzUnknowns { count: usize, cap: usize },
    /// Order or degree bound used to size an ansatz.
    Bound { value: u64, cap: u64 },
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapKind::FactorDegree { degree, cap } => {
                write!(f, "factorization degree {degree} exceeds cap {cap}")
            }
            CapKind::GroebnerSteps { cap } => {
                write!(f, "Groebner basis exceeded {cap} reduction steps")
            }
            CapKind::AnsatzUnknowns { count, cap } => {
                write!(f, "ansatz needs {count} unknowns, cap is {cap}")
            }
            CapKind::Bound { value, cap } => write!(f, "bound {value} exceeds cap {cap}"),
        }
    }
}

/// Position-carrying syntax error from the equation parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub hint: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if let Some(hint) = &self.hint {
            write!(f, " (hint: {hint})")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("order of the zero function is undefined")]
    UndefinedOrder,
    #[error("equation does not involve y or any of its derivatives")]
    NotDifferentialEquation,
    #[error("equation is identically zero")]
    DegenerateEquation,
    #[error("indicial polynomial is identically zero")]
    ZeroIndicial,
    #[error("equation is critical: the indicial polynomial at infinity vanishes")]
    CriticalEquation,
    #[error("exponent vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("resource cap exceeded: {0}")]
    Cap(CapKind),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: solution family failed verification: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::Cap(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
