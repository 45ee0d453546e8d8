use thiserror::Error;

/// Errors raised by the analysis engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("multi-index of length zero has no class")]
    ZeroOrder,
    #[error("system is not in solved form: duplicate leading jet {0}")]
    NotSolvedForm(String),
    #[error("completion did not terminate within {0} rounds")]
    MaxRoundsExceeded(usize),
    #[error("coordinates drawn from seed {0} are not generic; retry with another seed")]
    NonGenericSeed(u64),
    #[error("system is not involutive")]
    NotInvolutive,
    #[error("localized system at split {0} is not of finite type")]
    NonFullClasses(usize),
    #[error("ideal quotient by the zero polynomial")]
    ZeroDivisorInput,
    #[error("dual space is infinite dimensional (codimension {codim} < {n})")]
    InfiniteDimensional { codim: usize, n: usize },
    #[error("characteristic polynomial has an irreducible factor of degree {degree} over the base field: {factor}")]
    NonRationalEigenvalue { degree: usize, factor: String },
    #[error("subspace is not invariant under the derivations")]
    NotInvariant,
    #[error("operation requires a parameter-free system over the rationals")]
    ParametersUnsupported,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
