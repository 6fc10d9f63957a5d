use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("cannot homogenize a polynomial of degree {degree} to degree {target}")]
    HomogenizationDegree { degree: usize, target: usize },
    #[error("degree {0} is below the supported minimum of 2")]
    DegreeTooSmall(usize),
    #[error("form denominator must have degree {numerator} + 2, got {denominator}")]
    FormDegree { numerator: usize, denominator: usize },
    #[error("refused: {0}")]
    Refused(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
