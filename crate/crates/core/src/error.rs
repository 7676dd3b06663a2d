use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(i64),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("full twist needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("basis braids do not commute")]
    NonCommuting,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("only t = 1 or t = -1 can be substituted, got {0}")]
    BadEvaluationPoint(i64),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(String),
    #[error("enumeration would produce {count} vectors, cap is {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("binary dihedral modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("determinant {0} is not an odd positive integer")]
    BadDeterminant(String),
    #[error("coloring does not satisfy the relations mod {0}")]
    InvalidColoring(u64),
    #[error("diagonal image present; only antidiagonal assignments are classified")]
    DiagonalImage,
}

pub type Result<T> = std::result::Result<T, Error>;
