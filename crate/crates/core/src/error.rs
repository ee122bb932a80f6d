use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {0} is a perfect square; the value is rational")]
    PerfectSquare(String),
    #[error("radicand {0} is negative")]
    NegativeRadicand(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("quadratic has negative discriminant {0}")]
    NegativeDiscriminant(String),
    #[error("quadratic has rational roots (discriminant {0} is a perfect square)")]
    RationalRoots(String),
    #[error("leading coefficient is zero; the equation is linear")]
    DegenerateLinear,
    #[error("operands live in different quadratic fields (sqrt({0}) vs sqrt({1}))")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("expansion has only {available} terms, {requested} requested")]
    NotEnoughTerms { requested: usize, available: usize },
    #[error("expansion is finite (rational value); no quadratic surd to rebuild")]
    RationalExpansion,
    #[error("invalid continued fraction: {0}")]
    InvalidExpansion(String),

    #[error("theta {0} is rational; no noncommutative torus")]
    RationalTheta(String),

    #[error("invalid CM order: {0}")]
    InvalidOrder(String),
    #[error("neither omega nor 1+omega yields a quadratic classification for {0}")]
    NoNontrivialGenerator(String),
    #[error("period {0} is not positive")]
    NonPositivePeriod(String),

    #[error("lambda {0} is singular (must not be 0 or 1)")]
    SingularLambda(String),
    #[error("JSON parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("schema error in record {index}, field `{field}`: {reason}")]
    Schema {
        index: usize,
        field: String,
        reason: String,
    },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
