use thiserror::Error;

/// Every failure the toolkit reports. `code()` gives the stable machine-readable
/// name used in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different coefficient fields")]
    IncompatibleField,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("a second algebraic extension would be required")]
    UnsupportedTower,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("leading coefficient in {0} is not a nonzero constant")]
    UnsupportedLeadingCoefficient(String),
    #[error("polynomial is not a scalar multiple of a power of its squarefree part")]
    NotAPrimePower,
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },
    #[error("map has a constant component")]
    DegenerateMap,
    #[error("polynomial is not of the form y^d + lower terms in y: {0}")]
    NotMonic(String),
    #[error("series truncated too early: order {needed} required")]
    InsufficientOrder { needed: usize },
    #[error("parametric resultant has degree zero in x")]
    DegenerateResultant,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("requested precision of {0} digits exceeds the floating type")]
    PrecisionUnsupported(u32),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal contract violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::IncompatibleField => "IncompatibleField",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::UnsupportedTower => "UnsupportedTower",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::UnsupportedLeadingCoefficient(_) => "UnsupportedLeadingCoefficient",
            Error::NotAPrimePower => "NotAPrimePower",
            Error::DegreeBoundExceeded { .. } => "DegreeBoundExceeded",
            Error::DegenerateMap => "DegenerateMap",
            Error::NotMonic(_) => "NotMonic",
            Error::InsufficientOrder { .. } => "InsufficientOrder",
            Error::DegenerateResultant => "DegenerateResultant",
            Error::NotUnivariate => "NotUnivariate",
            Error::PrecisionUnsupported(_) => "PrecisionUnsupported",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::NegativeExponent(_) => "NegativeExponent",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Internal(_) => "InternalError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
