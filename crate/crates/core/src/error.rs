use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u32 },
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("field with {size} elements exceeds the cap of {cap} elements")]
    FieldTooLarge { size: u128, cap: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("numerator is zero")]
    ZeroMap,
    #[error("map is constant")]
    ConstantMap,
    #[error("map is inseparable")]
    InseparableMap,
    #[error("local series exhausted at order {0}")]
    TruncationExhausted(usize),
    #[error("ramification condition violated: {0}")]
    ConditionViolated(String),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("too much ramification: {0}")]
    TooMuchRamification(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable identifier, used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotIrreducible { .. } => "NotIrreducible",
            Error::InvalidField(_) => "InvalidField",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroMap => "ZeroMap",
            Error::ConstantMap => "ConstantMap",
            Error::InseparableMap => "InseparableMap",
            Error::TruncationExhausted(_) => "TruncationExhausted",
            Error::ConditionViolated(_) => "ConditionViolated",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::TooMuchRamification(_) => "TooMuchRamification",
            Error::Parse { .. } => "ParseError",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Internal(_) => "InternalError",
        }
    }
}
