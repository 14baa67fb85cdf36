use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("expected a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("both polynomials are zero")]
    BothZero,
    #[error("empty input list")]
    EmptyInput,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("polynomial vanishes identically modulo {0}")]
    ZeroModP(u64),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is reducible over the rationals")]
    Reducible,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator divisible by {0}")]
    DenominatorDivisibleBy(u64),
    #[error("{a} is not a root of the defining polynomial modulo {p}")]
    NotARootModP { a: u64, p: u64 },
    #[error("leading coefficient of the defining polynomial is divisible by {0}")]
    LeadingCoefficientDivisibleBy(u64),
    #[error("{n} does not divide the numerator of the value at {a}/{b}")]
    NotADivisor { n: u64, a: String, b: String },
    #[error("root {r} is not simple modulo {p}")]
    NonSimpleRoot { r: u64, p: u64 },
    #[error("shift {0} does not give a primitive element")]
    NotPrimitive(i64),
    #[error("degree exceeds cap {cap} (reached {reached})")]
    CapExceeded { cap: usize, reached: usize },
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("invalid density target: {0}")]
    InvalidTarget(String),
    #[error("could not factor {0} completely")]
    FactorizationIncomplete(String),
    #[error("prime factor {0} does not fit in 64 bits")]
    PrimeTooLarge(String),
    #[error("verification failed at prime {prime}: {detail}")]
    VerificationFailed { prime: u64, detail: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Internal(String),
}
