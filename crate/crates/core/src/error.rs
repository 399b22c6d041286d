use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds 1024")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("no Conway polynomial listed for GF({p}^{m})")]
    NoPolynomialListed { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields (order {left} vs {right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("field of order {order} is not GF(q^2) for the requested q")]
    NotQuadraticExtension { order: u32 },
    #[error("element is not in the base field GF({q})")]
    NotInBaseField { q: u32 },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("enumeration budget exceeded (upper bound {upper_bound:?}, lower bound {lower_bound})")]
    BudgetExceeded { upper_bound: Option<usize>, lower_bound: usize },
    #[error("code has no nonzero codewords")]
    NoNonzeroCodewords,
    #[error("second code is not a subcode of the first")]
    NotASubcode,
    #[error("index set is not contained in an information set of the hull")]
    NotInHullInformationSet,
    #[error("evaluation points are not pairwise distinct")]
    DuplicateEvaluationPoints,
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid trace assignment: {0}")]
    InvalidAssignment(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("vector is not in E(D_(k,k-1)) \\ E(D_(k,k))")]
    NotInDifferenceSet,
    #[error("norm equation a^(q+1) = x has no solution")]
    NormUnsolvable,
    #[error("construction is empty for these parameters")]
    EmptyConstruction,
    #[error("code is the full space; its dual is zero")]
    NoDual,
    #[error("derived quantum code has no logical qudits")]
    NoLogicalQudits,
    #[error("subsystem construction needs k + ell < n (k={k}, ell={ell}, n={n})")]
    DimensionConstraintViolated { k: usize, ell: usize, n: usize },
    #[error("s={s} outside [1, {ell}]")]
    SOutOfRange { s: usize, ell: usize },
    #[error("the shortening rule requires a pure source code")]
    PurityRequired,
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}
