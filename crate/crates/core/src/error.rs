use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}")]
    UnsupportedOrder(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected vectors of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient mismatch: F_{q1}^{n1} vs F_{q2}^{n2}")]
    AmbientMismatch { q1: u32, n1: usize, q2: u32, n2: usize },
    #[error("invalid field element {idx} for F_{q}")]
    InvalidElement { idx: u32, q: u32 },
    #[error("enumeration too large: {0} subspaces exceeds the guard")]
    TooLarge(String),
    #[error("duplicate codeword at indices {0} and {1}")]
    DuplicateCodeword(usize, usize),
    #[error("codeword 0 must be the zero subspace")]
    MissingZero,
    #[error("malformed addition table: {0}")]
    MalformedTable(String),
    #[error("code has no addition table")]
    NoTable,
    #[error("index {index} out of range for code of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("code too small: size {0} < 2")]
    TooSmall(usize),
    #[error("code does not pass linearity verification: {0}")]
    NotVerifiedLinear(String),
    #[error("no Steiner triple system exists on {0} points")]
    NoSuchSystem(usize),
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("family size {0} is not of the form 2^m - 1")]
    BadSize(usize),
    #[error("family is not intersecting: {0}")]
    NotIntersecting(String),
    #[error("cannot trim a family of {have} members to {want}")]
    TooFew { have: usize, want: usize },
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("malformed input: {0}")]
    Parse(String),
}
