use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the configured maximum of {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("image array is not a bijection of 1..={0}")]
    NotABijection(usize),

    #[error("malformed cycle text at byte {position}: {reason}")]
    MalformedCycles { position: usize, reason: String },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    EnumerationBound { order: u128, bound: u128 },

    #[error("element is not a member of the parent group")]
    NotAMember,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("index {index} exceeds the maximum quotient degree {max}")]
    IndexTooLarge { index: u128, max: usize },

    #[error("{count} classes of order {p} exceed the union cap of {cap}")]
    SubsetCap { p: u64, count: usize, cap: usize },

    #[error("normal subset must be non-empty")]
    EmptySubset,

    #[error("classes do not share a single prime element order")]
    MixedOrders,

    #[error("class index {0} out of range")]
    BadClassIndex(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("bad parameter for `{name}`: {reason}")]
    BadParameter { name: String, reason: String },

    #[error("line {line}: {reason}")]
    CorpusParse { line: usize, reason: String },

    #[error("witness search exhausted after {0} attempts")]
    SearchExhausted(usize),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
