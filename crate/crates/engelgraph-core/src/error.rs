use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("image array is not a bijection of the points")]
    NotAPermutation,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot parse cycle notation: {0}")]
    CycleParse(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("closure limit exceeded: more than {limit} elements")]
    ClosureLimitExceeded { limit: usize },
    #[error("element id {0} out of range")]
    ElementIdOutOfRange(u32),
    #[error("subgroup handle belongs to a different group")]
    ForeignSubgroup,
    #[error("member set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group is not simple")]
    NotSimple,
    #[error("element must have prime order")]
    NotPrimeOrder,
    #[error("arc-test budget exceeded: {required} tests required, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("vertex count {count} exceeds the graph cap {cap}")]
    TooManyVertices { count: usize, cap: usize },
    #[error("Engel depth {n} exceeds the configured cap {cap}")]
    DepthCapExceeded { n: u32, cap: u32 },
    #[error("graph is not symmetric")]
    NotSymmetric,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("group file {path}: {message}")]
    GroupFile { path: String, message: String },
    #[error("order mismatch for {name}: expected {expected}, enumerated {actual}")]
    OrderMismatch {
        name: String,
        expected: u64,
        actual: u64,
    },
    #[error("invalid group construction: {0}")]
    BadConstruction(String),
}
