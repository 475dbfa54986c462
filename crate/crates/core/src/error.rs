use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutations of different degrees")]
    DegreeMismatch,
    #[error("generator index {index} out of range ({count} generators)")]
    GeneratorIndex { index: usize, count: usize },
    #[error("element is not a member of the parent group")]
    NotASubgroup,
    #[error("index {index} exceeds the configured bound {bound}")]
    IndexBound { index: String, bound: usize },
    #[error("group is not transitive")]
    Intransitive,
    #[error("order bound {0} exceeds the supported maximum of 16")]
    OrderBound(u64),
    #[error("resource budget exhausted: {0}")]
    ResourceExhausted(String),
    #[error("operation not supported for this group: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("coset limit {0} exceeded")]
    CosetLimit(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("coset-limit must be at least 1")]
    BadLimit,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("connection set is not inverse-closed")]
    NotInverseClosed,
    #[error("connection set is not a union of double cosets")]
    NotDoubleCosetUnion,
    #[error("connection set contains the identity")]
    IdentityInConnectionSet,
    #[error("subgroup and connection set do not generate the group")]
    GenerationFailure,
    #[error("n = {0} is too small for this construction")]
    TooSmall(usize),
    #[error("generator does not preserve adjacency")]
    NotAnAutomorphism,
    #[error("quotient is a single vertex")]
    DegenerateQuotient,
    #[error("graph is not tetravalent")]
    NotTetravalent,
    #[error("graph is not connected")]
    Disconnected,
    #[error("action is not half-arc-transitive")]
    NotHalfArcTransitive,
    #[error("alternating cycles violate constancy: {0}")]
    ConstancyViolated(String),
    #[error("alternating-cycle system has a single cycle")]
    SingleCycle,
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
