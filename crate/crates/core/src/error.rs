use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{index} out of range for a ring with {vars} variables")]
    VariableOutOfRange { index: usize, vars: usize },

    #[error("relation is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("invalid ring specification: {0}")]
    RingSpec(String),

    #[error("inner degree mismatch: {0} vs {1}")]
    InnerDegreeMismatch(u32, u32),

    #[error("outer degree mismatch: {0} vs {1}")]
    OuterDegreeMismatch(usize, usize),

    #[error("split of format ({left}, {right}) does not fit operands of lengths ({n}, {m})")]
    SplitFormat {
        left: usize,
        right: usize,
        n: usize,
        m: usize,
    },

    #[error("bidegree mismatch: ({0}, {1}) vs ({2}, {3})")]
    BidegreeMismatch(u32, usize, u32, usize),

    #[error("initial term of the zero element")]
    ZeroElement,

    #[error("element is not invariant under letter permutations")]
    NotInvariant,

    #[error("expected a single monomial, found {0} terms")]
    NotMonomial(usize),

    #[error("letter {0} is not a basis monomial of the ring")]
    LetterNotInBasis(String),

    #[error("word length {0} exceeds the brute-force oracle limit of {1}")]
    OracleLimit(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
