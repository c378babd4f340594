use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field degree {0}")]
    InvalidDegree(u32),
    #[error("field size {q} exceeds cap {cap}")]
    FieldCap { q: u64, cap: u64 },
    #[error("vector length {found} does not match expected length {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension {dim} exceeds cap {cap}")]
    AmbientCap { dim: usize, cap: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("coset enumeration exceeded cap of {0} cosets")]
    CosetCap(usize),

    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group order {order} exceeds cap {cap} for {what}")]
    OrderCap {
        order: usize,
        cap: usize,
        what: &'static str,
    },
    #[error("enumeration cap {cap} exceeded in {what}")]
    EnumerationCap { cap: u64, what: &'static str },

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("constructed group has order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("ideal inclusion fails: {0}")]
    NotContained(&'static str),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("source group carries no presentation")]
    NoPresentation,
    #[error("algebra has no ambient embedding")]
    NoEmbedding,

    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors produced by a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::FieldCap { .. }
                | Error::AmbientCap { .. }
                | Error::CosetCap(_)
                | Error::OrderCap { .. }
                | Error::EnumerationCap { .. }
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
