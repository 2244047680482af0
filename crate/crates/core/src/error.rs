use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coefficient not representable in {field}: {msg}")]
    NotRepresentable { field: String, msg: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("colon by zero ideal")]
    ColonByZero,

    #[error("{0}")]
    DegenerateIdeal(String),

    #[error("matrix error: {0}")]
    Matrix(String),

    #[error("ideal is not homogeneous")]
    Inhomogeneous,

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("J is not contained in I")]
    NotContained,

    #[error("J is not a reduction of I within r_max = {0}")]
    NotAReduction(usize),

    #[error("genericity failure: no sampled reduction verified (tried {})", format_seeds(.0))]
    GenericityFailure(Vec<(u64, u64)>),

    #[error("sequence is not regular: {0}")]
    NotRegularSequence(String),

    #[error("sample limit of {0} reached without a result")]
    SampleLimit(usize),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("fixture `{name}` line {line}: {msg}")]
    Fixture { name: String, line: usize, msg: String },
}

fn format_seeds(seeds: &[(u64, u64)]) -> String {
    seeds
        .iter()
        .map(|(seed, stream)| format!("seed {seed}/stream {stream}"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
