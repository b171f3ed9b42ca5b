use crate::invariants::GroupSpec;
use crate::polyring::Rat;
use crate::symfunc::Partition;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarMismatch { expected: usize, found: usize },

    #[error("polynomial is not symmetric under variable exchange")]
    NotSymmetric,

    #[error("polynomial is not homogeneous: degrees {lower} and {upper} both occur")]
    NotHomogeneous { lower: usize, upper: usize },

    #[error("coefficient of z^{zdeg} is not symmetric in its variables")]
    CoefficientNotSymmetric { zdeg: usize },

    #[error("leading exponent {exponents:?} is not weakly decreasing; input violates the symmetry precondition")]
    LeadingNotPartition { exponents: Vec<u32> },

    #[error("multiplicity of {partition} at z^{n} is {value}, not a nonnegative integer")]
    BadMultiplicity {
        n: usize,
        partition: Partition,
        value: Rat,
    },

    #[error("Sp_d requires even d, got d = {d}")]
    SpOddDimension { d: usize },

    #[error("{group}: invariant routes disagree at z^{degree}: partition filter gives {filtered}, substitution gives {substituted}")]
    DualCheckMismatch {
        group: GroupSpec,
        degree: usize,
        filtered: u64,
        substituted: u64,
    },

    #[error("coefficient of z^{degree} is {value}, not a nonnegative integer")]
    NonIntegerCoefficient { degree: usize, value: Rat },

    #[error("weight list has {found} weights but the series has {expected} variables")]
    WeightCountMismatch { expected: usize, found: usize },

    #[error("partition {partition} has more than {d} parts")]
    PartitionTooLong { partition: Partition, d: usize },

    #[error("parse error at byte {offset}: {msg}")]
    Parse { msg: String, offset: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid JSON payload: {0}")]
    Json(String),
}

impl Error {
    /// True for errors caused by bad user input (config, parse, JSON),
    /// as opposed to failed mathematical checks.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Config(_) | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
