use thiserror::Error;

use crate::signed_perm::Group;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("n = {n} exceeds the brute-force cap {cap} for family {family}")]
    CapExceeded { family: String, n: usize, cap: usize },

    #[error("polynomial contains Y variables; expected an S_n character polynomial")]
    HasYVariables,

    #[error("fit is rank deficient: rank {rank} < {unknowns} unknowns (supply a wider n-range)")]
    DegenerateFit { rank: usize, unknowns: usize },

    #[error("no polynomial of degree <= {degree} interpolates the data")]
    Inconsistent { degree: usize },

    #[error("padding fails: cannot pad {partition} to size {n}")]
    PaddingFails { partition: String, n: usize },

    #[error("class functions live on different groups: {left} vs {right}")]
    GroupMismatch { left: Group, right: Group },

    #[error("multiplicity of {label} is {value}, not an integer")]
    NonIntegralMultiplicity { label: String, value: String },

    #[error("degree {degree} component is not a character: {reason}")]
    NotACharacter { degree: usize, reason: String },

    #[error("sequence must cover consecutive n = 0..N; missing n = {missing}")]
    NonConsecutive { missing: usize },

    #[error("operation not supported for family {family}: {what}")]
    Unsupported { family: String, what: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("inconsistent label: {0}")]
    InconsistentLabel(String),
}
