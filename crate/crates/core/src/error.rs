use thiserror::Error;

use crate::arith::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings ({left} vs {right})")]
    MixedRings { left: String, right: String },

    #[error("operands live in different groups ({left} vs {right})")]
    MixedGroups { left: String, right: String },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("{b} is not invertible modulo {m}")]
    NotCoprime { b: i64, m: u64 },

    #[error("modulus must be at least {min}, got {m}")]
    ModulusTooSmall { m: u64, min: u64 },

    #[error("cyclotomic cosets need an odd modulus, got {0}")]
    EvenModulus(u64),

    #[error("nilpotency index must be in 1..={max}, got {t}")]
    NilpotencyOutOfRange { t: u32, max: u32 },

    #[error("refusing to enumerate a ring of order 2^{t} (limit 2^{max})")]
    EnumerationGuard { t: u32, max: u32 },

    #[error("malformed group: {0}")]
    MalformedGroup(String),

    #[error("group fails the structural hypotheses: {0}")]
    InvalidGroup(ValidationReport),

    #[error("index {value} out of range for factor {factor} (order {order})")]
    IndexOutOfRange { factor: usize, value: u64, order: u64 },

    #[error("wrong number of components: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("invalid block {block:?}: {reason}")]
    InvalidBlock { block: Vec<u32>, reason: String },

    #[error("exponent k = {k} outside 0..={t}")]
    KOutOfRange { k: u32, t: u32 },

    #[error("code components are not pairwise orthogonal ({0} and {1})")]
    NotOrthogonal(usize, usize),

    #[error("code has 2^{predicted_log2} words, budget is {budget}")]
    BudgetExceeded { predicted_log2: u64, budget: u64 },

    #[error("the zero code has no nonzero word")]
    ZeroCode,

    #[error("formula and enumeration disagree for {what}: formula {formula}, enumeration {enumerated}")]
    FormulaMismatch {
        what: String,
        formula: String,
        enumerated: String,
    },

    #[error("no family member matches selector {0}")]
    UnknownSelector(String),

    #[error("parse error: {0}")]
    Parse(String),
}
