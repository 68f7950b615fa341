use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("({i},{j}) is not a cell")]
    NotACell { i: usize, j: usize },

    #[error("core modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("partition is not self-conjugate")]
    NotSelfConjugate,

    #[error("invalid diagonal hook set: {0}")]
    InvalidHookSet(String),

    #[error("s and t must both be at least 2, got ({s},{t})")]
    ParamTooSmall { s: u64, t: u64 },

    #[error("({s},{t}) not coprime")]
    NotCoprime { s: u64, t: u64 },

    #[error("({s},{t}) is too large for 64-bit sizes")]
    Overflow { s: u64, t: u64 },

    #[error("box must have positive dimensions, got {m}x{n}")]
    EmptyBox { m: usize, n: usize },

    #[error("the recurrence needs m, n >= 2, got {m}x{n}")]
    RecurrenceDomain { m: usize, n: usize },

    #[error("path box {found_m}x{found_n} does not match array box {m}x{n}")]
    BoxMismatch {
        m: usize,
        n: usize,
        found_m: usize,
        found_n: usize,
    },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("partition is not in the image of the bijection: {0}")]
    NotInImage(String),

    #[error("{what} needs {required}, which exceeds the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        budget: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
