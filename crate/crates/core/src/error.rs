use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("zero count at position {pos}: counts must be at least 1")]
    ZeroCount { pos: usize },

    #[error("scheme at position {pos} expands to more than {limit} ovals")]
    SchemeTooLarge { pos: usize, limit: usize },

    #[error("degree {0} is odd: only even degrees are supported")]
    OddDegree(u32),

    #[error("degree {0} is too small: the degree must be at least 4")]
    DegreeTooSmall(u32),

    #[error("oval count must be positive")]
    EmptyEnumeration,

    #[error("enumeration of {requested} ovals exceeds the cap of {cap}")]
    EnumerationCap { requested: usize, cap: usize },

    #[error("expected an M-scheme with {expected} ovals, got {got}")]
    NotMaximal { expected: usize, got: usize },

    #[error("a custom plan needs an explicit assignment")]
    CustomWithoutAssignment,

    #[error("assignment distributes {got} basepoints, expected {expected}")]
    AssignmentSum { expected: u64, got: u64 },
}
