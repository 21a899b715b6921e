use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("exponent at position {pos} does not fit in a 64-bit integer")]
    ExponentOverflow { pos: usize },

    /// The word does not lie in the derived subgroup of F2.
    #[error("word is not in the derived subgroup (exponent sums x={exp_x}, y={exp_y})")]
    NotInDerivedSubgroup { exp_x: i64, exp_y: i64 },

    #[error("invalid modulus {n}: {reason}")]
    InvalidModulus { n: u64, reason: &'static str },

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("{what} exceeds guard ({limit})")]
    GuardExceeded { what: &'static str, limit: u64 },

    #[error("coloring has modulus {coloring} but the invariant uses {expected}")]
    ModulusMismatch { coloring: u64, expected: u64 },

    #[error("no vanishing found up to bound {bound}")]
    SearchBoundExceeded { bound: usize },

    #[error("check failed: {0}")]
    CheckFailed(String),
}
