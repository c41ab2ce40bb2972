use thiserror::Error;

use crate::kernel::{ExactInteger, ExactRational};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown piece `{0}` (expected bishop, anassa, white or black)")]
    UnknownPiece(String),

    #[error("board size must be nonnegative, got {0}")]
    NegativeBoard(i64),

    #[error("inductive subset needs a board of size at least 1")]
    EmptyBoard,

    #[error("a square cannot attack itself: ({col}, {row})")]
    SameSquare { col: i64, row: i64 },

    #[error("invalid move ({0}, {1}): moves must be nonzero with coprime coordinates")]
    InvalidMove(i64, i64),

    #[error("moves ({0}, {1}) and ({2}, {3}) are parallel")]
    ParallelMoves(i64, i64, i64, i64),

    #[error("inexact division in {context}: {numerator} / {denominator}")]
    InexactDivision {
        context: &'static str,
        numerator: ExactInteger,
        denominator: ExactInteger,
    },

    #[error("quasi-polynomial evaluated to a non-integer {value} at m = {m}")]
    NonIntegerValue { m: i64, value: ExactRational },

    #[error("division by (m - {root}) left remainder {remainder}")]
    NonZeroRemainder { root: i64, remainder: ExactRational },

    #[error("coefficient vectors disagree in length: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("malformed b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },
}
