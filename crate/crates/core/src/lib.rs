//! Exact enumeration of nonattacking placements of bishops and anassas on
//! square boards.
//!
//! The crate is split into a small number of layers:
//!
//! - [`kernel`]: extended binomials, Stirling numbers of both kinds,
//!   associated Stirling (Ward) numbers and falling factorials, all exact.
//! - [`board`]: a geometric board model with an exhaustive backtracking
//!   counter. It is the ground truth every formula is checked against.
//! - [`formulas`]: recurrences and closed forms for the bishop, the anassa
//!   and the two single-color rook boards.
//! - [`quasipoly`]: explicit quasi-polynomial coefficients for the counts.
//! - [`output`] and [`verify`]: table rendering and the verification suites
//!   used by the `rider-count` binary.

pub mod board;
pub mod error;
pub mod formulas;
pub mod kernel;
pub mod output;
pub mod quasipoly;
pub mod verify;

use std::fmt;
use std::str::FromStr;

pub use error::{Error, Result};
pub use kernel::{ExactInteger, ExactRational};

/// The piece types handled by the crate.
///
/// `White` and `Black` are rooks on the two single-color boards a bishop
/// decomposes into; they are exposed so their triangles can be tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Piece {
    Bishop,
    Anassa,
    White,
    Black,
}

impl Piece {
    pub fn name(self) -> &'static str {
        match self {
            Piece::Bishop => "bishop",
            Piece::Anassa => "anassa",
            Piece::White => "white",
            Piece::Black => "black",
        }
    }

    /// Largest k with a nonzero count on an m×m board.
    pub fn max_pieces(self, m: usize) -> usize {
        match self {
            Piece::Bishop => match m {
                0 => 0,
                1 => 1,
                _ => 2 * m - 2,
            },
            Piece::Anassa => m,
            Piece::White => match m {
                0 => 0,
                1 => 1,
                _ => m - 1,
            },
            Piece::Black => m.saturating_sub(1),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Piece {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bishop" | "bishops" => Ok(Piece::Bishop),
            "anassa" | "anassas" => Ok(Piece::Anassa),
            "white" => Ok(Piece::White),
            "black" => Ok(Piece::Black),
            other => Err(Error::UnknownPiece(other.to_string())),
        }
    }
}
