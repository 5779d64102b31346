//! How many ways can a chess piece set stand on a board?
//!
//! The core of the crate is exact: [`counting::multiset_placements`]
//! evaluates the falling factorial over the square count divided by the
//! factorials of piece multiplicities, in arbitrary precision, which for
//! instance puts KNNNNvkq on the standard board at exactly
//! 130,455,400,320 distinct placements. Around that sit:
//!
//! - [`notation`] — the `KNNNNvkq` piece-set grammar, chess-set validation,
//!   and FEN-style placement serialization;
//! - [`enumerate`] — an exhaustive enumerator for small spaces, used as an
//!   independent oracle for the formula and for exact legality counts;
//! - [`legality`] + [`sampling`] — the static legality predicate and seeded
//!   Monte Carlo estimation of the legal fraction of a space, with Wilson
//!   confidence intervals;
//! - [`symmetry`] — Burnside counting of placements up to board rotation
//!   and reflection.
//!
//! ```
//! use piecespace::{counting, notation, BoardSpec};
//!
//! let set = notation::parse_piece_set("KNNNNvkq")?;
//! let count = counting::multiset_placements(&BoardSpec::standard(), &set);
//! assert_eq!(count.to_string(), "130455400320");
//! # Ok::<(), piecespace::Error>(())
//! ```

pub mod board;
pub mod counting;
pub mod enumerate;
mod error;
pub mod legality;
pub mod notation;
pub mod piece;
pub mod placement;
pub mod sampling;
pub mod symmetry;

/// Arbitrary-precision non-negative placement count. Counting paths never
/// leave exact integer arithmetic.
pub type BigCount = num_bigint::BigUint;

pub use board::{BoardSpec, MAX_BOARD_DIM};
pub use counting::Ratio;
pub use error::Error;
pub use legality::{LegalityIssue, LegalityVerdict, SquareSet};
pub use notation::SetViolation;
pub use piece::{Color, PieceKind, PieceSet, Role};
pub use placement::Placement;
pub use sampling::EstimateResult;
pub use symmetry::{CycleStructure, SquarePermutation, SymmetryClass, SymmetryGroup};
