use crate::notation::SetViolation;
use crate::symmetry::SymmetryClass;
use crate::BigCount;

/// Everything that can go wrong across the crate.
///
/// Variants split into two broad families: syntax errors from parsing
/// user-supplied text, and domain errors from operations whose
/// preconditions were not met. [`Error::is_syntax`] reports the family.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("piece-set string has no 'v' separator")]
    MissingSeparator,

    #[error("piece-set string has more than one 'v' separator (second at position {position})")]
    MultipleSeparators { position: usize },

    #[error("invalid piece letter {letter:?} at position {position} (expected one of K, Q, R, B, N, P)")]
    InvalidPieceLetter { letter: char, position: usize },

    #[error("cannot parse board size {input:?} (expected WIDTHxHEIGHT, e.g. 8x8)")]
    BoardSyntax { input: String },

    #[error("board {width}x{height} outside the supported range 1..={max} per side")]
    BoardDimensions { width: u64, height: u64, max: u32 },

    #[error("malformed placement string: {message}")]
    PlacementSyntax { message: String },

    #[error("square index {index} out of range for a {width}x{height} board")]
    SquareOutOfRange { index: u32, width: u32, height: u32 },

    #[error("square {index} assigned more than once")]
    DuplicateSquare { index: u32 },

    #[error("piece set is not a valid chess set: {}", format_violations(.0))]
    InvalidChessSet(Vec<SetViolation>),

    #[error("enumeration budget exceeded: the space holds {raw_sequences} raw square sequences, budget is {budget}")]
    BudgetExceeded { raw_sequences: BigCount, budget: u64 },

    #[error("operation requires the standard 8x8 board, got {width}x{height}")]
    BoardNotStandard { width: u32, height: u32 },

    #[error("placement has no side to move")]
    MissingSideToMove,

    #[error("cannot place {pieces} pieces on {squares} squares")]
    TooManyPieces { pieces: u32, squares: u32 },

    #[error("ratio denominator must be positive")]
    ZeroRatioTotal,

    #[error("sample count must be at least 1")]
    ZeroSamples,

    #[error("confidence level must lie strictly between 0 and 1, got {0}")]
    ConfidenceOutOfRange(f64),

    #[error("{group} symmetry requires a square board, got {width}x{height}")]
    NonSquareBoard {
        group: SymmetryClass,
        width: u32,
        height: u32,
    },

    #[error("unknown symmetry group {input:?} (expected identity, r180, c4 or d4)")]
    UnknownSymmetryGroup { input: String },
}

impl Error {
    /// True for errors caused by malformed input text rather than by a
    /// violated operation precondition.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            Error::MissingSeparator
                | Error::MultipleSeparators { .. }
                | Error::InvalidPieceLetter { .. }
                | Error::BoardSyntax { .. }
                | Error::BoardDimensions { .. }
                | Error::PlacementSyntax { .. }
                | Error::UnknownSymmetryGroup { .. }
        )
    }
}

fn format_violations(violations: &[SetViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
