//! Concrete assignments of pieces to squares.

use crate::board::BoardSpec;
use crate::error::Error;
use crate::piece::{Color, PieceKind, PieceSet};

/// An assignment of distinct squares to the pieces of a set, optionally with
/// a side to move.
///
/// Assignments are stored sorted by square index; that sorted form is the
/// canonical one, so two placements compare equal exactly when they put the
/// same kinds on the same squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    board: BoardSpec,
    assignments: Vec<(u32, PieceKind)>,
    side_to_move: Option<Color>,
}

impl Placement {
    /// Validates square ranges and uniqueness, then stores the assignments
    /// in canonical (square-sorted) order.
    pub fn new(
        board: BoardSpec,
        mut assignments: Vec<(u32, PieceKind)>,
        side_to_move: Option<Color>,
    ) -> Result<Self, Error> {
        for &(square, _) in &assignments {
            if square >= board.squares() {
                return Err(Error::SquareOutOfRange {
                    index: square,
                    width: board.width(),
                    height: board.height(),
                });
            }
        }
        assignments.sort_unstable_by_key(|&(square, _)| square);
        for pair in assignments.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateSquare { index: pair[0].0 });
            }
        }
        Ok(Placement {
            board,
            assignments,
            side_to_move,
        })
    }

    /// The empty placement on `board`.
    pub fn empty(board: BoardSpec) -> Self {
        Placement {
            board,
            assignments: Vec::new(),
            side_to_move: None,
        }
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }

    /// Canonical (square-sorted) assignments.
    pub fn assignments(&self) -> &[(u32, PieceKind)] {
        &self.assignments
    }

    pub fn side_to_move(&self) -> Option<Color> {
        self.side_to_move
    }

    pub fn with_side_to_move(mut self, color: Color) -> Self {
        self.side_to_move = Some(color);
        self
    }

    pub fn piece_count(&self) -> u32 {
        self.assignments.len() as u32
    }

    /// Recovers the multiset of kinds this placement realizes.
    pub fn piece_set(&self) -> PieceSet {
        PieceSet::from_entries(self.assignments.iter().map(|&(_, kind)| (kind, 1)))
    }

    pub fn kind_at(&self, square: u32) -> Option<PieceKind> {
        self.assignments
            .binary_search_by_key(&square, |&(sq, _)| sq)
            .ok()
            .map(|idx| self.assignments[idx].1)
    }
}
