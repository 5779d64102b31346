//! Static legality of placements on the standard board.
//!
//! A placement is treated as legal when it could be a position in some
//! game state snapshot: one king per side, no pawn on a terminal rank, and
//! the side that is *not* to move is not in check (otherwise the mover
//! could capture the king). This is the usual tablebase-style static
//! definition; reachability from the initial position is a strictly
//! stronger condition and is not checked.

use std::fmt;

use crate::error::Error;
use crate::piece::{Color, PieceKind, Role};
use crate::placement::Placement;

/// A set of squares on the 8x8 board, one bit per square (a1 = bit 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SquareSet(pub u64);

impl SquareSet {
    pub const EMPTY: SquareSet = SquareSet(0);

    pub fn contains(self, square: u32) -> bool {
        self.0 >> square & 1 != 0
    }

    pub fn insert(&mut self, square: u32) {
        self.0 |= 1 << square;
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let square = bits.trailing_zeros();
            bits &= bits - 1;
            Some(square)
        })
    }
}

impl FromIterator<u32> for SquareSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut set = SquareSet::EMPTY;
        for square in iter {
            set.insert(square);
        }
        set
    }
}

const KING_STEPS: [(i32, i32); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];
const KNIGHT_JUMPS: [(i32, i32); 8] = [
    (1, 2),
    (2, 1),
    (2, -1),
    (1, -2),
    (-1, -2),
    (-2, -1),
    (-2, 1),
    (-1, 2),
];
const ROOK_RAYS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const BISHOP_RAYS: [(i32, i32); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

fn offset(square: u32, file_step: i32, rank_step: i32) -> Option<u32> {
    let file = (square % 8) as i32 + file_step;
    let rank = (square / 8) as i32 + rank_step;
    if (0..8).contains(&file) && (0..8).contains(&rank) {
        Some((rank * 8 + file) as u32)
    } else {
        None
    }
}

fn steps(square: u32, deltas: &[(i32, i32)]) -> SquareSet {
    deltas
        .iter()
        .filter_map(|&(df, dr)| offset(square, df, dr))
        .collect()
}

fn rays(square: u32, directions: &[(i32, i32)], occupied: SquareSet) -> SquareSet {
    let mut attacked = SquareSet::EMPTY;
    for &(df, dr) in directions {
        let mut current = square;
        while let Some(next) = offset(current, df, dr) {
            attacked.insert(next);
            if occupied.contains(next) {
                break; // the blocker itself is attacked, nothing beyond it
            }
            current = next;
        }
    }
    attacked
}

/// Squares attacked by a piece of `kind` standing on `from`, given the full
/// occupancy of the board. Sliding pieces stop at (and include) the first
/// occupied square of a ray; pawns attack their two forward diagonals
/// (White toward higher ranks).
pub fn attacks(from: u32, kind: PieceKind, occupied: SquareSet) -> SquareSet {
    debug_assert!(from < 64);
    debug_assert!(occupied.contains(from), "attacker must stand on the board");
    match kind.role {
        Role::King => steps(from, &KING_STEPS),
        Role::Knight => steps(from, &KNIGHT_JUMPS),
        Role::Rook => rays(from, &ROOK_RAYS, occupied),
        Role::Bishop => rays(from, &BISHOP_RAYS, occupied),
        Role::Queen => {
            let mut all = rays(from, &ROOK_RAYS, occupied);
            all.0 |= rays(from, &BISHOP_RAYS, occupied).0;
            all
        }
        Role::Pawn => {
            let dir = match kind.color {
                Color::White => 1,
                Color::Black => -1,
            };
            steps(from, &[(-1, dir), (1, dir)])
        }
    }
}

/// Why a placement is illegal. Codes appear at most once each, in the order
/// declared here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegalityIssue {
    MissingKing,
    MultipleKings,
    PawnOnTerminalRank,
    OpponentInCheck,
}

impl LegalityIssue {
    pub fn code(self) -> &'static str {
        match self {
            LegalityIssue::MissingKing => "missing-king",
            LegalityIssue::MultipleKings => "multiple-kings",
            LegalityIssue::PawnOnTerminalRank => "pawn-on-terminal-rank",
            LegalityIssue::OpponentInCheck => "opponent-in-check",
        }
    }
}

impl fmt::Display for LegalityIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of [`is_legal`]: legal exactly when no issue was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalityVerdict {
    reasons: Vec<LegalityIssue>,
}

impl LegalityVerdict {
    pub fn is_legal(&self) -> bool {
        self.reasons.is_empty()
    }

    pub fn reasons(&self) -> &[LegalityIssue] {
        &self.reasons
    }
}

/// Evaluates static legality of a placement with a side to move on the
/// standard board.
///
/// Every violated rule is reported, not just the first: exactly one king
/// per color, no pawn on rank 1 or rank 8, and the side not to move is not
/// in check. The last rule subsumes king adjacency, since adjacent kings
/// attack each other.
pub fn is_legal(placement: &Placement) -> Result<LegalityVerdict, Error> {
    let board = placement.board();
    if !board.is_standard() {
        return Err(Error::BoardNotStandard {
            width: board.width(),
            height: board.height(),
        });
    }
    let mover = placement.side_to_move().ok_or(Error::MissingSideToMove)?;

    let mut reasons = Vec::new();
    let mut kings = [0u32; 2];
    let mut terminal_pawn = false;
    let mut occupied = SquareSet::EMPTY;
    for &(square, kind) in placement.assignments() {
        occupied.insert(square);
        if kind.role == Role::King {
            kings[kind.color as usize] += 1;
        }
        if kind.role == Role::Pawn {
            let rank = square / 8;
            terminal_pawn |= rank == 0 || rank == 7;
        }
    }
    if kings.contains(&0) {
        reasons.push(LegalityIssue::MissingKing);
    }
    if kings.iter().any(|&n| n > 1) {
        reasons.push(LegalityIssue::MultipleKings);
    }
    if terminal_pawn {
        reasons.push(LegalityIssue::PawnOnTerminalRank);
    }

    let defender = mover.opposite();
    let defender_kings: SquareSet = placement
        .assignments()
        .iter()
        .filter(|(_, kind)| kind.color == defender && kind.role == Role::King)
        .map(|&(square, _)| square)
        .collect();
    if !defender_kings.is_empty() {
        let in_check = placement
            .assignments()
            .iter()
            .filter(|(_, kind)| kind.color == mover)
            .any(|&(square, kind)| attacks(square, kind, occupied).0 & defender_kings.0 != 0);
        if in_check {
            reasons.push(LegalityIssue::OpponentInCheck);
        }
    }

    Ok(LegalityVerdict { reasons })
}
