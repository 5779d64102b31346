//! Exhaustive enumeration of placements at small scale.
//!
//! This is the independent check on the counting formula: it never divides
//! by anything, it just walks every distinct placement once. Enumeration
//! recurses per piece kind over combinations of the squares still free, so
//! identical pieces never generate the `n!/∏ m!` duplicate orderings in the
//! first place.

use num_traits::Zero;

use crate::board::BoardSpec;
use crate::counting::falling_factorial;
use crate::error::Error;
use crate::legality::is_legal;
use crate::notation::ensure_valid_chess_set;
use crate::piece::{Color, PieceKind, PieceSet};
use crate::placement::Placement;
use crate::BigCount;

/// Refuse to enumerate spaces whose *raw ordered-sequence* count (the
/// falling factorial, cheap to compute up front) exceeds this.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// One enumeration level: the squares still free when this kind places its
/// pieces, and the current combination (ascending indices into `avail`).
struct Level {
    avail: Vec<u32>,
    comb: Vec<usize>,
}

impl Level {
    fn first(avail: Vec<u32>, count: usize) -> Option<Level> {
        if avail.len() < count {
            return None;
        }
        Some(Level {
            avail,
            comb: (0..count).collect(),
        })
    }

    /// Squares left over for the next level, in ascending order.
    fn remaining(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.avail.len() - self.comb.len());
        let mut chosen = self.comb.iter().copied().peekable();
        for (idx, &square) in self.avail.iter().enumerate() {
            if chosen.peek() == Some(&idx) {
                chosen.next();
            } else {
                out.push(square);
            }
        }
        out
    }

    /// Steps to the next combination in lexicographic order; false when
    /// exhausted.
    fn advance(&mut self) -> bool {
        let m = self.comb.len();
        let n = self.avail.len();
        if m == 0 {
            return false;
        }
        let mut j = m;
        while j > 0 {
            j -= 1;
            if self.comb[j] < n - m + j {
                self.comb[j] += 1;
                for l in j + 1..m {
                    self.comb[l] = self.comb[l - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

/// Deterministic stream over every distinct placement of a piece set.
///
/// Order is lexicographic over the concatenation of each kind's sorted
/// square tuple, kinds in canonical order, so two runs (or two machines)
/// always produce identical output.
pub struct Placements {
    board: BoardSpec,
    kinds: Vec<(PieceKind, usize)>,
    levels: Vec<Level>,
    limit: Option<u64>,
    produced: u64,
    done: bool,
}

impl Placements {
    fn new(board: &BoardSpec, set: &PieceSet, limit: Option<u64>) -> Result<Placements, Error> {
        let raw = falling_factorial(board.squares() as u64, set.total_pieces() as u64);
        if raw > BigCount::from(DEFAULT_ENUMERATION_BUDGET) {
            return Err(Error::BudgetExceeded {
                raw_sequences: raw,
                budget: DEFAULT_ENUMERATION_BUDGET,
            });
        }
        let kinds: Vec<(PieceKind, usize)> = set
            .entries()
            .map(|(kind, count)| (kind, count as usize))
            .collect();
        let mut stream = Placements {
            board: *board,
            kinds,
            levels: Vec::new(),
            limit,
            produced: 0,
            done: false,
        };
        // the empty piece set enumerates exactly one (empty) placement, so
        // only a failed level build marks the stream exhausted up front
        let mut avail: Vec<u32> = (0..board.squares()).collect();
        for &(_, count) in &stream.kinds {
            match Level::first(avail, count) {
                None => {
                    stream.done = true;
                    return Ok(stream);
                }
                Some(level) => {
                    avail = level.remaining();
                    stream.levels.push(level);
                }
            }
        }
        Ok(stream)
    }

    fn current(&self) -> Placement {
        let mut assignments = Vec::new();
        for (level, &(kind, _)) in self.levels.iter().zip(&self.kinds) {
            for &idx in &level.comb {
                assignments.push((level.avail[idx], kind));
            }
        }
        Placement::new(self.board, assignments, None)
            .expect("enumerated squares are distinct and in range")
    }

    fn step(&mut self) {
        let mut i = match self.levels.len().checked_sub(1) {
            None => {
                self.done = true; // the single empty placement was emitted
                return;
            }
            Some(i) => i,
        };
        loop {
            if self.levels[i].advance() {
                // rebuild the levels below with fresh free-square lists
                for j in i + 1..self.levels.len() {
                    let avail = self.levels[j - 1].remaining();
                    let count = self.kinds[j].1;
                    self.levels[j] =
                        Level::first(avail, count).expect("free-square count is level-invariant");
                }
                return;
            }
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
        }
    }
}

impl Iterator for Placements {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        if self.done || self.limit.is_some_and(|limit| self.produced >= limit) {
            return None;
        }
        let placement = self.current();
        self.produced += 1;
        self.step();
        Some(placement)
    }
}

/// Streams every distinct placement of `set` on `board` exactly once, in
/// deterministic order, stopping after `limit` placements when given.
///
/// Refuses with [`Error::BudgetExceeded`] — reporting the formula count so
/// the caller sees why — when the raw sequence space exceeds
/// [`DEFAULT_ENUMERATION_BUDGET`].
pub fn enumerate_placements(
    board: &BoardSpec,
    set: &PieceSet,
    limit: Option<u64>,
) -> Result<Placements, Error> {
    Placements::new(board, set, limit)
}

/// Counts distinct placements by actually enumerating them. Deliberately
/// independent of [`crate::counting::multiset_placements`]; tests compare
/// the two.
pub fn count_by_enumeration(board: &BoardSpec, set: &PieceSet) -> Result<BigCount, Error> {
    let mut count = BigCount::zero();
    for _ in enumerate_placements(board, set, None)? {
        count += 1u32;
    }
    Ok(count)
}

/// Exact legal and total placement counts for a validated chess set on the
/// standard board with the given side to move.
pub fn count_legal_by_enumeration(
    board: &BoardSpec,
    set: &PieceSet,
    side_to_move: Color,
) -> Result<(BigCount, BigCount), Error> {
    ensure_valid_chess_set(set)?;
    if !board.is_standard() {
        return Err(Error::BoardNotStandard {
            width: board.width(),
            height: board.height(),
        });
    }
    let mut total = 0u64;
    let mut legal = 0u64;
    for placement in enumerate_placements(board, set, None)? {
        total += 1;
        let verdict = is_legal(&placement.with_side_to_move(side_to_move))?;
        if verdict.is_legal() {
            legal += 1;
        }
    }
    Ok((BigCount::from(legal), BigCount::from(total)))
}
