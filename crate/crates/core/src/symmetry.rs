//! Counting placements up to board rotation and reflection.
//!
//! By Burnside's lemma the number of equivalence classes under a symmetry
//! group is the average, over group elements, of the number of placements
//! each element fixes. A placement is fixed by an element exactly when
//! every cycle of the element's square permutation is either empty or
//! filled entirely with one piece kind, so the per-element fixed count is a
//! small dynamic program over the cycle lengths.
//!
//! The groups are purely geometric. Chess semantics are ignored here: a 90
//! degree rotation is meaningless for pawns, which is the caller's concern
//! (the CLI warns).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::board::BoardSpec;
use crate::error::Error;
use crate::piece::PieceSet;
use crate::BigCount;

/// The selectable symmetry groups.
///
/// `r180` is available on any board; `c4` (all four rotations) and `d4`
/// (rotations plus reflections) need a square board. The identity group
/// means no reduction at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    Identity,
    R180,
    C4,
    D4,
}

impl SymmetryClass {
    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Identity => "identity",
            SymmetryClass::R180 => "r180",
            SymmetryClass::C4 => "c4",
            SymmetryClass::D4 => "d4",
        }
    }

    /// The default reduction for a board: `c4` when rotations by 90 degrees
    /// are well defined, `r180` otherwise.
    pub fn default_for(board: &BoardSpec) -> SymmetryClass {
        if board.is_square() {
            SymmetryClass::C4
        } else {
            SymmetryClass::R180
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "identity" | "id" => Ok(SymmetryClass::Identity),
            "r180" => Ok(SymmetryClass::R180),
            "c4" => Ok(SymmetryClass::C4),
            "d4" => Ok(SymmetryClass::D4),
            other => Err(Error::UnknownSymmetryGroup {
                input: other.to_string(),
            }),
        }
    }
}

/// A permutation of board squares; `image(s)` is where square `s` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarePermutation(Vec<u32>);

impl SquarePermutation {
    fn from_fn(board: &BoardSpec, map: impl Fn(u32, u32) -> (u32, u32)) -> SquarePermutation {
        let images = (0..board.squares())
            .map(|square| {
                let (file, rank) = (board.file_of(square), board.rank_of(square));
                let (new_file, new_rank) = map(file, rank);
                board.square_at(new_file, new_rank)
            })
            .collect();
        SquarePermutation(images)
    }

    pub fn identity(board: &BoardSpec) -> SquarePermutation {
        SquarePermutation((0..board.squares()).collect())
    }

    pub fn image(&self, square: u32) -> u32 {
        self.0[square as usize]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` then `other`: the permutation sending `s` to
    /// `other.image(self.image(s))`.
    pub fn then(&self, other: &SquarePermutation) -> SquarePermutation {
        SquarePermutation(self.0.iter().map(|&s| other.image(s)).collect())
    }
}

/// A symmetry group given explicitly by its square permutations.
///
/// Elements are listed abstractly: on degenerate boards distinct group
/// elements may act as the same permutation (r180 on 1x1 is the identity),
/// and the Burnside average is over the abstract elements, which keeps the
/// class count correct in those cases too.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    class: SymmetryClass,
    elements: Vec<SquarePermutation>,
}

impl SymmetryGroup {
    pub fn class(&self) -> SymmetryClass {
        self.class
    }

    pub fn elements(&self) -> &[SquarePermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Builds the explicit square permutations of the requested group on the
/// given board. `c4` and `d4` error on non-square boards.
pub fn board_symmetries(board: &BoardSpec, class: SymmetryClass) -> Result<SymmetryGroup, Error> {
    let (w, h) = (board.width(), board.height());
    if matches!(class, SymmetryClass::C4 | SymmetryClass::D4) && !board.is_square() {
        return Err(Error::NonSquareBoard {
            group: class,
            width: w,
            height: h,
        });
    }
    let identity = SquarePermutation::identity(board);
    let r180 = SquarePermutation::from_fn(board, |f, r| (w - 1 - f, h - 1 - r));
    let elements = match class {
        SymmetryClass::Identity => vec![identity],
        SymmetryClass::R180 => vec![identity, r180],
        SymmetryClass::C4 | SymmetryClass::D4 => {
            let n = w; // square board
            let r90 = SquarePermutation::from_fn(board, |f, r| (n - 1 - r, f));
            let r270 = SquarePermutation::from_fn(board, |f, r| (r, n - 1 - f));
            let mut elements = vec![identity, r90, r180, r270];
            if class == SymmetryClass::D4 {
                elements.push(SquarePermutation::from_fn(board, |f, r| (n - 1 - f, r)));
                elements.push(SquarePermutation::from_fn(board, |f, r| (f, n - 1 - r)));
                elements.push(SquarePermutation::from_fn(board, |f, r| (r, f)));
                elements.push(SquarePermutation::from_fn(board, |f, r| {
                    (n - 1 - r, n - 1 - f)
                }));
            }
            elements
        }
    };
    Ok(SymmetryGroup { class, elements })
}

/// The disjoint cycles of one square permutation. Cycles partition the
/// board, so the lengths always sum to the square count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    cycles: Vec<Vec<u32>>,
}

impl CycleStructure {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }
}

/// Decomposes a square permutation into disjoint cycles, each listed from
/// its smallest square, cycles ordered by that smallest square.
pub fn cycle_structure(element: &SquarePermutation) -> CycleStructure {
    let n = element.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut current = start;
        while !seen[current as usize] {
            seen[current as usize] = true;
            cycle.push(current);
            current = element.image(current);
        }
        cycles.push(cycle);
    }
    CycleStructure { cycles }
}

/// Counts the placements a group element leaves fixed.
///
/// A fixed placement must treat each cycle as a unit: leave it empty or
/// fill it with a single kind, spending cycle-length copies. Dynamic
/// programming over cycles with the remaining multiplicity vector as state;
/// for the identity element (all cycles length 1) this reproduces
/// `multiset_placements`.
pub fn fixed_placements(cycles: &CycleStructure, set: &PieceSet) -> BigCount {
    let lengths: Vec<u32> = cycles.cycles().iter().map(|c| c.len() as u32).collect();
    let multiplicities: Vec<u32> = set.entries().map(|(_, m)| m).collect();
    let mut memo: HashMap<(usize, Vec<u32>), BigCount> = HashMap::new();
    count_fixed(&lengths, 0, multiplicities, &mut memo)
}

fn count_fixed(
    lengths: &[u32],
    index: usize,
    remaining: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigCount>,
) -> BigCount {
    if index == lengths.len() {
        return if remaining.iter().all(|&m| m == 0) {
            BigCount::from(1u32)
        } else {
            BigCount::zero()
        };
    }
    if let Some(hit) = memo.get(&(index, remaining.clone())) {
        return hit.clone();
    }
    // leave the cycle empty
    let mut total = count_fixed(lengths, index + 1, remaining.clone(), memo);
    // or fill it entirely with one kind
    let len = lengths[index];
    for kind in 0..remaining.len() {
        if remaining[kind] >= len {
            let mut next = remaining.clone();
            next[kind] -= len;
            total += count_fixed(lengths, index + 1, next, memo);
        }
    }
    memo.insert((index, remaining), total.clone());
    total
}

/// Number of placement equivalence classes under the chosen group:
/// `(1/|G|) * Σ_g fixed_placements(g)`. The sum is always exactly divisible
/// by the group order.
pub fn count_classes(
    board: &BoardSpec,
    set: &PieceSet,
    class: SymmetryClass,
) -> Result<BigCount, Error> {
    let group = board_symmetries(board, class)?;
    let mut fixed_sum = BigCount::zero();
    for element in group.elements() {
        fixed_sum += fixed_placements(&cycle_structure(element), set);
    }
    let order = BigCount::from(group.order() as u64);
    let (classes, remainder) = num_integer::Integer::div_rem(&fixed_sum, &order);
    assert!(
        remainder.is_zero(),
        "Burnside sum must be divisible by the group order"
    );
    Ok(classes)
}
