//! Rectangular board geometry.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Guardrail on board side length. The counting formula itself has no such
/// limit; this bounds the notation and enumeration machinery.
pub const MAX_BOARD_DIM: u32 = 16;

/// A rectangular board of `width` files by `height` ranks.
///
/// Squares are indexed `0..width*height` with square 0 in the bottom-left
/// corner and indices running file-first along each rank, so on 8x8 the
/// index is the usual `rank * 8 + file` (a1 = 0, h1 = 7, a8 = 56).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardSpec {
    width: u32,
    height: u32,
}

impl BoardSpec {
    pub fn new(width: u32, height: u32) -> Result<Self, Error> {
        if width == 0 || height == 0 || width > MAX_BOARD_DIM || height > MAX_BOARD_DIM {
            return Err(Error::BoardDimensions {
                width: width as u64,
                height: height as u64,
                max: MAX_BOARD_DIM,
            });
        }
        Ok(BoardSpec { width, height })
    }

    /// The standard 8x8 chessboard.
    pub fn standard() -> Self {
        BoardSpec {
            width: 8,
            height: 8,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Total square count, always `width * height`.
    pub fn squares(&self) -> u32 {
        self.width * self.height
    }

    pub fn is_standard(&self) -> bool {
        self.width == 8 && self.height == 8
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    pub fn file_of(&self, square: u32) -> u32 {
        square % self.width
    }

    pub fn rank_of(&self, square: u32) -> u32 {
        square / self.width
    }

    pub fn square_at(&self, file: u32, rank: u32) -> u32 {
        debug_assert!(file < self.width && rank < self.height);
        rank * self.width + file
    }

    /// Algebraic name of a square, files `a..` and ranks from 1.
    pub fn algebraic(&self, square: u32) -> String {
        let file = (b'a' + self.file_of(square) as u8) as char;
        format!("{}{}", file, self.rank_of(square) + 1)
    }

    /// Inverse of [`BoardSpec::algebraic`]. Returns `None` for squares off
    /// this board.
    pub fn parse_algebraic(&self, name: &str) -> Option<u32> {
        let mut chars = name.chars();
        let file_ch = chars.next()?;
        let file = (file_ch as u32).checked_sub('a' as u32)?;
        let rank: u32 = chars.as_str().parse().ok()?;
        if file >= self.width || rank == 0 || rank > self.height {
            return None;
        }
        Some(self.square_at(file, rank - 1))
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

impl FromStr for BoardSpec {
    type Err = Error;

    /// Parses `WIDTHxHEIGHT`, e.g. `8x8` or `1x6`. The separator may be
    /// `x` or `X`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let syntax = || Error::BoardSyntax {
            input: s.to_string(),
        };
        let (w, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(syntax)?;
        let width: u64 = w.parse().map_err(|_| syntax())?;
        let height: u64 = h.parse().map_err(|_| syntax())?;
        if width == 0 || height == 0 || width > MAX_BOARD_DIM as u64 || height > MAX_BOARD_DIM as u64
        {
            return Err(Error::BoardDimensions {
                width,
                height,
                max: MAX_BOARD_DIM,
            });
        }
        BoardSpec::new(width as u32, height as u32)
    }
}
