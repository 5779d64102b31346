//! Piece kinds and multisets of pieces.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    /// Lowercase one-letter tag, `w` or `b`.
    pub fn letter(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Black => "black",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Piece roles in canonical order: K, Q, R, B, N, P.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    King,
    Queen,
    Rook,
    Bishop,
    Knight,
    Pawn,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::King,
        Role::Queen,
        Role::Rook,
        Role::Bishop,
        Role::Knight,
        Role::Pawn,
    ];

    /// Uppercase letter for the role.
    pub fn letter(self) -> char {
        match self {
            Role::King => 'K',
            Role::Queen => 'Q',
            Role::Rook => 'R',
            Role::Bishop => 'B',
            Role::Knight => 'N',
            Role::Pawn => 'P',
        }
    }

    /// Case-insensitive inverse of [`Role::letter`].
    pub fn from_letter(c: char) -> Option<Role> {
        match c.to_ascii_uppercase() {
            'K' => Some(Role::King),
            'Q' => Some(Role::Queen),
            'R' => Some(Role::Rook),
            'B' => Some(Role::Bishop),
            'N' => Some(Role::Knight),
            'P' => Some(Role::Pawn),
            _ => None,
        }
    }
}

/// A colored piece kind. Two pieces of the same kind are indistinguishable
/// for counting purposes.
///
/// Kinds order canonically: all White before all Black, and K, Q, R, B, N, P
/// within a color. Every serialization and sampling path iterates in this
/// order, which is what makes outputs deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PieceKind {
    pub color: Color,
    pub role: Role,
}

impl PieceKind {
    pub fn new(color: Color, role: Role) -> Self {
        PieceKind { color, role }
    }

    pub fn white(role: Role) -> Self {
        PieceKind::new(Color::White, role)
    }

    pub fn black(role: Role) -> Self {
        PieceKind::new(Color::Black, role)
    }

    /// FEN-style letter: uppercase for White, lowercase for Black.
    pub fn letter(self) -> char {
        match self.color {
            Color::White => self.role.letter(),
            Color::Black => self.role.letter().to_ascii_lowercase(),
        }
    }

    /// Inverse of [`PieceKind::letter`]; the letter case decides the color.
    pub fn from_letter(c: char) -> Option<PieceKind> {
        let role = Role::from_letter(c)?;
        let color = if c.is_ascii_uppercase() {
            Color::White
        } else {
            Color::Black
        };
        Some(PieceKind { color, role })
    }
}

impl Ord for PieceKind {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.color, self.role).cmp(&(other.color, other.role))
    }
}

impl PartialOrd for PieceKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multiset of piece kinds with positive multiplicities.
///
/// The empty set is allowed; chess-specific constraints (exactly one king a
/// side and so on) are a separate, explicit validation gate in
/// [`crate::notation::validate_chess_set`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PieceSet {
    entries: BTreeMap<PieceKind, u32>,
}

impl PieceSet {
    pub fn new() -> Self {
        PieceSet::default()
    }

    /// Builds a set from `(kind, multiplicity)` pairs, summing repeats and
    /// ignoring zero multiplicities.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (PieceKind, u32)>,
    {
        let mut set = PieceSet::new();
        for (kind, count) in entries {
            set.add(kind, count);
        }
        set
    }

    /// Adds `count` pieces of `kind`. Adding zero is a no-op.
    pub fn add(&mut self, kind: PieceKind, count: u32) {
        if count > 0 {
            *self.entries.entry(kind).or_insert(0) += count;
        }
    }

    /// Entries in canonical order (White K..P, then Black K..P).
    pub fn entries(&self) -> impl Iterator<Item = (PieceKind, u32)> + '_ {
        self.entries.iter().map(|(k, m)| (*k, *m))
    }

    pub fn multiplicity(&self, kind: PieceKind) -> u32 {
        self.entries.get(&kind).copied().unwrap_or(0)
    }

    pub fn total_pieces(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn distinct_kinds(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_role(&self, role: Role) -> bool {
        self.entries.keys().any(|k| k.role == role)
    }

    /// The set expanded to one entry per piece, in canonical order.
    pub fn expansion(&self) -> Vec<PieceKind> {
        let mut out = Vec::with_capacity(self.total_pieces() as usize);
        for (kind, count) in self.entries() {
            for _ in 0..count {
                out.push(kind);
            }
        }
        out
    }
}
