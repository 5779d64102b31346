//! Text forms: piece-set strings, chess-set validation, and the FEN-style
//! placement serialization.
//!
//! Piece-set grammar: `<white letters> 'v' <black letters>`, letters from
//! K, Q, R, B, N, P. Parsing is case-insensitive and the separator position
//! alone decides color; canonical output uppercases White and lowercases
//! Black. `v` is reserved for the separator (it is not a piece letter in any
//! standard notation), so the grammar is unambiguous.

use std::fmt;

use crate::board::BoardSpec;
use crate::error::Error;
use crate::piece::{Color, PieceKind, PieceSet, Role};
use crate::placement::Placement;

/// Parses a piece-set string such as `KNNNNvkq`.
///
/// Either side may be empty (`v` is the empty set); repeated letters
/// aggregate into multiplicities. Positions in errors are 1-based.
pub fn parse_piece_set(text: &str) -> Result<PieceSet, Error> {
    let mut set = PieceSet::new();
    let mut seen_separator = false;
    for (idx, ch) in text.chars().enumerate() {
        let position = idx + 1;
        if ch == 'v' || ch == 'V' {
            if seen_separator {
                return Err(Error::MultipleSeparators { position });
            }
            seen_separator = true;
            continue;
        }
        let role = Role::from_letter(ch).ok_or(Error::InvalidPieceLetter {
            letter: ch,
            position,
        })?;
        let color = if seen_separator {
            Color::Black
        } else {
            Color::White
        };
        set.add(PieceKind::new(color, role), 1);
    }
    if !seen_separator {
        return Err(Error::MissingSeparator);
    }
    Ok(set)
}

/// Canonical rendering: White uppercase, `v`, Black lowercase, each side in
/// K, Q, R, B, N, P order with repetition. Round-trips through
/// [`parse_piece_set`].
pub fn format_piece_set(set: &PieceSet) -> String {
    let mut out = String::new();
    for (kind, count) in set.entries().filter(|(k, _)| k.color == Color::White) {
        for _ in 0..count {
            out.push(kind.role.letter());
        }
    }
    out.push('v');
    for (kind, count) in set.entries().filter(|(k, _)| k.color == Color::Black) {
        for _ in 0..count {
            out.push(kind.role.letter().to_ascii_lowercase());
        }
    }
    out
}

/// A way in which a piece set fails to be a standard chess set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetViolation {
    MissingKing(Color),
    MultipleKings(Color),
    TooManyPawns(Color),
    TooManyPieces { total: u32 },
}

impl fmt::Display for SetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetViolation::MissingKing(c) => write!(f, "missing-king ({c})"),
            SetViolation::MultipleKings(c) => write!(f, "multiple-kings ({c})"),
            SetViolation::TooManyPawns(c) => write!(f, "too-many-pawns ({c})"),
            SetViolation::TooManyPieces { total } => {
                write!(f, "too-many-pieces (total {total} > 64)")
            }
        }
    }
}

/// Checks the cheap arithmetic conditions for a standard chess set: exactly
/// one king per color, at most 8 pawns per color, at most 64 pieces total.
/// Returns every violation; an empty list means the set is acceptable.
pub fn validate_chess_set(set: &PieceSet) -> Vec<SetViolation> {
    let mut violations = Vec::new();
    for color in [Color::White, Color::Black] {
        match set.multiplicity(PieceKind::new(color, Role::King)) {
            0 => violations.push(SetViolation::MissingKing(color)),
            1 => {}
            _ => violations.push(SetViolation::MultipleKings(color)),
        }
    }
    for color in [Color::White, Color::Black] {
        if set.multiplicity(PieceKind::new(color, Role::Pawn)) > 8 {
            violations.push(SetViolation::TooManyPawns(color));
        }
    }
    let total = set.total_pieces();
    if total > 64 {
        violations.push(SetViolation::TooManyPieces { total });
    }
    violations
}

/// [`validate_chess_set`] as a gate: `Err(Error::InvalidChessSet)` when any
/// violation exists.
pub fn ensure_valid_chess_set(set: &PieceSet) -> Result<(), Error> {
    let violations = validate_chess_set(set);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidChessSet(violations))
    }
}

/// Serializes a placement as the board field of FEN, top rank first, with
/// the side-to-move field appended when present.
///
/// Empty runs longer than 9 squares (possible on wide boards) render as a
/// bracketed length, e.g. `[12]`; 8x8 output is therefore exactly standard
/// FEN. The encoding is injective per board and [`parse_placement`] inverts
/// it.
pub fn serialize_placement(placement: &Placement) -> String {
    let board = placement.board();
    let mut out = String::new();
    for rank in (0..board.height()).rev() {
        let mut run = 0u32;
        for file in 0..board.width() {
            match placement.kind_at(board.square_at(file, rank)) {
                None => run += 1,
                Some(kind) => {
                    push_run(&mut out, run);
                    run = 0;
                    out.push(kind.letter());
                }
            }
        }
        push_run(&mut out, run);
        if rank > 0 {
            out.push('/');
        }
    }
    if let Some(color) = placement.side_to_move() {
        out.push(' ');
        out.push(color.letter());
    }
    out
}

fn push_run(out: &mut String, run: u32) {
    if run == 0 {
        return;
    }
    if run <= 9 {
        out.push(char::from_digit(run, 10).unwrap());
    } else {
        out.push('[');
        out.push_str(&run.to_string());
        out.push(']');
    }
}

/// Parses the output of [`serialize_placement`], inferring the board from
/// the rank structure. Accepts an optional trailing ` w` / ` b` side to
/// move.
pub fn parse_placement(text: &str) -> Result<Placement, Error> {
    let syntax = |message: &str| Error::PlacementSyntax {
        message: message.to_string(),
    };
    let (board_part, side_to_move) = match text.split_once(' ') {
        None => (text, None),
        Some((board_part, "w")) => (board_part, Some(Color::White)),
        Some((board_part, "b")) => (board_part, Some(Color::Black)),
        Some((_, other)) => {
            return Err(Error::PlacementSyntax {
                message: format!("side to move must be 'w' or 'b', got {other:?}"),
            })
        }
    };
    if board_part.is_empty() {
        return Err(syntax("empty board field"));
    }

    // Decode each rank to (file, kind) pairs before any square math; the
    // board is only known once every rank width agrees.
    let mut ranks: Vec<Vec<(u32, PieceKind)>> = Vec::new();
    let mut width = None;
    for rank_text in board_part.split('/') {
        let mut pieces = Vec::new();
        let mut file = 0u32;
        let mut chars = rank_text.chars().peekable();
        while let Some(ch) = chars.next() {
            if let Some(digit) = ch.to_digit(10) {
                if digit == 0 {
                    return Err(syntax("empty-run length cannot be 0"));
                }
                file += digit;
            } else if ch == '[' {
                let mut digits = String::new();
                let mut closed = false;
                for c in chars.by_ref() {
                    if c == ']' {
                        closed = true;
                        break;
                    }
                    digits.push(c);
                }
                if !closed {
                    return Err(syntax("unterminated bracketed run length"));
                }
                let run: u32 = digits
                    .parse()
                    .map_err(|_| syntax("malformed bracketed run length"))?;
                if run == 0 {
                    return Err(syntax("empty-run length cannot be 0"));
                }
                file += run;
            } else if let Some(kind) = PieceKind::from_letter(ch) {
                pieces.push((file, kind));
                file += 1;
            } else {
                return Err(Error::PlacementSyntax {
                    message: format!("unexpected character {ch:?} in rank"),
                });
            }
        }
        match width {
            None => width = Some(file),
            Some(w) if w != file => {
                return Err(Error::PlacementSyntax {
                    message: format!("rank widths disagree: {w} vs {file}"),
                })
            }
            Some(_) => {}
        }
        ranks.push(pieces);
    }

    let width = width.unwrap_or(0);
    let height = ranks.len() as u32;
    if width == 0 {
        return Err(syntax("board has zero width"));
    }
    let board = BoardSpec::new(width, height)?;
    let mut assignments = Vec::new();
    for (row, pieces) in ranks.iter().enumerate() {
        let rank = height - 1 - row as u32;
        for &(file, kind) in pieces {
            assignments.push((board.square_at(file, rank), kind));
        }
    }
    Placement::new(board, assignments, side_to_move)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reference_sets() {
        let set = parse_piece_set("KNNNNvkq").unwrap();
        assert_eq!(set.multiplicity(PieceKind::white(Role::King)), 1);
        assert_eq!(set.multiplicity(PieceKind::white(Role::Knight)), 4);
        assert_eq!(set.multiplicity(PieceKind::black(Role::King)), 1);
        assert_eq!(set.multiplicity(PieceKind::black(Role::Queen)), 1);
        assert_eq!(set.total_pieces(), 7);

        let set = parse_piece_set("KQRbvkqr").unwrap();
        assert_eq!(set.multiplicity(PieceKind::white(Role::Bishop)), 1);
        assert_eq!(set.total_pieces(), 7);

        // color comes from the separator position, not from letter case
        let set = parse_piece_set("KNNNNvKRR").unwrap();
        assert_eq!(set.multiplicity(PieceKind::black(Role::King)), 1);
        assert_eq!(set.multiplicity(PieceKind::black(Role::Rook)), 2);
        assert_eq!(set.total_pieces(), 8);
        assert_eq!(format_piece_set(&set), "KNNNNvkrr");
    }

    #[test]
    fn parse_errors_name_the_offender() {
        assert_eq!(
            parse_piece_set("KXvk"),
            Err(Error::InvalidPieceLetter {
                letter: 'X',
                position: 2
            })
        );
        assert_eq!(parse_piece_set("KQk"), Err(Error::MissingSeparator));
        assert_eq!(parse_piece_set(""), Err(Error::MissingSeparator));
        assert_eq!(
            parse_piece_set("KvkVq"),
            Err(Error::MultipleSeparators { position: 4 })
        );
        assert_eq!(
            parse_piece_set("K vk"),
            Err(Error::InvalidPieceLetter {
                letter: ' ',
                position: 2
            })
        );
    }

    #[test]
    fn formats_canonically() {
        // mixed case normalizes; output order is K,Q,R,B,N,P per side
        let set = parse_piece_set("nKnvNqk").unwrap();
        assert_eq!(format_piece_set(&set), "KNNvkqn");
        assert_eq!(format_piece_set(&PieceSet::new()), "v");
        assert_eq!(parse_piece_set("v").unwrap(), PieceSet::new());
    }

    #[test]
    fn chess_set_gate() {
        assert!(validate_chess_set(&parse_piece_set("KNNNNvkq").unwrap()).is_empty());
        assert_eq!(
            validate_chess_set(&parse_piece_set("KKvk").unwrap()),
            vec![SetViolation::MultipleKings(Color::White)]
        );
        assert_eq!(
            validate_chess_set(&parse_piece_set("Qvk").unwrap()),
            vec![SetViolation::MissingKing(Color::White)]
        );
        assert_eq!(
            validate_chess_set(&parse_piece_set("KPPPPPPPPPvk").unwrap()),
            vec![SetViolation::TooManyPawns(Color::White)]
        );
        assert!(ensure_valid_chess_set(&parse_piece_set("Kvk").unwrap()).is_ok());
        assert!(matches!(
            ensure_valid_chess_set(&parse_piece_set("Kvq").unwrap()),
            Err(Error::InvalidChessSet(_))
        ));
    }

    #[test]
    fn serializes_reference_placements() {
        let board = BoardSpec::standard();
        assert_eq!(
            serialize_placement(&Placement::empty(board)),
            "8/8/8/8/8/8/8/8"
        );

        let p = Placement::new(
            board,
            vec![
                (0, PieceKind::white(Role::King)),
                (1, PieceKind::white(Role::Knight)),
            ],
            None,
        )
        .unwrap();
        assert_eq!(serialize_placement(&p), "8/8/8/8/8/8/8/KN6");
        assert_eq!(
            serialize_placement(&p.clone().with_side_to_move(Color::White)),
            "8/8/8/8/8/8/8/KN6 w"
        );

        let tiny = BoardSpec::new(1, 1).unwrap();
        let king = Placement::new(tiny, vec![(0, PieceKind::white(Role::King))], None).unwrap();
        assert_eq!(serialize_placement(&king), "K");
    }

    #[test]
    fn wide_boards_use_bracketed_runs() {
        let board = BoardSpec::new(12, 1).unwrap();
        assert_eq!(serialize_placement(&Placement::empty(board)), "[12]");
        let p = Placement::new(board, vec![(10, PieceKind::black(Role::Knight))], None).unwrap();
        assert_eq!(serialize_placement(&p), "[10]n1");
        assert_eq!(parse_placement("[10]n1").unwrap(), p);
    }

    #[test]
    fn placement_parse_round_trips() {
        for text in [
            "8/8/8/8/8/8/8/KN6 w",
            "8/8/8/8/8/8/8/8",
            "K",
            "4k3/8/8/3Q4/8/8/8/4K3 b",
            "[12]",
            "[10]n1",
            "2/2/2",
        ] {
            let p = parse_placement(text).unwrap();
            assert_eq!(serialize_placement(&p), text);
        }
    }

    #[test]
    fn placement_parse_rejects_malformed_text() {
        assert!(parse_placement("8/8").is_ok()); // 8x2 board is fine
        assert!(parse_placement("8/7").is_err()); // widths disagree
        assert!(parse_placement("9x/8").is_err());
        assert!(parse_placement("8/8 x").is_err());
        assert!(parse_placement("[0]").is_err());
        assert!(parse_placement("0").is_err());
        assert!(parse_placement("[12").is_err());
        assert!(parse_placement("").is_err());
        // 17 ranks exceeds the dimension guardrail
        let tall = vec!["1"; 17].join("/");
        assert!(matches!(
            parse_placement(&tall),
            Err(Error::BoardDimensions { .. })
        ));
    }
}
