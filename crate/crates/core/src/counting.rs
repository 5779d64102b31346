//! Exact placement counting.
//!
//! The number of distinct ways to put a multiset of pieces on a board of
//! `S` squares is the falling factorial `S * (S-1) * ... * (S-n+1)` over the
//! piece count `n`, divided by the product of factorials of the per-kind
//! multiplicities (identical pieces are interchangeable). Everything here is
//! arbitrary-precision integer arithmetic; counting paths never touch
//! floating point, and ratio strings come from exact rational-to-decimal
//! conversion.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::board::BoardSpec;
use crate::error::Error;
use crate::piece::PieceSet;
use crate::BigCount;

/// Default number of significant figures for rendered ratios.
pub const DEFAULT_RATIO_PRECISION: u32 = 6;

/// `n!` as a [`BigCount`].
pub fn factorial(n: u64) -> BigCount {
    let mut acc = BigCount::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Falling factorial `squares * (squares-1) * ... * (squares-pieces+1)`:
/// the number of ordered ways to pick `pieces` distinct squares out of
/// `squares`. Empty products are 1; asking for more pieces than squares
/// yields 0 rather than an error.
pub fn falling_factorial(squares: u64, pieces: u64) -> BigCount {
    if pieces == 0 {
        return BigCount::one();
    }
    if pieces > squares {
        return BigCount::zero();
    }
    let mut acc = BigCount::one();
    for i in (squares - pieces + 1)..=squares {
        acc *= i;
    }
    acc
}

/// Product of `multiplicity!` over the entries of `set`: the number of
/// orderings of the expanded piece list that map to the same placement.
pub fn multiplicity_divisor(set: &PieceSet) -> BigCount {
    let mut acc = BigCount::one();
    for (_, count) in set.entries() {
        acc *= factorial(count as u64);
    }
    acc
}

/// The number of distinct placements of `set` on `board`:
/// `falling_factorial(squares, pieces) / multiplicity_divisor(set)`.
///
/// The division is always exact: the divisor divides the falling factorial
/// whenever the count is nonzero, and the zero case (more pieces than
/// squares) divides trivially.
pub fn multiset_placements(board: &BoardSpec, set: &PieceSet) -> BigCount {
    let sequences = falling_factorial(board.squares() as u64, set.total_pieces() as u64);
    let divisor = multiplicity_divisor(set);
    let (quotient, remainder) = sequences.div_rem(&divisor);
    debug_assert!(remainder.is_zero(), "multiplicity divisor must divide exactly");
    quotient
}

/// Renders `num / den` as a plain decimal string with `sig` significant
/// figures, rounding half away from zero at the last rendered digit.
/// Trailing fractional zeros are trimmed and a zero numerator renders as
/// `"0"`. Never uses scientific notation.
///
/// Panics if `den` is zero or `sig` is zero; callers validate first.
pub fn decimal_string(num: &BigCount, den: &BigCount, sig: u32) -> String {
    assert!(sig >= 1, "need at least one significant figure");
    assert!(!den.is_zero(), "denominator must be positive");
    if num.is_zero() {
        return "0".to_string();
    }
    let ten = BigCount::from(10u32);

    // Exponent e with 10^e <= num/den < 10^(e+1), found from the digit-length
    // estimate and corrected by exact comparison.
    let at_least = |e: i64| -> bool {
        // den * 10^e <= num, kept in integers for either sign of e
        if e >= 0 {
            den * ten.pow(e as u32) <= *num
        } else {
            *den <= num * ten.pow((-e) as u32)
        }
    };
    let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
    while !at_least(exp) {
        exp -= 1;
    }
    while at_least(exp + 1) {
        exp += 1;
    }

    // First `sig` significant digits, rounded half away from zero.
    let shift = sig as i64 - 1 - exp;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), den * ten.pow((-shift) as u32))
    };
    let (mut digits, remainder) = scaled_num.div_rem(&scaled_den);
    if &remainder * 2u32 >= scaled_den {
        digits += 1u32;
    }
    if digits == ten.pow(sig) {
        // 9.99... rounded up to 10.0...: one digit fewer, one power more
        digits = ten.pow(sig - 1);
        exp += 1;
    }
    let digit_str = digits.to_string();
    debug_assert_eq!(digit_str.len(), sig as usize);

    let point = exp + 1; // digits before the decimal point
    let mut out = if point >= sig as i64 {
        format!("{}{}", digit_str, "0".repeat((point - sig as i64) as usize))
    } else if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digit_str)
    } else {
        let (int_part, frac_part) = digit_str.split_at(point as usize);
        format!("{}.{}", int_part, frac_part)
    };
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

/// An exact fraction together with its rendered decimal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub numerator: BigCount,
    pub denominator: BigCount,
    /// Significant figures used for the rendered strings.
    pub precision: u32,
    /// `numerator / denominator` as a decimal string.
    pub rendered: String,
    /// `100 * numerator / denominator` as a decimal string.
    pub percent: String,
}

/// Examined-over-total effort ratio with exact decimal rendering at
/// `precision` significant figures.
pub fn effort_ratio(examined: &BigCount, total: &BigCount, precision: u32) -> Result<Ratio, Error> {
    if total.is_zero() {
        return Err(Error::ZeroRatioTotal);
    }
    let rendered = decimal_string(examined, total, precision);
    let percent = decimal_string(&(examined * 100u32), total, precision);
    Ok(Ratio {
        numerator: examined.clone(),
        denominator: total.clone(),
        precision,
        rendered,
        percent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_piece_set;
    use crate::piece::{PieceKind, Role};

    fn big(n: u64) -> BigCount {
        BigCount::from(n)
    }

    #[test]
    fn falling_factorial_basics() {
        assert_eq!(falling_factorial(6, 3), big(120));
        assert_eq!(falling_factorial(64, 0), big(1));
        assert_eq!(falling_factorial(64, 7), big(3_130_929_607_680));
        assert_eq!(falling_factorial(3, 5), big(0));
        assert_eq!(falling_factorial(0, 0), big(1));
        assert_eq!(falling_factorial(0, 1), big(0));
    }

    #[test]
    fn divisor_multiplies_factorials() {
        // three of one kind, two of another, one of a third: 3! * 2! = 12
        let set = PieceSet::from_entries([
            (PieceKind::white(Role::Pawn), 3),
            (PieceKind::white(Role::Knight), 2),
            (PieceKind::white(Role::Queen), 1),
        ]);
        assert_eq!(multiplicity_divisor(&set), big(12));

        let distinct = parse_piece_set("KQvk").unwrap();
        assert_eq!(multiplicity_divisor(&distinct), big(1));
        assert_eq!(multiplicity_divisor(&PieceSet::new()), big(1));

        // 4 knights and 2 rooks: 4! * 2! = 48
        let knnnn_krr = parse_piece_set("KNNNNvkrr").unwrap();
        assert_eq!(multiplicity_divisor(&knnnn_krr), big(48));
    }

    #[test]
    fn placement_counts_match_reference_cases() {
        let b1x6 = BoardSpec::new(1, 6).unwrap();
        let three_distinct = parse_piece_set("KQRv").unwrap();
        assert_eq!(multiset_placements(&b1x6, &three_distinct), big(120));

        let b1x8 = BoardSpec::new(1, 8).unwrap();
        let fruit = PieceSet::from_entries([
            (PieceKind::white(Role::Pawn), 3),
            (PieceKind::white(Role::Knight), 2),
            (PieceKind::white(Role::Queen), 1),
        ]);
        assert_eq!(multiset_placements(&b1x8, &fruit), big(1_680));

        let board = BoardSpec::standard();
        let knnnn_kq = parse_piece_set("KNNNNvkq").unwrap();
        assert_eq!(multiset_placements(&board, &knnnn_kq), big(130_455_400_320));

        let knnnn_krr = parse_piece_set("KNNNNvkrr").unwrap();
        assert_eq!(
            multiset_placements(&board, &knnnn_krr),
            big(3_717_978_909_120)
        );

        assert_eq!(multiset_placements(&board, &PieceSet::new()), big(1));

        // more pieces than squares degrades to zero
        let b2x2 = BoardSpec::new(2, 2).unwrap();
        let five = parse_piece_set("KQRBNv").unwrap();
        assert_eq!(multiset_placements(&b2x2, &five), big(0));
    }

    #[test]
    fn decimal_rendering_reference_strings() {
        let krr = big(3_717_978_909_120);
        // exact percent is 3.2275599978...e-6
        assert_eq!(decimal_string(&big(12_000_000), &krr, 4), "0.000003228");
        assert_eq!(decimal_string(&big(12_000_000), &krr, 5), "0.0000032276");
        assert_eq!(decimal_string(&big(12_000_000), &krr, 6), "0.00000322756");
        assert_eq!(
            decimal_string(&big(12_000_000), &krr, 10),
            "0.000003227559998"
        );

        let tablebase = big(500_000_000_000_000);
        assert_eq!(
            decimal_string(&big(13_045_540_032_000), &tablebase, 6),
            "0.0260911"
        );
        assert_eq!(
            decimal_string(&big(13_045_540_032_000), &tablebase, 5),
            "0.026091"
        );
    }

    #[test]
    fn decimal_rendering_edges() {
        assert_eq!(decimal_string(&big(0), &big(100), 6), "0");
        assert_eq!(decimal_string(&big(120), &big(1), 6), "120");
        assert_eq!(decimal_string(&big(1), &big(3), 6), "0.333333");
        assert_eq!(decimal_string(&big(2), &big(3), 6), "0.666667");
        assert_eq!(decimal_string(&big(5), &big(4), 2), "1.3"); // half away from zero
        assert_eq!(decimal_string(&big(1), &big(8), 3), "0.125");
        assert_eq!(decimal_string(&big(9999), &big(1000), 3), "10"); // carry into a new power
        assert_eq!(decimal_string(&big(95), &big(10), 1), "10");
        assert_eq!(decimal_string(&big(1_000_000), &big(1), 3), "1000000");
        assert_eq!(decimal_string(&big(1), &big(4), 6), "0.25");
    }

    #[test]
    fn effort_ratio_reference_cases() {
        let krr = big(3_717_978_909_120);
        let r = effort_ratio(&big(120_000), &krr, 5).unwrap();
        assert_eq!(r.percent, "0.0000032276");
        assert_eq!(r.rendered, "0.000000032276");

        let r = effort_ratio(&big(130_455_400_320), &big(500_000_000_000_000), 6).unwrap();
        assert_eq!(r.percent, "0.0260911");

        let r = effort_ratio(&big(0), &big(100), 6).unwrap();
        assert_eq!(r.percent, "0");
        assert_eq!(r.rendered, "0");

        assert_eq!(
            effort_ratio(&big(1), &big(0), 6),
            Err(Error::ZeroRatioTotal)
        );
    }

    #[test]
    fn rendering_is_deterministic() {
        let krr = big(3_717_978_909_120);
        let a = effort_ratio(&big(120_000), &krr, 6).unwrap();
        let b = effort_ratio(&big(120_000), &krr, 6).unwrap();
        assert_eq!(a, b);
    }
}
