//! Seeded uniform sampling of placements and Monte Carlo estimation of the
//! legal fraction of a piece set's search space.
//!
//! Reproducibility contract: sample `i` of a run draws from a ChaCha8
//! stream cipher keyed by the user seed with the stream counter set to `i`,
//! and consumes uniform integers produced by Lemire's unbiased rejection
//! method to drive a partial Fisher-Yates shuffle of the square array. The
//! whole procedure is identified by [`RNG_ALGORITHM`] and recorded in every
//! result, so an estimate is a pure function of its inputs no matter how
//! samples are scheduled.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::board::BoardSpec;
use crate::counting::{decimal_string, multiset_placements};
use crate::error::Error;
use crate::legality::is_legal;
use crate::notation::{ensure_valid_chess_set, format_piece_set};
use crate::piece::{Color, PieceSet};
use crate::placement::Placement;
use crate::BigCount;

/// Identifier of the sampling procedure, recorded in every estimate.
pub const RNG_ALGORITHM: &str = "chacha8-stream-per-sample/lemire-partial-shuffle/v1";

/// Number of significant figures used to render the estimated legal count.
pub const ESTIMATE_RENDER_PRECISION: u32 = 4;

/// The generator for sample `sample_index` of a run seeded with `seed`.
///
/// Per-sample derivation by stream counter (rather than one long sequence)
/// makes the estimate independent of evaluation order, so samples may be
/// fanned out across workers without changing any result.
pub fn sample_rng(seed: u64, sample_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample_index);
    rng
}

/// Uniform integer in `[0, bound)` by Lemire's multiply-shift rejection
/// method; unbiased for every bound.
fn uniform_below(rng: &mut impl RngCore, bound: u32) -> u32 {
    debug_assert!(bound > 0);
    loop {
        let wide = rng.next_u32() as u64 * bound as u64;
        let low = wide as u32;
        if low >= bound || low >= bound.wrapping_neg() % bound {
            return (wide >> 32) as u32;
        }
    }
}

/// Draws one placement uniformly over all `multiset_placements(board, set)`
/// distinct placements.
///
/// A partial Fisher-Yates shuffle draws an ordered tuple of distinct
/// squares uniformly; assigning the canonical expansion of the set to the
/// tuple in order then maps exactly `multiplicity_divisor(set)` equally
/// likely tuples onto each distinct placement, so the result is uniform.
pub fn sample_uniform_placement(
    board: &BoardSpec,
    set: &PieceSet,
    rng: &mut impl RngCore,
) -> Result<Placement, Error> {
    let squares = board.squares();
    let pieces = set.total_pieces();
    if pieces > squares {
        return Err(Error::TooManyPieces { pieces, squares });
    }
    let mut pool: Vec<u32> = (0..squares).collect();
    for i in 0..pieces {
        let j = i + uniform_below(rng, squares - i);
        pool.swap(i as usize, j as usize);
    }
    let assignments = pool[..pieces as usize]
        .iter()
        .zip(set.expansion())
        .map(|(&square, kind)| (square, kind))
        .collect();
    Placement::new(*board, assignments, None)
}

/// Wilson score interval for `hits` successes in `samples` trials at the
/// given two-sided confidence level. Behaves sensibly near 0 and 1, unlike
/// the plain normal approximation.
pub fn wilson_interval(hits: u64, samples: u64, confidence: f64) -> (f64, f64) {
    debug_assert!(samples > 0);
    let n = samples as f64;
    let p = hits as f64 / n;
    let z = Normal::new(0.0, 1.0)
        .unwrap()
        .inverse_cdf(0.5 + confidence / 2.0);
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let radius = z * ((p * (1.0 - p)) / n + z2 / (4.0 * n * n)).sqrt();
    let low = ((center - radius) / denom).clamp(0.0, p);
    let high = ((center + radius) / denom).clamp(p, 1.0);
    (low, high)
}

/// A reproducible Monte Carlo estimate of the legal fraction of a piece
/// set's placement space.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateResult {
    /// Canonical piece-set string the estimate is about.
    pub set: String,
    pub side_to_move: Color,
    pub samples: u64,
    pub legal_hits: u64,
    /// Exactly `legal_hits / samples`.
    pub point_estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub confidence: f64,
    pub seed: u64,
    pub rng_algorithm: &'static str,
    /// Exact total placement count of the set.
    pub total_placements: BigCount,
    /// `point_estimate * total_placements`, rendered exactly at
    /// [`ESTIMATE_RENDER_PRECISION`] significant figures.
    pub estimated_legal_count: String,
}

/// Estimates the fraction of legal placements by drawing `samples` seeded
/// uniform placements and testing each with [`is_legal`].
pub fn estimate_legal_fraction(
    board: &BoardSpec,
    set: &PieceSet,
    samples: u64,
    seed: u64,
    confidence: f64,
    side_to_move: Color,
) -> Result<EstimateResult, Error> {
    ensure_valid_chess_set(set)?;
    if !board.is_standard() {
        return Err(Error::BoardNotStandard {
            width: board.width(),
            height: board.height(),
        });
    }
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::ConfidenceOutOfRange(confidence));
    }

    let mut legal_hits = 0u64;
    for sample_index in 0..samples {
        let mut rng = sample_rng(seed, sample_index);
        let placement =
            sample_uniform_placement(board, set, &mut rng)?.with_side_to_move(side_to_move);
        if is_legal(&placement)?.is_legal() {
            legal_hits += 1;
        }
    }

    let point_estimate = legal_hits as f64 / samples as f64;
    let (ci_low, ci_high) = wilson_interval(legal_hits, samples, confidence);
    let total_placements = multiset_placements(board, set);
    let estimated_legal_count = decimal_string(
        &(BigCount::from(legal_hits) * &total_placements),
        &BigCount::from(samples),
        ESTIMATE_RENDER_PRECISION,
    );
    Ok(EstimateResult {
        set: format_piece_set(set),
        side_to_move,
        samples,
        legal_hits,
        point_estimate,
        ci_low,
        ci_high,
        confidence,
        seed,
        rng_algorithm: RNG_ALGORITHM,
        total_placements,
        estimated_legal_count,
    })
}
