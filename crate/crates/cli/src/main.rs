//! `piecespace` — search-space arithmetic for chess piece sets.
//!
//! Every subcommand reads a piece-set string like `KNNNNvkq` (White
//! letters, `v`, Black letters), prints human-readable text by default and
//! a stable JSON object with `--json`, and exits 0 on success, 1 on
//! usage/parse errors, 2 on domain errors (failed validation, exceeded
//! enumeration budget). Data goes to stdout, diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use piecespace::counting::{
    decimal_string, effort_ratio, multiset_placements, DEFAULT_RATIO_PRECISION,
};
use piecespace::enumerate::{count_legal_by_enumeration, enumerate_placements};
use piecespace::notation::{format_piece_set, parse_piece_set, serialize_placement};
use piecespace::sampling::estimate_legal_fraction;
use piecespace::symmetry::count_classes;
use piecespace::{BigCount, BoardSpec, Color, PieceSet, Role, SymmetryClass};

#[derive(Parser)]
#[command(
    name = "piecespace",
    version,
    about = "Exact and estimated search-space sizes for chess piece sets",
    after_help = "Piece-set strings put White's letters before the 'v' separator and Black's \
                  after it, from K, Q, R, B, N, P (case-insensitive): KNNNNvkq is a White king \
                  and four knights against a Black king and queen."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SetInput {
    /// Piece-set string, e.g. KNNNNvkq
    #[arg(
        value_name = "SET",
        required_unless_present = "batch",
        conflicts_with = "batch"
    )]
    set: Option<String>,

    /// Read piece sets from FILE (one per line, '#' starts a comment) and
    /// emit one result line per input line
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StmArg {
    #[value(name = "w", alias = "white")]
    White,
    #[value(name = "b", alias = "black")]
    Black,
}

impl From<StmArg> for Color {
    fn from(arg: StmArg) -> Color {
        match arg {
            StmArg::White => Color::White,
            StmArg::Black => Color::Black,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "id", alias = "identity")]
    Identity,
    R180,
    C4,
    D4,
}

impl From<GroupArg> for SymmetryClass {
    fn from(arg: GroupArg) -> SymmetryClass {
        match arg {
            GroupArg::Identity => SymmetryClass::Identity,
            GroupArg::R180 => SymmetryClass::R180,
            GroupArg::C4 => SymmetryClass::C4,
            GroupArg::D4 => SymmetryClass::D4,
        }
    }
}

fn parse_board(text: &str) -> Result<BoardSpec, String> {
    text.parse().map_err(|e: piecespace::Error| e.to_string())
}

fn parse_bigcount(text: &str) -> Result<BigCount, String> {
    text.parse()
        .map_err(|_| format!("{text:?} is not a non-negative integer"))
}

#[derive(Subcommand)]
enum Command {
    /// Exact number of distinct placements of SET on the board
    Count {
        #[command(flatten)]
        input: SetInput,
        /// Board size as WIDTHxHEIGHT
        #[arg(long, default_value = "8x8", value_parser = parse_board)]
        board: BoardSpec,
        /// Multiply by 2 to count side to move as part of the position
        /// (tablebase-style totals); off by default to match placement-only
        /// counting
        #[arg(long)]
        stm_factor: bool,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Stream every distinct placement of SET, one per line (small spaces)
    Enumerate {
        /// Piece-set string, e.g. KNNvk
        #[arg(value_name = "SET")]
        set: String,
        /// Board size as WIDTHxHEIGHT
        #[arg(long, default_value = "8x8", value_parser = parse_board)]
        board: BoardSpec,
        /// Stop after N placements
        #[arg(long, value_name = "N")]
        limit: Option<u64>,
        /// Attach this side to move to every serialized placement
        #[arg(long, value_name = "w|b")]
        stm: Option<StmArg>,
        /// Emit one JSON object per placement instead of bare strings
        #[arg(long)]
        json: bool,
    },
    /// Exact legal and total placement counts by exhaustive enumeration
    /// (8x8 boards, small sets)
    LegalExact {
        #[command(flatten)]
        input: SetInput,
        /// Side to move
        #[arg(long, value_name = "w|b")]
        stm: StmArg,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Estimate the legal fraction of SET's space by seeded Monte Carlo
    /// sampling (8x8 boards)
    LegalSample {
        #[command(flatten)]
        input: SetInput,
        /// Number of samples to draw
        #[arg(long, value_name = "N")]
        samples: u64,
        /// Seed for the deterministic sampler
        #[arg(long, value_name = "SEED")]
        seed: u64,
        /// Two-sided confidence level for the Wilson interval
        #[arg(long, default_value_t = 0.95)]
        confidence: f64,
        /// Side to move
        #[arg(long, value_name = "w|b")]
        stm: StmArg,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Count placements up to board symmetry (Burnside classes)
    Classes {
        #[command(flatten)]
        input: SetInput,
        /// Board size as WIDTHxHEIGHT
        #[arg(long, default_value = "8x8", value_parser = parse_board)]
        board: BoardSpec,
        /// Symmetry group; defaults to c4 on square boards, r180 otherwise
        #[arg(long, value_enum, value_name = "id|r180|c4|d4")]
        group: Option<GroupArg>,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Effort ratio: positions examined over the total space of SET
    Ratio {
        #[command(flatten)]
        input: SetInput,
        /// Number of positions examined (arbitrary precision)
        #[arg(long, value_name = "N", value_parser = parse_bigcount)]
        examined: BigCount,
        /// Board size as WIDTHxHEIGHT
        #[arg(long, default_value = "8x8", value_parser = parse_board)]
        board: BoardSpec,
        /// Significant figures in the rendered decimals
        #[arg(long, default_value_t = DEFAULT_RATIO_PRECISION)]
        precision: u32,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
}

/// A terminal failure: exit code plus the message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<piecespace::Error> for Failure {
    fn from(err: piecespace::Error) -> Failure {
        Failure {
            code: if err.is_syntax() { 1 } else { 2 },
            message: err.to_string(),
        }
    }
}

fn error_kind(err: &piecespace::Error) -> &'static str {
    if err.is_syntax() {
        "parse"
    } else {
        "domain"
    }
}

/// One computed result, ready for any of the three output shapes.
struct Rendered {
    json: Value,
    human: HumanForm,
    /// terse single-line form used by batch mode
    compact: String,
}

enum HumanForm {
    /// a single bare value (the `count` output)
    Bare(String),
    /// aligned `key  value` lines
    Table(Vec<(&'static str, String)>),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help / --version arrive here too; those are not failures
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count {
            input,
            board,
            stm_factor,
            json,
        } => dispatch(input, json, move |set| {
            let mut placements = multiset_placements(&board, set);
            if stm_factor {
                placements *= 2u32;
            }
            let digits = placements.to_string();
            Ok(Rendered {
                json: json!({
                    "set": format_piece_set(set),
                    "board": board.to_string(),
                    "stm_factor": stm_factor,
                    "placements": digits,
                }),
                compact: digits.clone(),
                human: HumanForm::Bare(digits),
            })
        }),

        Command::Enumerate {
            set,
            board,
            limit,
            stm,
            json,
        } => run_enumerate(&set, board, limit, stm.map(Color::from), json),

        Command::LegalExact { input, stm, json } => {
            let stm = Color::from(stm);
            dispatch(input, json, move |set| {
                let board = BoardSpec::standard();
                let (legal, total) = count_legal_by_enumeration(&board, set, stm)?;
                let fraction = decimal_string(&legal, &total, DEFAULT_RATIO_PRECISION);
                Ok(Rendered {
                    json: json!({
                        "set": format_piece_set(set),
                        "board": board.to_string(),
                        "stm": stm.name(),
                        "legal": legal.to_string(),
                        "total": total.to_string(),
                        "fraction": fraction,
                    }),
                    compact: format!("legal={legal} total={total} fraction={fraction}"),
                    human: HumanForm::Table(vec![
                        ("set", format_piece_set(set)),
                        ("board", board.to_string()),
                        ("stm", stm.name().to_string()),
                        ("legal", legal.to_string()),
                        ("total", total.to_string()),
                        ("fraction", fraction),
                    ]),
                })
            })
        }

        Command::LegalSample {
            input,
            samples,
            seed,
            confidence,
            stm,
            json,
        } => {
            let stm = Color::from(stm);
            dispatch(input, json, move |set| {
                let board = BoardSpec::standard();
                let estimate =
                    estimate_legal_fraction(&board, set, samples, seed, confidence, stm)?;
                Ok(Rendered {
                    json: json!({
                        "set": estimate.set,
                        "board": board.to_string(),
                        "stm": stm.name(),
                        "samples": estimate.samples,
                        "legal_hits": estimate.legal_hits,
                        "point_estimate": estimate.point_estimate,
                        "ci_low": estimate.ci_low,
                        "ci_high": estimate.ci_high,
                        "confidence": estimate.confidence,
                        "seed": estimate.seed,
                        "rng_algorithm": estimate.rng_algorithm,
                        "total_placements": estimate.total_placements.to_string(),
                        "estimated_legal_count": estimate.estimated_legal_count,
                    }),
                    compact: format!(
                        "estimate={} ci=[{},{}] hits={} samples={} seed={}",
                        estimate.point_estimate,
                        estimate.ci_low,
                        estimate.ci_high,
                        estimate.legal_hits,
                        estimate.samples,
                        estimate.seed
                    ),
                    human: HumanForm::Table(vec![
                        ("set", estimate.set.clone()),
                        ("board", board.to_string()),
                        ("stm", stm.name().to_string()),
                        ("samples", estimate.samples.to_string()),
                        ("legal_hits", estimate.legal_hits.to_string()),
                        ("point_estimate", estimate.point_estimate.to_string()),
                        ("ci_low", estimate.ci_low.to_string()),
                        ("ci_high", estimate.ci_high.to_string()),
                        ("confidence", estimate.confidence.to_string()),
                        ("seed", estimate.seed.to_string()),
                        ("rng_algorithm", estimate.rng_algorithm.to_string()),
                        ("total_placements", estimate.total_placements.to_string()),
                        ("estimated_legal_count", estimate.estimated_legal_count.clone()),
                    ]),
                })
            })
        }

        Command::Classes {
            input,
            board,
            group,
            json,
        } => dispatch(input, json, move |set| {
            let class = group
                .map(SymmetryClass::from)
                .unwrap_or_else(|| SymmetryClass::default_for(&board));
            if set.contains_role(Role::Pawn) && class != SymmetryClass::Identity {
                eprintln!(
                    "warning: {class} symmetry ignores pawn direction; class counts for \
                     pawned sets are geometric only"
                );
            }
            let classes = count_classes(&board, set, class)?;
            let placements = multiset_placements(&board, set);
            Ok(Rendered {
                json: json!({
                    "set": format_piece_set(set),
                    "board": board.to_string(),
                    "group": class.name(),
                    "classes": classes.to_string(),
                    "placements": placements.to_string(),
                }),
                compact: format!("classes={classes} placements={placements} group={class}"),
                human: HumanForm::Table(vec![
                    ("set", format_piece_set(set)),
                    ("board", board.to_string()),
                    ("group", class.name().to_string()),
                    ("classes", classes.to_string()),
                    ("placements", placements.to_string()),
                ]),
            })
        }),

        Command::Ratio {
            input,
            examined,
            board,
            precision,
            json,
        } => dispatch(input, json, move |set| {
            let total = multiset_placements(&board, set);
            let ratio = effort_ratio(&examined, &total, precision)?;
            Ok(Rendered {
                json: json!({
                    "set": format_piece_set(set),
                    "board": board.to_string(),
                    "numerator": ratio.numerator.to_string(),
                    "denominator": ratio.denominator.to_string(),
                    "rendered": ratio.rendered,
                    "percent": ratio.percent,
                    "precision": ratio.precision,
                }),
                compact: format!("percent={}% rendered={}", ratio.percent, ratio.rendered),
                human: HumanForm::Table(vec![
                    ("set", format_piece_set(set)),
                    ("board", board.to_string()),
                    ("examined", ratio.numerator.to_string()),
                    ("total", ratio.denominator.to_string()),
                    ("ratio", ratio.rendered.clone()),
                    ("percent", format!("{}%", ratio.percent)),
                ]),
            })
        }),
    }
}

/// Runs a per-set command either on the single SET argument or over every
/// line of the batch file.
fn dispatch(
    input: SetInput,
    json: bool,
    run_one: impl Fn(&PieceSet) -> Result<Rendered, piecespace::Error>,
) -> Result<(), Failure> {
    match (&input.set, &input.batch) {
        (Some(text), None) => {
            let set = parse_piece_set(text)?;
            print_single(run_one(&set)?, json);
            Ok(())
        }
        (None, Some(path)) => run_batch(path, json, run_one),
        // clap enforces exactly one of the two
        _ => unreachable!("SET and --batch are mutually exclusive and one is required"),
    }
}

fn print_single(rendered: Rendered, json: bool) {
    if json {
        println!("{}", rendered.json);
        return;
    }
    match rendered.human {
        HumanForm::Bare(value) => println!("{value}"),
        HumanForm::Table(rows) => {
            let width = rows.iter().map(|(key, _)| key.len()).max().unwrap_or(0);
            for (key, value) in rows {
                println!("{key:width$}  {value}");
            }
        }
    }
}

/// Batch mode: output line i corresponds to non-comment input line i, and
/// per-line failures become error lines in the data stream rather than
/// aborting the run. Exit code reflects the first failing line.
fn run_batch(
    path: &Path,
    json: bool,
    run_one: impl Fn(&PieceSet) -> Result<Rendered, piecespace::Error>,
) -> Result<(), Failure> {
    let contents = fs::read_to_string(path).map_err(|err| Failure {
        code: 1,
        message: format!("cannot read batch file {}: {err}", path.display()),
    })?;

    let mut results: Vec<(String, Result<Rendered, piecespace::Error>)> = Vec::new();
    for raw_line in contents.lines() {
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let outcome = parse_piece_set(line).and_then(|set| run_one(&set));
        results.push((line.to_string(), outcome));
    }

    let mut failure: Option<u8> = None;
    let label_width = results.iter().map(|(label, _)| label.len()).max().unwrap_or(0);
    for (label, outcome) in &results {
        match outcome {
            Ok(rendered) if json => println!("{}", rendered.json),
            Ok(rendered) => println!("{label:label_width$}  {}", rendered.compact),
            Err(err) => {
                if json {
                    println!(
                        "{}",
                        json!({
                            "input": label,
                            "error": { "kind": error_kind(err), "message": err.to_string() },
                        })
                    );
                } else {
                    println!("{label:label_width$}  error({}): {err}", error_kind(err));
                }
                let code = if err.is_syntax() { 1 } else { 2 };
                failure.get_or_insert(code);
            }
        }
    }

    match failure {
        None => Ok(()),
        Some(code) => Err(Failure {
            code,
            message: "one or more batch lines failed (see output)".to_string(),
        }),
    }
}

fn run_enumerate(
    set_text: &str,
    board: BoardSpec,
    limit: Option<u64>,
    stm: Option<Color>,
    json: bool,
) -> Result<(), Failure> {
    let set = parse_piece_set(set_text)?;
    let stream = enumerate_placements(&board, &set, limit)?;
    for (index, placement) in stream.enumerate() {
        let placement = match stm {
            Some(color) => placement.with_side_to_move(color),
            None => placement,
        };
        let text = serialize_placement(&placement);
        if json {
            println!("{}", json!({ "index": index as u64, "placement": text }));
        } else {
            println!("{text}");
        }
    }
    Ok(())
}
