//! Command-line frontend: encode/decode single tuples, stream the
//! enumerations, render the k=2 walk as a grid or SVG, and run the
//! self-test suite.
//!
//! Exit codes: 0 on success, 1 when a self-test property fails, 2 on
//! usage or input errors. All output is deterministic, LF-terminated, and
//! decimal-only; inputs must be canonical decimals (no signs, no leading
//! zeros).

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::monotone::{Dimension, MonotoneTuple, Tuple};
use crate::rank::{enumerate, rank_monotone, rank_tuple, unrank_monotone, unrank_tuple, Space};
use crate::wellorder::{verify_prefix_bijection, MonotoneCone, Naturals};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Parser)]
#[command(name = "natrank", version, about = "Exact bijections between k-tuples of naturals and naturals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the rank of a k-tuple
    Encode {
        /// Tuple arity
        #[arg(short = 'k', long = "dim", value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// Exactly k coordinates, canonical decimals
        coords: Vec<String>,
    },
    /// Print the k-tuple with the given rank
    Decode {
        /// Tuple arity
        #[arg(short = 'k', long = "dim", value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// Rank, a canonical decimal
        rank: String,
    },
    /// Stream tuples in rank order starting at rank 0
    Enumerate {
        /// Tuple arity
        #[arg(short = 'k', long = "dim", value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// How many records to emit
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long, value_enum, default_value_t = SpaceArg::Full)]
        space: SpaceArg,
    },
    /// Print the rank of (row, col) for every cell of a 2-d grid
    Grid {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cols: u64,
        /// Also write an SVG of the walk through the grid
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Check the library's own invariants and exit nonzero on failure
    Selftest {
        #[arg(long = "k-max", default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
        /// Prefix length per dimension
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Corrupt the checked stream, for exercising the failure path
        #[arg(long, hide = true, default_value_t = false)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Full,
    Cone,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Full => Space::Full,
            SpaceArg::Cone => Space::Cone,
        }
    }
}

/// Entry point for the binary; parses `std::env::args`.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(&cli.command, &mut stdout.lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Dispatch a parsed command, writing to `out`. `Ok(false)` means a
/// self-test property failed.
pub fn run<W: Write>(command: &Command, out: &mut W) -> Result<bool, CliError> {
    match command {
        Command::Encode { dim, coords } => cmd_encode(out, *dim, coords).map(|()| true),
        Command::Decode { dim, rank } => cmd_decode(out, *dim, rank).map(|()| true),
        Command::Enumerate {
            dim,
            count,
            format,
            space,
        } => cmd_enumerate(out, *dim, *count, *format, (*space).into()).map(|()| true),
        Command::Grid { rows, cols, svg } => {
            cmd_grid(out, *rows, *cols, svg.as_deref()).map(|()| true)
        }
        Command::Selftest {
            k_max,
            count,
            inject_fault,
        } => cmd_selftest(out, *k_max, *count, *inject_fault),
    }
}

/// Parse a canonical decimal natural: digits only, no sign, no leading
/// zero except in "0" itself.
fn parse_natural(s: &str) -> Result<BigUint, CliError> {
    let canonical = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit())
        && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return Err(CliError::Usage(format!(
            "{s:?} is not a canonical decimal natural"
        )));
    }
    Ok(BigUint::parse_bytes(s.as_bytes(), 10).expect("digits already validated"))
}

fn dimension(dim: u64) -> Dimension {
    Dimension::new(usize::try_from(dim).expect("dimension fits usize"))
        .expect("clap enforces dim >= 1")
}

pub fn cmd_encode<W: Write>(out: &mut W, dim: u64, coords: &[String]) -> Result<(), CliError> {
    if coords.len() as u64 != dim {
        return Err(CliError::Usage(format!(
            "expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    let coords = coords
        .iter()
        .map(|s| parse_natural(s))
        .collect::<Result<Vec<_>, _>>()?;
    let tuple = Tuple::new(coords).expect("arity checked above");
    writeln!(out, "{}", rank_tuple(&tuple))?;
    Ok(())
}

pub fn cmd_decode<W: Write>(out: &mut W, dim: u64, rank: &str) -> Result<(), CliError> {
    let rank = parse_natural(rank)?;
    writeln!(out, "{}", unrank_tuple(&rank, dimension(dim)))?;
    Ok(())
}

#[derive(Serialize)]
struct OutputRecord {
    rank: String,
    k: usize,
    tuple: Vec<String>,
}

pub fn cmd_enumerate<W: Write>(
    out: &mut W,
    dim: u64,
    count: u64,
    format: Format,
    space: Space,
) -> Result<(), CliError> {
    let k = dimension(dim);
    if format == Format::Csv {
        let header: Vec<String> = (1..=k.get()).map(|i| format!("n{i}")).collect();
        writeln!(out, "rank,{}", header.join(","))?;
    }
    let stream = enumerate(k, space);
    for (rank, tuple) in stream.take(count as usize).enumerate() {
        match format {
            Format::Plain => writeln!(out, "{rank}: {tuple}")?,
            Format::Csv => {
                let cells: Vec<String> =
                    tuple.coords().iter().map(|c| c.to_string()).collect();
                writeln!(out, "{rank},{}", cells.join(","))?;
            }
            Format::Jsonl => {
                let record = OutputRecord {
                    rank: rank.to_string(),
                    k: k.get(),
                    tuple: tuple.coords().iter().map(|c| c.to_string()).collect(),
                };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
        }
    }
    Ok(())
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// Rank of the 2-tuple (row, col).
fn grid_rank(row: u64, col: u64) -> BigUint {
    rank_tuple(&Tuple::from_u64s(&[row, col]).expect("two coordinates"))
}

/// The rows × cols table of ranks, rows = first coordinate, columns =
/// second, right-aligned on the widest cell.
pub fn grid_text(rows: u64, cols: u64) -> String {
    // rank grows in both coordinates, so the widest cell is the far corner
    let width = grid_rank(rows - 1, cols - 1).to_string().len();
    let mut text = String::new();
    for r in 0..rows {
        for c in 0..cols {
            if c > 0 {
                text.push(' ');
            }
            text.push_str(&format!("{:>width$}", grid_rank(r, c)));
        }
        text.push('\n');
    }
    text
}

/// SVG of the grid: one text label per cell, and an arrow from each cell
/// to the cell with the next-larger rank present in the window. The walk
/// leaves the window between some cells, so arrows connect cells in
/// increasing-rank order rather than only consecutive ranks.
pub fn grid_svg(rows: u64, cols: u64) -> String {
    const CELL: f64 = 48.0;
    const TRIM: f64 = 14.0;

    let mut cells: Vec<(BigUint, u64, u64)> = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            cells.push((grid_rank(r, c), r, c));
        }
    }
    cells.sort();

    let center = |r: u64, c: u64| ((c + 1) as f64 * CELL, (r + 1) as f64 * CELL);
    let width = (cols + 1) as f64 * CELL;
    let height = (rows + 1) as f64 * CELL;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(
        "  <defs>\n    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" \
         refX=\"6\" refY=\"3\" orient=\"auto\">\n      <path d=\"M0,0 L6,3 L0,6 z\"/>\n    \
         </marker>\n  </defs>\n",
    );
    for pair in cells.windows(2) {
        let (x1, y1) = center(pair[0].1, pair[0].2);
        let (x2, y2) = center(pair[1].1, pair[1].2);
        let length = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt();
        let (ux, uy) = ((x2 - x1) / length, (y2 - y1) / length);
        svg.push_str(&format!(
            "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" \
             stroke=\"black\" marker-end=\"url(#arrow)\"/>\n",
            x1 + ux * TRIM,
            y1 + uy * TRIM,
            x2 - ux * TRIM,
            y2 - uy * TRIM,
        ));
    }
    for (rank, r, c) in &cells {
        let (x, y) = center(*r, *c);
        svg.push_str(&format!(
            "  <text x=\"{x}\" y=\"{y}\" text-anchor=\"middle\" \
             dominant-baseline=\"middle\">{rank}</text>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn cmd_grid<W: Write>(
    out: &mut W,
    rows: u64,
    cols: u64,
    svg_path: Option<&Path>,
) -> Result<(), CliError> {
    out.write_all(grid_text(rows, cols).as_bytes())?;
    if let Some(path) = svg_path {
        std::fs::write(path, grid_svg(rows, cols))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

struct Failure {
    k: usize,
    detail: String,
}

/// Run the invariant checks; returns Ok(false) and a FAIL line when a
/// property does not hold.
pub fn cmd_selftest<W: Write>(
    out: &mut W,
    k_max: u64,
    count: u64,
    inject_fault: bool,
) -> Result<bool, CliError> {
    let k_max = usize::try_from(k_max).expect("k_max fits usize");
    let scope = format!("k=1..{k_max}, first {count} ranks");

    let mut oracle: Option<Failure> = None;
    let mut round_trip: Option<Failure> = None;
    let mut coherence: Option<Failure> = None;
    let mut wellorder: Option<Failure> = None;

    if !verify_prefix_bijection(&Naturals, count).passed() {
        wellorder = Some(Failure {
            k: 1,
            detail: format!("{}", verify_prefix_bijection(&Naturals, count)),
        });
    }

    for k in 1..=k_max {
        let dim = Dimension::new(k).expect("k >= 1");
        let mut chain: Vec<MonotoneTuple> = Vec::with_capacity(count as usize);
        let mut cur = MonotoneTuple::minimum(dim);
        for _ in 0..count {
            let next = cur.successor();
            chain.push(cur);
            cur = next;
        }
        if inject_fault && chain.len() >= 3 {
            chain.swap(1, 2);
        }
        let folded: Vec<Tuple> = chain.iter().map(MonotoneTuple::fold).collect();

        if oracle.is_none() {
            for (x, (m, n)) in chain.iter().zip(&folded).enumerate() {
                let rank = BigUint::from(x);
                if rank_monotone(m) != rank || unrank_monotone(&rank, dim) != *m {
                    oracle = Some(Failure {
                        k,
                        detail: format!(
                            "cone rank {x}: stream has ({m}), closed form ranks it {}",
                            rank_monotone(m)
                        ),
                    });
                    break;
                }
                if rank_tuple(n) != rank || unrank_tuple(&rank, dim) != *n {
                    oracle = Some(Failure {
                        k,
                        detail: format!(
                            "full-space rank {x}: stream has ({n}), closed form ranks it {}",
                            rank_tuple(n)
                        ),
                    });
                    break;
                }
            }
        }

        if round_trip.is_none() {
            for (x, n) in folded.iter().enumerate() {
                let back = unrank_tuple(&rank_tuple(n), dim);
                if back != *n {
                    round_trip = Some(Failure {
                        k,
                        detail: format!("rank {x}: ({n}) decoded back as ({back})"),
                    });
                    break;
                }
            }
        }

        if coherence.is_none() {
            for (x, pair) in chain.windows(2).enumerate() {
                let lo = rank_monotone(&pair[0]);
                let hi = rank_monotone(&pair[1]);
                if hi != &lo + 1u32 {
                    coherence = Some(Failure {
                        k,
                        detail: format!("step {x}: rank jumps from {lo} to {hi}"),
                    });
                    break;
                }
            }
        }

        if wellorder.is_none() {
            let report = verify_prefix_bijection(&MonotoneCone::new(dim), count);
            if !report.passed() {
                wellorder = Some(Failure {
                    k,
                    detail: format!("{report}"),
                });
            }
        }
    }

    let mut all_passed = true;
    let mut emit = |name: &str, failure: &Option<Failure>, out: &mut W| -> io::Result<()> {
        match failure {
            None => writeln!(out, "{name} ({scope}): PASS"),
            Some(f) => {
                all_passed = false;
                writeln!(out, "{name} ({scope}): FAIL at k={}: {}", f.k, f.detail)
            }
        }
    };
    emit("oracle-equivalence", &oracle, out)?;
    emit("round-trip", &round_trip, out)?;
    emit("successor-coherence", &coherence, out)?;
    emit("wellorder-prefix", &wellorder, out)?;

    if all_passed {
        writeln!(out, "all checks passed")?;
    } else {
        writeln!(out, "self-test FAILED")?;
    }
    Ok(all_passed)
}
