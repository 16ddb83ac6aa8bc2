//! Command-line front end over the verification reports.
//!
//! Exit codes: 0 when every structural identity holds (recorded
//! values may still disagree), 1 when an identity fails, 2 for bad
//! usage or malformed input files.

mod input;
mod output;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, ensure, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use kervaire_core::jones::JonesData;
use kervaire_core::mfldcoh::{double_cover_betti, wang_betti};
use kervaire_core::quadform::FormError;
use kervaire_core::report::Report;
use kervaire_core::verify;

/// Recomputes the finite checks behind a thirty-dimensional Arf
/// invariant construction: GF(2) homology, intersection forms and
/// their quadratic refinements, characteristic numbers of fibered
/// manifolds, and exact octonion frame identities.
#[derive(Parser)]
#[command(name = "kervaire", version)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Aligned rows with a summary line
    Text,
    /// Versioned JSON, byte-stable across runs with equal inputs
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Every suite merged into one report
    Report {
        /// Seed for the sampled octonion checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Square relations rewritten in the admissible basis
    Adem {
        /// Single relation index, 1 through 6
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
        j: Option<u32>,
        /// First index kept in the sum, 0 or 1; both when omitted
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1))]
        start_index: Option<u32>,
    },
    /// Betti numbers of the fibered 30-manifold
    JonesBetti,
    /// Middle intersection form and the catalogued product cycles
    JonesGram,
    /// Restricted Arf invariant from a quadratic assignment table
    JonesArf {
        /// TOML table of q values; the bundled default when omitted
        #[arg(long, value_name = "FILE")]
        q_table: Option<PathBuf>,
    },
    /// Characteristic-number reduction through the 15-dimensional models
    Reduction {
        /// Value taken for the flagged geometric input
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        geometric_input: u8,
    },
    /// Betti numbers of the double cover classified by a ring class
    Gysin {
        /// TOML file with truncations and the class pi
        file: PathBuf,
    },
    /// Betti numbers of a mapping torus from monodromy matrices
    Wang {
        /// TOML file with graded dims and one matrix per degree
        file: PathBuf,
    },
    /// Characteristic classes of a flat signed-permutation bundle
    SwFlat {
        /// TOML generator images; the recorded bundle when omitted
        file: Option<PathBuf>,
    },
    /// Octonion frame neutrality, sampled and at exact rational angles
    Octonion {
        /// Seed for the random frames
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled frames
        #[arg(long, default_value_t = verify::DEFAULT_OCTONION_SAMPLES)]
        samples: usize,
        /// Homotopy time steps, endpoints included
        #[arg(long, default_value_t = verify::DEFAULT_OCTONION_GRID)]
        grid: usize,
        /// Worst-case error bound for the sampled checks
        #[arg(long, default_value_t = verify::DEFAULT_OCTONION_TOLERANCE)]
        tolerance: f64,
        /// Number of exact rational norm-product samples
        #[arg(long, default_value_t = verify::DEFAULT_EXACT_NORM_SAMPLES)]
        exact_samples: usize,
    },
    /// Arf invariant of an explicit quadratic refinement
    Arf {
        /// TOML file with a Gram matrix and basis values
        file: PathBuf,
    },
}

fn fmt_dims(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|d| format!("{d}")).collect();
    parts.join(",")
}

fn bit(b: bool) -> String {
    String::from(if b { "1" } else { "0" })
}

fn run(cmd: Command) -> Result<(Report, Option<u64>)> {
    match cmd {
        Command::Report { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((verify::full_report(&mut rng), Some(seed)))
        }
        Command::Adem { j, start_index } => {
            let js: Vec<u32> = j.map_or_else(|| (1..=4).collect(), |j| vec![j]);
            let starts: Vec<u32> = start_index.map_or_else(|| vec![0, 1], |s| vec![s]);
            let mut r = Report::new("Admissible rewriting of the square relations");
            for &j in &js {
                for &s in &starts {
                    r.merge(verify::adem_single_report(j, s));
                }
            }
            Ok((r, None))
        }
        Command::JonesBetti => Ok((verify::betti_report(&JonesData::new()), None)),
        Command::JonesGram => {
            let data = JonesData::new();
            let mut r = Report::new("Middle intersection form and catalogued cycles");
            r.merge(verify::gram_report(&data));
            r.merge(verify::catalog_report(&data));
            Ok((r, None))
        }
        Command::JonesArf { q_table } => {
            let data = JonesData::new();
            let q = input::read_q_table(q_table.as_deref(), &data)?;
            let r = verify::arf_report(&data, &q).map_err(|e| anyhow!("{e}"))?;
            Ok((r, None))
        }
        Command::Reduction { geometric_input } => {
            Ok((verify::reduction_report(geometric_input == 1), None))
        }
        Command::Gysin { file } => {
            let (ring, pi) = input::read_gysin(&file)?;
            let betti = double_cover_betti(&ring, &pi).map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("Double cover classified by a ring class");
            let dims = fmt_dims(&ring.dims());
            r.identity(
                "gysin/base-dims",
                true,
                dims.clone(),
                dims,
                "graded dimensions of the input ring",
            );
            let cover = fmt_dims(&betti);
            r.identity(
                "gysin/cover-betti",
                true,
                cover.clone(),
                cover,
                "kernel and cokernel of multiplication by the class",
            );
            Ok((r, None))
        }
        Command::Wang { file } => {
            let data = input::read_wang(&file)?;
            let betti = wang_betti(&data);
            let mut r = Report::new("Mapping torus of a graded self-map");
            let dims = fmt_dims(data.dims());
            r.identity(
                "wang/fiber-dims",
                true,
                dims.clone(),
                dims,
                "graded dimensions of the fiber",
            );
            let torus = fmt_dims(&betti);
            r.identity(
                "wang/torus-betti",
                true,
                torus.clone(),
                torus,
                "long exact sequence of the fibration over the circle",
            );
            Ok((r, None))
        }
        Command::SwFlat { file } => match file {
            None => Ok((verify::flat_report(), None)),
            Some(path) => {
                let (pres, orth) = input::read_flat(&path)?;
                Ok((verify::flat_custom_report(&pres, &orth), None))
            }
        },
        Command::Octonion {
            seed,
            samples,
            grid,
            tolerance,
            exact_samples,
        } => {
            ensure!(grid >= 2, "grid needs both endpoints, got {grid}");
            ensure!(tolerance > 0.0, "tolerance must be positive");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = verify::octonion_report(&mut rng, samples, grid, tolerance, exact_samples);
            Ok((r, Some(seed)))
        }
        Command::Arf { file } => {
            let space = input::read_arf(&file)?;
            let arf = space.arf().map_err(|e| anyhow!("{e}"))?;
            let mut r = Report::new("Arf invariant of a quadratic refinement");
            let dim = format!("{}", space.dim());
            r.identity(
                "form/dimension",
                true,
                dim.clone(),
                dim,
                "nondegenerate alternating space",
            );
            r.identity(
                "form/arf",
                true,
                bit(arf),
                bit(arf),
                "sum of q(a) q(b) over a symplectic basis",
            );
            match space.arf_count_oracle() {
                Ok(oracle) => r.identity(
                    "form/count-oracle",
                    oracle == arf,
                    bit(oracle),
                    bit(arf),
                    "majority count of q zeros",
                ),
                Err(FormError::TooLarge { dim, max }) => {
                    let msg = format!("skipped, dimension {dim} above the limit {max}");
                    r.identity(
                        "form/count-oracle",
                        true,
                        msg.clone(),
                        msg,
                        "exhaustive oracle bounded",
                    );
                }
                Err(e) => return Err(anyhow!("{e}")),
            }
            Ok((r, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command) {
        Ok((report, seed)) => {
            let mut stdout = io::stdout().lock();
            let rendered = match cli.format {
                Format::Text => output::render_text(&report, &mut stdout),
                Format::Machine => output::render_machine(&report, seed, &mut stdout),
            };
            if let Err(e) = rendered {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            // Timing goes to stderr so stdout stays byte-stable.
            if matches!(cli.format, Format::Text) {
                eprintln!("elapsed {:.2?}", started.elapsed());
            }
            if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
