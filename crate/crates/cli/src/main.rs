//! `g2roll` — command-line surface over the exact rolling-ball geometry
//! library: split-octonion algebra, incidence queries on the projectivized
//! null cone, null-triple construction, explicit automorphism transport,
//! trajectory simulation/export, quantization maps, and the seeded
//! verification suites.
//!
//! Conventions:
//! - Payload arguments are inline JSON or a path to a JSON file.
//! - Exact values render as JSON numbers when they are (64-bit) integers and
//!   as `"p/q"` strings otherwise; the input grammar accepts both, so every
//!   printed value feeds back in.
//! - Exit codes: 0 success, 1 domain error (structured `{code, message}`
//!   JSON on stdout) or failed verification, 2 usage error / malformed input.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use g2roll_core::GeomError;
use serde_json::Value;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "g2roll",
    version,
    about = "Exact split-octonion algebra and rolling-ball geometry toolkit"
)]
struct Cli {
    /// Output rendering of the result JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Compact single-line JSON.
    Json,
    /// Indented JSON.
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two algebra elements (8-vectors, basis 1, e1..e7).
    Mul { x: String, y: String },
    /// Invariant dot form of two imaginary 7-vectors.
    Dot { x: String, y: String },
    /// Cross product (half-commutator) of two imaginary 7-vectors.
    Cross { x: String, y: String },
    /// Roll distance (0..3) between two points of the projectivized null cone.
    Distance { x: String, y: String },
    /// Basis of the annihilator 3-space of a point.
    Annihilator { x: String },
    /// Null line through two points at roll distance at most one.
    Line { x: String, y: String },
    /// Unique middle point of a two-roll pair.
    Midpoint { x: String, z: String },
    /// Orbit class (X0..X3) of an ordered pair of points.
    Classify { x: String, y: String },
    /// Null-triple validation and construction.
    #[command(subcommand)]
    Triple(TripleCommand),
    /// Apartment basis of a triple: the hexagon vertices and middle vertex.
    Apartment { x: String, y: String, z: String },
    /// Explicit automorphism matrices and transport.
    #[command(subcommand)]
    G2(G2Command),
    /// Rolling-ball kinematics.
    #[command(subcommand)]
    Roll(RollCommand),
    /// Quantization maps over the complexified imaginaries.
    #[command(subcommand)]
    Quantize(QuantizeCommand),
    /// Run a seeded verification suite and print its report.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Seed for the deterministic sample streams.
        #[arg(long, env = "G2ROLL_SEED", default_value_t = 42)]
        seed: u64,
        /// Base sample count; construction-heavy checks run a fraction of it.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum TripleCommand {
    /// Check the triple laws (null, orthogonal, normalized) on three vectors.
    Validate { x: String, y: String, z: String },
    /// Complete a two-roll pair (x, y) to the unique incident triple.
    Complete { x: String, y: String },
    /// Extend a configuration to an incident triple; the case is its roll
    /// distance (0: point x; 1: one-roll pair w x; 2: two-roll pair x y;
    /// 3: three-roll pair w x).
    Extend {
        #[arg(long)]
        case: u8,
        first: String,
        second: Option<String>,
    },
}

#[derive(Subcommand)]
enum G2Command {
    /// The unique automorphism carrying one triple onto another, as an exact
    /// 7×7 matrix. Triples are arrays [x, y, z] of 7-vectors.
    FromTriples { t1: String, t2: String },
    /// Apply an automorphism (7×7 matrix, validated) to a 7-vector.
    Apply { g: String, x: String },
    /// An automorphism carrying point pair (a1, b1) onto (a2, b2); the pairs
    /// must lie in the same orbit class.
    Transport {
        a1: String,
        b1: String,
        a2: String,
        b2: String,
    },
}

#[derive(Subcommand)]
enum RollCommand {
    /// Sample one contact revolution and export it as CSV.
    Simulate {
        /// Radius ratio R of the fixed ball to the rolling ball.
        #[arg(long)]
        ratio: f64,
        /// Number of grid steps; the file gets steps + 1 data rows.
        #[arg(long)]
        steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum QuantizeCommand {
    /// Bilinear form of a section: the 7×7 complex matrix w · (e_a × e_b).
    Delta { w: String },
    /// Adjoint table recovering the cross product on basis pairs.
    Adjoint,
    /// Dot form of two 7-vectors recovered from the trace formula.
    TraceDot { a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Algebra,
    Incidence,
    Hexagon,
    Torsor,
    Ratio,
    Quantization,
}

impl SuiteArg {
    fn name(self) -> Option<&'static str> {
        match self {
            SuiteArg::All => None,
            SuiteArg::Algebra => Some("algebra"),
            SuiteArg::Incidence => Some("incidence"),
            SuiteArg::Hexagon => Some("hexagon"),
            SuiteArg::Torsor => Some("torsor"),
            SuiteArg::Ratio => Some("ratio"),
            SuiteArg::Quantization => Some("quantization"),
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => v.to_string(),
        Format::Pretty => serde_json::to_string_pretty(v).expect("serializable value"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(out) => {
            println!("{}", render(&out.value, cli.format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        // Malformed or ill-shaped payloads are usage errors; everything else
        // is a domain error with machine-readable code and message.
        Err(e) => match e {
            GeomError::InvalidInput(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            e => {
                let body = serde_json::json!({
                    "code": e.code(),
                    "message": e.to_string(),
                });
                println!("{}", render(&body, cli.format));
                ExitCode::from(1)
            }
        },
    }
}
