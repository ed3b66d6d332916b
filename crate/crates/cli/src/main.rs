//! `symmetria` command-line tool.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit status for computation errors; clap uses 2 for usage errors.
const EXIT_COMPUTATION: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "symmetria",
    version,
    about = "Reflection-symmetry measures of convex polygons"
)]
pub struct Cli {
    /// Print the report as JSON with sorted keys.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Measure axiality, central symmetry or folding symmetry of a polygon.
    Measure(MeasureArgs),
    /// Generate a polygon from one of the built-in families.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Inscribe a rectangle of given area ratio in a centrally symmetric polygon.
    InscribeRect(InscribeArgs),
    /// Cross-check analytic results against numeric engines.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Run the exact certificate or the folding-program search.
    Certify {
        #[command(subcommand)]
        what: CertifyCmd,
    },
    /// Closed-form bounds.
    Bounds {
        #[command(subcommand)]
        what: BoundsCmd,
    },
    /// Simulated annealing for polygons of low axiality.
    Search(SearchArgs),
    /// Draw a polygon, optionally with a measured symmetry, as SVG.
    Render(RenderArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Measure {
    Axiality,
    Central,
    Folding,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[arg(value_enum)]
    pub measure: Measure,
    /// Polygon JSON file: {"vertices": [[x, y], ...]}.
    #[arg(long)]
    pub polygon: PathBuf,
    /// Angle grid size.
    #[arg(long)]
    pub angles: Option<usize>,
    /// Offset tolerance as a fraction of the diameter.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write an SVG drawing here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    /// The quadrilateral family approaching (1+√2)/3.
    Quad {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parallelogram (0,0), (1,0), (1+d1,h), (d1,h).
    Parallelogram {
        #[arg(long)]
        d1: f64,
        #[arg(long)]
        h: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular polygon centered at the origin.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        circumradius: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convex hull of uniform points in the unit square.
    Random {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random centrally symmetric polygon with 2·half vertices.
    RandomCs {
        #[arg(long)]
        half: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct InscribeArgs {
    #[arg(long)]
    pub polygon: PathBuf,
    /// Rectangle area as a fraction of the polygon area, in (0, 1/2].
    #[arg(long)]
    pub ratio: f64,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Analytic overlap formulas of the quadrilateral family against numeric oracles.
    AppendixB {
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.01, 0.05])]
        epsilon: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// The 4/9 fold construction, on one polygon or a seeded suite.
    CsFold {
        #[arg(long, conflicts_with_all = ["suite", "seed"])]
        polygon: Option<PathBuf>,
        /// Number of random centrally symmetric polygons.
        #[arg(long, requires = "seed")]
        suite: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Residuals of the folding program at a point, or at the built-in corner points.
    ProgramConstraints {
        /// JSON object with the program variables; missing ones are zero.
        #[arg(long)]
        point: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "standard")]
        variant: VariantArg,
        /// Fill in t, v1, v2, y1, y2 from their defining equations.
        #[arg(long)]
        complete: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VariantArg {
    Standard,
    Obtuse,
}

#[derive(Subcommand, Debug)]
pub enum CertifyCmd {
    /// Exact verification of the axial lower bound (2/41)(10+3√2).
    #[command(name = "theorem-1-1")]
    Theorem11,
    /// Sampling search over the folding program.
    FoldingSearch {
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundsCmd {
    /// One row per dimension n = 2..=n-max.
    Table {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 4)]
    pub vertices: usize,
    #[arg(long, default_value_t = 20_000)]
    pub iters: u64,
    /// Seeds as an inclusive range `a..b` or a comma list.
    #[arg(long)]
    pub seeds: String,
    /// Start every chain from this polygon instead of the regular polygon.
    #[arg(long)]
    pub start: Option<PathBuf>,
    #[arg(long)]
    pub temperature: Option<f64>,
    #[arg(long)]
    pub cooling: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    /// Write the best polygon here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Draw the best polygon with its mirror line.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[arg(long)]
    pub polygon: PathBuf,
    /// Measure to draw; without it only the body is drawn.
    #[arg(long, value_enum)]
    pub measure: Option<Measure>,
    #[arg(long)]
    pub out: PathBuf,
}

fn configure_threads() {
    if let Some(n) = std::env::var("SYMMETRIA_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let start = Instant::now();
    match commands::run(&cli.command) {
        Ok(out) => {
            let report = output::CommandReport {
                command: out.command,
                inputs: out.inputs,
                result: out.result,
                wall_time: start.elapsed().as_secs_f64(),
            };
            if cli.json {
                println!("{}", output::to_json(&report));
            } else {
                print!("{}", output::to_text(&report, &out.text));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                println!("{}", output::error_json(&e));
            }
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(EXIT_COMPUTATION)
        }
    }
}
