mod commands;
mod report;
mod verify;

use std::process::ExitCode;

use ckspaces::{CkError, OmegaSignature, Tolerances};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use report::{Obj, Report};

#[derive(Parser)]
#[command(name = "ckspaces", version, about = "Cayley-Klein groups and their symmetric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Comma-separated constants w1,...,wN
    #[arg(long, value_parser = parse_signature, allow_hyphen_values = true)]
    omega: OmegaSignature,

    /// Human-readable output instead of JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure and catalog names of a signature
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Main metric at a point, with foliation and subsidiary metrics when degenerate
    Metric {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "rank1")]
        space: SpaceArg,
        #[arg(long, value_enum, default_value = "beltrami")]
        chart: ChartArg,
        /// Chart coordinates; the origin when omitted. Rank two lists eta then xi.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Option<Point>,
    },
    /// Sectional curvature samples against the expected constant
    Curvature {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "rank1")]
        space: SpaceArg,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Option<Point>,
        /// Random planes added to the coordinate planes (rank one)
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seeds: u64,
    },
    /// Run invariant suites over the canonical signatures of size N
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=6))]
        n: u64,
        /// Base seed for random words and points
        #[arg(long, default_value_t = 0)]
        seeds: u64,
        #[arg(long)]
        pretty: bool,
    },
}

/// A comma-separated coordinate list.
#[derive(Debug, Clone)]
struct Point(Vec<f64>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Rank1,
    Rank2,
}

impl SpaceArg {
    pub fn name(self) -> &'static str {
        match self {
            SpaceArg::Rank1 => "rank1",
            SpaceArg::Rank2 => "rank2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartArg {
    Beltrami,
    Parallel,
}

impl ChartArg {
    pub fn name(self) -> &'static str {
        match self {
            ChartArg::Beltrami => "beltrami",
            ChartArg::Parallel => "parallel",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(CkError),
}

impl From<CkError> for CliError {
    fn from(e: CkError) -> Self {
        CliError::Library(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(e) => match e {
                CkError::ChartDomain { .. } | CkError::SingularLocus { .. } | CkError::NoRealSolution => 3,
                CkError::DegenerateMetric | CkError::DegeneratePlane { .. } => 4,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Library(e) => e.to_string(),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| {
            let x = x.trim();
            x.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("{x:?} is not a finite number"))
        })
        .collect()
}

fn parse_point(s: &str) -> Result<Point, String> {
    parse_list(s).map(Point)
}

fn parse_signature(s: &str) -> Result<OmegaSignature, String> {
    OmegaSignature::new(parse_list(s)?).map_err(|e| e.to_string())
}

fn tolerances() -> Result<Tolerances, CliError> {
    match std::env::var("CK_TOLERANCE") {
        Err(_) => Ok(Tolerances::default()),
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(Tolerances::uniform(t)),
            _ => Err(CliError::Usage(format!("CK_TOLERANCE must be a non-negative number, got {v:?}"))),
        },
    }
}

fn run(cli: Cli) -> Result<(Report, bool, bool), CliError> {
    let tol = tolerances()?;
    Ok(match cli.command {
        Command::Classify { common } => (commands::classify(&common.omega), common.pretty, true),
        Command::Metric { common, space, chart, point } => {
            (commands::metric(&common.omega, space, chart, point.map(|p| p.0), &tol)?, common.pretty, true)
        }
        Command::Curvature { common, space, point, samples, seeds } => {
            (commands::curvature(&common.omega, space, point.map(|p| p.0), samples, seeds, &tol)?, common.pretty, true)
        }
        Command::Verify { suite, n, seeds, pretty } => {
            let n = n as usize;
            let results = verify::run(suite, n, seeds, &tol);
            let pass = results.iter().all(|(_, checks)| checks.iter().all(|c| c.pass()));
            let suites: Vec<Value> = results
                .iter()
                .map(|(name, checks)| {
                    Obj::new()
                        .set("suite", *name)
                        .set("pass", checks.iter().all(|c| c.pass()))
                        .set("checks", checks.iter().map(|c| c.to_value()).collect::<Vec<_>>())
                        .into()
                })
                .collect();
            let payload = Obj::new().set("n", n).set("seed", seeds).set("pass", pass).set("suites", suites);
            (Report { command: "verify", signature: Vec::new(), payload: payload.into() }, pretty, pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, pretty, pass)) => {
            if pretty {
                print!("{}", report.to_text());
            } else {
                println!("{}", report.to_json());
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
