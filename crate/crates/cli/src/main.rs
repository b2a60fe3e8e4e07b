mod corpus;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use aode::analysis::{classify, IndicialData, Point};
use aode::engine::{polynomial_solutions, rational_solutions, SolveOptions};
use aode::frontend::{
    parse_equation, parse_rat, parse_upoly, render_analysis, render_classification,
    render_diffpoly, render_report, to_json, AnalysisJson, ClassificationJson, SolutionJson,
};
use aode::Error;

const EXIT_INCOMPLETE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "aode",
    version,
    about = "Classify algebraic ODEs and find their polynomial and rational solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Noncriticality, maximal comparability and pole candidates
    Classify {
        equation: String,
        #[arg(long)]
        json: bool,
    },
    /// Polynomial or rational solutions
    Solve {
        equation: String,
        #[arg(long, value_enum, default_value_t = SolveMode::Poly)]
        mode: SolveMode,
        #[arg(long)]
        json: bool,
        /// Pole order / degree used where the indicial polynomial vanishes
        #[arg(long, value_name = "K")]
        order_cap: Option<u64>,
    },
    /// Supports, Newton data, indicial polynomial and bounds at one place
    Analyze {
        equation: String,
        #[command(flatten)]
        place: PlaceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Aggregate classification statistics over a corpus file
    Stats {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Poly,
    Rational,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PlaceArgs {
    /// A rational point, e.g. 0 or -1/2
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// An irreducible polynomial in x, e.g. "x^2 + 1"
    #[arg(long, allow_hyphen_values = true)]
    factor: Option<String>,
    #[arg(long)]
    infinity: bool,
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::Cap(_) => EXIT_CAP,
        Error::VerificationFailed(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Classify { equation, json } => {
            let f = parse_equation(&equation)?;
            let c = classify(&f)?;
            if json {
                print!("{}", to_json(&ClassificationJson::from(&c)));
            } else {
                println!("equation: {}", render_diffpoly(&f));
                print!("{}", render_classification(&c));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            equation,
            mode,
            json,
            order_cap,
        } => {
            let f = parse_equation(&equation)?;
            let opts = SolveOptions {
                order_cap,
                ..SolveOptions::default()
            };
            let report = match mode {
                SolveMode::Poly => polynomial_solutions(&f, &opts)?,
                SolveMode::Rational => rational_solutions(&f, &opts)?,
            };
            if json {
                print!("{}", to_json(&SolutionJson::from(&report)));
            } else {
                println!("equation: {}", render_diffpoly(&f));
                print!("{}", render_report(&report));
            }
            Ok(if report.complete {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INCOMPLETE)
            })
        }
        Command::Analyze {
            equation,
            place,
            json,
        } => {
            let f = parse_equation(&equation)?;
            let pt = if let Some(p) = place.point {
                Point::finite(&parse_rat(&p)?)
            } else if let Some(p) = place.factor {
                Point::factor(&parse_upoly(&p)?)?
            } else {
                Point::Infinity
            };
            let data = IndicialData::compute(&f, &pt)?;
            if json {
                print!("{}", to_json(&AnalysisJson::new(&f, &data)?));
            } else {
                println!("equation: {}", render_diffpoly(&f));
                print!("{}", render_analysis(&f, &data));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { corpus, json, jobs } => {
            let text = std::fs::read_to_string(&corpus).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", corpus.display()))
            })?;
            let stats = corpus::run(&text, jobs.max(1))?;
            if json {
                print!("{}", to_json(&stats));
            } else {
                print!("{}", stats.render());
            }
            Ok(if stats.mismatches.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INCOMPLETE)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    run(cli).unwrap_or_else(|e| fail(&e))
}
