//! `ovals`: analyze schemes, run censuses, plan totally real pencils.
//!
//! Exit codes: 0 pass, 1 prohibited (or not totally real), 2 input error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ovals_core::filters::BoundsTable;
use ovals_core::{
    analyze, census, parse_scheme, plan_punching_card, AnalyzeOptions, CurveClass, Error, PencilPlan,
    Strategy, DEFAULT_ENUMERATION_CAP,
};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "ovals", version, about = "Nesting schemes of real plane curves of even degree")]
struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every enabled filter on one scheme.
    Analyze {
        /// Scheme notation, e.g. "1<5>+5".
        scheme: String,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        filters: FilterFlags,
    },
    /// Run the filters on every scheme with the Harnack number of ovals.
    Census {
        #[arg(long)]
        degree: u32,
        /// Restrict to M-schemes (the default).
        #[arg(long, conflicts_with = "ovals")]
        m_curves: bool,
        /// Census schemes with this many ovals instead of M.
        #[arg(long)]
        ovals: Option<usize>,
        /// Largest oval count the enumeration accepts.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[command(flatten)]
        filters: FilterFlags,
    },
    /// Distribute basepoints of a pencil of degree m-2 over the ovals of an M-curve.
    PlanPencil {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::Paired, conflicts_with = "assignment")]
        strategy: StrategyArg,
        /// Explicit basepoints per oval, comma separated.
        #[arg(long, value_delimiter = ',')]
        assignment: Option<Vec<u64>>,
    },
    /// Upper bounds on the Euler characteristic for one degree.
    Bounds {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Debug, Clone, Copy, Args)]
struct FilterFlags {
    /// Enable the Gudkov-Rohlin congruence mod 8 (M-schemes).
    #[arg(long)]
    mod8: bool,
    /// Declare the curve symmetric; enables the congruence mod 16.
    #[arg(long)]
    symmetric: bool,
    /// Report the pencil index budget (heuristic, never decisive).
    #[arg(long)]
    index_heuristic: bool,
    /// Declare the curve dividing; enables Arnold and Rohlin below M.
    #[arg(long)]
    dividing: bool,
}

impl From<FilterFlags> for AnalyzeOptions {
    fn from(f: FilterFlags) -> Self {
        AnalyzeOptions {
            dividing: f.dividing,
            mod8: f.mod8,
            symmetric: f.symmetric,
            index_heuristic: f.index_heuristic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Paired,
    Concentrated,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Paired => Strategy::Paired,
            StrategyArg::Concentrated => Strategy::Concentrated,
        }
    }
}

const EXIT_PASS: u8 = 0;
const EXIT_PROHIBITED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            if let (
                Error::Syntax { pos, .. } | Error::ZeroCount { pos } | Error::SchemeTooLarge { pos, .. },
                Command::Analyze { scheme, .. },
            ) = (&err, &cli.command)
            {
                eprintln!("  {scheme}");
                eprintln!("  {}^", " ".repeat(scheme[..*pos].chars().count()));
            }
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Analyze { scheme, degree, filters } => {
            let curve = CurveClass::new(*degree)?;
            let scheme = parse_scheme(scheme)?;
            let report = analyze(&scheme, &curve, &(*filters).into());
            emit(cli.json, &report, || render::report(&report, &curve));
            Ok(if report.is_prohibited() { EXIT_PROHIBITED } else { EXIT_PASS })
        }
        Command::Census { degree, m_curves: _, ovals, cap, filters } => {
            let curve = CurveClass::new(*degree)?;
            let ovals = ovals.unwrap_or_else(|| curve.harnack());
            let result = census(&curve, ovals, &(*filters).into(), *cap)?;
            emit(cli.json, &result, || render::census(&result));
            Ok(EXIT_PASS)
        }
        Command::PlanPencil { degree, strategy, assignment } => {
            let plan = match assignment {
                Some(a) => PencilPlan::custom(*degree, a.clone())?,
                None => {
                    let curve = CurveClass::new(*degree)?;
                    plan_punching_card(*degree, curve.harnack(), (*strategy).into())?
                }
            };
            let report = plan.report();
            emit(cli.json, &report, || render::plan(&report));
            Ok(if report.totally_real { EXIT_PASS } else { EXIT_PROHIBITED })
        }
        Command::Bounds { degree } => {
            let table = BoundsTable::new(&CurveClass::new(*degree)?);
            emit(cli.json, &table, || render::bounds(&table));
            Ok(EXIT_PASS)
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else {
        print!("{}", text());
    }
}
