//! `gpkit`: command-line front end. Every invocation prints one JSON report.

mod commands;
mod input;
mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use gpkit::quadspace::{QuadSpace, Sign};

use input::parse_sign;
use report::{InputError, Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "gpkit", version, about = "Gross-Prasad data for real special orthogonal groups")]
struct Cli {
    /// Print the report on a single line.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, env = "GPKIT_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trichotomy flags of a parameter file `{"V": ..., "rep": [...]}`.
    Classify { file: PathBuf },
    /// The component group of a parameter file.
    ComponentGroup { file: PathBuf },
    /// The distinguished character of a pair file `{"phiW": ..., "phiV": ...}`.
    Chi {
        file: PathBuf,
        #[command(flatten)]
        s: Elements,
    },
    /// Root number at 1/2 of a representation or irreducible.
    Epsilon {
        file: PathBuf,
        /// Also evaluate the numeric functional-equation oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// The endoscopic reduction identity at one element.
    Dichotomy {
        file: PathBuf,
        #[command(flatten)]
        s: Elements,
    },
    /// Pure inner forms of SO(p, q) with their Kottwitz signs.
    EnumeratePureinner {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Sign of a line D; signs are then those of V_α ⊥ D.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        line: Option<Sign>,
    },
    /// Exhaustive verification sweeps.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args, Debug)]
struct Elements {
    /// Element of the W component group as a bit string, `1` meaning -1.
    #[arg(long = "sW")]
    s_w: Option<String>,
    /// Element of the V component group as a bit string, `1` meaning -1.
    #[arg(long = "sV")]
    s_v: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Union of regular classes over pure inner forms.
    Union {
        #[arg(long, default_value_t = 9)]
        max_dim: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        e0: Option<Sign>,
    },
    /// Fiber lemmas over all admissible pairs.
    Fibers {
        #[arg(long, default_value_t = 9)]
        max_dv: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        e0: Option<Sign>,
    },
    /// Endoscopic reduction identity over the reduced family.
    Dichotomy {
        #[arg(long, default_value_t = 10)]
        max_dim: u32,
        #[arg(long, default_value_t = 9)]
        max_k: u32,
    },
    /// Multiplicativity of the distinguished character over the reduced family.
    Characters {
        #[arg(long, default_value_t = 10)]
        max_dim: u32,
        #[arg(long, default_value_t = 9)]
        max_k: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::ComponentGroup { .. } => "component-group",
            Command::Chi { .. } => "chi",
            Command::Epsilon { .. } => "epsilon",
            Command::Dichotomy { .. } => "dichotomy",
            Command::EnumeratePureinner { .. } => "enumerate-pureinner",
            Command::Verify(Verify::Union { .. }) => "verify union",
            Command::Verify(Verify::Fibers { .. }) => "verify fibers",
            Command::Verify(Verify::Dichotomy { .. }) => "verify dichotomy",
            Command::Verify(Verify::Characters { .. }) => "verify characters",
        }
    }
}

fn run(command: &Command) -> Result<Outcome, InputError> {
    match command {
        Command::Classify { file } => commands::classify(file),
        Command::ComponentGroup { file } => commands::component_group(file),
        Command::Chi { file, s } => commands::chi(file, s.s_w.as_deref(), s.s_v.as_deref()),
        Command::Epsilon { file, oracle } => commands::epsilon(file, *oracle),
        Command::Dichotomy { file, s } => commands::dichotomy(file, s.s_w.as_deref(), s.s_v.as_deref()),
        Command::EnumeratePureinner { p, q, line } => {
            commands::enumerate_pure_inner(QuadSpace::new(*p, *q), *line)
        }
        Command::Verify(Verify::Union { max_dim, e0 }) => verify::union(*max_dim, *e0),
        Command::Verify(Verify::Fibers { max_dv, e0 }) => verify::fibers(*max_dv, *e0),
        Command::Verify(Verify::Dichotomy { max_dim, max_k }) => verify::dichotomy(*max_dim, *max_k),
        Command::Verify(Verify::Characters { max_dim, max_k }) => verify::characters(*max_dim, *max_k),
    }
}

fn emit(report: &Report, compact: bool) -> ExitCode {
    let _ = writeln!(std::io::stdout().lock(), "{}", report.render(compact));
    ExitCode::from(report.status.exit_code())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let compact = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let report = Report::finish("", start, Err(InputError::new(e.render().to_string().trim())));
            return emit(&report, compact);
        }
    };
    let name = cli.command.name();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            let report = Report::finish(name, start, Err(InputError::new("--jobs must be positive")));
            return emit(&report, cli.json);
        }
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let report = Report::finish(name, start, Err(InputError::new(e.to_string())));
            return emit(&report, cli.json);
        }
    };
    let outcome = pool.install(|| run(&cli.command));
    emit(&Report::finish(name, start, outcome), cli.json)
}
