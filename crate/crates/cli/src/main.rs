use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use wcarg::io::InputFormat;
use wcarg::principles::SampleSpec;
use wcarg::task::{self, OutputFormat, ReportSpec, SolveSpec, TaskOutput, TaskSpec};
use wcarg::{Config, Execution, Semantics, DEFAULT_MAX_ARGS};

#[derive(Parser)]
#[command(
    name = "wcarg",
    version,
    about = "Solve argumentation frameworks under labelling semantics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tgf,
    Apx,
}

#[derive(Subcommand)]
enum Command {
    /// Solve PROBLEM-SEMANTICS (e.g. EE-WCO, DC-UBGR, SE-BBU-CO) on a framework file
    Solve {
        task: String,
        /// Query argument for DC and DS
        #[arg(short = 'a', long = "arg")]
        query: Option<String>,
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "tgf")]
        format: Format,
        /// Refuse exhaustive computations above this many arguments (0 disables the limit)
        #[arg(long, default_value_t = DEFAULT_MAX_ARGS)]
        max_args: usize,
        /// Wall-clock budget in seconds
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Run on the current thread only
        #[arg(long)]
        sequential: bool,
    },
    /// Check principles over random frameworks plus the bundled ones
    Report {
        /// Comma-separated semantics codes
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "GR,CO,PR,ST,WCO,WPR,UBGR,UBPR,BBU-CO,BBU-GR,BBU-PR"
        )]
        semantics: Vec<String>,
        /// Largest sampled framework
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Edge probabilities, used in rotation
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.3,0.5")]
        p: Vec<f64>,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest pure cycle for the cycle-homogeneity check
        #[arg(long, default_value_t = 7)]
        max_cycle: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        sequential: bool,
    },
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn build(cli: Cli) -> Result<TaskSpec, wcarg::Error> {
    Ok(match cli.command {
        Command::Solve {
            task: name,
            query,
            file,
            format,
            max_args,
            timeout,
            json: _,
            text,
            sequential,
        } => {
            let (problem, semantics) = task::parse_task_name(&name)?;
            let mut config = Config::default()
                .with_max_args((max_args > 0).then_some(max_args))
                .with_execution(execution(sequential));
            if let Some(secs) = timeout {
                let budget = Duration::try_from_secs_f64(secs)
                    .map_err(|_| wcarg::Error::Invalid(format!("bad timeout {secs}")))?;
                config = config.with_timeout(budget);
            }
            TaskSpec::Solve(SolveSpec {
                problem,
                semantics,
                query,
                input: file,
                format: match format {
                    Format::Tgf => InputFormat::Tgf,
                    Format::Apx => InputFormat::Apx,
                },
                output: if text {
                    OutputFormat::Text
                } else {
                    OutputFormat::Json
                },
                config,
            })
        }
        Command::Report {
            semantics,
            n,
            p,
            samples,
            seed,
            max_cycle,
            json,
            sequential,
        } => TaskSpec::Report(ReportSpec {
            semantics: semantics
                .iter()
                .map(|s| s.parse::<Semantics>())
                .collect::<Result<_, _>>()?,
            sample: SampleSpec {
                max_n: n,
                probabilities: p,
                samples,
                seed,
                max_cycle_len: max_cycle,
            },
            output: if json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
            config: Config::default().with_execution(execution(sequential)),
        }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match build(cli) {
        Ok(spec) => task::run_task(&spec),
        Err(e) => TaskOutput::from_error(&e),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
