//! Command-line front end for `chevlab`.
//!
//! Every subcommand builds a [`Task`]; campaign files are lists of the same
//! tasks, so a subcommand and a one-task campaign produce the same record.
//!
//! Exit codes: 0 when every verdict is true or informational, 1 when some
//! verdict is false, 2 on validation or execution errors.

pub mod campaign;
pub mod tasks;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use chevlab::rootsystem::{MainLemmaCase, RootSystemType};
use chevlab::subgroupenum::Statement;

pub use campaign::{Campaign, CampaignReport};
pub use tasks::{GeneratorKind, Task, TaskReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chevlab", version, about = "Relative commutator calculus for rank-2 Chevalley groups")]
struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    timings: bool,
    /// Seed for sampled checks (default 1); overrides a campaign's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symbolic and exhaustive checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Brute-force subgroup comparison over Z/n.
    Bruteforce(BruteArgs),
    /// Structure constants N_{α,β,i,j} of a system.
    DumpConstants {
        #[arg(long = "type")]
        ty: RootSystemType,
    },
    /// Generator words of E(Φ,R,I) or of the mixed commutator subgroup.
    DumpGenerators {
        #[arg(long = "type")]
        ty: RootSystemType,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal_i: u64,
        #[arg(long)]
        ideal_j: Option<u64>,
        #[arg(long, value_enum, default_value_t = GeneratorKind::Mixed)]
        kind: GeneratorKind,
    },
    /// Print explicit factorizations.
    #[command(subcommand)]
    Factorize(FactorizeCmd),
    /// Run or print task lists.
    #[command(subcommand)]
    Campaign(CampaignCmd),
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Steinberg relations in the matrix representations.
    Steinberg {
        #[arg(long = "type")]
        ty: Option<RootSystemType>,
    },
    /// Sign normalizations reproducing the displayed commutator formulas.
    Chevalley {
        #[arg(long = "type")]
        ty: Option<RootSystemType>,
    },
    /// Certified factorization of z_α(ξζ, η); symbolic without --ring.
    MainLemma {
        #[arg(long)]
        case: Option<MainLemmaCase>,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        ideal_i: Option<u64>,
        #[arg(long)]
        ideal_j: Option<u64>,
        /// Check every root the case applies to.
        #[arg(long)]
        all_roots: bool,
    },
    /// Short root elements as products of long root elements.
    LongRoot {
        #[arg(long = "type")]
        ty: Option<RootSystemType>,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        ideal: Option<u64>,
    },
    /// Sampled [L_r(I), U_r(J)] ≤ U_r(IJ) for r = 1, 2 and both sides.
    Levi {
        #[arg(long = "type")]
        ty: RootSystemType,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal_i: u64,
        #[arg(long)]
        ideal_j: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
struct BruteArgs {
    #[arg(long)]
    stmt: Statement,
    #[arg(long = "type")]
    ty: RootSystemType,
    #[arg(long)]
    ring: String,
    #[arg(long)]
    ideal_i: u64,
    #[arg(long)]
    ideal_j: u64,
    /// Maximum number of subgroup elements.
    #[arg(long)]
    bound: Option<u64>,
    /// Maximum number of congruence candidates tested.
    #[arg(long)]
    candidate_bound: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum FactorizeCmd {
    MainLemma {
        #[arg(long)]
        case: MainLemmaCase,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    LongRoot {
        #[arg(long = "type")]
        ty: RootSystemType,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        ideal: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CampaignCmd {
    /// Validate every task, then run them in order.
    Run { file: PathBuf },
    /// Print the reference campaign.
    Default,
}

impl Command {
    fn into_task(self) -> Option<Task> {
        Some(match self {
            Command::Verify(v) => match v {
                VerifyCmd::Steinberg { ty } => Task::VerifySteinberg { ty },
                VerifyCmd::Chevalley { ty } => Task::VerifyChevalley { ty },
                VerifyCmd::MainLemma { case, ring, ideal_i, ideal_j, all_roots } => {
                    Task::VerifyMainLemma { case, ring, ideal_i, ideal_j, all_roots }
                }
                VerifyCmd::LongRoot { ty, ring, ideal } => Task::VerifyLongRoot { ty, ring, ideal },
                VerifyCmd::Levi { ty, ring, ideal_i, ideal_j, samples } => {
                    Task::VerifyLevi { ty, ring, ideal_i, ideal_j, samples }
                }
            },
            Command::Bruteforce(b) => Task::Bruteforce {
                stmt: b.stmt,
                ty: b.ty,
                ring: b.ring,
                ideal_i: b.ideal_i,
                ideal_j: b.ideal_j,
                bound: b.bound,
                candidate_bound: b.candidate_bound,
            },
            Command::DumpConstants { ty } => Task::DumpConstants { ty },
            Command::DumpGenerators { ty, ring, ideal_i, ideal_j, kind } => {
                Task::DumpGenerators { ty, ring, ideal_i, ideal_j, kind }
            }
            Command::Factorize(FactorizeCmd::MainLemma { case, ring, root, xi, zeta, eta }) => {
                Task::FactorizeMainLemma { case, ring, root, xi, zeta, eta }
            }
            Command::Factorize(FactorizeCmd::LongRoot { ty, ring, ideal, root, xi }) => {
                Task::FactorizeLongRoot { ty, ring, ideal, root, xi }
            }
            Command::Campaign(_) => return None,
        })
    }
}

/// Sizes the rayon pool from `CHEVLAB_THREADS` when set.
fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("CHEVLAB_THREADS") {
        let n: usize = v.parse().map_err(|_| format!("CHEVLAB_THREADS={v} is not a thread count"))?;
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn emit(value: &impl serde::Serialize, path: Option<&PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn exit_code(reports: &[TaskReport]) -> i32 {
    if reports.iter().any(TaskReport::errored) {
        EXIT_ERROR
    } else if reports.iter().any(TaskReport::failed) {
        EXIT_FALSE
    } else {
        EXIT_OK
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return EXIT_ERROR;
    }
    let result = match cli.command {
        Command::Campaign(CampaignCmd::Default) => emit(&Campaign::reference(), cli.report.as_ref()).map(|_| EXIT_OK),
        Command::Campaign(CampaignCmd::Run { file }) => Campaign::load(&file)
            .map(|mut c| {
                c.seed = cli.seed.unwrap_or(c.seed);
                c.output = cli.report.clone().or(c.output);
                c
            })
            .and_then(|c| c.validate().map(|_| c))
            .and_then(|c| {
                let report = c.run(cli.timings);
                emit(&report, c.output.as_ref()).map(|_| exit_code(&report.tasks))
            }),
        cmd => {
            let task = cmd.into_task().expect("non-campaign command");
            task.validate().and_then(|_| {
                let report = task.run(cli.seed.unwrap_or(1), cli.timings);
                emit(&report, cli.report.as_ref()).map(|_| exit_code(std::slice::from_ref(&report)))
            })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
