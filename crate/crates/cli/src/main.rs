mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use f1qt_core::{Budget, Error};

use commands::{Output, Status};

#[derive(Parser, Debug)]
#[command(name = "f1qt", version, about = "Exact checks for quantum theory over F_{1^l}")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print the JSON payload.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print CSV (dictionary and delete prob only).
    #[arg(long, global = true)]
    csv: bool,
    /// Maximum number of candidates an enumeration may visit.
    #[arg(long, global = true, env = "F1QT_BUDGET", default_value_t = Budget::DEFAULT.0)]
    budget: u64,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elements, automorphisms and involutions of F_{1^l}.
    Field {
        #[command(subcommand)]
        action: FieldAction,
    },
    /// SUB/NTRIV flags for v -> v^{r+1} on F_{1^m}.
    Involutions {
        #[arg(long)]
        m: u32,
        /// Only this r; otherwise r = 1..=m.
        #[arg(long)]
        r: Option<u32>,
    },
    /// U(m, F_{1^{r(r+2)}}) for v -> v^{r+1}.
    UnitaryGroup {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: u32,
        /// List every element.
        #[arg(long)]
        enumerate: bool,
    },
    /// Observables H = sigma(H^T) in GL(m, F_{1^l}).
    Observables {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: u32,
        /// Use v -> v^{r+1}; otherwise the identity.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Exhaustive projective cloner search on V(m) ⊗ V(m).
    Noclone {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Use v -> v^{r+1}; otherwise the identity.
        #[arg(long)]
        r: Option<u32>,
    },
    /// The almost-unitary deletion operator.
    Delete {
        #[command(subcommand)]
        action: DeleteAction,
    },
    /// Side-by-side table of the modal and absolute theories.
    Dictionary {
        #[arg(long)]
        q: u32,
    },
    /// Run every bundled exhaustive check.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum FieldAction {
    Info {
        #[arg(long)]
        l: u32,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum DeleteAction {
    /// Print the operator.
    Build(Dims),
    /// Apply it to every ray and tally the outcomes.
    Verify(Dims),
    /// Exact success probability.
    Prob(Dims),
}

#[derive(Args, Debug, Clone, Copy)]
struct Dims {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    l: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Scope {
    Simple,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

fn dispatch(command: &Command, budget: Budget) -> f1qt_core::Result<Output> {
    use commands::*;
    match *command {
        Command::Field {
            action: FieldAction::Info { l },
        } => field_info(l, budget),
        Command::Involutions { m, r } => involutions(m, r),
        Command::UnitaryGroup { m, r, enumerate } => unitary_group(m, r, enumerate, budget),
        Command::Observables { m, l, r } => observables(m, l, r, budget),
        Command::Noclone { m, l, scope, r } => {
            let scope = match scope {
                Scope::Simple => f1qt_core::clone_delete::CloneScope::SimpleRays,
                Scope::All => f1qt_core::clone_delete::CloneScope::AllRays,
            };
            noclone(m, l, scope, r, budget)
        }
        Command::Delete { action } => match action {
            DeleteAction::Build(d) => delete_build(d.m, d.l),
            DeleteAction::Verify(d) => delete_verify(d.m, d.l),
            DeleteAction::Prob(d) => delete_prob(d.m, d.l),
        },
        Command::Dictionary { q } => dictionary(q),
        Command::Selftest => selftest(),
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match (cli.global.json, cli.global.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.workers)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start workers: {e}");
            return ExitCode::from(EXIT_INVARIANT);
        }
    };

    let start = Instant::now();
    let result = pool.install(|| dispatch(&cli.command, Budget(cli.global.budget)));
    let elapsed = start.elapsed().as_millis();

    match result {
        Ok(output) => {
            let body = match format {
                Format::Json => Some(output.json),
                Format::Csv => output.csv,
                Format::Text => Some(output.text),
            };
            let Some(body) = body else {
                eprintln!("error: --csv is only available for `dictionary` and `delete prob`");
                return ExitCode::from(EXIT_USAGE);
            };
            print!("{body}");
            if !body.ends_with('\n') {
                println!();
            }
            eprintln!("status: {} ({elapsed} ms)", output.status.as_str());
            match output.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Counterexample => ExitCode::from(EXIT_INVARIANT),
            }
        }
        Err(err) => {
            let code = exit_code(&err);
            if let Error::BudgetExceeded { required, budget } = err {
                if format == Format::Json {
                    println!(
                        "{{\"status\":\"budget-exceeded\",\"required\":{required},\"budget\":{budget}}}"
                    );
                }
                eprintln!("status: budget-exceeded ({elapsed} ms)");
            }
            eprintln!("error: {err}");
            ExitCode::from(code)
        }
    }
}
