//! `uaclose`: closures, ranks and verification suites for finite algebras
//! described in plain-text files.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ua_closure::catalog::{build_catalog, catalog_entry};
use ua_closure::closure::{
    clot_closure, congruence_generated, fixpoint, is_top_normal, iterate, top_semicongruence, ClosureReport, Mode,
};
use ua_closure::format::{
    parse_algebra, parse_index_list, parse_set_list, render_algebra, render_relation, AlgebraFile,
};
use ua_closure::oracles::{format_big_set, nat_mult_deduction_chain};
use ua_closure::rank::{algebra_rank, format_chain};
use ua_closure::suites::{run_suite, user_entry, SuiteConfig, SUITE_NAMES};
use ua_closure::{ElementSet, FiniteAlgebra};

#[derive(Parser)]
#[command(name = "uaclose", version, about = "Closure operators on finite algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SetArgs {
    /// Algebra file.
    file: PathBuf,
    /// Comma-separated elements; `-` for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    /// Distinguished element; overrides the file's `top`.
    #[arg(long)]
    top: Option<usize>,
}

#[derive(Args)]
struct StepArgs {
    #[command(flatten)]
    set: SetArgs,
    /// Number of steps to apply (default 1).
    #[arg(long, conflicts_with = "fixpoint")]
    steps: Option<usize>,
    /// Iterate until the chain stabilises.
    #[arg(long)]
    fixpoint: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ind,
    Ded,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Ind => Mode::Induction,
            ModeArg::Ded => Mode::Deduction,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// ⊤-induction `RI`.
    Ind(StepArgs),
    /// ⊤-deduction `IR`.
    Ded(StepArgs),
    /// Smallest ⊤-clot containing the set.
    Clot(SetArgs),
    /// Whether the set is the congruence class of ⊤.
    Normal(SetArgs),
    /// Semicongruence generated by `I × {⊤}`, one `a b` pair per line.
    Semicong(SetArgs),
    /// Congruence generated by `I × {⊤}`, one `a b` pair per line.
    Cong(SetArgs),
    /// Per-algebra induction or deduction rank.
    Rank {
        file: PathBuf,
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Give up after this many steps.
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Run a verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest catalog carrier.
        #[arg(long, default_value_t = 4)]
        limit: usize,
        /// Primes for the multiplicative chain.
        #[arg(long)]
        primes: Option<String>,
        /// Extra algebra files to include.
        #[arg(long = "algebra")]
        algebras: Vec<PathBuf>,
    },
    /// Deduction chain in (ℕ, ·, 1) for the seed built from the given primes.
    Chain {
        #[arg(long)]
        primes: String,
        #[arg(long)]
        depth: usize,
    },
    /// List the built-in catalog, or print one entry in file format.
    Catalog {
        name: Option<String>,
        #[arg(long, default_value_t = 4)]
        limit: usize,
    },
}

/// Exit status 2: the input could not be used.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<ExitCode, InputError>;

fn load(path: &Path) -> Result<AlgebraFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| InputError(format!("{}:{e}", path.display())))
}

fn resolve(args: &SetArgs) -> Result<(FiniteAlgebra, usize, ElementSet), InputError> {
    let file = load(&args.file)?;
    let a = file.algebra;
    let top = match args.top {
        Some(t) => {
            a.check_element(t)?;
            t
        }
        None => a.resolve_top(None)?,
    };
    let set = parse_set_list(&args.set, a.size())?;
    Ok((a, top, set))
}

fn print_report(report: &ClosureReport, steps: usize) {
    println!("{}", report.last());
    println!("chain {}", format_chain(&report.chain));
    match report.steps_to_fixpoint {
        Some(k) => println!("fixpoint {k}"),
        None => println!("fixpoint not reached after {steps} steps"),
    }
}

fn step(args: StepArgs, mode: Mode) -> Outcome {
    let (a, top, set) = resolve(&args.set)?;
    if args.fixpoint {
        let report = fixpoint(&a, top, &set, mode)?;
        print_report(&report, a.size() + 1);
    } else {
        let steps = args.steps.unwrap_or(1);
        let report = iterate(&a, top, &set, mode, steps)?;
        // `iterate` stops before confirming a repeat when the budget runs out.
        print_report(&report, steps);
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(suite: &str, limit: usize, primes: Option<String>, algebras: Vec<PathBuf>) -> Outcome {
    let mut config = SuiteConfig::with_limit(limit);
    if let Some(p) = primes {
        config.primes = parse_index_list(&p)?;
    }
    for path in &algebras {
        let file = load(path)?;
        config.extra.push(user_entry(&file.name, file.algebra)?);
    }
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let mut ok = true;
    for name in names {
        let report = run_suite(name, &config)?;
        ok &= report.passed();
        println!("{report}");
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Ind(args) => step(args, Mode::Induction),
        Command::Ded(args) => step(args, Mode::Deduction),
        Command::Clot(args) => {
            let (a, top, set) = resolve(&args)?;
            println!("{}", clot_closure(&a, top, &set)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Normal(args) => {
            let (a, top, set) = resolve(&args)?;
            let n = is_top_normal(&a, top, &set)?;
            println!("{}", if n.normal { "normal" } else { "not-normal" });
            println!("class {}", n.class_of_top);
            Ok(ExitCode::SUCCESS)
        }
        Command::Semicong(args) => {
            let (a, top, set) = resolve(&args)?;
            print!("{}", render_relation(&top_semicongruence(&a, top, &set)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cong(args) => {
            let (a, top, set) = resolve(&args)?;
            print!(
                "{}",
                render_relation(&congruence_generated(&a, set.iter().map(|y| (y, top)))?)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank { file, top, mode, max_n } => {
            let a = load(&file)?.algebra;
            let top = match top {
                Some(t) => {
                    a.check_element(t)?;
                    t
                }
                None => a.resolve_top(None)?,
            };
            println!("{}", algebra_rank(&a, top, mode.into(), max_n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            limit,
            primes,
            algebras,
        } => verify(&suite, limit, primes, algebras),
        Command::Chain { primes, depth } => {
            let primes = parse_index_list(&primes)?;
            let chain = nat_mult_deduction_chain(&primes, primes.len(), depth)?;
            for (n, stage) in chain.iter().enumerate() {
                println!("stage {n} {}", format_big_set(stage));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { name, limit } => {
            match name {
                None => {
                    for e in build_catalog(limit) {
                        println!("{} {}", e.name, e.algebra.size());
                    }
                }
                Some(name) => {
                    let e = catalog_entry(&name, limit)
                        .ok_or_else(|| InputError(format!("no catalog entry `{name}` at limit {limit}")))?;
                    print!("{}", render_algebra(&e.name, &e.algebra));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
