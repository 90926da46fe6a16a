mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Fatal, Report};

#[derive(Parser)]
#[command(name = "dblfolds", version, about = "Finite double categories, FOLDS structures and equivalence invariance")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Use `builtin:<name>` as the (first) input.
    #[arg(long, global = true, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Validate signatures, presheaves, double categories, functors and span
    /// files; with no inputs, the whole builtin corpus.
    Validate {
        inputs: Vec<String>,
        /// Signature for presheaf files without a `signature:` line.
        #[arg(long)]
        signature: Option<String>,
    },
    /// Evaluate a formula in a structure.
    Eval {
        /// `[STRUCTURE] FORMULA`; the structure is a presheaf file or
        /// `builtin:<name>`, whose nerve along --diagram is used.
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        /// Interpretation of a free variable, as `variable=element`.
        #[arg(long = "at", value_name = "VAR=ELEM")]
        at: Vec<String>,
        #[arg(long)]
        signature: Option<String>,
        #[arg(long, default_value = "dblcat")]
        diagram: String,
    },
    /// Print the nerve of a double category in the presheaf format.
    Nerve {
        input: Option<String>,
        #[arg(long, default_value = "dblcat")]
        diagram: String,
    },
    /// Evaluate every characterization and lifting search for a functor.
    Classify { functor: Option<String> },
    /// Check the right lifting property against I, J or an inclusion file.
    Lift {
        functor: Option<String>,
        #[arg(long, default_value = "I")]
        against: String,
    },
    /// Compare generated sentences in the two feet of a span of nerves.
    Invariance {
        /// A functor (`builtin:<name>` or file) or a span file.
        input: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Diagram for the nerves; defaults to dblcat for functors.
        #[arg(long)]
        diagram: Option<String>,
        /// List every generated sentence.
        #[arg(long)]
        list: bool,
    },
}

fn input(positional: Option<String>, builtin: &Option<String>) -> Result<String, Fatal> {
    match (positional, builtin) {
        (Some(_), Some(_)) => Err(Fatal::usage("give either an input or --builtin, not both")),
        (Some(p), None) => Ok(p),
        (None, Some(b)) => Ok(format!("builtin:{b}")),
        (None, None) => Err(Fatal::usage("an input is required (a file or --builtin <name>)")),
    }
}

fn run(cli: Cli) -> Result<Report, Fatal> {
    let builtin = &cli.builtin;
    match cli.command {
        Command::Validate { mut inputs, signature } => {
            if let Some(b) = builtin {
                inputs.insert(0, format!("builtin:{b}"));
            }
            commands::validate(&inputs, signature.as_deref())
        }
        Command::Eval {
            mut args,
            at,
            signature,
            diagram,
        } => {
            let formula = args.pop().expect("at least one argument");
            let structure = input(args.pop(), builtin)?;
            commands::eval(&structure, &formula, &at, signature.as_deref(), &diagram)
        }
        Command::Nerve { input: i, diagram } => commands::nerve_cmd(&input(i, builtin)?, &diagram),
        Command::Classify { functor } => commands::classify_cmd(&input(functor, builtin)?),
        Command::Lift { functor, against } => commands::lift(&input(functor, builtin)?, &against),
        Command::Invariance {
            input: i,
            seed,
            depth,
            count,
            diagram,
            list,
        } => commands::invariance(&commands::InvarianceArgs {
            input: &input(i, builtin)?,
            depth,
            count,
            seed,
            diagram: diagram.as_deref(),
            list,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let start = Instant::now();
    match run(cli) {
        Ok(report) => {
            let out = match format {
                Format::Text => report.text(Some(start.elapsed())),
                Format::Structured => report.structured(),
            };
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
