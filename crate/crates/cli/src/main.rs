use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use symadapt_cli::{render_report, render_spectrum, render_table, shape_summary, spectrum, Format, RunSpec};
use symadapt_core::invariants::check_invariants;
use symadapt_core::{class_operator, resolve, state_operator, verify_table};

/// Exit status when the table carries flagged residual degeneracy.
const EXIT_INCOMPLETE: u8 = 2;
/// Exit status when `verify` finds a failing check.
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "symadapt",
    version,
    about = "Exact symmetry-adapted bases and coupling coefficients for S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every basis vector with its labels, tableau and coefficients.
    Basis(RunArgs),
    /// Print the eigenvalues of C(k) on the orbit with multiplicities.
    Eigenvalues {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        k: usize,
    },
    /// Resolve the orbit and check the result exactly.
    Verify(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Configuration word, e.g. `aab` or `alpha,alpha,beta`.
    #[arg(long)]
    config: String,
    /// State labels in order; defaults to the sorted labels of the word.
    #[arg(long)]
    alphabet: Option<String>,
    /// File listing the orbit, one word per line, in the wanted order.
    #[arg(long)]
    order: Option<PathBuf>,
    /// State operators separated by `;`, each a `+`-sum of transpositions,
    /// e.g. `(a b)` or `(a b);(a b)+(a c)+(b c)`.
    #[arg(long = "state-ops")]
    state_ops: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Dump operator matrices and a shape summary to stderr.
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

impl RunArgs {
    fn spec(&self) -> Result<RunSpec> {
        RunSpec::build(
            &self.config,
            self.alphabet.as_deref(),
            self.order.as_ref(),
            self.state_ops.as_deref(),
        )
    }
}

fn dump_operators(spec: &RunSpec) -> Result<()> {
    for k in (2..=spec.basis.degree()).rev() {
        eprint!("{}", class_operator(k, &spec.basis)?.dump(&format!("C({k})")));
    }
    for op in &spec.state_ops {
        let label = op.render(spec.basis.alphabet());
        eprint!("{}", state_operator(op, &spec.basis)?.dump(&label));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Basis(args) => {
            let spec = args.spec()?;
            if args.verbose > 0 {
                dump_operators(&spec)?;
            }
            let table = resolve(&spec.basis, &spec.state_ops)?;
            if args.verbose > 0 {
                for (shape, count) in shape_summary(&table) {
                    eprintln!("shape {shape:?}: {count} vectors");
                }
            }
            print!("{}", render_table(&table, &spec.config_text, args.format)?);
            Ok(if table.complete { 0 } else { EXIT_INCOMPLETE })
        }
        Command::Eigenvalues { run, k } => {
            let spec = run.spec()?;
            let values = spectrum(&spec.basis, k)?;
            print!("{}", render_spectrum(&values, k, run.format)?);
            Ok(0)
        }
        Command::Verify(args) => {
            let spec = args.spec()?;
            if args.verbose > 0 {
                dump_operators(&spec)?;
            }
            let table = resolve(&spec.basis, &spec.state_ops)?;
            let mut report = verify_table(&table)?;
            report.extend(check_invariants(&table)?);
            print!("{}", render_report(&report, args.format)?);
            Ok(if report.passed() { 0 } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
