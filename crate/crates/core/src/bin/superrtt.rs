use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superrtt::cli::{commands, exit, run_suite, Suite, SuiteOptions};
use superrtt::Strategy;

#[derive(Parser)]
#[command(
    name = "superrtt",
    version,
    about = "Symbolic checks for the h-deformed GL(1|1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: rtt, ybe, braid, hopf, superdet, contraction, calculus, confluence, all
    Verify {
        suite: String,
        #[arg(long)]
        json: bool,
        /// Keep only checks whose name contains this text
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 4)]
        probe_degree: usize,
        #[arg(long)]
        assume_h1h2_zero: bool,
        /// Ungraded tensor embeddings (with --matrix)
        #[arg(long)]
        ungraded: bool,
        /// Built-in matrix: Rpq, Rh1h2, Rh1, Rh2, P, Rhat_h1h2, Rhat_h1, Rhat_h2
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Normal form of an expression
    Reduce {
        expr: String,
        /// Built-in presentation name or presentation file
        #[arg(long = "in", default_value = "GL_h1h2")]
        presentation: String,
        #[arg(long)]
        rightmost: bool,
        #[arg(long)]
        assume_h1h2_zero: bool,
    },
    /// Contract A_p, Astar_q, Lambda_q, GL_pq or Rpq
    Contract {
        object: String,
        /// g_h1, g_h2, g_h1h2, I or a literal like "[[1, 0], [h1/(p-1), 1]]"
        #[arg(long)]
        g: Option<String>,
        /// Limit order, e.g. "p,q"
        #[arg(long)]
        limits: Option<String>,
        /// Ungraded g⊗g (Rpq only)
        #[arg(long)]
        ungraded: bool,
    },
    /// Expand a calculus family: coords, duals, deriv_coord, deriv_dual, mixed, deriv_deriv
    Expand {
        #[arg(long)]
        family: String,
    },
    /// Print a presentation in file form
    Export { presentation: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            json,
            only,
            probe_degree,
            assume_h1h2_zero,
            ungraded,
            matrix,
        } => {
            let opts = SuiteOptions {
                probe_degree,
                assume_h1h2_zero,
                ungraded,
                matrix,
                only,
            };
            suite
                .parse::<Suite>()
                .and_then(|s| run_suite(s, &opts))
                .map(|r| {
                    if json {
                        emit(&r.to_json());
                    } else {
                        emit(&r.to_string());
                    }
                    if r.passed {
                        exit::PASS
                    } else {
                        exit::VERIFICATION_FAILED
                    }
                })
        }
        Command::Reduce {
            expr,
            presentation,
            rightmost,
            assume_h1h2_zero,
        } => {
            let strategy = if rightmost {
                Strategy::Rightmost
            } else {
                Strategy::Leftmost
            };
            commands::reduce_cmd(&expr, &presentation, strategy, assume_h1h2_zero).map(print_ok)
        }
        Command::Contract {
            object,
            g,
            limits,
            ungraded,
        } => {
            commands::contract_cmd(&object, g.as_deref(), limits.as_deref(), ungraded).map(print_ok)
        }
        Command::Expand { family } => commands::expand_cmd(&family).map(print_ok),
        Command::Export { presentation } => commands::export_cmd(&presentation).map(print_ok),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
}

fn print_ok(text: String) -> i32 {
    emit(&text);
    exit::PASS
}
