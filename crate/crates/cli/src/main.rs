//! `catalan`: exact generalized Catalan numbers from the command line.

mod commands;
mod output;

use std::process::ExitCode;

use catalan_core::FamilyKind;
use clap::{Parser, Subcommand};

use commands::{SeriesTarget, VerifyTarget};
use output::{exit, OutputFormat};

#[derive(Debug, Parser)]
#[command(name = "catalan", version, about = "Exact generalized Catalan numbers, identities and determinants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one member of the C / Cbar / D / Dbar family.
    Compute {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Triangle of C(n, m) for 0 <= m <= n <= n-max.
    Table {
        #[arg(long = "n-max", allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Sweep an identity (or `all`, or `conjecture`) over a parameter range.
    Verify {
        #[arg(long)]
        identity: VerifyTarget,
        #[arg(long = "n-max", default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
        n_max: i64,
        #[arg(long = "k-max", default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Expand a generating function.
    Series {
        #[arg(long, value_enum)]
        target: SeriesTarget,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// x-order for big_gamma (defaults to --order)
        #[arg(long = "order-x")]
        order_x: Option<usize>,
        /// y-order for big_gamma (defaults to --order)
        #[arg(long = "order-y")]
        order_y: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check det[C(i+j, i)] = 2^(N(N+1)/2).
    Det {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Generalized ballot probability (2m+1)/(n+m+1).
    Ballot {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("CATALAN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();

    let (result, format) = match cli.command {
        Command::Compute { kind, n, m, format } => (commands::compute(kind, n, m), format),
        Command::Table { n_max, format } => (commands::table(n_max), format),
        Command::Verify { identity, n_max, k_max, format } => {
            (Ok(commands::verify(identity, n_max, k_max)), format)
        }
        Command::Series { target, m, order, order_x, order_y, format } => (
            commands::series(target, m, order, order_x.unwrap_or(order), order_y.unwrap_or(order)),
            format,
        ),
        Command::Det { n, format } => (Ok(commands::det(n)), format),
        Command::Ballot { n, m, format } => (commands::ballot(n, m), format),
    };

    match result {
        Ok(r) => {
            print!("{}", r.render(format));
            ExitCode::from(r.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
