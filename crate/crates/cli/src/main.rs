//! `sidonkit` command-line front end.

mod commands;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "sidonkit",
    version,
    about = "Large Sidon sets from highly linear APN functions"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a point-set file for the Sidon property.
    Verify {
        file: String,
        /// Also check that no point can be added.
        #[arg(long)]
        maximal: bool,
        /// Also check that no three points sum to zero.
        #[arg(long)]
        sum_free: bool,
    },
    /// Build a named function or set and optionally slice it along its best hyperplane.
    Construct {
        /// gold:k, inverse, dobbertin, mult-subgroup or file:<path>
        family: String,
        /// Field degree (half the ambient dimension for mult-subgroup); not used with file:.
        n: Option<u32>,
        #[arg(long)]
        slice: bool,
        /// Write the resulting point set here.
        #[arg(long)]
        out: Option<String>,
    },
    /// Slice a point-set file along the hyperplane with the largest Walsh coefficient.
    Slice {
        file: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Walsh and differential analysis of a truth-table file.
    Walsh { file: String },
    /// Turn a Sidon set into a parity-check code with minimum distance at least 5.
    Code {
        #[arg(long)]
        from_set: String,
        /// Write the parity-check matrix here.
        #[arg(long)]
        out: Option<String>,
        /// Search for a weight-5 codeword to pin the distance exactly.
        #[arg(long)]
        exact_distance: bool,
    },
    /// Sizes of Sidon sets per dimension: formula bound, classical size, constructions.
    Table {
        #[arg(long, default_value_t = 25)]
        t_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            file,
            maximal,
            sum_free,
        } => commands::verify(&file, maximal, sum_free),
        Command::Construct {
            family,
            n,
            slice,
            out,
        } => commands::construct(&family, n, slice, out.as_deref()),
        Command::Slice { file, out } => commands::slice(&file, out.as_deref()),
        Command::Walsh { file } => commands::walsh(&file),
        Command::Code {
            from_set,
            out,
            exact_distance,
        } => commands::code(&from_set, out.as_deref(), exact_distance),
        Command::Table { t_max } => table::run(t_max),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.status)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
