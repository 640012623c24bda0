//! `ptbath`: command-line front end for the `ptbath-core` simulations.
//!
//! Every command writes CSV files (the stable output contract) and, unless
//! `--no-svg` is given, self-contained SVG plots.

pub mod commands;
pub mod error;
pub mod format;
pub mod settings;
pub mod svg;

use std::ffi::OsString;

use clap::Parser;

pub use error::CliError;
pub use settings::{Cli, CommandKind, Settings};

/// Parses `args` and runs the command. Returns the process exit code:
/// 0 on success, 1 for invalid parameters, 2 for I/O failures.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (kind, flags) = cli.command.split();
    let result = Settings::resolve(kind, &flags).and_then(|s| commands::execute(kind, &s));
    match result {
        Ok(written) => {
            for path in written {
                println!("wrote {}", path.display());
            }
            0
        }
        Err(e) => {
            eprintln!("ptbath: {e}");
            e.exit_code()
        }
    }
}
