//! Command-line driver for the KLRW toolkit: the expression syntax, parameter
//! files and the report-producing commands behind the `klrw` binary.

pub mod commands;
pub mod error;
pub mod expr;
pub mod params;
pub mod report;

use std::io::{Read, Write};

pub use commands::{run, Cli, Command, Format};
pub use error::{CliError, Location, ParseError};
pub use expr::{parse_basis_chain, parse_element, parse_expr, print_basis_chain, print_chain};
pub use params::{params_json, parse_params};
pub use report::Report;

/// Runs a parsed command line and returns the process exit code: 0 when every
/// verification passed, 1 when one failed, 2 for invalid input.
pub fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let report = match run(&cli.command, stdin) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, report.json()) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    let _ = stdout.write_all(report.render(cli.format).as_bytes());
    report.exit_code()
}
