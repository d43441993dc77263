//! Command-line front end: argument types, rendering and the verify harness.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod render;
pub mod verify;

use std::io::Write;

use args::{Cli, Command};
use error::CliError;
use render::{render, VerifyReport};

/// Runs one command, writing the rendered report to `out` and warnings to
/// `warn`. A failed verification still renders its report before erroring.
pub fn run(cli: &Cli, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    let ceiling = input::ceiling()?;
    let format = cli.format;
    let rendered = match &cli.command {
        Command::Expand(a) => render(&commands::cmd_expand(a, ceiling, warn)?, format)?,
        Command::Mult(a) => render(&commands::cmd_mult(a, ceiling, warn)?, format)?,
        Command::Classify(a) => render(&commands::cmd_classify(a, ceiling, warn)?, format)?,
        Command::Families(a) => render(&commands::cmd_families(a, ceiling)?, format)?,
        Command::Table(a) => render(&commands::cmd_table(a, ceiling, warn)?, format)?,
        Command::Verify(a) => {
            input::check_ceiling("cases", a.cases, ceiling)?;
            let suites = verify::run_suites(a.seed, a.cases, a.golden.as_deref());
            let passed = suites.iter().all(|s| s.passed);
            let report = VerifyReport { seed: a.seed, cases: a.cases, suites, passed };
            out.write_all(render(&report, format)?.as_bytes())?;
            if !passed {
                let failed: Vec<&str> =
                    report.suites.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect();
                return Err(CliError::Mismatch(format!("suites failed: {}", failed.join(", "))));
            }
            return Ok(());
        }
    };
    out.write_all(rendered.as_bytes())?;
    Ok(())
}
