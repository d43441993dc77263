use std::io::Write;

use chebflag::Partition;

use crate::error::CliError;

pub const DEFAULT_CEILING: usize = 10_000;
pub const CEILING_ENV: &str = "CHEBFLAG_CEILING";

/// The resource ceiling from `CHEBFLAG_CEILING`, or the default.
pub fn ceiling() -> Result<usize, CliError> {
    match std::env::var(CEILING_ENV) {
        Err(_) => Ok(DEFAULT_CEILING),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(c) if c > 0 => Ok(c),
            _ => Err(CliError::Usage(format!("{CEILING_ENV} must be a positive integer, got {raw:?}"))),
        },
    }
}

pub fn check_ceiling(what: &str, value: usize, ceiling: usize) -> Result<(), CliError> {
    if value > ceiling {
        return Err(CliError::Ceiling(format!("{what} = {value} exceeds the ceiling {ceiling}")));
    }
    Ok(())
}

pub fn parse_list(raw: &str) -> Result<Vec<usize>, CliError> {
    let raw = raw.trim();
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("expected a nonnegative integer, got {item:?}")))
        })
        .collect()
}

/// Comma-separated parts; unsorted input is normalized with a warning.
pub fn parse_partition(raw: &str, warn: &mut dyn Write) -> Result<Partition, CliError> {
    let parts = parse_list(raw)?;
    let (xi, resorted) = Partition::from_unsorted(parts)?;
    if resorted {
        writeln!(warn, "warning: partition {raw:?} normalized to {xi}")?;
    }
    Ok(xi)
}

/// Comma-separated items, each a value or an inclusive range `lo..hi`.
/// An empty range contributes nothing.
pub fn parse_grid(raw: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo = parse_list(lo)?;
                let hi = parse_list(hi)?;
                let (&[lo], &[hi]) = (lo.as_slice(), hi.as_slice()) else {
                    return Err(CliError::Usage(format!("bad range {item:?}")));
                };
                out.extend(lo..=hi);
            }
            None => out.extend(parse_list(item)?),
        }
    }
    Ok(out)
}

/// Parts joined by commas, the input syntax.
pub fn partition_key(xi: &Partition) -> String {
    xi.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
