use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use solidcone::linalg::{parse_matrix, parse_rational, Rational};
use solidcone::{GramMatrix, SymMatrix};

/// A bracket form, `-` for stdin, or the path of a file holding either
/// encoding.
pub fn read_matrix(arg: &str) -> Result<SymMatrix> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else if arg.trim_start().starts_with('[') || arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        bail!("{arg:?} is neither a bracket form nor an existing file");
    };
    Ok(parse_matrix(&text)?)
}

pub fn read_gram(arg: &str) -> Result<GramMatrix> {
    Ok(GramMatrix::new(read_matrix(arg)?)?)
}

/// Comma-separated exact entries, e.g. `1,3/2,2`.
pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(|t| parse_rational(t.trim()).map_err(Into::into)).collect()
}
