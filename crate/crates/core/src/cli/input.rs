use std::path::Path;

use num_bigint::BigInt;

use super::CliError;
use crate::algebra::{Domain, Poly};
use crate::{Error, Rational};

/// Reads a polynomial file: a header line `vars=N field=q|z|fp:P`, then the
/// polynomial, possibly over several lines. Blank lines and lines starting
/// with `#` are skipped.
pub fn read_poly_file(path: &Path) -> Result<Poly, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_poly_document(&text).map_err(|e| match e {
        CliError::Usage(m) => CliError::Usage(format!("{}:{m}", path.display())),
        other => other,
    })
}

/// [`read_poly_file`] on in-memory text. Errors read `LINE:COL: message`.
pub fn parse_poly_document(text: &str) -> Result<Poly, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| CliError::Usage("1:1: missing header `vars=N field=F`".into()))?;
    let (nvars, domain) = parse_header(header).map_err(|m| CliError::Usage(format!("{}:1: {m}", header_no + 1)))?;

    // join body lines with single spaces, remembering where each starts
    let mut body = String::new();
    let mut starts: Vec<(usize, usize)> = Vec::new();
    for (no, line) in lines {
        if !body.is_empty() {
            body.push(' ');
        }
        starts.push((body.len(), no + 1));
        body.push_str(line);
    }
    if body.trim().is_empty() {
        return Err(CliError::Usage(format!("{}:1: missing polynomial body", header_no + 2)));
    }
    Poly::parse(&body, nvars, domain).map_err(|e| match e {
        Error::Syntax { column, message } => {
            let offset = column.saturating_sub(1);
            let &(start, line) = starts
                .iter()
                .rev()
                .find(|(s, _)| *s <= offset)
                .unwrap_or(&starts[0]);
            CliError::Usage(format!("{line}:{}: {message}", offset - start + 1))
        }
        other => CliError::Lib(other),
    })
}

fn parse_header(line: &str) -> Result<(usize, Domain), String> {
    let mut nvars = None;
    let mut domain = None;
    for field in line.split_whitespace() {
        match field.split_once('=') {
            Some(("vars", v)) => {
                nvars = Some(v.parse::<usize>().map_err(|_| format!("bad vars `{v}`"))?)
            }
            Some(("field", f)) => domain = Some(f.parse::<Domain>().map_err(|e| e.to_string())?),
            _ => return Err(format!("unexpected header entry `{field}`")),
        }
    }
    match (nvars, domain) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err("header must read `vars=N field=F`".into()),
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("bad rational `{s}`"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(parse_rational).collect()
}

pub fn parse_i64_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad integer `{}`", t.trim())))
        })
        .collect()
}
