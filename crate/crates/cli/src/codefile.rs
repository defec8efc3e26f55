//! The text format for generator matrices.
//!
//! ```text
//! # comment
//! alpha=1 beta=3
//! 1 | 2 2 2
//! 0 | 1 1 0
//! ```
//!
//! The header names the block sizes. Each following line is one generator:
//! `alpha` bits, a `|` when both blocks are nonempty, then `beta` digits
//! in `0..4`. Whitespace between digits is optional. Blank lines and lines
//! starting with `#` are skipped.

use std::fmt::Write as _;

use thiserror::Error;
use z2z4::{MixedVector, Z2Z4Code, Z4};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_header(text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || {
        err(
            line,
            format!(
                "expected a header `alpha=<int> beta=<int>`, found `{}`",
                text.trim()
            ),
        )
    };
    let rest = compact.strip_prefix("alpha=").ok_or_else(bad)?;
    let split = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
    let alpha = rest[..split].parse().map_err(|_| bad())?;
    let beta = rest[split..].strip_prefix("beta=").ok_or_else(bad)?;
    if beta.is_empty() || !beta.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let beta = beta.parse().map_err(|_| bad())?;
    Ok((alpha, beta))
}

fn parse_row(
    text: &str,
    line: usize,
    alpha: usize,
    beta: usize,
) -> Result<MixedVector, ParseError> {
    let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bar = tokens.iter().position(|&c| c == '|');
    let (x, y): (&[char], &[char]) = match bar {
        Some(i) => {
            if alpha == 0 || beta == 0 {
                return Err(err(
                    line,
                    "`|` is only used when both alpha and beta are positive",
                ));
            }
            (&tokens[..i], &tokens[i + 1..])
        }
        None if alpha > 0 && beta > 0 => {
            return Err(err(
                line,
                "missing `|` between the binary and quaternary blocks",
            ));
        }
        None if beta == 0 => (&tokens[..], &[]),
        None => (&[], &tokens[..]),
    };
    if y.contains(&'|') {
        return Err(err(line, "more than one `|`"));
    }
    if x.len() != alpha || y.len() != beta {
        return Err(err(
            line,
            format!(
                "expected {alpha} binary and {beta} quaternary entries, found {} and {}",
                x.len(),
                y.len()
            ),
        ));
    }
    let mut binary = Vec::with_capacity(alpha);
    for (i, &c) in x.iter().enumerate() {
        match c.to_digit(10) {
            Some(d @ 0..=1) => binary.push(d as u8),
            _ => {
                return Err(err(
                    line,
                    format!("entry `{c}` in binary column {} is not 0 or 1", i + 1),
                ))
            }
        }
    }
    let mut quaternary = Vec::with_capacity(beta);
    for (j, &c) in y.iter().enumerate() {
        match c.to_digit(10) {
            Some(d @ 0..=3) => quaternary.push(Z4::new(d as u8)),
            _ => {
                return Err(err(
                    line,
                    format!("entry `{c}` in quaternary column {} is not in 0..=3", j + 1),
                ))
            }
        }
    }
    MixedVector::new(binary, quaternary).map_err(|e| err(line, e.to_string()))
}

pub fn parse_code_file(text: &str) -> Result<Z2Z4Code, ParseError> {
    let mut shape = None;
    let mut rows = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match shape {
            None => shape = Some(parse_header(trimmed, line)?),
            Some((alpha, beta)) => rows.push(parse_row(trimmed, line, alpha, beta)?),
        }
    }
    let (alpha, beta) =
        shape.ok_or_else(|| err(last.max(1), "missing `alpha=<int> beta=<int>` header"))?;
    Z2Z4Code::new(alpha, beta, rows).map_err(|e| err(last.max(1), e.to_string()))
}

/// One generator in file syntax, e.g. `1 | 2 0 0`.
pub fn format_row(v: &MixedVector) -> String {
    let x: Vec<String> = v.binary().iter().map(|b| b.to_string()).collect();
    let y: Vec<String> = v.quaternary().iter().map(|q| q.to_string()).collect();
    match (x.is_empty(), y.is_empty()) {
        (false, false) => format!("{} | {}", x.join(" "), y.join(" ")),
        (true, _) => y.join(" "),
        (false, true) => x.join(" "),
    }
}

/// Header and generator rows. Rows of a code with `alpha = beta = 0` are
/// empty and are left out.
pub fn print_code_file(c: &Z2Z4Code) -> String {
    print_rows(c.alpha(), c.beta(), c.generators())
}

pub fn print_rows(alpha: usize, beta: usize, rows: &[MixedVector]) -> String {
    let mut out = format!("alpha={alpha} beta={beta}\n");
    if alpha + beta > 0 {
        for r in rows {
            let _ = writeln!(out, "{}", format_row(r));
        }
    }
    out
}
