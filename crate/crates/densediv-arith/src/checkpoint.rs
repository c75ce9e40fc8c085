//! Plain-text checkpoint lines for enumeration output.
//!
//! One member per line:
//!
//! ```text
//! 12 2:2,3:1 3 2
//! ```
//!
//! i.e. value, comma-separated `prime:exponent` pairs (ascending), Ω, ω —
//! except the unit, whose line is just `1`. Parsing re-validates everything
//! (primality, order, product, counts), so a checkpoint can be trusted as a
//! resume point or as test fixture data.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::enumerate::{for_each_member, MemberView};
use crate::error::ArithError;
use crate::factored::FactoredInteger;
use crate::theta::ThetaRule;

/// Errors from reading or writing checkpoint streams.
#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Format one member as a checkpoint line (no trailing newline).
pub fn member_line(m: &MemberView<'_>) -> String {
    if m.value == 1 {
        return "1".to_string();
    }
    let mut line = String::with_capacity(24);
    line.push_str(&m.value.to_string());
    line.push(' ');
    for (i, &(p, e)) in m.factors.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        line.push_str(&p.to_string());
        line.push(':');
        line.push_str(&e.to_string());
    }
    line.push(' ');
    line.push_str(&m.big_omega.to_string());
    line.push(' ');
    line.push_str(&m.small_omega.to_string());
    line
}

/// Parse and fully validate one checkpoint line.
pub fn parse_member_line(line: &str) -> Result<FactoredInteger, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    match fields.as_slice() {
        ["1"] => return Ok(FactoredInteger::one()),
        [_, _, _, _] => {}
        _ => return Err(format!("expected 1 or 4 fields, got {}", fields.len())),
    }
    let value: u64 = fields[0]
        .parse()
        .map_err(|_| format!("bad value field '{}'", fields[0]))?;
    let mut factors = Vec::new();
    for pair in fields[1].split(',') {
        let (p, e) = pair
            .split_once(':')
            .ok_or_else(|| format!("bad factor pair '{pair}'"))?;
        let p: u64 = p.parse().map_err(|_| format!("bad prime '{p}'"))?;
        let e: u32 = e.parse().map_err(|_| format!("bad exponent '{e}'"))?;
        factors.push((p, e));
    }
    let parsed = FactoredInteger::from_factors(factors).map_err(|e| e.to_string())?;
    if parsed.value() != value {
        return Err(format!(
            "factor product is {}, line claims {value}",
            parsed.value()
        ));
    }
    let big: u32 = fields[2]
        .parse()
        .map_err(|_| format!("bad count field '{}'", fields[2]))?;
    let small: u32 = fields[3]
        .parse()
        .map_err(|_| format!("bad count field '{}'", fields[3]))?;
    if big != parsed.big_omega() || small != parsed.small_omega() {
        return Err(format!(
            "counts {big} {small} disagree with factorization ({} {})",
            parsed.big_omega(),
            parsed.small_omega()
        ));
    }
    Ok(parsed)
}

/// Enumerate the family up to `x` and write it as checkpoint lines in
/// ascending value order, skipping members `<= from_exclusive` when resuming.
/// Returns the number of lines written.
pub fn write_checkpoint<W: Write>(
    out: &mut W,
    rule: &ThetaRule,
    x: u64,
    from_exclusive: u64,
) -> Result<u64, CheckpointError> {
    let mut lines: Vec<(u64, String)> = Vec::new();
    for_each_member(rule, x, |m| {
        if m.value > from_exclusive {
            lines.push((m.value, member_line(&m)));
        }
    })?;
    lines.sort_unstable_by_key(|&(v, _)| v);
    for (_, line) in &lines {
        writeln!(out, "{line}")?;
    }
    Ok(lines.len() as u64)
}

/// Read a checkpoint stream, validating every line and requiring strictly
/// ascending values (the order `write_checkpoint` produces).
pub fn read_checkpoint<R: BufRead>(input: R) -> Result<Vec<FactoredInteger>, CheckpointError> {
    let mut members = Vec::new();
    let mut last: u64 = 0;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let member = parse_member_line(&line).map_err(|msg| CheckpointError::Format {
            line: idx + 1,
            msg,
        })?;
        if member.value() <= last {
            return Err(CheckpointError::Format {
                line: idx + 1,
                msg: format!(
                    "values must ascend strictly ({} after {last})",
                    member.value()
                ),
            });
        }
        last = member.value();
        members.push(member);
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::BufReader;

    #[test]
    fn line_round_trip() {
        let rule = ThetaRule::dense_t(2.0).unwrap();
        for_each_member(&rule, 1000, |m| {
            let line = member_line(&m);
            let parsed = parse_member_line(&line).unwrap();
            assert_eq!(parsed.value(), m.value);
            assert_eq!(parsed.factors(), m.factors);
        })
        .unwrap();
    }

    #[test]
    fn unit_line_is_bare() {
        let rule = ThetaRule::practical();
        let mut buf = Vec::new();
        let written = write_checkpoint(&mut buf, &rule, 1, 0).unwrap();
        assert_eq!(written, 1);
        assert_eq!(String::from_utf8(buf).unwrap(), "1\n");
    }

    #[test]
    fn stream_round_trip_sorted() {
        let rule = ThetaRule::dense_t(2.0).unwrap();
        let mut buf = Vec::new();
        let written = write_checkpoint(&mut buf, &rule, 30, 0).unwrap();
        assert_eq!(written, 12);
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("1\n2 2:1 1 1\n4 2:2 2 1\n"));
        let members = read_checkpoint(BufReader::new(&buf[..])).unwrap();
        let values: Vec<u64> = members.iter().map(|m| m.value()).collect();
        assert_eq!(values, vec![1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30]);
    }

    #[test]
    fn resume_skips_prefix() {
        let rule = ThetaRule::dense_t(2.0).unwrap();
        let mut buf = Vec::new();
        write_checkpoint(&mut buf, &rule, 30, 8).unwrap();
        let members = read_checkpoint(BufReader::new(&buf[..])).unwrap();
        let values: Vec<u64> = members.iter().map(|m| m.value()).collect();
        assert_eq!(values, vec![12, 16, 18, 20, 24, 28, 30]);
    }

    #[test]
    fn rejects_tampered_lines() {
        assert!(parse_member_line("12 2:2,3:1 3 1").is_err()); // wrong omega
        assert!(parse_member_line("12 2:2,3:1 2 2").is_err()); // wrong Omega
        assert!(parse_member_line("13 2:2,3:1 3 2").is_err()); // wrong product
        assert!(parse_member_line("12 3:1,2:2 3 2").is_err()); // out of order
        assert!(parse_member_line("8 8:1 1 1").is_err()); // not prime
        assert!(parse_member_line("hello").is_err());
        assert!(parse_member_line("12 2:2,3:1 3").is_err()); // missing field
    }

    #[test]
    fn rejects_unsorted_stream() {
        let text = "2 2:1 1 1\n1\n";
        assert!(read_checkpoint(BufReader::new(text.as_bytes())).is_err());
    }
}
