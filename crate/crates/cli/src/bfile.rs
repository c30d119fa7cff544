//! OEIS b-files: `#` comments and `index value` lines with consecutive indices.
//!
//! Values may carry a typographic minus (`−`, `–`) or a doubled hyphen
//! (`--`), as in sequence listings pasted from typeset text.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    /// File stem, e.g. `b024493`.
    pub id: String,
    pub offset: i64,
    pub values: Vec<BigInt>,
}

impl BFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)?;
        let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        parse(&id, &text).map_err(|(line, msg)| CliError::Parse { path: path.display().to_string(), line, msg })
    }

    /// `(index, value)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.values.iter().enumerate().map(move |(i, v)| (self.offset + i as i64, v))
    }
}

fn parse_value(s: &str) -> Option<BigInt> {
    let (negative, digits) = if let Some(rest) = s.strip_prefix("--") {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix(['-', '\u{2212}', '\u{2013}']) {
        (true, rest)
    } else {
        (false, s)
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if negative { -v } else { v })
}

/// Parses b-file text; errors carry the 1-based line number.
pub fn parse(id: &str, text: &str) -> Result<BFile, (usize, String)> {
    let mut offset = None;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err((line_no, format!("expected `index value`, got {line:?}")));
        };
        let index: i64 = parse_value(index)
            .and_then(|v| i64::try_from(v).ok())
            .ok_or_else(|| (line_no, format!("bad index {index:?}")))?;
        let value = parse_value(value).ok_or_else(|| (line_no, format!("bad value {value:?}")))?;
        match offset {
            None => offset = Some(index),
            Some(first) => {
                let want = first + values.len() as i64;
                if index != want {
                    return Err((line_no, format!("index {index} out of sequence (expected {want})")));
                }
            }
        }
        values.push(value);
    }
    let offset = offset.ok_or((0, "no data lines".to_string()))?;
    Ok(BFile { id: id.to_string(), offset, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_comments_and_dashes() {
        let text = "# A146559\n\n0 1\n1 1\n2 0\n3 --2\n4 \u{2212}4\n5 \u{2013}4\n6 -0\n";
        let b = parse("b146559", text).unwrap();
        assert_eq!(b.offset, 0);
        let want: Vec<BigInt> = [1, 1, 0, -2, -4, -4, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(b.values, want);
        assert_eq!(b.terms().nth(3), Some((3, &BigInt::from(-2))));
    }

    #[test]
    fn offset_follows_first_index() {
        let b = parse("x", "1 1\n2 1\n3 1\n").unwrap();
        assert_eq!(b.offset, 1);
        assert_eq!(b.values.len(), 3);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(parse("x", "0 1\n2 5\n").unwrap_err().0, 2);
        assert_eq!(parse("x", "# c\n0 1\n1 twelve\n").unwrap_err().0, 3);
        assert_eq!(parse("x", "0 1 2\n").unwrap_err().0, 1);
        assert_eq!(parse("x", "0 ---3\n").unwrap_err().0, 1);
        assert_eq!(parse("x", "# nothing\n").unwrap_err().0, 0);
    }

    #[test]
    fn big_values() {
        let b = parse("x", "0 123456789012345678901234567890\n").unwrap();
        assert_eq!(b.values[0].to_string(), "123456789012345678901234567890");
    }
}
