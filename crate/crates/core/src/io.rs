//! Plain-text signal files: one decimal value per line.
//!
//! A single non-numeric first line is taken as a header. Blank lines are
//! ignored. A line holding a one-column CSV field (optionally quoted) is
//! accepted as well.

use std::fmt::Write as _;
use std::path::Path;

use crate::{InputError, Scalar, Signal};

pub fn read_signal<T: Scalar>(path: impl AsRef<Path>) -> Result<Signal<T>, InputError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Unreadable {
        path: path.to_path_buf(),
        source,
    })?;
    parse_signal(&text)
}

pub fn parse_signal<T: Scalar>(text: &str) -> Result<Signal<T>, InputError> {
    let mut values = Vec::new();
    let mut seen_line = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let field = raw
            .trim()
            .trim_end_matches(',')
            .trim()
            .trim_matches('"')
            .trim();
        if field.is_empty() {
            continue;
        }
        let first = !seen_line;
        seen_line = true;
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(T::lit(v)),
            Ok(_) => return Err(InputError::NonFinite { line }),
            // NaN/inf spellings parse as floats above; anything else on
            // the first line is a header
            Err(_) if first => continue,
            Err(_) => {
                return Err(InputError::NonNumeric {
                    line,
                    text: raw.to_string(),
                })
            }
        }
    }
    if values.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(Signal::new(values).expect("values checked finite"))
}

/// Inverse of [`parse_signal`]; shortest round-trip formatting.
pub fn format_signal<T: Scalar>(sig: &Signal<T>) -> String {
    let mut out = String::with_capacity(sig.len() * 8);
    for v in sig.values() {
        let _ = writeln!(out, "{}", v.as_f64());
    }
    out
}

pub fn write_signal<T: Scalar>(sig: &Signal<T>, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, format_signal(sig))
}
