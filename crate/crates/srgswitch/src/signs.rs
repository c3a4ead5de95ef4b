//! ±1 matrices as text: one row per line, `+` for 1 and `-` for −1.

use std::path::Path;

use srgswitch_core::SignMatrix;

use crate::error::{IoError, IoResult};

pub fn format_signs(h: &SignMatrix) -> String {
    let mut out = String::with_capacity(h.n() * (h.n() + 1));
    for i in 0..h.n() {
        out.extend((0..h.n()).map(|j| if h.get(i, j) == 1 { '+' } else { '-' }));
        out.push('\n');
    }
    out
}

/// Parses the text format. Blank lines are skipped.
pub fn parse_signs(text: &str) -> IoResult<SignMatrix> {
    let mut rows: Vec<Vec<i8>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::with_capacity(line.len());
        for c in line.chars() {
            row.push(match c {
                '+' => 1,
                '-' => -1,
                _ => {
                    return Err(IoError::SignText {
                        line: i + 1,
                        reason: format!("unexpected character {c:?}"),
                    })
                }
            });
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(IoError::SignText {
                    line: i + 1,
                    reason: format!("expected {} entries, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.first().is_some_and(|r| r.len() != rows.len()) {
        return Err(IoError::SignText {
            line: text.lines().count(),
            reason: format!("{} rows of length {}", rows.len(), rows[0].len()),
        });
    }
    Ok(SignMatrix::from_signs(&rows)?)
}

pub fn read_file(path: &Path) -> IoResult<SignMatrix> {
    parse_signs(&std::fs::read_to_string(path).map_err(|e| IoError::file(path, e))?)
}

pub fn write_file(path: &Path, h: &SignMatrix) -> IoResult<()> {
    std::fs::write(path, format_signs(h)).map_err(|e| IoError::file(path, e))
}
