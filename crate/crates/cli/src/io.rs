//! CSV input/output for point sets, values, Gram matrices and coefficients.
//!
//! Point files carry one point per row (`n` comma-separated columns); an
//! optional header row is skipped when its first field does not parse as a
//! number. All emitted floats use 17 significant digits.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Format a float with 17 significant digits (round-trip exact).
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn parse_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> =
            fields.iter().map(|f| f.parse::<f64>()).collect();
        match parsed {
            Ok(row) => rows.push(row),
            Err(_) if rows.is_empty() && lineno == 0 => continue, // header
            Err(e) => bail!("line {}: {e}", lineno + 1),
        }
    }
    if rows.is_empty() {
        bail!("no data rows");
    }
    Ok(rows)
}

/// Read a point set (one point per row).
pub fn read_points(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_rows(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Read a single-column value file.
pub fn read_values(path: &Path) -> Result<Vec<f64>> {
    let rows = read_points(path)?;
    rows.into_iter()
        .map(|r| {
            if r.len() != 1 {
                bail!("expected one column, got {}", r.len());
            }
            Ok(r[0])
        })
        .collect()
}

/// Write a matrix (or column vector) as CSV.
pub fn write_matrix(path: &Path, rows: &[Vec<f64>]) -> Result<()> {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| fmt_f64(v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn matrix_csv(rows: &[Vec<f64>]) -> String {
    rows.iter()
        .map(|row| row.iter().map(|&v| fmt_f64(v)).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}
