//! Plain-text rendering helpers: right-aligned columns, exact entries.

use weylfold::linalg::{IMat, QMat};

use crate::schema::rational_str;

/// Right-align each column to its widest entry with two-space gutters,
/// prefixing every line with `indent`.
pub fn aligned(rows: &[Vec<String>], indent: &str) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        out.push_str(indent);
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            for _ in cell.len()..widths[j] {
                out.push(' ');
            }
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}

/// Format a rational matrix with `p/q` entries.
pub fn qmat(m: &QMat, indent: &str) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(rational_str).collect())
        .collect();
    aligned(&rows, indent)
}

/// Format an integer matrix.
pub fn imat(m: &IMat, indent: &str) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(i64::to_string).collect())
        .collect();
    aligned(&rows, indent)
}
