//! Text formats for binary matrices.
//!
//! Dense: a `ROWS COLS` header followed by `ROWS` lines of `COLS` characters
//! from `{0,1}` (whitespace between characters is ignored).
//!
//! Alist (MacKay): `N M`, then the maximum column and row weights, then the
//! `N` column weights and `M` row weights, then one line of 1-based row
//! indices per column and one line of 1-based column indices per row. Zero
//! entries are padding and are skipped.

use std::fmt::Write as _;

use super::{BitMatrix, BitVec};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header(line_no: usize, line: &str, expect: usize) -> Result<Vec<usize>> {
    let nums: std::result::Result<Vec<usize>, _> =
        line.split_whitespace().map(str::parse::<usize>).collect();
    match nums {
        Ok(v) if v.len() == expect => Ok(v),
        _ => Err(Error::parse(
            line_no,
            format!("expected {expect} non-negative integers, got {line:?}"),
        )),
    }
}

pub fn parse_dense(text: &str) -> Result<BitMatrix> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Empty("matrix file"))?;
    let dims = parse_header(hl, header, 2)?;
    let (rows, cols) = (dims[0], dims[1]);
    if rows == 0 || cols == 0 {
        return Err(Error::parse(
            hl,
            "matrix must have at least one row and column",
        ));
    }
    let mut m = BitMatrix::zeros(0, cols);
    for (ln, line) in lines {
        let mut row = BitVec::zeros(0);
        for ch in line.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                other => return Err(Error::parse(ln, format!("unexpected character {other:?}"))),
            }
        }
        if row.len() != cols {
            return Err(Error::parse(
                ln,
                format!("expected {cols} entries, got {}", row.len()),
            ));
        }
        m.push_row(row)?;
    }
    if m.num_rows() != rows {
        return Err(Error::parse(
            0,
            format!("expected {rows} rows, got {}", m.num_rows()),
        ));
    }
    Ok(m)
}

pub fn write_dense(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.num_rows(), m.num_cols());
    for r in m.rows() {
        let _ = writeln!(out, "{r}");
    }
    out
}

pub fn parse_alist(text: &str) -> Result<BitMatrix> {
    let mut lines = content_lines(text);
    let mut line = |what: &str| -> Result<(usize, Vec<usize>)> {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of file reading {what}")))?;
        let nums = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(ln, format!("bad integer {t:?} in {what}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((ln, nums))
    };
    let (ln, dims) = line("dimensions")?;
    let [n, m] = dims[..] else {
        return Err(Error::parse(ln, "expected `N M`"));
    };
    if n == 0 || m == 0 {
        return Err(Error::parse(ln, "alist dimensions must be positive"));
    }
    let (ln, maxes) = line("maximum weights")?;
    let [max_col, max_row] = maxes[..] else {
        return Err(Error::parse(ln, "expected maximum column and row weights"));
    };
    let (ln, col_w) = line("column weights")?;
    if col_w.len() != n {
        return Err(Error::parse(ln, format!("expected {n} column weights")));
    }
    let (ln, row_w) = line("row weights")?;
    if row_w.len() != m {
        return Err(Error::parse(ln, format!("expected {m} row weights")));
    }
    let mut h = BitMatrix::zeros(m, n);
    for (c, &weight) in col_w.iter().enumerate() {
        let (ln, idx) = line("column list")?;
        // Lists may be padded with zeros up to the maximum weight.
        let idx: Vec<usize> = idx.into_iter().filter(|&r| r != 0).collect();
        if idx.len() != weight || idx.len() > max_col {
            return Err(Error::parse(
                ln,
                format!("column {} has wrong weight", c + 1),
            ));
        }
        for r in idx {
            if r > m {
                return Err(Error::parse(ln, format!("row index {r} out of range")));
            }
            h.set(r - 1, c, true);
        }
    }
    let mut from_rows = BitMatrix::zeros(m, n);
    for (r, &weight) in row_w.iter().enumerate() {
        let (ln, idx) = line("row list")?;
        let idx: Vec<usize> = idx.into_iter().filter(|&c| c != 0).collect();
        if idx.len() != weight || idx.len() > max_row {
            return Err(Error::parse(ln, format!("row {} has wrong weight", r + 1)));
        }
        for c in idx {
            if c > n {
                return Err(Error::parse(ln, format!("column index {c} out of range")));
            }
            from_rows.set(r, c - 1, true);
        }
    }
    if h != from_rows {
        return Err(Error::parse(0, "column and row lists disagree"));
    }
    Ok(h)
}

pub fn write_alist(h: &BitMatrix) -> String {
    let (m, n) = (h.num_rows(), h.num_cols());
    let col_w = h.col_weights();
    let row_w = h.row_weights();
    let max_col = col_w.iter().copied().max().unwrap_or(0);
    let max_row = row_w.iter().copied().max().unwrap_or(0);
    let join = |v: &[usize]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "{n} {m}\n{max_col} {max_row}\n{}\n{}\n",
        join(&col_w),
        join(&row_w)
    );
    let t = h.transpose();
    for col in t.rows() {
        let mut idx: Vec<usize> = col.iter_ones().map(|r| r + 1).collect();
        idx.resize(max_col, 0);
        let _ = writeln!(out, "{}", join(&idx));
    }
    for row in h.rows() {
        let mut idx: Vec<usize> = row.iter_ones().map(|c| c + 1).collect();
        idx.resize(max_row, 0);
        let _ = writeln!(out, "{}", join(&idx));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_parse() {
        let m = parse_dense("2 3\n101\n0 1 1\n").unwrap();
        assert_eq!(m, BitMatrix::from_u8_rows(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(parse_dense(&write_dense(&m)).unwrap(), m);
        assert!(matches!(
            parse_dense("2 3\n101\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_dense("1 3\n1a1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_dense("0 3\n").is_err());
        assert!(parse_dense("").is_err());
    }

    #[test]
    fn alist_parse() {
        // 3x4 matrix [[1,1,0,0],[0,1,1,0],[0,0,1,1]]
        let text = "4 3\n2 2\n1 2 2 1\n2 2 2\n1 0\n1 2\n2 3\n3 0\n1 2\n2 3\n3 4\n";
        let h = parse_alist(text).unwrap();
        assert_eq!(
            h,
            BitMatrix::from_u8_rows(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]])
        );
        assert_eq!(parse_alist(&write_alist(&h)).unwrap(), h);
        assert!(parse_alist("4 3\n2 2\n1 2 2 1\n2 2 2\n1 0\n").is_err());
        let unpadded = "4 3\n2 2\n1 2 2 1\n2 2 2\n1\n1 2\n2 3\n3\n1 2\n2 3\n3 4\n";
        assert_eq!(parse_alist(unpadded).unwrap(), h);
    }
}
