//! Plain-text matrix format: a first line holding `n`, followed by `n` lines
//! of `n` whitespace-separated `re,im` pairs.

use std::fmt::Write as _;

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = header.parse().map_err(|_| Error::Parse(format!("expected dimension, found `{header}`")))?;
    if n == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {} of {n}", row + 1)))?;
        let before = entries.len();
        for token in line.split_whitespace() {
            entries.push(parse_pair(token)?);
        }
        if entries.len() - before != n {
            return Err(Error::Parse(format!("row {} has {} entries, expected {n}", row + 1, entries.len() - before)));
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content `{extra}`")));
    }
    ComplexMatrix::from_row_major(n, n, entries)
}

fn parse_pair(token: &str) -> Result<C64> {
    let (re, im) =
        token.split_once(',').ok_or_else(|| Error::Parse(format!("expected re,im pair, found `{token}`")))?;
    let re: f64 = re.parse().map_err(|_| Error::Parse(format!("bad real part in `{token}`")))?;
    let im: f64 = im.parse().map_err(|_| Error::Parse(format!("bad imaginary part in `{token}`")))?;
    Ok(C64::new(re, im))
}

/// Serializes a square matrix; `{:?}` on `f64` round-trips exactly.
pub fn format_matrix(m: &ComplexMatrix) -> String {
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| {
                let z = m.get(i, j);
                format!("{:?},{:?}", z.re, z.im)
            })
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
