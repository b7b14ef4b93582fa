//! Text arrays in log notation.
//!
//! ```text
//! # rows = x-log, columns = y-log; -1 is zero, k is a^k
//! -1 -1  3 ...
//! ...
//! (-1, 2): 5
//! ```
//!
//! The optional trailer lists values at zero-coordinate points as
//! `(xlog, ylog): vlog`.

use std::fmt::Write as _;

use agcodec_core::{Array2D, Elt, Field, Point};

pub const HEADER: &str = "# rows = x-log, columns = y-log; -1 is zero, k is a^k";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayFile {
    pub grid: Array2D,
    pub trailer: Vec<(Point, Elt)>,
}

fn elt(field: &Field, tok: &str, line: usize) -> Result<Elt, String> {
    let v: i32 = tok.trim().parse().map_err(|_| format!("line {line}: '{tok}' is not an integer"))?;
    field
        .elt(v)
        .ok_or_else(|| format!("line {line}: {v} is outside -1..={}", field.order() as i32 - 1))
}

impl ArrayFile {
    pub fn new(grid: Array2D) -> ArrayFile {
        ArrayFile { grid, trailer: Vec::new() }
    }

    pub fn parse(text: &str, field: &Field) -> Result<ArrayFile, String> {
        let side = field.order() as usize;
        let mut rows = Vec::new();
        let mut trailer = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let no = k + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('(') {
                let (coords, value) = rest
                    .split_once("):")
                    .ok_or_else(|| format!("line {no}: expected '(xlog, ylog): vlog'"))?;
                let (x, y) = coords
                    .split_once(',')
                    .ok_or_else(|| format!("line {no}: expected two coordinates"))?;
                let p = Point::new(elt(field, x, no)?, elt(field, y, no)?);
                trailer.push((p, elt(field, value, no)?));
                continue;
            }
            if !trailer.is_empty() {
                return Err(format!("line {no}: array row after the trailer"));
            }
            let row = line.split_whitespace().map(|t| elt(field, t, no)).collect::<Result<Vec<_>, _>>()?;
            if row.len() != side {
                return Err(format!("line {no}: expected {side} values, found {}", row.len()));
            }
            rows.push(row);
        }
        if rows.len() != side {
            return Err(format!("expected {side} rows, found {}", rows.len()));
        }
        let grid = Array2D::from_rows(&rows).map_err(|e| e.to_string())?;
        Ok(ArrayFile { grid, trailer })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{HEADER}").unwrap();
        for r in 0..self.grid.side() {
            let row: Vec<String> = self.grid.row(r).iter().map(|v| format!("{:>2}", v.log())).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        for (p, v) in &self.trailer {
            writeln!(out, "({}, {}): {}", p.x.log(), p.y.log(), v.log()).unwrap();
        }
        out
    }
}
