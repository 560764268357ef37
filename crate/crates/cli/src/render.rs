use std::fmt::Write as _;

use tribo_core::incomplete::{incomplete_tl_number, incomplete_tl_poly, TlMethod};
use tribo_core::triangles::{triangle_rows, TriangleKind};
use tribo_core::Result;

/// One of the four reproduced tables: ragged rows of rendered cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub number: u8,
    /// Column variable, `i` for the triangles and `s` for the incomplete tables.
    pub column: char,
    pub first_row: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn build_table(number: u8, rows: usize) -> Result<Table> {
    let texts = |v: &[tribo_core::FamilyValue]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(match number {
        1 | 2 => {
            let kind = if number == 1 { TriangleKind::Numbers } else { TriangleKind::Polynomials };
            let t = triangle_rows(kind, rows)?;
            Table { number, column: 'i', first_row: 0, rows: t.rows().iter().map(|r| texts(r)).collect() }
        }
        3 | 4 => {
            let mut out = Vec::with_capacity(rows);
            for n in 1..=rows {
                let mut row = Vec::with_capacity(n / 2 + 1);
                for s in 0..=n / 2 {
                    row.push(if number == 3 {
                        incomplete_tl_poly(n, s, TlMethod::TriangleSum)?.to_string()
                    } else {
                        incomplete_tl_number(n, s)?.to_string()
                    });
                }
                out.push(row);
            }
            Table { number, column: 's', first_row: 1, rows: out }
        }
        _ => unreachable!("table number validated by the argument parser"),
    })
}

impl Table {
    /// Tab-separated, ragged: a header of column indices, then `n` and the
    /// defined cells of each row.
    pub fn plain(&self) -> String {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = format!("n\\{}", self.column);
        for k in 0..width {
            let _ = write!(out, "\t{k}");
        }
        out.push('\n');
        for (k, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{}", self.first_row + k);
            for cell in row {
                let _ = write!(out, "\t{cell}");
            }
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = format!("n,{},value\n", self.column);
        for (k, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let _ = writeln!(out, "{},{c},{cell}", self.first_row + k);
            }
        }
        out
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "table": self.number,
            "column": self.column.to_string(),
            "first_row": self.first_row,
            "rows": self.rows,
        })
    }
}

/// Values as `[a,b,c]`.
pub fn bracketed(values: &[String]) -> String {
    format!("[{}]", values.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_layout() {
        let t = build_table(4, 3).unwrap();
        assert_eq!(t.plain(), "n\\s\t0\t1\n1\t1\n2\t1\t3\n3\t1\t7\n");
        assert_eq!(t.csv().lines().nth(3).unwrap(), "2,1,3");
    }

    #[test]
    fn single_row_triangle() {
        assert_eq!(build_table(1, 1).unwrap().plain(), "n\\i\t0\n0\t3\n");
    }
}
