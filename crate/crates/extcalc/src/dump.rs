//! Plain-text matrix dump: per matrix a `rows cols` line, then one line of
//! space-separated entries per row. Matrices are separated by blank lines.

use std::fmt::Write;

use extcalc_core::oracle::{ChainComplexFp, FpMatrix};

pub fn dump_matrices<'a>(matrices: impl IntoIterator<Item = &'a FpMatrix>) -> String {
    let mut out = String::new();
    for (k, m) in matrices.into_iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        writeln!(out, "{} {}", m.rows(), m.cols()).unwrap();
        for r in 0..m.rows() {
            let row: Vec<String> = m.row(r).iter().map(u64::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

pub fn dump_complex(c: &ChainComplexFp) -> String {
    dump_matrices(&c.differentials)
}

/// `(rows, cols, entries by row)` of one dumped matrix.
pub type DumpedMatrix = (usize, usize, Vec<Vec<u64>>);

/// Reads a dump back, one entry per matrix.
pub fn parse_dump(text: &str) -> Result<Vec<DumpedMatrix>, String> {
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate();
    while let Some((no, header)) = lines.next() {
        if header.trim().is_empty() {
            continue;
        }
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| format!("line {}: bad header", no + 1))?;
        let [rows, cols] = dims[..] else {
            return Err(format!("line {}: expected 'rows cols'", no + 1));
        };
        let mut data = Vec::with_capacity(rows);
        for _ in 0..rows {
            let (no, line) = lines.next().ok_or("truncated matrix")?;
            let row: Vec<u64> =
                line.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| format!("line {}: bad entry", no + 1))?;
            if row.len() != cols {
                return Err(format!("line {}: expected {cols} entries", no + 1));
            }
            data.push(row);
        }
        out.push((rows, cols, data));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = FpMatrix::from_rows(3, 2, &[vec![1, 2], vec![0, 1], vec![2, 2]]).unwrap();
        let b = FpMatrix::from_rows(3, 3, &[vec![0, 1, 2]]).unwrap();
        let text = dump_matrices([&a, &b]);
        assert_eq!(text, "3 2\n1 2\n0 1\n2 2\n\n1 3\n0 1 2\n");
        let back = parse_dump(&text).unwrap();
        assert_eq!(back[0], (3, 2, vec![vec![1, 2], vec![0, 1], vec![2, 2]]));
        assert_eq!(back[1], (1, 3, vec![vec![0, 1, 2]]));
        let empty = FpMatrix::zeros(2, 2, 0).unwrap();
        let text = dump_matrices([&empty, &b]);
        assert_eq!(parse_dump(&text).unwrap()[0], (2, 0, vec![vec![], vec![]]));
    }
}
