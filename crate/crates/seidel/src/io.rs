//! Text formats for matrices and graphs.
//!
//! smat: line 1 is the order `n`; the next `n` lines each hold `n`
//! space-separated integers in {-1, 0, 1}. The parser reports Seidel
//! invariant violations with line/column positions.
//!
//! edges: line 1 is `n m`; the next `m` lines each hold one edge `u v`
//! with 0-based vertex indices.

use crate::error::{Error, Result};
use crate::seidel::{Graph, SeidelMatrix};
use std::fmt::Write as _;

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

pub fn parse_smat(text: &str) -> Result<SeidelMatrix> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| parse_err(1, 1, format!("expected order, got {first:?}")))?;
    if n == 0 {
        return Err(parse_err(1, 1, "order must be positive"));
    }
    let mut rows: Vec<Vec<i8>> = Vec::with_capacity(n);
    for i in 0..n {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(i + 2, 1, format!("expected {n} matrix rows")))?;
        let mut row = Vec::with_capacity(n);
        for (col, tok) in line.split_whitespace().enumerate() {
            let v: i8 = tok.parse().map_err(|_| {
                parse_err(lineno + 1, col + 1, format!("expected -1, 0 or 1, got {tok:?}"))
            })?;
            if !(-1..=1).contains(&v) {
                return Err(parse_err(
                    lineno + 1,
                    col + 1,
                    format!("entry must be -1, 0 or 1, got {v}"),
                ));
            }
            row.push(v);
        }
        if row.len() != n {
            return Err(parse_err(
                lineno + 1,
                row.len() + 1,
                format!("expected {n} entries, got {}", row.len()),
            ));
        }
        rows.push(row);
    }
    // map invariant failures to positioned diagnostics
    SeidelMatrix::from_rows(rows).map_err(|e| match e {
        Error::InvalidSeidel { row, col, reason } => parse_err(row + 2, col + 1, reason),
        other => other,
    })
}

pub fn write_smat(s: &SeidelMatrix) -> String {
    let n = s.order();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| s.get(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_edges(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut head = first.split_whitespace();
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, 1, "expected vertex count"))?;
    let m: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, 2, "expected edge count"))?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(i + 2, 1, format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno + 1, 1, "expected vertex index"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno + 1, 2, "expected vertex index"))?;
        if u >= n || v >= n {
            return Err(parse_err(lineno + 1, 1, format!("vertex out of range in edge {u} {v}")));
        }
        if u == v {
            return Err(parse_err(lineno + 1, 1, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edges(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn smat_roundtrip() {
        for s in [fixtures::s10(), fixtures::s6(), fixtures::pentagon_seidel()] {
            let text = write_smat(&s);
            assert_eq!(parse_smat(&text).unwrap(), s);
        }
    }

    #[test]
    fn smat_rejects_invariant_violations() {
        // nonzero diagonal
        let text = "2\n1 1\n1 0\n";
        let err = parse_smat(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 1, .. }), "{err:?}");
        // asymmetric
        let text = "2\n0 1\n-1 0\n";
        assert!(parse_smat(text).is_err());
        // junk token
        let text = "2\n0 x\n1 0\n";
        let err = parse_smat(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 2, .. }), "{err:?}");
        // wrong entry magnitude is caught before invariants
        assert!(parse_smat("1\n5\n").is_err());
    }

    #[test]
    fn edges_roundtrip() {
        let g = fixtures::petersen_graph();
        let text = write_edges(&g);
        assert_eq!(parse_edges(&text).unwrap(), g);
        assert!(text.starts_with("10 15\n"));
    }

    #[test]
    fn edges_rejects_bad_input() {
        assert!(parse_edges("3 1\n0 3\n").is_err());
        assert!(parse_edges("3 1\n1 1\n").is_err());
        assert!(parse_edges("3 2\n0 1\n").is_err());
    }
}
