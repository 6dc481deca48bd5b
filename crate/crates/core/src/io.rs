//! Plain-text edge lists.
//!
//! ```text
//! # comments and blank lines are ignored
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn two_numbers(line_no: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split(' ');
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let field = fields
            .next()
            .ok_or_else(|| err(line_no, format!("missing {what}")))?;
        if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(line_no, format!("{what} is not a decimal integer: {field:?}")));
        }
        field
            .parse()
            .map_err(|e| err(line_no, format!("{what}: {e}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(err(line_no, "expected exactly two fields separated by one space"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Rejects duplicate edges, self-loops,
/// out-of-range or unordered endpoints and an edge count that disagrees
/// with the header.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut seen = 0usize;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let (n, m) = two_numbers(line_no, line)?;
                if n > MAX_VERTICES {
                    return Err(err(line_no, format!("order {n} exceeds {MAX_VERTICES}")));
                }
                if m > n * n.saturating_sub(1) / 2 {
                    return Err(err(line_no, format!("{m} edges cannot fit on {n} vertices")));
                }
                graph = Graph::empty(n);
                header = Some((n, m));
            }
            Some((n, m)) => {
                let (u, v) = two_numbers(line_no, line)?;
                if u == v {
                    return Err(err(line_no, format!("self-loop at {u}")));
                }
                if u >= n || v >= n {
                    return Err(err(line_no, format!("vertex out of range for n = {n}")));
                }
                if u > v {
                    return Err(err(line_no, format!("endpoints must satisfy u < v, got {u} {v}")));
                }
                if seen == m {
                    return Err(err(line_no, format!("more than the declared {m} edges")));
                }
                if !graph.add_edge(u, v) {
                    return Err(err(line_no, format!("duplicate edge {u} {v}")));
                }
                seen += 1;
            }
        }
    }
    match header {
        None => Err(err(last_line.max(1), "missing `n m` header")),
        Some((_, m)) if seen != m => Err(err(
            last_line,
            format!("header declares {m} edges but {seen} were listed"),
        )),
        Some(_) => Ok(graph),
    }
}

/// Writes `g` in the canonical edge-list layout (edges in lexicographic order).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.lo(), e.hi()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("3 3\n0 1\n0 2\n1 2\n").unwrap(), Graph::complete(3));
        assert_eq!(parse_edge_list("4 0\n").unwrap(), Graph::empty(4));
        let e = parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# mid\n0 2\n\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            ("3 2\n0 1\n0 1\n", 3),
            ("3 1\n0 3\n", 2),
            ("3 1\n1 0\n", 2),
            ("3 1\n0  1\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
            ("3\n", 1),
        ];
        for (text, line) in cases {
            let e = parse_edge_list(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn writes_canonical_form() {
        let text = write_edge_list(&Graph::path(3));
        assert_eq!(text, "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list(&text).unwrap(), Graph::path(3));
    }
}
