//! The two input file formats.
//!
//! Graph files: a header line `n m`, then `m` lines `u v` with 1-indexed
//! vertices. Line files: one projective line per row as three signed decimal
//! integers `a b c`. In both, `#` starts a comment and blank lines are
//! ignored. Duplicates are rejected, and every error names the offending
//! line.

use std::fmt;

use chromatica::{Graph, ProjLine, ProjLineArrangement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Content lines with their 1-based line numbers, comments and blanks gone.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

/// Parse a graph file. Vertices are 1-indexed on disk, 0-indexed in memory.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header line \"n m\""))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| ParseError::new(header_no, format!("malformed header {header:?}, expected \"n m\"")))?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| ParseError::new(header_no, format!("malformed header {header:?}, expected \"n m\"")))?;
    if parts.next().is_some() {
        return Err(ParseError::new(header_no, format!("malformed header {header:?}, expected \"n m\"")));
    }
    if n == 0 {
        return Err(ParseError::new(header_no, "graph needs at least one vertex"));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(ParseError::new(line_no, format!("more than the declared {m} edges")));
        }
        let mut parts = line.split_whitespace();
        let err = || ParseError::new(line_no, format!("malformed edge {line:?}, expected \"u v\""));
        let u: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
        let v: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
        if parts.next().is_some() {
            return Err(err());
        }
        if u < 1 || u > n || v < 1 || v > n {
            return Err(ParseError::new(line_no, format!("vertex out of range 1..={n} in {line:?}")));
        }
        if u == v {
            return Err(ParseError::new(line_no, format!("loop {line:?} not allowed")));
        }
        let e = (u.min(v) - 1, u.max(v) - 1);
        if edges.contains(&e) {
            return Err(ParseError::new(line_no, format!("duplicate edge {line:?}")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(ParseError::new(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| ParseError::new(header_no, e.to_string()))
}

/// Canonical rendering: header, then edges sorted, 1-indexed.
#[cfg_attr(not(test), allow(dead_code))]
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Parse a projective-line arrangement file.
pub fn parse_lines(text: &str) -> Result<ProjLineArrangement, ParseError> {
    let mut arrangement = ProjLineArrangement::default();
    for (line_no, line) in content_lines(text) {
        let mut parts = line.split_whitespace();
        let err =
            || ParseError::new(line_no, format!("malformed line {line:?}, expected \"a b c\""));
        let a: i64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
        let b: i64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
        let c: i64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
        if parts.next().is_some() {
            return Err(err());
        }
        let proj = ProjLine::new(a, b, c)
            .map_err(|e| ParseError::new(line_no, e.to_string()))?;
        arrangement
            .push(proj)
            .map_err(|_| ParseError::new(line_no, format!("duplicate line {line:?} after normalization")))?;
    }
    Ok(arrangement)
}

/// Canonical rendering: normalized coefficients, one line per row.
#[cfg_attr(not(test), allow(dead_code))]
pub fn render_lines(a: &ProjLineArrangement) -> String {
    let mut out = String::new();
    for l in a.lines() {
        let (x, y, z) = l.coeffs();
        out.push_str(&format!("{x} {y} {z}\n"));
    }
    out
}
