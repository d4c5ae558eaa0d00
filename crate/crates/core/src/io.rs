//! Text formats: edge-list graph files, incidence geometry files and scan
//! records.
//!
//! A graph file is a header `n m` followed by `m` lines `u v` with
//! `0 ≤ u < v < n`, in ascending order.
//!
//! ```
//! use cliquereg::{io, Graph};
//!
//! let g = Graph::new(3, [(0, 1), (1, 2)])?;
//! let text = io::emit_graph(&g);
//! assert_eq!(text, "3 2\n0 1\n1 2\n");
//! assert_eq!(io::parse_graph(&text)?, g);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::families::IncidenceGeometry;
use crate::graph::Graph;
use crate::spectral::srg::SrgParams;

/// Malformed input, with the 1-based line it was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("expected a non-negative integer, found {t:?}"))))
        .collect()
}

/// Non-empty lines with their numbers; blank lines are only allowed at the end.
fn content_lines(text: &str) -> Result<Vec<(usize, &str)>, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let last = lines.iter().rposition(|l| !l.trim().is_empty()).map_or(0, |i| i + 1);
    lines[..last]
        .iter()
        .enumerate()
        .map(|(i, l)| if l.trim().is_empty() { Err(err(i + 1, "blank line")) } else { Ok((i + 1, *l)) })
        .collect()
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    match numbers(line, text)?[..] {
        [a, b] => Ok((a, b)),
        ref other => Err(err(line, format!("expected two integers, found {}", other.len()))),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = content_lines(text)?;
    let Some(&(hl, header)) = lines.first() else {
        return Err(err(1, "missing header \"n m\""));
    };
    let (n, m) = pair(hl, header)?;
    if n == 0 {
        return Err(err(hl, "a graph needs at least one vertex"));
    }
    if lines.len() - 1 != m {
        let at = lines.last().map_or(1, |l| l.0);
        return Err(err(at, format!("header announces {m} edges but {} edge lines follow", lines.len() - 1)));
    }
    let mut edges = Vec::with_capacity(m);
    for &(ln, l) in &lines[1..] {
        let (u, v) = pair(ln, l)?;
        if u >= v {
            return Err(err(ln, format!("edge {u} {v} must have u < v")));
        }
        if v >= n {
            return Err(err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if edges.last().is_some_and(|&prev| prev >= (u, v)) {
            return Err(err(ln, "edges must be strictly ascending"));
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges).expect("validated edges"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

/// Header `P L`, then one line of point indices per line of the geometry.
pub fn parse_geometry(text: &str) -> Result<IncidenceGeometry, ParseError> {
    let lines = content_lines(text)?;
    let Some(&(hl, header)) = lines.first() else {
        return Err(err(1, "missing header \"P L\""));
    };
    let (points, count) = pair(hl, header)?;
    if lines.len() - 1 != count {
        let at = lines.last().map_or(1, |l| l.0);
        return Err(err(at, format!("header announces {count} lines but {} follow", lines.len() - 1)));
    }
    let mut geometry_lines = Vec::with_capacity(count);
    for &(ln, l) in &lines[1..] {
        let pts = numbers(ln, l)?;
        if let Some(&p) = pts.iter().find(|&&p| p >= points) {
            return Err(err(ln, format!("point {p} out of range for {points} points")));
        }
        geometry_lines.push(pts);
    }
    IncidenceGeometry::new(points, geometry_lines).map_err(|e| err(hl, e.to_string()))
}

pub fn emit_geometry(geom: &IncidenceGeometry) -> String {
    let mut out = format!("{} {}\n", geom.points, geom.lines.len());
    for line in &geom.lines {
        let items: Vec<String> = line.iter().map(usize::to_string).collect();
        writeln!(out, "{}", items.join(" ")).expect("writing to a string");
    }
    out
}

/// `n k lambda mu r f s g`; the spectral fields are `-` without an
/// integral spectrum.
pub fn scan_record(p: &SrgParams) -> String {
    let spectrum = match p.spectrum {
        Some(s) => format!("{} {} {} {}", s.r, s.f, s.s, s.g),
        None => "- - - -".to_string(),
    };
    format!("{} {} {} {} {spectrum}", p.n, p.k, p.lambda, p.mu)
}
