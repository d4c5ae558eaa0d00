//! Deterministic generators for the example families.

mod geometry;
mod gf81;
mod oa;

pub use geometry::{collinearity_graph, gq22, gq24, IncidenceGeometry};
pub use gf81::{brouwer_haemers, Gf81};
pub use oa::{block_graph, orthogonal_array, OrthogonalArray};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::line_graph;

/// `K_n`.
///
/// # Panics
///
/// If `n == 0`.
pub fn complete_graph(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).expect("complete graph needs n >= 1")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
///
/// # Panics
///
/// If `a + b == 0`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph with consecutive parts of the given sizes.
///
/// # Panics
///
/// If the parts are all empty.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v]).expect("at least one vertex")
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Result<Graph> {
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes, inner pentagram `5..10`.
pub fn petersen_graph() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, e).expect("valid edges")
}

/// The `n × n` rook graph, vertex `(i, j)` numbered `i·n + j`.
pub fn rook_graph(n: usize) -> Result<Graph> {
    Ok(block_graph(&orthogonal_array(n, 2)?))
}

/// The triangular graph `T_n = L(K_n)`; vertex order is the lexicographic
/// order of the 2-subsets of `0..n`.
pub fn triangular_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("triangular graph needs n >= 3, got {n}")));
    }
    line_graph(&complete_graph(n))
}

/// Collinearity graph of [`gq22`], which is `srg(15, 6, 1, 3)`.
pub fn gq22_graph() -> Graph {
    collinearity_graph(&gq22()).expect("GQ(2,2) is valid")
}

/// The intersection graph of the 27 lines on a cubic surface, which is the
/// collinearity graph of GQ(2,4), an `srg(27, 10, 1, 5)`.
///
/// Vertices `0..6` are `a_i`, `6..12` are `b_i`, and `12..27` are `c_ij`
/// for `i < j` in lexicographic order.
pub fn gq24_graph() -> Graph {
    #[derive(Clone, Copy)]
    enum Line {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut lines: Vec<Line> = (0..6).map(Line::A).collect();
    lines.extend((0..6).map(Line::B));
    for i in 0..6 {
        for j in i + 1..6 {
            lines.push(Line::C(i, j));
        }
    }
    Graph::from_fn(27, |u, v| match (lines[u], lines[v]) {
        (Line::A(i), Line::B(j)) | (Line::B(j), Line::A(i)) => i != j,
        (Line::A(i) | Line::B(i), Line::C(j, k)) | (Line::C(j, k), Line::A(i) | Line::B(i)) => i == j || i == k,
        (Line::C(i, j), Line::C(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    })
    .expect("valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(complete_graph(5).size(), 10);
        assert_eq!(complete_bipartite(3, 3).size(), 9);
        assert_eq!(complete_multipartite(&[2, 2, 2]).size(), 12);
        assert_eq!(path_graph(3).unwrap().size(), 2);
        assert_eq!(cycle_graph(6).unwrap().regular_degree(), Some(2));
        assert_eq!(petersen_graph().regular_degree(), Some(3));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn rook_and_triangular_counts() {
        let r = rook_graph(3).unwrap();
        assert_eq!((r.order(), r.size()), (9, 18));
        assert!(r.has_edge(0, 2) && r.has_edge(0, 6) && !r.has_edge(0, 4));
        let t = triangular_graph(5).unwrap();
        assert_eq!((t.order(), t.size()), (10, 30));
        assert!(triangular_graph(2).is_err());
    }

    #[test]
    fn twenty_seven_lines_degrees() {
        let g = gq24_graph();
        assert_eq!(g.regular_degree(), Some(10));
        assert_eq!(g.triangles().len(), 45);
    }
}
