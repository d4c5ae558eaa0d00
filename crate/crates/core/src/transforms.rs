//! Line graph, ω-clique graph and ω-clique subdivision, the clique incidence
//! matrix, and the structural criteria for clique regular line graphs.

use num_bigint::BigInt;

use crate::cliques::{enumerate_cliques, require_clique_regular, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::IntMatrix;
use crate::regularity::is_rca;
use crate::report::Check;
use crate::spectral::adjacency_matrix;

/// Vertices are the edges of `g` in canonical order; adjacent iff they
/// share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let mut incident = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    Ok(Graph::new(g.size(), pairs_within(&incident))?)
}

fn pairs_within(groups: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for group in groups {
        for (a, &x) in group.iter().enumerate() {
            for &y in &group[a + 1..] {
                out.push((x, y));
            }
        }
    }
    out
}

/// Clique graph on the cliques of `set`: vertex `j` is clique `j`, adjacent
/// iff the cliques intersect.
pub fn clique_graph_of(set: &CliqueSet, n: usize) -> Result<Graph> {
    intersection_graph(&set.cliques, n)
}

fn intersection_graph(cliques: &[Vec<usize>], n: usize) -> Result<Graph> {
    let mut at = vec![Vec::new(); n];
    for (j, c) in cliques.iter().enumerate() {
        for &v in c {
            at[v].push(j);
        }
    }
    Ok(Graph::new(cliques.len(), pairs_within(&at))?)
}

/// `C_ω(Γ)` of an ω-clique regular graph.
pub fn clique_graph(g: &Graph, omega: usize) -> Result<Graph> {
    let set = require_clique_regular(g, omega)?;
    clique_graph_of(&set, g.order())
}

/// Intersection graph of all ω-cliques, with no regularity requirement.
/// `None` when `g` has no ω-clique.
pub fn clique_intersection_graph(g: &Graph, omega: usize) -> Result<Option<Graph>> {
    let cliques = enumerate_cliques(g, omega)?;
    if cliques.is_empty() {
        return Ok(None);
    }
    intersection_graph(&cliques, g.order()).map(Some)
}

/// `S_ω(Γ)`: vertices `0..m` are the cliques, `m..m+n` the original vertices,
/// clique `j` adjacent to `m + i` iff `v_i ∈ c_j`.
pub fn clique_subdivision(g: &Graph, omega: usize) -> Result<Graph> {
    let set = require_clique_regular(g, omega)?;
    Ok(subdivision_of(&set, g.order()))
}

pub(crate) fn subdivision_of(set: &CliqueSet, n: usize) -> Graph {
    let m = set.len();
    let edges = set.cliques.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&v| (j, m + v)));
    Graph::new(m + n, edges).expect("subdivision edges are in range")
}

/// The `n × m` vertex-clique incidence matrix `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueIncidence {
    pub matrix: IntMatrix,
}

pub fn clique_incidence(g: &Graph, omega: usize) -> Result<CliqueIncidence> {
    let set = require_clique_regular(g, omega)?;
    Ok(incidence_of(&set, g.order()))
}

pub(crate) fn incidence_of(set: &CliqueSet, n: usize) -> CliqueIncidence {
    let mut r = IntMatrix::zeros(n, set.len());
    for (j, c) in set.cliques.iter().enumerate() {
        for &v in c {
            r[(v, j)] = BigInt::from(1);
        }
    }
    CliqueIncidence { matrix: r }
}

/// `RᵀR = A_C + ωI` and `(ω−1)RRᵀ = (ω−1)A + D`, compared entry by entry.
pub fn verify_incidence_identities(g: &Graph, omega: usize) -> Result<Check> {
    let set = require_clique_regular(g, omega)?;
    let name = "clique incidence identities";
    let r = incidence_of(&set, g.order()).matrix;
    let rt = r.transpose();
    let ac = adjacency_matrix(&clique_graph_of(&set, g.order())?);
    let m = set.len();
    let lhs = rt.mul(&r)?;
    let rhs = ac.add(&IntMatrix::identity(m).scale(&BigInt::from(omega)))?;
    if let Some((i, j)) = lhs.first_difference(&rhs) {
        return Ok(Check::fail(name, format!("(RtR)[{i}][{j}] = {} but A_C + wI has {}", lhs[(i, j)], rhs[(i, j)])));
    }
    let w1 = BigInt::from(omega - 1);
    let lhs = r.mul(&rt)?.scale(&w1);
    let n = g.order();
    let degrees = IntMatrix::from_fn(n, n, |i, j| if i == j { g.degree(i) as i64 } else { 0 });
    let rhs = adjacency_matrix(g).scale(&w1).add(&degrees)?;
    if let Some((i, j)) = lhs.first_difference(&rhs) {
        return Ok(Check::fail(name, format!("(w-1)(RRt)[{i}][{j}] = {} but (w-1)A + D has {}", lhs[(i, j)], rhs[(i, j)])));
    }
    Ok(Check::pass(name, format!("R is {n}x{m}; both identities hold entrywise")))
}

/// Whether `L(g)` is ω-clique regular according to the degree criteria:
/// for ω ≥ 4 every non-isolated vertex has degree 1 or ω; for ω = 3 every
/// component other than a triangle is triangle-free with degrees in {1, 3}.
/// An `L(g)` without edges is never clique regular.
pub fn line_clique_regular_predicate(g: &Graph, omega: usize) -> Result<bool> {
    if omega < 3 {
        return Err(Error::InvalidOmega { omega, min: 3 });
    }
    if !g.degrees().iter().any(|&d| d >= 2) {
        return Ok(false);
    }
    let degree_ok = |v: usize| matches!(g.degree(v), 0 | 1) || g.degree(v) == omega;
    if omega >= 4 {
        return Ok((0..g.order()).all(degree_ok));
    }
    for comp in g.components() {
        let h = g.induced(&comp)?;
        if h.order() == 3 && h.size() == 3 {
            continue;
        }
        if !h.triangles().is_empty() || !comp.iter().all(|&v| degree_ok(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `C_ω(L(g)) ≅ g` according to the structural criteria, for
/// connected `g`: ω-regular when ω ≥ 4; when ω = 3, all degrees 2 or 3,
/// every degree-2 vertex on a triangle, every triangle with exactly one
/// degree-2 vertex, and distinct triangles vertex-disjoint.
pub fn line_clique_inverse_predicate(g: &Graph, omega: usize) -> Result<bool> {
    if omega < 3 {
        return Err(Error::InvalidOmega { omega, min: 3 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if omega >= 4 {
        return Ok(g.regular_degree() == Some(omega));
    }
    if !(0..g.order()).all(|v| matches!(g.degree(v), 2 | 3)) {
        return Ok(false);
    }
    let triangles = g.triangles();
    let mut on_triangle = vec![false; g.order()];
    for t in &triangles {
        if t.iter().filter(|&&v| g.degree(v) == 2).count() != 1 {
            return Ok(false);
        }
        for &v in t {
            on_triangle[v] = true;
        }
    }
    if (0..g.order()).any(|v| g.degree(v) == 2 && !on_triangle[v]) {
        return Ok(false);
    }
    for (a, s) in triangles.iter().enumerate() {
        for t in &triangles[a + 1..] {
            if s.iter().any(|v| t.contains(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// What happened to a regular clique assembly under `C_ω` and back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    /// `(n, k, ω)` of the input.
    pub original: (usize, usize, usize),
    /// `(nk/(ω(ω−1)), ω(k/(ω−1) − 1), k/(ω−1))`.
    pub expected: (usize, usize, usize),
    /// RCA parameters measured on `C_ω(Γ)`.
    pub measured: Option<(usize, usize, usize)>,
    /// `certificate[v]` is the clique of `C_ω(Γ)` formed by the cliques
    /// through `v`, as an index into the canonical clique order of `C_ω(Γ)`;
    /// verified to be an isomorphism `Γ → C_{k/(ω−1)}(C_ω(Γ))`.
    pub certificate: Option<Vec<usize>>,
}

impl RoundTrip {
    /// Every vertex lies in one clique, so `C_ω(Γ)` is edgeless.
    pub fn is_degenerate(&self) -> bool {
        self.expected.2 == 1
    }

    pub fn passed(&self) -> bool {
        if self.is_degenerate() {
            self.measured.is_none()
        } else {
            self.measured == Some(self.expected) && self.certificate.is_some()
        }
    }
}

/// Builds `C_ω(Γ)` of a regular clique assembly, checks it is the RCA
/// predicted by its parameters, and that `C_{k/(ω−1)}(C_ω(Γ)) ≅ Γ` via the
/// vertex-to-clique map.
pub fn rca_roundtrip(g: &Graph) -> Result<RoundTrip> {
    let (n, k, omega) = is_rca(g).ok_or(Error::NotRca)?;
    let set = require_clique_regular(g, omega)?;
    let per = k / (omega - 1);
    let expected = (n * k / (omega * (omega - 1)), omega * (per - 1), per);
    let c = clique_graph_of(&set, n)?;
    let measured = is_rca(&c);
    let mut trip = RoundTrip { original: (n, k, omega), expected, measured, certificate: None };
    if trip.is_degenerate() || measured != Some(expected) {
        return Ok(trip);
    }
    let back = require_clique_regular(&c, per)?;
    let at = set.cliques_at_vertices(n);
    let mut cert = Vec::with_capacity(n);
    for cl in &at {
        match back.cliques.binary_search(cl) {
            Ok(j) => cert.push(j),
            Err(_) => return Ok(trip),
        }
    }
    let image = clique_graph_of(&back, c.order())?;
    let mut seen = vec![false; image.order()];
    for &j in &cert {
        if std::mem::replace(&mut seen[j], true) {
            return Ok(trip);
        }
    }
    let preserves = image.order() == n
        && image.size() == g.size()
        && g.edges().iter().all(|&(u, v)| image.has_edge(cert[u], cert[v]));
    if preserves {
        trip.certificate = Some(cert);
    }
    Ok(trip)
}
