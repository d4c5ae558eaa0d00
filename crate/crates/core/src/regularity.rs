//! Edge regular, strongly regular and regular clique assembly predicates.

use crate::cliques::{clique_number, clique_regular_witness, maximal_cliques};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::srg::SrgParams;

/// `(n, k, λ)` if `g` is k-regular and every adjacent pair has λ common
/// neighbours. An edgeless regular graph reports `λ = 0`.
pub fn is_edge_regular(g: &Graph) -> Option<(usize, usize, usize)> {
    let k = g.regular_degree()?;
    let mut lambda = None;
    for &(u, v) in g.edges() {
        let c = g.common_neighbors(u, v);
        match lambda {
            None => lambda = Some(c),
            Some(l) if l != c => return None,
            _ => {}
        }
    }
    Some((g.order(), k, lambda.unwrap_or(0)))
}

/// Parameters of `g` if it is strongly regular, neither complete nor edgeless.
///
/// Common neighbours are counted directly and the result is cross-checked
/// against `A² = kI + λA + μ(J − I − A)`.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParams> {
    if g.size() == 0 || g.is_complete() {
        return None;
    }
    let (n, k, lambda) = is_edge_regular(g)?;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let c = g.common_neighbors(u, v);
            match mu {
                None => mu = Some(c),
                Some(m) if m != c => return None,
                _ => {}
            }
        }
    }
    let mu = mu?;
    assert!(square_identity_holds(g, k, lambda, mu), "common-neighbour counts disagree with A²");
    SrgParams::new(n as i64, k as i64, lambda as i64, mu as i64).ok()
}

/// `A² = kI + λA + μ(J − I − A)` entry by entry.
pub fn square_identity_holds(g: &Graph, k: usize, lambda: usize, mu: usize) -> bool {
    let a = g.adjacency_rows();
    let n = g.order();
    for i in 0..n {
        for j in 0..n {
            let sq: i64 = (0..n).map(|t| a[i][t] * a[t][j]).sum();
            let expected = if i == j {
                k
            } else if a[i][j] == 1 {
                lambda
            } else {
                mu
            };
            if sq != expected as i64 {
                return false;
            }
        }
    }
    true
}

/// `(n, k, ω)` if `g` is a regular clique assembly.
///
/// Two characterisations are evaluated and must agree: the definition
/// (regular, every maximal clique maximum, every edge in one maximum clique)
/// and "ω-clique regular and edge regular with λ = ω − 2".
pub fn is_rca(g: &Graph) -> Option<(usize, usize, usize)> {
    let by_definition = rca_by_definition(g);
    let by_edge_regularity = rca_by_edge_regularity(g);
    assert_eq!(by_definition, by_edge_regularity, "the two RCA characterisations disagree on {g:?}");
    by_definition
}

/// The direct definition of a regular clique assembly.
pub fn rca_by_definition(g: &Graph) -> Option<(usize, usize, usize)> {
    let k = g.regular_degree()?;
    if g.size() == 0 {
        return None;
    }
    let maximal = maximal_cliques(g);
    let omega = maximal.iter().map(Vec::len).max()?;
    if maximal.iter().any(|c| c.len() != omega) {
        return None;
    }
    let mut count = vec![0u32; g.size()];
    for c in &maximal {
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                count[g.edge_index(u, v)?] += 1;
            }
        }
    }
    count.iter().all(|&x| x == 1).then_some((g.order(), k, omega))
}

/// Regular clique assembly via ω-clique regularity plus `erg(n, k, ω − 2)`.
pub fn rca_by_edge_regularity(g: &Graph) -> Option<(usize, usize, usize)> {
    if g.size() == 0 {
        return None;
    }
    let (n, k, lambda) = is_edge_regular(g)?;
    let omega = lambda + 2;
    if omega != clique_number(g) {
        return None;
    }
    clique_regular_witness(g, omega).ok()??;
    Some((n, k, omega))
}

/// Largest common-neighbour count over non-adjacent pairs of an RCA, against
/// the bound `k/(ω − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonAdjacentBound {
    /// `None` when every pair of vertices is adjacent.
    pub max_observed: Option<usize>,
    pub bound: usize,
}

impl NonAdjacentBound {
    pub fn holds(&self) -> bool {
        self.max_observed.is_none_or(|m| m <= self.bound)
    }
}

pub fn nonadjacent_common_neighbor_bound(g: &Graph) -> Result<NonAdjacentBound> {
    let (n, k, omega) = is_rca(g).ok_or(Error::NotRca)?;
    let mut max_observed = None;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let c = g.common_neighbors(u, v);
                max_observed = Some(max_observed.map_or(c, |m: usize| m.max(c)));
            }
        }
    }
    Ok(NonAdjacentBound { max_observed, bound: k / (omega - 1) })
}
