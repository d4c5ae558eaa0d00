//! Clique enumeration and the ω-clique regularity witness.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All maximal cliques, each sorted, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..g.order()).collect();
    bron_kerbosch(g, &mut r, p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort_unstable();
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximising |P ∩ N(u)|
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
        .expect("P is non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np: Vec<usize> = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Every ω-vertex complete subgraph, each sorted, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, omega: usize) -> Result<Vec<Vec<usize>>> {
    if omega < 2 {
        return Err(Error::InvalidOmega { omega, min: 2 });
    }
    if omega == 2 {
        return Ok(g.edges().iter().map(|&(u, v)| vec![u, v]).collect());
    }
    let mut out = Vec::new();
    for c in maximal_cliques(g) {
        if c.len() >= omega {
            push_subsets(&c, omega, &mut out);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn push_subsets(set: &[usize], size: usize, out: &mut Vec<Vec<usize>>) {
    let mut idx: Vec<usize> = (0..size).collect();
    let n = set.len();
    loop {
        out.push(idx.iter().map(|&i| set[i]).collect());
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Order of the largest clique; 1 for an edgeless graph.
pub fn clique_number(g: &Graph) -> usize {
    if g.size() == 0 {
        return 1;
    }
    maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(1)
}

/// The ω-cliques of an ω-clique regular graph together with the map sending
/// each edge (by canonical edge index) to the unique clique containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    pub omega: usize,
    pub cliques: Vec<Vec<usize>>,
    pub edge_to_clique: Vec<usize>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Index of the clique containing edge `{u, v}`.
    pub fn clique_of_edge(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        g.edge_index(u, v).map(|e| self.edge_to_clique[e])
    }

    /// For each vertex, the indices of the cliques containing it (ascending).
    pub fn cliques_at_vertices(&self, n: usize) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); n];
        for (j, c) in self.cliques.iter().enumerate() {
            for &v in c {
                at[v].push(j);
            }
        }
        at
    }
}

/// Returns the ω-clique set if every edge of `g` lies in exactly one ω-clique.
///
/// Fails with [`Error::NoEdges`] on an edgeless graph, which is not clique
/// regular for any ω.
pub fn clique_regular_witness(g: &Graph, omega: usize) -> Result<Option<CliqueSet>> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let cliques = enumerate_cliques(g, omega)?;
    let mut owner = vec![usize::MAX; g.size()];
    for (j, c) in cliques.iter().enumerate() {
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                let e = g.edge_index(u, v).expect("clique pairs are edges");
                if owner[e] != usize::MAX {
                    return Ok(None);
                }
                owner[e] = j;
            }
        }
    }
    if owner.iter().any(|&j| j == usize::MAX) {
        return Ok(None);
    }
    Ok(Some(CliqueSet { omega, cliques, edge_to_clique: owner }))
}

/// Like [`clique_regular_witness`] but turns absence into [`Error::NotCliqueRegular`].
pub fn require_clique_regular(g: &Graph, omega: usize) -> Result<CliqueSet> {
    clique_regular_witness(g, omega)?.ok_or(Error::NotCliqueRegular { omega })
}

/// Every ω ≥ 2 for which `g` is ω-clique regular, ascending.
pub fn clique_regular_orders(g: &Graph) -> Result<Vec<usize>> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let top = clique_number(g);
    let mut out = Vec::new();
    for omega in 2..=top {
        if clique_regular_witness(g, omega)?.is_some() {
            out.push(omega);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, gq22_graph, rook_graph};

    fn brute_force_cliques(g: &Graph, omega: usize) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != omega {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v))) {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn complete_graph_cliques() {
        assert_eq!(enumerate_cliques(&complete_graph(4), 3).unwrap().len(), 4);
        assert_eq!(clique_number(&complete_graph(5)), 5);
    }

    #[test]
    fn rook_nine_has_six_triangles() {
        let g = rook_graph(3).unwrap();
        let c = enumerate_cliques(&g, 3).unwrap();
        assert_eq!(c, brute_force_cliques(&g, 3));
        assert_eq!(c.len(), 6);
        assert_eq!(clique_number(&g), 3);
    }

    #[test]
    fn gq22_has_fifteen_lines() {
        let g = gq22_graph();
        // nk / (ω(ω−1)) = 15·6/6
        assert_eq!(enumerate_cliques(&g, 3).unwrap().len(), 15);
    }

    #[test]
    fn witness_cases() {
        let k4 = complete_graph(4);
        assert!(clique_regular_witness(&k4, 3).unwrap().is_none());
        assert!(clique_regular_witness(&k4, 2).unwrap().is_some());
        let rook = rook_graph(3).unwrap();
        let w = clique_regular_witness(&rook, 3).unwrap().unwrap();
        assert_eq!(w.len(), 6);
        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(clique_regular_witness(&edgeless, 2), Err(Error::NoEdges));
        assert!(enumerate_cliques(&rook, 1).is_err());
    }

    #[test]
    fn petersen_is_triangle_free() {
        let petersen = Graph::new(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        assert_eq!(clique_number(&petersen), 2);
        assert!(brute_force_cliques(&petersen, 3).is_empty());
    }
}
