//! Simple undirected graphs on dense vertex sets `0..n`.

use std::fmt;

use crate::error::GraphError;

/// An immutable simple undirected graph.
///
/// Vertices are the integers `0..n`. Edges are stored once as `(u, v)` with
/// `u < v`, sorted lexicographically; the position of an edge in that order is
/// its *edge index*, which the incidence and lattice code relies on.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list in any order and orientation.
    ///
    /// Repeated edges are merged. Loops, out-of-range endpoints and `n == 0`
    /// are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Largest vertex degree.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adj.iter().all(|nb| nb.len() == k).then_some(k)
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Connected components, each a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(vertices.len(), edges)
    }

    /// Dense 0/1 adjacency rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            rows[u][v] = 1;
            rows[v][u] = 1;
        }
        rows
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Triangles as sorted triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for &w in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    out.push([u, v, w]);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalises_edges() {
        let g = Graph::new(4, [(2, 1), (0, 3), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
        assert_eq!(g.edge_index(3, 2), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edgeless_single_vertex_is_allowed() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.size(), 0);
        assert_eq!(g.regular_degree(), Some(0));
    }

    #[test]
    fn components_and_triangles() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert_eq!(g.triangles(), vec![[0, 1, 2]]);
        assert_eq!(g.common_neighbors(0, 1), 1);
    }
}
