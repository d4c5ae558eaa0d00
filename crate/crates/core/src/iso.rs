//! Graph isomorphism by colour refinement and individualisation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`is_isomorphic`].
pub const MAX_ORDER: usize = 2000;

/// Returns an isomorphism `a → b` as a vertex map, or `None`.
///
/// Complete multipartite graphs are decided directly from their parts; other
/// graphs go through joint colour refinement with backtracking over
/// individualised vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let n = a.order();
    if n > MAX_ORDER || b.order() > MAX_ORDER {
        return Err(Error::TooLarge(format!("isomorphism test limited to {MAX_ORDER} vertices")));
    }
    if n != b.order() || a.size() != b.size() {
        return Ok(None);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    if let (Some(pa), Some(pb)) = (multipartite_parts(a), multipartite_parts(b)) {
        return Ok(match_parts(pa, pb, n));
    }
    let mut search = Search::new(a, b);
    let colors = search.refine(vec![0; 2 * n]);
    Ok(search.extend(colors))
}

/// Parts of `g` when non-adjacency is an equivalence relation.
fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut part = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if part[u] != usize::MAX || g.degree(u) != n - members.len() {
                return None;
            }
            part[u] = parts.len();
        }
        parts.push(members);
    }
    Some(parts)
}

fn match_parts(mut pa: Vec<Vec<usize>>, mut pb: Vec<Vec<usize>>, n: usize) -> Option<Vec<usize>> {
    pa.sort_by_key(Vec::len);
    pb.sort_by_key(Vec::len);
    let mut map = vec![0; n];
    for (x, y) in pa.iter().zip(&pb) {
        if x.len() != y.len() {
            return None;
        }
        for (&u, &v) in x.iter().zip(y) {
            map[u] = v;
        }
    }
    (pa.len() == pb.len()).then_some(map)
}

struct Search<'g> {
    a: &'g Graph,
    b: &'g Graph,
    n: usize,
}

impl<'g> Search<'g> {
    fn new(a: &'g Graph, b: &'g Graph) -> Self {
        Search { a, b, n: a.order() }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (g, offset) = if v < self.n { (self.a, 0) } else { (self.b, self.n) };
        g.neighbors(v - offset).iter().map(move |&u| u + offset)
    }

    /// Stable colouring of the disjoint union; colour ids are shared between
    /// the two sides so classes can be compared directly.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(usize, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut around: Vec<usize> = self.neighbors(v).map(|u| colors[u]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let ids: HashMap<&(usize, Vec<usize>), usize> = distinct.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            colors = signatures.iter().map(|s| ids[s]).collect();
            if distinct.len() == classes {
                return colors;
            }
            classes = distinct.len();
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut count: HashMap<usize, isize> = HashMap::new();
        for (v, &c) in colors.iter().enumerate() {
            *count.entry(c).or_default() += if v < self.n { 1 } else { -1 };
        }
        count.values().all(|&x| x == 0)
    }

    fn extend(&mut self, colors: Vec<usize>) -> Option<Vec<usize>> {
        if !self.balanced(&colors) {
            return None;
        }
        let mut size: HashMap<usize, usize> = HashMap::new();
        for &c in &colors[..self.n] {
            *size.entry(c).or_default() += 1;
        }
        let target = (0..self.n).filter(|&v| size[&colors[v]] > 1).min_by_key(|&v| (size[&colors[v]], v));
        let Some(x) = target else {
            return self.discrete_map(&colors);
        };
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        for y in (self.n..2 * self.n).filter(|&y| colors[y] == colors[x]) {
            let mut next = colors.clone();
            next[x] = fresh;
            next[y] = fresh;
            let refined = self.refine(next);
            if let Some(map) = self.extend(refined) {
                return Some(map);
            }
        }
        None
    }

    fn discrete_map(&self, colors: &[usize]) -> Option<Vec<usize>> {
        let owner: HashMap<usize, usize> = (self.n..2 * self.n).map(|y| (colors[y], y - self.n)).collect();
        let map: Vec<usize> = (0..self.n).map(|x| owner[&colors[x]]).collect();
        self.a.edges().iter().all(|&(u, v)| self.b.has_edge(map[u], map[v])).then_some(map)
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle_graph, petersen_graph, rook_graph, triangular_graph};
    use crate::transforms::line_graph;

    fn check(a: &Graph, b: &Graph, map: &[usize]) {
        for &(u, v) in a.edges() {
            assert!(b.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn petersen_is_complement_of_t5() {
        let t5 = triangular_graph(5).unwrap();
        let comp = Graph::from_fn(10, |u, v| !t5.has_edge(u, v)).unwrap();
        let p = petersen_graph();
        let map = is_isomorphic(&p, &comp).unwrap().unwrap();
        check(&p, &comp, &map);
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        let c6 = cycle_graph(6).unwrap();
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(is_isomorphic(&c6, &two_triangles).unwrap().is_none());
        assert!(is_isomorphic(&rook_graph(4).unwrap(), &shrikhande()).unwrap().is_none());
    }

    fn shrikhande() -> Graph {
        let id = |x: usize, y: usize| 4 * (x % 4) + y % 4;
        let mut edges = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
                    edges.push((id(x, y), id(x + dx, y + dy)));
                }
            }
        }
        Graph::new(16, edges).unwrap()
    }

    #[test]
    fn multipartite_path() {
        let a = complete_bipartite(2, 3);
        let b = Graph::new(5, [(2, 0), (2, 1), (2, 4), (3, 0), (3, 1), (3, 4)]).unwrap();
        let map = is_isomorphic(&a, &b).unwrap().unwrap();
        check(&a, &b, &map);
        assert!(is_isomorphic(&complete_bipartite(1, 4), &line_graph(&complete_bipartite(1, 4)).unwrap()).unwrap().is_none());
    }
}
