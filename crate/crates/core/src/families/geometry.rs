use crate::error::{Error, Result};
use crate::graph::Graph;

/// A point-line incidence structure on points `0..points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGeometry {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

impl IncidenceGeometry {
    /// Sorts each line and checks that it is a partial linear space: points in
    /// range, lines with at least two distinct points, and two lines sharing at
    /// most one point.
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut lines = lines;
        for (i, l) in lines.iter_mut().enumerate() {
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGeometry(format!("line {i} repeats a point")));
            }
            if l.len() < 2 {
                return Err(Error::InvalidGeometry(format!("line {i} has fewer than two points")));
            }
            if let Some(&p) = l.iter().find(|&&p| p >= points) {
                return Err(Error::InvalidGeometry(format!("line {i} uses point {p} out of range")));
            }
        }
        let geom = IncidenceGeometry { points, lines };
        let mut on = vec![vec![usize::MAX; points]; points];
        for (i, l) in geom.lines.iter().enumerate() {
            for (a, &p) in l.iter().enumerate() {
                for &q in &l[a + 1..] {
                    if on[p][q] != usize::MAX {
                        return Err(Error::InvalidGeometry(format!(
                            "points {p} and {q} lie on lines {} and {i}",
                            on[p][q]
                        )));
                    }
                    on[p][q] = i;
                }
            }
        }
        Ok(geom)
    }

    /// For each point, the indices of the lines through it.
    pub fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.points];
        for (i, l) in self.lines.iter().enumerate() {
            for &p in l {
                at[p].push(i);
            }
        }
        at
    }

    /// Lines become points and points become lines.
    pub fn dual(&self) -> Result<IncidenceGeometry> {
        IncidenceGeometry::new(self.lines.len(), self.lines_through())
    }

    /// `(s, t)` if this is a generalized quadrangle: every line has `s + 1`
    /// points, every point is on `t + 1` lines, and for a point `P` off a line
    /// `ℓ` exactly one line through `P` meets `ℓ`.
    pub fn gq_parameters(&self) -> Result<(usize, usize)> {
        let first = self.lines.first().ok_or_else(|| Error::InvalidGeometry("no lines".into()))?;
        let s = first.len() - 1;
        if let Some(i) = self.lines.iter().position(|l| l.len() != s + 1) {
            return Err(Error::InvalidGeometry(format!("line {i} does not have {} points", s + 1)));
        }
        let through = self.lines_through();
        let t = through[0].len().checked_sub(1).ok_or_else(|| Error::InvalidGeometry("point 0 is on no line".into()))?;
        if let Some(p) = through.iter().position(|ls| ls.len() != t + 1) {
            return Err(Error::InvalidGeometry(format!("point {p} is not on {} lines", t + 1)));
        }
        for (li, l) in self.lines.iter().enumerate() {
            for p in 0..self.points {
                if l.binary_search(&p).is_ok() {
                    continue;
                }
                let meeting = through[p]
                    .iter()
                    .filter(|&&j| self.lines[j].iter().any(|q| l.binary_search(q).is_ok()))
                    .count();
                if meeting != 1 {
                    return Err(Error::InvalidGeometry(format!(
                        "point {p} has {meeting} lines meeting line {li}"
                    )));
                }
            }
        }
        Ok((s, t))
    }
}

/// Points adjacent iff some line contains both.
pub fn collinearity_graph(geom: &IncidenceGeometry) -> Result<Graph> {
    let geom = IncidenceGeometry::new(geom.points, geom.lines.clone())?;
    let edges = geom
        .lines
        .iter()
        .flat_map(|l| l.iter().enumerate().flat_map(move |(a, &p)| l[a + 1..].iter().map(move |&q| (p, q))));
    Ok(Graph::new(geom.points, edges)?)
}

/// GQ(2,2): points are the 2-subsets of a 6-set in lexicographic order, lines
/// are the 15 perfect matchings (three pairwise disjoint pairs).
pub fn gq22() -> IncidenceGeometry {
    let mut pairs = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            pairs.push((i, j));
        }
    }
    let disjoint = |a: (usize, usize), b: (usize, usize)| a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
    let mut lines = Vec::new();
    for x in 0..15 {
        for y in x + 1..15 {
            for z in y + 1..15 {
                if disjoint(pairs[x], pairs[y]) && disjoint(pairs[x], pairs[z]) && disjoint(pairs[y], pairs[z]) {
                    lines.push(vec![x, y, z]);
                }
            }
        }
    }
    IncidenceGeometry::new(15, lines).expect("perfect matchings form a partial linear space")
}

/// GQ(2,4) on the 27 lines of [`gq24_graph`](super::gq24_graph); its lines
/// are the 45 triangles of that graph.
pub fn gq24() -> IncidenceGeometry {
    let g = super::gq24_graph();
    IncidenceGeometry::new(27, g.triangles().iter().map(|t| t.to_vec()).collect()).expect("triangles meet in at most a point")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gq22_axioms() {
        let g = gq22();
        assert_eq!(g.lines.len(), 15);
        assert_eq!(g.gq_parameters().unwrap(), (2, 2));
        assert_eq!(g.dual().unwrap().gq_parameters().unwrap(), (2, 2));
    }

    #[test]
    fn gq24_axioms() {
        let g = gq24();
        assert_eq!(g.gq_parameters().unwrap(), (2, 4));
        assert_eq!(g.dual().unwrap().gq_parameters().unwrap(), (4, 2));
    }

    #[test]
    fn rejects_broken_geometry() {
        assert!(IncidenceGeometry::new(3, vec![vec![0, 1], vec![0, 1, 2]]).is_err());
        assert!(IncidenceGeometry::new(3, vec![vec![0, 3]]).is_err());
        // a triangle is a partial linear space but not a GQ(1,1)
        let tri = IncidenceGeometry::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(tri.gq_parameters().is_err());
    }
}
