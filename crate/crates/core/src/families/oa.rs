use crate::error::{Error, Result};
use crate::graph::Graph;

/// An `n² × m` array over `0..n` in which every column pair contains every
/// ordered symbol pair exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<usize>>,
}

impl OrthogonalArray {
    /// Checks the pair property on every column pair.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if self.rows.len() != n * n || self.rows.iter().any(|r| r.len() != self.m || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidArgument("array has the wrong shape or symbols".into()));
        }
        for a in 0..self.m {
            for b in a + 1..self.m {
                let mut seen = vec![false; n * n];
                for r in &self.rows {
                    let key = r[a] * n + r[b];
                    if seen[key] {
                        return Err(Error::InvalidArgument(format!("pair repeated in columns {a}, {b}")));
                    }
                    seen[key] = true;
                }
            }
        }
        Ok(())
    }

    /// The canonical clique `S_{r,i}`: rows whose column `r` holds `i`.
    pub fn canonical_clique(&self, r: usize, i: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&x| self.rows[x][r] == i).collect()
    }

    /// All `m·n` canonical cliques, sorted.
    pub fn canonical_cliques(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            (0..self.m).flat_map(|r| (0..self.n).map(move |i| (r, i))).map(|(r, i)| self.canonical_clique(r, i)).collect();
        out.sort();
        out
    }
}

/// `OA(n, 2)` (all pairs) or `OA(n, 3)` whose third column is the cyclic
/// Latin square `(i + j) mod n`. Row `i·n + j` starts with `(i, j)`.
pub fn orthogonal_array(n: usize, m: usize) -> Result<OrthogonalArray> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("orthogonal array needs n >= 2, got {n}")));
    }
    if !(2..=3).contains(&m) {
        return Err(Error::InvalidArgument(format!("only m = 2 or 3 columns are supported, got {m}")));
    }
    let rows = (0..n * n)
        .map(|x| {
            let (i, j) = (x / n, x % n);
            let mut row = vec![i, j];
            if m == 3 {
                row.push((i + j) % n);
            }
            row
        })
        .collect();
    let oa = OrthogonalArray { n, m, rows };
    oa.validate()?;
    Ok(oa)
}

/// Rows adjacent iff they agree in some column.
pub fn block_graph(oa: &OrthogonalArray) -> Graph {
    Graph::from_fn(oa.rows.len(), |u, v| oa.rows[u].iter().zip(&oa.rows[v]).any(|(a, b)| a == b))
        .expect("an orthogonal array has rows")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oa33_matches_the_cyclic_table() {
        let oa = orthogonal_array(3, 3).unwrap();
        let expected = [[0, 0, 0], [0, 1, 1], [0, 2, 2], [1, 0, 1], [1, 1, 2], [1, 2, 0], [2, 0, 2], [2, 1, 0], [2, 2, 1]];
        for (row, e) in oa.rows.iter().zip(expected) {
            assert_eq!(row.as_slice(), e);
        }
    }

    #[test]
    fn validation_rejects_repeats() {
        let mut oa = orthogonal_array(4, 3).unwrap();
        oa.rows[1][2] = oa.rows[0][2];
        assert!(oa.validate().is_err());
        assert!(orthogonal_array(3, 4).is_err());
        assert!(orthogonal_array(1, 2).is_err());
    }

    #[test]
    fn block_graph_degree() {
        // each row meets n−1 others per column
        let g = block_graph(&orthogonal_array(5, 3).unwrap());
        assert_eq!(g.regular_degree(), Some(12));
        assert_eq!(orthogonal_array(5, 3).unwrap().canonical_cliques().len(), 15);
    }
}
