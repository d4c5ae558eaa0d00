use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `u · a = h` with `u` unimodular and `h` in row Hermite normal form:
/// the first `rank` rows are nonzero with strictly increasing pivot columns,
/// positive pivots, and entries above each pivot reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn row_axpy(m: &mut IntMatrix, dst: usize, q: &BigInt, src: usize) {
    // row_dst −= q · row_src
    if q.is_zero() {
        return;
    }
    let cols = m.cols();
    for j in 0..cols {
        if m[(src, j)].is_zero() {
            continue;
        }
        let d = q * &m[(src, j)];
        m[(dst, j)] -= d;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, q: &BigInt, src: usize) {
    // col_dst −= q · col_src
    if q.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        if m[(i, src)].is_zero() {
            continue;
        }
        let d = q * &m[(i, src)];
        m[(i, dst)] -= d;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for x in m.row_mut(i) {
        *x = -&*x;
    }
}

/// Row Hermite normal form with its unimodular transform.
pub fn hermite_rows(a: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows).filter(|&i| !h[(i, c)].is_zero()).min_by_key(|&i| h[(i, c)].abs());
            let Some(best) = best else { break };
            h.swap_rows(best, r);
            u.swap_rows(best, r);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            row_axpy(&mut h, i, &q, r);
            row_axpy(&mut u, i, &q, r);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { h, u, rank: r, pivots }
}

/// A basis (rows) of the integer solutions of `a · x = 0`, itself in
/// Hermite normal form.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let hf = hermite_rows(&a.transpose());
    let n = a.cols();
    let k = n - hf.rank;
    let mut basis = IntMatrix::zeros(k, n);
    for i in 0..k {
        basis.row_mut(i).clone_from_slice(hf.u.row(hf.rank + i));
    }
    if k == 0 {
        return basis;
    }
    let tidy = hermite_rows(&basis);
    let mut out = IntMatrix::zeros(tidy.rank, n);
    for i in 0..tidy.rank {
        out.row_mut(i).clone_from_slice(tidy.h.row(i));
    }
    out
}

/// A subgroup of `Zⁿ` stored by its Hermite basis (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    /// The lattice spanned by the rows of `generators`.
    pub fn from_rows(generators: &IntMatrix) -> Self {
        let hf = hermite_rows(generators);
        let mut basis = IntMatrix::zeros(hf.rank, generators.cols());
        for i in 0..hf.rank {
            basis.row_mut(i).clone_from_slice(hf.h.row(i));
        }
        Lattice { basis, pivots: hf.pivots }
    }

    /// The lattice spanned by the columns of `generators`.
    pub fn from_columns(generators: &IntMatrix) -> Self {
        Self::from_rows(&generators.transpose())
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim());
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (r, &c) in self.pivots.iter().enumerate() {
            let (q, rem) = v[c].div_rem(&self.basis[(r, c)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in v.iter_mut().zip(self.basis.row(r)) {
                    *x -= &q * b;
                }
            }
            coords.push(q);
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `[Zⁿ : L]` for a full-rank lattice.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.dim()).then(|| (0..self.rank()).map(|i| self.basis[(i, self.pivots[i])].clone()).product())
    }
}

/// `u · a · v = s` with `s` diagonal, diagonal entries non-negative and each
/// dividing the next, `u` and `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct SmithWork {
    s: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl SmithWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn row_axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        row_axpy(&mut self.s, dst, q, src);
        if let Some(u) = &mut self.u {
            row_axpy(u, dst, q, src);
        }
    }

    fn col_axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        col_axpy(&mut self.s, dst, q, src);
        if let Some(v) = &mut self.v {
            col_axpy(v, dst, q, src);
        }
    }

    fn negate_row(&mut self, i: usize) {
        negate_row(&mut self.s, i);
        if let Some(u) = &mut self.u {
            negate_row(u, i);
        }
    }

    fn run(&mut self) {
        let (rows, cols) = (self.s.rows(), self.s.cols());
        for t in 0..rows.min(cols) {
            // smallest nonzero entry of the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &self.s[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < self.s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return };
            self.swap_rows(t, bi);
            self.swap_cols(t, bj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if !self.s[(i, t)].is_zero() {
                        let q = self.s[(i, t)].div_floor(&self.s[(t, t)]);
                        self.row_axpy(i, &q, t);
                        clean &= self.s[(i, t)].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.s[(t, j)].is_zero() {
                        let q = self.s[(t, j)].div_floor(&self.s[(t, t)]);
                        self.col_axpy(j, &q, t);
                        clean &= self.s[(t, j)].is_zero();
                    }
                }
                if !clean {
                    // a smaller remainder in row or column t becomes the pivot
                    let col_best = (t + 1..rows).filter(|&i| !self.s[(i, t)].is_zero()).min_by_key(|&i| self.s[(i, t)].abs());
                    let row_best = (t + 1..cols).filter(|&j| !self.s[(t, j)].is_zero()).min_by_key(|&j| self.s[(t, j)].abs());
                    let col_abs = col_best.map(|i| self.s[(i, t)].abs());
                    let row_abs = row_best.map(|j| self.s[(t, j)].abs());
                    match (col_abs, row_abs) {
                        (Some(a), Some(b)) if b < a => self.swap_cols(t, row_best.unwrap()),
                        (Some(_), _) => self.swap_rows(t, col_best.unwrap()),
                        (None, Some(_)) => self.swap_cols(t, row_best.unwrap()),
                        (None, None) => unreachable!("unclean pivot without remainders"),
                    }
                    continue;
                }
                let p = self.s[(t, t)].clone();
                let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !self.s[(i, j)].is_multiple_of(&p)));
                match offender {
                    Some(i) => self.row_axpy(t, &BigInt::from(-1), i),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut w = SmithWork { s: a.clone(), u: Some(IntMatrix::identity(a.rows())), v: Some(IntMatrix::identity(a.cols())) };
    w.run();
    SmithForm { s: w.s, u: w.u.expect("tracked"), v: w.v.expect("tracked") }
}

/// The Smith diagonal (length `min(rows, cols)`) without transforms.
pub fn smith_invariants(a: &IntMatrix) -> Vec<BigInt> {
    let mut w = SmithWork { s: a.clone(), u: None, v: None };
    w.run();
    (0..a.rows().min(a.cols())).map(|i| w.s[(i, i)].clone()).collect()
}

/// Square with determinant ±1.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.is_square() && m.det_bareiss().is_ok_and(|d| d.abs().is_one())
}
