//! Critical groups: Laplacian cokernels, the edge-lattice description
//! `Z^E/(B ⊕ Z)`, spanning forest counts, and the maps `h`, `h⊤` between the
//! edge lattices of `Γ` and its clique subdivision.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::cliques::{require_clique_regular, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{integer_kernel, smith_invariants, IntMatrix, Lattice};
use crate::report::Check;
use crate::transforms::{clique_graph_of, subdivision_of};

/// Largest edge count on either side for which the lattice checks of
/// [`verify_induced_and_scalar`] are attempted.
pub const LATTICE_EDGE_LIMIT: usize = 200;

/// `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_t` with `d₁ | d₂ | …` and every `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    /// Cokernel of an integer matrix, `Z^rows / column span`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        if m.rows() == 0 {
            return AbelianGroupInvariants { free_rank: 0, torsion: Vec::new() };
        }
        if m.cols() == 0 {
            return AbelianGroupInvariants { free_rank: m.rows(), torsion: Vec::new() };
        }
        let diag = smith_invariants(m);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let torsion = diag.into_iter().filter(|d| *d > BigInt::one()).collect();
        AbelianGroupInvariants { free_rank: m.rows() - nonzero, torsion }
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `true` if every factor divides the next.
    pub fn is_chain(&self) -> bool {
        self.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {};", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

/// `L = D − A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), g.order(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else if g.has_edge(i, j) {
            -1
        } else {
            0
        }
    })
}

/// `coker(L) ≅ Z^c ⊕ K(Γ)`; the torsion part is the critical group.
///
/// The free rank is checked against the component count and the torsion
/// order against [`spanning_forest_count`].
pub fn critical_group(g: &Graph) -> Result<AbelianGroupInvariants> {
    let k = AbelianGroupInvariants::cokernel(&laplacian(g));
    if k.free_rank != g.component_count() {
        return Err(Error::Internal(format!("coker(L) has rank {} but the graph has {} components", k.free_rank, g.component_count())));
    }
    let kappa = spanning_forest_count(g)?;
    if k.torsion_order() != kappa {
        return Err(Error::Internal(format!("|K| = {} but the spanning forest count is {kappa}", k.torsion_order())));
    }
    Ok(k)
}

/// Product over components of a reduced Laplacian determinant.
pub fn spanning_forest_count(g: &Graph) -> Result<BigInt> {
    let mut total = BigInt::one();
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let h = g.induced(&comp)?;
        let l = laplacian(&h);
        let r = comp.len() - 1;
        let reduced = IntMatrix::from_fn(r, r, |i, j| i64::try_from(&l[(i + 1, j + 1)]).expect("Laplacian entries are small"));
        total *= reduced.det()?;
    }
    Ok(total)
}

/// `(v, u)` in the oriented basis: `(index, sign)`.
fn oriented(g: &Graph, v: usize, u: usize) -> (usize, i64) {
    let e = g.edge_index(v, u).expect("oriented pair is an edge");
    (e, if v < u { 1 } else { -1 })
}

/// `Z^E` with edges directed low → high, the bond vectors
/// `b(v) = Σ_{u ∈ N(v)} (v, u)` and the fundamental cycles of a
/// breadth-first spanning forest.
#[derive(Debug, Clone)]
pub struct OrientedEdgeLattice {
    pub graph: Graph,
    /// `|E| × n`, column `v` is `b(v)`.
    pub bond_basis: IntMatrix,
    /// `|E| × (|E| − n + c)`, one directed cycle per non-tree edge.
    pub cycle_basis: IntMatrix,
}

impl OrientedEdgeLattice {
    pub fn new(g: &Graph) -> Self {
        let m = g.size();
        let mut bond_basis = IntMatrix::zeros(m, g.order());
        for v in 0..g.order() {
            for &u in g.neighbors(v) {
                let (e, s) = oriented(g, v, u);
                bond_basis[(e, v)] = BigInt::from(s);
            }
        }
        let cycles = fundamental_cycles(g);
        let mut cycle_basis = IntMatrix::zeros(m, cycles.len());
        for (j, walk) in cycles.iter().enumerate() {
            for w in walk.windows(2) {
                let (e, s) = oriented(g, w[0], w[1]);
                cycle_basis[(e, j)] += s;
            }
        }
        OrientedEdgeLattice { graph: g.clone(), bond_basis, cycle_basis }
    }

    /// `[B | Z]`.
    pub fn generators(&self) -> IntMatrix {
        self.bond_basis.hstack(&self.cycle_basis).expect("same row count")
    }

    /// `B ⊕ Z` as a sublattice of `Z^E`.
    pub fn lattice(&self) -> Lattice {
        Lattice::from_columns(&self.generators())
    }

    /// Every bond column has zero inner product with every cycle column.
    pub fn is_orthogonal(&self) -> bool {
        let gram = self.bond_basis.transpose().mul(&self.cycle_basis).expect("same row count");
        gram.is_zero()
    }
}

/// Closed vertex walks `a, b, …, a` for each edge outside a BFS forest
/// rooted at the lowest vertex of each component.
fn fundamental_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree = vec![false; g.size()];
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    tree[g.edge_index(u, v).expect("edge")] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if tree[e] {
            continue;
        }
        let (mut x, mut y) = (a, b);
        let mut up_a = vec![a];
        let mut up_b = vec![b];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x];
                up_a.push(x);
            } else {
                y = parent[y];
                up_b.push(y);
            }
        }
        // a → b → … → lca → … → a
        up_a.pop();
        let mut walk = vec![a];
        walk.extend(up_b);
        walk.extend(up_a.into_iter().rev());
        out.push(walk);
    }
    out
}

/// `K(Γ) ≅ Z^E / (B ⊕ Z)`.
pub fn critical_group_via_edges(g: &Graph) -> AbelianGroupInvariants {
    AbelianGroupInvariants::cokernel(&OrientedEdgeLattice::new(g).generators())
}

/// `Γ`, its ω-cliques and `S_ω(Γ)` with the edge bookkeeping shared by
/// `h` and `h⊤`.
struct Subdivided {
    set: CliqueSet,
    s: Graph,
}

impl Subdivided {
    fn new(g: &Graph, omega: usize) -> Result<Self> {
        let set = require_clique_regular(g, omega)?;
        let s = subdivision_of(&set, g.order());
        Ok(Subdivided { set, s })
    }

    /// Index of the subdivision edge `(C_j, v)`, oriented clique → vertex.
    fn s_edge(&self, j: usize, v: usize) -> usize {
        self.s.edge_index(j, self.set.len() + v).expect("incidence is an S-edge")
    }
}

/// `h` on the oriented basis: column `(C, v)` is `−Σ_{u ∈ C−v} (v, u)`,
/// since the basis edge `(C, v)` is `−(v, C)`.
pub fn h_matrix(g: &Graph, omega: usize) -> Result<IntMatrix> {
    let sub = Subdivided::new(g, omega)?;
    Ok(h_of(g, &sub))
}

fn h_of(g: &Graph, sub: &Subdivided) -> IntMatrix {
    let mut h = IntMatrix::zeros(g.size(), sub.s.size());
    for (j, c) in sub.set.cliques.iter().enumerate() {
        for &v in c {
            let col = sub.s_edge(j, v);
            for &u in c.iter().filter(|&&u| u != v) {
                let (e, s) = oriented(g, v, u);
                h[(e, col)] -= s;
            }
        }
    }
    h
}

/// `h⊤(x, y) = (x, C_xy) + (C_xy, y)`, built from its own definition.
pub fn h_transpose_matrix(g: &Graph, omega: usize) -> Result<IntMatrix> {
    let sub = Subdivided::new(g, omega)?;
    Ok(h_transpose_of(g, &sub))
}

fn h_transpose_of(g: &Graph, sub: &Subdivided) -> IntMatrix {
    let mut ht = IntMatrix::zeros(sub.s.size(), g.size());
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        let j = sub.set.edge_to_clique[e];
        ht[(sub.s_edge(j, x), e)] -= 1;
        ht[(sub.s_edge(j, y), e)] += 1;
    }
    ht
}

/// `h` and `h⊤` for `g`, with adjointness checked.
fn adjoint_pair(g: &Graph, sub: &Subdivided) -> Result<(IntMatrix, IntMatrix)> {
    let h = h_of(g, sub);
    let ht = h_transpose_of(g, sub);
    if let Some((i, j)) = h.transpose().first_difference(&ht) {
        return Err(Error::Internal(format!("h and h-transpose disagree at ({i}, {j})")));
    }
    Ok((h, ht))
}

/// First column of `m` outside `lattice`.
fn first_column_outside(m: &IntMatrix, lattice: &Lattice) -> Option<usize> {
    (0..m.cols()).find(|&j| !lattice.contains(&m.col(j)))
}

/// `h(B_S ⊕ Z_S) ⊆ B ⊕ Z`, `h⊤(B ⊕ Z) ⊆ B_S ⊕ Z_S`, and `h h⊤ − ω`,
/// `h⊤ h − ω` mapping the whole edge lattices into those sublattices.
pub fn verify_induced_and_scalar(g: &Graph, omega: usize) -> Result<Check> {
    let sub = Subdivided::new(g, omega)?;
    let name = "induced maps and scalar multiplication";
    if g.size().max(sub.s.size()) > LATTICE_EDGE_LIMIT {
        return Ok(Check::skipped(name, format!("more than {LATTICE_EDGE_LIMIT} edges")));
    }
    let (h, ht) = adjoint_pair(g, &sub)?;
    let gamma = OrientedEdgeLattice::new(g);
    let s = OrientedEdgeLattice::new(&sub.s);
    let (l_gamma, l_s) = (gamma.lattice(), s.lattice());
    let w = BigInt::from(omega);
    let cases = [
        ("h(B_S+Z_S) in B+Z", h.mul(&s.generators())?, &l_gamma),
        ("hT(B+Z) in B_S+Z_S", ht.mul(&gamma.generators())?, &l_s),
        ("(h hT - w)Z^E in B+Z", h.mul(&ht)?.sub(&IntMatrix::identity(g.size()).scale(&w))?, &l_gamma),
        ("(hT h - w)Z^E_S in B_S+Z_S", ht.mul(&h)?.sub(&IntMatrix::identity(sub.s.size()).scale(&w))?, &l_s),
    ];
    for (label, images, target) in &cases {
        if let Some(j) = first_column_outside(images, target) {
            return Ok(Check::fail(name, format!("{label} fails at generator {j}")));
        }
    }
    Ok(Check::pass(name, format!("|E| = {}, |E_S| = {}", g.size(), sub.s.size())))
}

/// Which map's kernel was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `h: K(S_ω(Γ)) → K(Γ)`.
    H,
    /// `h⊤: K(Γ) → K(S_ω(Γ))`.
    HTranspose,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::H => "ker(h)",
            Direction::HTranspose => "ker(hT)",
        })
    }
}

/// Structure of `ker(h)` or `ker(h⊤)` on critical groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub direction: Direction,
    pub omega: usize,
    /// `m − n + c`.
    pub excess: i64,
    pub invariants: AbelianGroupInvariants,
}

impl KernelReport {
    /// `ω^{|m−n+c|}` divides the kernel order.
    pub fn order_bound_holds(&self) -> bool {
        let w = BigInt::from(self.omega);
        let bound: BigInt = Pow::pow(&w, self.excess.unsigned_abs());
        self.invariants.free_rank == 0 && self.invariants.torsion_order().is_multiple_of(&bound)
    }

    /// Every invariant factor divides ω, so every element order does.
    pub fn exponent_bound_holds(&self) -> bool {
        let w = BigInt::from(self.omega);
        self.invariants.torsion.iter().all(|d| w.is_multiple_of(d))
    }

    /// The observed kernel is `(Z/ωZ)^{|m−n+c|}`.
    pub fn matches_conjecture(&self) -> bool {
        self.invariants.free_rank == 0
            && self.invariants.torsion.len() as u64 == self.excess.unsigned_abs()
            && self.invariants.torsion.iter().all(|d| *d == BigInt::from(self.omega))
    }
}

/// `ker(f̄)` for `f: Z^A/L_A → Z^B/L_B`, as `f⁻¹(L_B) / L_A`.
fn induced_kernel(f: &IntMatrix, l_a: &Lattice, l_b: &Lattice) -> Result<AbelianGroupInvariants> {
    let a = f.cols();
    let g = l_b.basis().transpose().scale(&BigInt::from(-1));
    let ker = integer_kernel(&f.hstack(&g)?);
    let proj = IntMatrix::from_rows(&ker.to_rows().into_iter().map(|r| r[..a].to_vec()).collect::<Vec<_>>())?;
    let preimage = Lattice::from_rows(&proj);
    let mut coords = Vec::with_capacity(l_a.rank());
    for i in 0..l_a.rank() {
        let c = preimage
            .coordinates(l_a.basis().row(i))
            .ok_or_else(|| Error::Internal("f does not map L_A into L_B".into()))?;
        coords.push(c);
    }
    if coords.is_empty() {
        return Ok(AbelianGroupInvariants { free_rank: preimage.rank(), torsion: Vec::new() });
    }
    let q = IntMatrix::from_rows(&coords)?.transpose();
    Ok(AbelianGroupInvariants::cokernel(&q))
}

/// Kernel of `h` when `m − n + c ≥ 0`, of `h⊤` otherwise.
pub fn kernel_invariants(g: &Graph, omega: usize) -> Result<KernelReport> {
    let sub = Subdivided::new(g, omega)?;
    let (h, ht) = adjoint_pair(g, &sub)?;
    let l_gamma = OrientedEdgeLattice::new(g).lattice();
    let l_s = OrientedEdgeLattice::new(&sub.s).lattice();
    let excess = sub.set.len() as i64 - g.order() as i64 + g.component_count() as i64;
    let (direction, invariants) = if excess >= 0 {
        (Direction::H, induced_kernel(&h, &l_s, &l_gamma)?)
    } else {
        (Direction::HTranspose, induced_kernel(&ht, &l_gamma, &l_s)?)
    };
    Ok(KernelReport { direction, omega, excess, invariants })
}

/// `a · x^{max(0,e)}` on one side, `x^{max(0,−e)}` moved to the other.
fn split_power(x: u64, e: i64) -> (BigInt, BigInt) {
    let p: BigInt = Pow::pow(&BigInt::from(x), e.unsigned_abs());
    if e >= 0 {
        (p, BigInt::one())
    } else {
        (BigInt::one(), p)
    }
}

fn digits(x: &BigInt) -> String {
    let s = x.abs().to_string();
    if s.len() <= 24 {
        s
    } else {
        format!("{}... ({} digits)", &s[..12], s.len())
    }
}

/// `κ(S_ω(Γ)) = ω^{m−n+c} κ(Γ)` and, for k-regular `Γ`,
/// `κ(C_ω(Γ)) = (k/(ω−1))^{m−n−c} ω^{m−n+c} κ(Γ)`, compared exactly with
/// negative powers moved across.
pub fn verify_order_theorem(g: &Graph, omega: usize) -> Result<Check> {
    let sub = Subdivided::new(g, omega)?;
    let name = "spanning forest identities";
    let (m, n, c) = (sub.set.len() as i64, g.order() as i64, g.component_count() as i64);
    let kappa = spanning_forest_count(g)?;
    let kappa_s = spanning_forest_count(&sub.s)?;
    let (wl, wr) = split_power(omega as u64, m - n + c);
    if &kappa_s * &wr != &wl * &kappa {
        return Ok(Check::fail(name, format!("kappa(S) = {} but w^(m-n+c) kappa = {} / {}", digits(&kappa_s), digits(&(&wl * &kappa)), digits(&wr))));
    }
    let mut detail = format!("m={m} n={n} c={c}; kappa(G)={}, kappa(S)={}", digits(&kappa), digits(&kappa_s));
    if let Some(k) = g.regular_degree() {
        let q = (k / (omega - 1)) as u64;
        let kappa_c = spanning_forest_count(&clique_graph_of(&sub.set, g.order())?)?;
        let (ql, qr) = split_power(q, m - n - c);
        if &kappa_c * &qr * &wr != &ql * &wl * &kappa {
            return Ok(Check::fail(name, format!("kappa(C) = {} disagrees with the regular-graph formula", digits(&kappa_c))));
        }
        detail.push_str(&format!(", kappa(C)={}", digits(&kappa_c)));
    }
    Ok(Check::pass(name, detail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, complete_graph, gq22_graph, path_graph, rook_graph, triangular_graph};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn laplacian_groups() {
        let k3 = critical_group(&complete_graph(3)).unwrap();
        assert_eq!((k3.free_rank, k3.torsion.clone()), (1, ints(&[3])));
        let k4 = critical_group(&complete_graph(4)).unwrap();
        assert_eq!(k4.torsion, ints(&[4, 4]));
        assert_eq!(k4.to_string(), "rank 1; 4 4");
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let k = critical_group(&two).unwrap();
        assert_eq!((k.free_rank, k.torsion), (2, ints(&[3, 3])));
    }

    #[test]
    fn forest_counts() {
        assert_eq!(spanning_forest_count(&complete_graph(3)).unwrap(), BigInt::from(3));
        assert_eq!(spanning_forest_count(&complete_graph(4)).unwrap(), BigInt::from(16));
        assert_eq!(spanning_forest_count(&complete_bipartite(1, 3)).unwrap(), BigInt::one());
        assert_eq!(spanning_forest_count(&Graph::new(3, []).unwrap()).unwrap(), BigInt::one());
    }

    #[test]
    fn edge_route() {
        assert_eq!(critical_group_via_edges(&complete_graph(3)).torsion, ints(&[3]));
        assert_eq!(critical_group_via_edges(&complete_graph(4)).torsion, ints(&[4, 4]));
        assert!(critical_group_via_edges(&path_graph(5).unwrap()).is_trivial());
        let lat = OrientedEdgeLattice::new(&rook_graph(3).unwrap());
        assert!(lat.is_orthogonal());
        assert_eq!(lat.cycle_basis.cols(), 18 - 9 + 1);
    }

    #[test]
    fn h_on_triangle() {
        let h = h_matrix(&complete_graph(3), 3).unwrap();
        // S-edges (C,0), (C,1), (C,2); Γ-edges 01, 02, 12.
        let expected = IntMatrix::from_rows(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]).unwrap();
        assert_eq!(h, expected);
        assert_eq!(h_transpose_matrix(&complete_graph(3), 3).unwrap(), h.transpose());
    }

    #[test]
    fn h_shape_on_rook() {
        let g = rook_graph(3).unwrap();
        let h = h_matrix(&g, 3).unwrap();
        assert_eq!((h.rows(), h.cols()), (18, 18));
        for j in 0..18 {
            assert_eq!(h.col(j).iter().map(|x| x.abs()).sum::<BigInt>(), BigInt::from(2));
        }
        // (x, y) only occurs in h(x, C_xy) and h(y, C_xy)
        for i in 0..18 {
            assert_eq!(h.row(i).iter().filter(|x| !x.is_zero()).count(), 2);
        }
    }

    #[test]
    fn order_theorem_examples() {
        for (g, w) in [(complete_graph(3), 3), (rook_graph(3).unwrap(), 3), (gq22_graph(), 3), (triangular_graph(5).unwrap(), 4)] {
            let check = verify_order_theorem(&g, w).unwrap();
            assert!(check.passed(), "{check}");
        }
        assert_eq!(spanning_forest_count(&rook_graph(3).unwrap()).unwrap(), BigInt::from(11664));
    }

    #[test]
    fn kernels() {
        let cases = [
            (complete_graph(3), 3, Direction::HTranspose, -1, vec![3]),
            (gq22_graph(), 3, Direction::H, 1, vec![3, 3, 3, 3, 3]),
            (rook_graph(3).unwrap(), 3, Direction::HTranspose, -2, vec![3, 3, 3]),
            (triangular_graph(5).unwrap(), 4, Direction::HTranspose, -4, vec![2, 4, 4, 4, 4]),
        ];
        for (g, w, direction, excess, torsion) in cases {
            let r = kernel_invariants(&g, w).unwrap();
            assert_eq!((r.direction, r.excess, r.invariants.torsion.clone()), (direction, excess, ints(&torsion)), "{g:?}");
            assert!(r.order_bound_holds() && r.exponent_bound_holds());
        }
        assert!(kernel_invariants(&complete_graph(3), 3).unwrap().matches_conjecture());
    }
}
