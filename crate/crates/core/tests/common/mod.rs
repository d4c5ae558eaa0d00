//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls into the library except to build `Graph`s
//! and to read off lattice generators.
#![allow(dead_code)]

use std::collections::HashSet;

use cliquereg::critical::{h_transpose_matrix, OrientedEdgeLattice};
use cliquereg::linalg::{hermite_rows, smith_normal_form, IntMatrix, Lattice};
use cliquereg::transforms::clique_subdivision;
use cliquereg::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Adjacency as one bitmask per vertex; enough for the small graphs here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Small {
    pub fn empty(n: usize) -> Self {
        Small { n, adj: vec![0; n] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut s = Small::empty(g.order());
        for &(u, v) in g.edges() {
            s.add(u, v);
        }
        s
    }

    pub fn add(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    e.push((u, v));
                }
            }
        }
        e
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges()).unwrap()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Vertex sets of the connected components.
    pub fn components(&self) -> Vec<u64> {
        let mut left: u64 = if self.n == 64 { u64::MAX } else { (1 << self.n) - 1 };
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                for v in 0..self.n {
                    if comp >> v & 1 == 1 {
                        grown |= self.adj[v];
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }
}

/// All `size`-subsets of vertices that are cliques.
pub fn cliques_of_size(g: &Small, size: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Small, size: usize, cur: &mut Vec<usize>, cand: u64, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            cur.push(v);
            // only larger vertices, so each clique appears once in sorted order
            grow(g, size, cur, c & g.adj[v], out);
            cur.pop();
        }
    }
    let all = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut out = Vec::new();
    grow(g, size, &mut Vec::new(), all, &mut out);
    out
}

/// Every edge in exactly one `omega`-clique, with at least one edge.
pub fn is_clique_regular(g: &Small, omega: usize) -> bool {
    let edges = g.edges();
    if edges.is_empty() {
        return false;
    }
    let cliques = cliques_of_size(g, omega);
    edges.iter().all(|&(u, v)| cliques.iter().filter(|c| c.contains(&u) && c.contains(&v)).count() == 1)
}

/// Line graph with vertices in ascending edge order.
pub fn line_graph(g: &Small) -> Small {
    let e = g.edges();
    let mut l = Small::empty(e.len());
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let (a, b) = e[i];
            let (c, d) = e[j];
            if a == c || a == d || b == c || b == d {
                l.add(i, j);
            }
        }
    }
    l
}

/// Intersection graph of all `omega`-cliques, or `None` if it would not fit.
pub fn clique_graph(g: &Small, omega: usize) -> Option<Small> {
    let cl = cliques_of_size(g, omega);
    if cl.len() > 64 {
        return None;
    }
    let mut c = Small::empty(cl.len());
    for i in 0..cl.len() {
        for j in i + 1..cl.len() {
            if cl[i].iter().any(|v| cl[j].contains(v)) {
                c.add(i, j);
            }
        }
    }
    Some(c)
}

/// Canonical code: the least upper-triangle bit string over all relabelings
/// that list vertices by ascending degree. Needs `n ≤ 11`.
pub fn canonical(g: &Small) -> u64 {
    assert!(g.n <= 11);
    let mut by_degree: Vec<usize> = (0..g.n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.n);
    let mut used = 0u64;
    fn rec(g: &Small, slot_degree: &[usize], order: &mut Vec<usize>, used: &mut u64, best: &mut u64) {
        let p = order.len();
        if p == g.n {
            let mut code = 0u64;
            let mut bit = 0;
            for i in 0..g.n {
                for j in i + 1..g.n {
                    if g.has(order[i], order[j]) {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            *best = (*best).min(code);
            return;
        }
        for v in 0..g.n {
            if *used >> v & 1 == 0 && g.degree(v) == slot_degree[p] {
                *used |= 1 << v;
                order.push(v);
                rec(g, slot_degree, order, used, best);
                order.pop();
                *used &= !(1 << v);
            }
        }
    }
    rec(g, &slot_degree, &mut order, &mut used, &mut best);
    best
}

pub fn isomorphic(a: &Small, b: &Small) -> bool {
    a.n == b.n && {
        let mut da: Vec<usize> = (0..a.n).map(|v| a.degree(v)).collect();
        let mut db: Vec<usize> = (0..b.n).map(|v| b.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        da == db && canonical(a) == canonical(b)
    }
}

fn decode(n: usize, code: u64) -> Small {
    let mut g = Small::empty(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                g.add(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// One representative of every isomorphism class on `n` vertices, built by
/// adding a vertex to each class on `n − 1` vertices in every possible way.
pub fn all_graphs(n: usize) -> Vec<Small> {
    let mut level = vec![Small::empty(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0u64..1 << (size - 1) {
                let mut h = g.clone();
                h.n = size;
                h.adj.push(0);
                for v in 0..size - 1 {
                    if nb >> v & 1 == 1 {
                        h.add(v, size - 1);
                    }
                }
                let code = canonical(&h);
                if seen.insert(code) {
                    next.push(decode(size, code));
                }
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Small {
    let mut g = Small::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add(u, v);
            }
        }
    }
    g
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Small {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// `(n, k, λ)` straight from the definition.
pub fn edge_regular(g: &Small) -> Option<(usize, usize, usize)> {
    let k = g.degree(0);
    if (0..g.n).any(|v| g.degree(v) != k) {
        return None;
    }
    let lambdas: HashSet<u32> = g.edges().iter().map(|&(u, v)| (g.adj[u] & g.adj[v]).count_ones()).collect();
    match lambdas.len() {
        0 => Some((g.n, k, 0)),
        1 => Some((g.n, k, *lambdas.iter().next().unwrap() as usize)),
        _ => None,
    }
}

/// `(n, k, λ, μ)` for a non-complete, non-empty strongly regular graph.
pub fn strongly_regular(g: &Small) -> Option<(usize, usize, usize, usize)> {
    let (n, k, l) = edge_regular(g)?;
    if k == 0 || k == n - 1 {
        return None;
    }
    let mut mus: HashSet<u32> = HashSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has(u, v) {
                mus.insert((g.adj[u] & g.adj[v]).count_ones());
            }
        }
    }
    (mus.len() == 1).then(|| (n, k, l, *mus.iter().next().unwrap() as usize))
}

/// Maximal cliques by checking every vertex subset.
pub fn maximal_cliques(g: &Small) -> Vec<u64> {
    let mut cliques = Vec::new();
    for s in 1u64..1 << g.n {
        let is_clique = (0..g.n).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !g.adj[v] == 0);
        if !is_clique {
            continue;
        }
        let extendable = (0..g.n).any(|w| s >> w & 1 == 0 && (0..g.n).filter(|&v| s >> v & 1 == 1).all(|v| g.has(v, w)));
        if !extendable {
            cliques.push(s);
        }
    }
    cliques
}

/// `(n, k, ω)` if regular, every maximal clique has the clique number `ω`
/// and every edge lies in exactly one of them.
pub fn rca(g: &Small) -> Option<(usize, usize, usize)> {
    let k = g.degree(0);
    if g.edges().is_empty() || (0..g.n).any(|v| g.degree(v) != k) {
        return None;
    }
    let maximal = maximal_cliques(g);
    let omega = maximal.iter().map(|c| c.count_ones()).max()? as usize;
    if maximal.iter().any(|c| c.count_ones() as usize != omega) {
        return None;
    }
    let each_once = g.edges().iter().all(|&(u, v)| maximal.iter().filter(|&&c| c >> u & 1 == 1 && c >> v & 1 == 1).count() == 1);
    each_once.then_some((g.n, k, omega))
}

/// Number of spanning trees of each component, multiplied, by exact
/// rational elimination of the reduced Laplacians.
pub fn spanning_forest_count(g: &Small) -> BigInt {
    let mut total = BigInt::one();
    for comp in g.components() {
        let verts: Vec<usize> = (0..g.n).filter(|&v| comp >> v & 1 == 1).collect();
        let size = verts.len() - 1;
        let mut m: Vec<Vec<BigRational>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let (a, b) = (verts[i + 1], verts[j + 1]);
                        let x = if a == b { g.degree(a) as i64 } else if g.has(a, b) { -1 } else { 0 };
                        BigRational::from_integer(BigInt::from(x))
                    })
                    .collect()
            })
            .collect();
        let mut det = BigRational::one();
        for c in 0..size {
            let Some(p) = (c..size).find(|&r| !m[r][c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c].clone();
            for r in c + 1..size {
                let f = &m[r][c] / &m[c][c];
                for j in c..size {
                    let sub = &f * &m[c][j];
                    m[r][j] -= sub;
                }
            }
        }
        assert!(det.is_integer());
        total *= det.to_integer();
    }
    total
}

/// `(B⁵)₀₀` for the star-shaped block matrix of a clique-graph vertex
/// neighbourhood: the centre joined to three disjoint cliques of `d/3`.
pub fn star_oracle(d: u64) -> BigInt {
    let size = d as usize + 1;
    let block = |v: usize| (v - 1) / (d as usize / 3);
    let b = |i: usize, j: usize| -> i64 {
        match (i, j) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ if i == j => 0,
            _ => (block(i) == block(j)) as i64,
        }
    };
    let mut v = vec![BigInt::zero(); size];
    v[0] = BigInt::one();
    for _ in 0..5 {
        v = (0..size).map(|i| (0..size).map(|j| &v[j] * b(i, j)).sum()).collect();
    }
    v[0].clone()
}

fn integer_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let r = (x as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).find(|&s| s >= 0 && s * s == x)
}

/// Feasible `(n, k, 1, μ)` by trying every `1 ≤ μ < k` for every `k ≤ max_k`
/// and computing the spectrum from the textbook closed form.
pub fn naive_feasible(max_k: i128) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for mu in 1..k {
            if (k * (k - 2)) % mu != 0 {
                continue;
            }
            let n = k * (k - 2) / mu + k + 1;
            let delta = (1 - mu) * (1 - mu) + 4 * (k - mu);
            let Some(root) = integer_sqrt(delta) else { continue };
            if (1 - mu + root) % 2 != 0 {
                continue;
            }
            let num = 2 * k + (n - 1) * (1 - mu);
            if num % root != 0 {
                continue;
            }
            let q = num / root;
            let (f2, g2) = ((n - 1) - q, (n - 1) + q);
            if f2 % 2 != 0 || f2 <= 0 || g2 <= 0 {
                continue;
            }
            out.push((n as i64, k as i64, 1, mu as i64));
        }
    }
    out
}

/// Size and exponent of `ker(h⊤: K(Γ) → K(S_ω(Γ)))`, by listing every
/// element of `K(Γ) = Z^E/(B ⊕ Z)` and testing its image.
pub fn brute_force_transpose_kernel(g: &Graph, omega: usize) -> (u64, u64) {
    let gens = OrientedEdgeLattice::new(g).generators();
    let sf = smith_normal_form(&gens);
    let u_inv = hermite_rows(&sf.u).u;
    let diag = sf.diagonal();
    let e = gens.rows();
    // Z^E/im A ≅ ⊕ Z/s_i through x ↦ U x; coordinates beyond the diagonal
    // would be free, which a graph never has
    assert_eq!(diag.len(), e);
    let moduli: Vec<(usize, u64)> =
        diag.iter().enumerate().filter(|(_, s)| !s.is_one()).map(|(i, s)| (i, s.to_u64().unwrap())).collect();
    assert!(moduli.iter().all(|&(_, s)| s > 1));
    let ht = h_transpose_matrix(g, omega).unwrap();
    let s = clique_subdivision(g, omega).unwrap();
    let target: Lattice = OrientedEdgeLattice::new(&s).lattice();
    let mut count = 0u64;
    let mut exponent = 1u64;
    let mut y = vec![0u64; moduli.len()];
    loop {
        let mut x = vec![BigInt::zero(); e];
        for (&(i, _), &yi) in moduli.iter().zip(&y) {
            for (r, xr) in x.iter_mut().enumerate() {
                *xr += &u_inv[(r, i)] * yi;
            }
        }
        if target.contains(&ht.mul_vec(&x).unwrap()) {
            count += 1;
            let order = moduli.iter().zip(&y).fold(1u64, |acc, (&(_, s), &yi)| acc.lcm(&(s / s.gcd(&yi))));
            exponent = exponent.max(order);
        }
        let mut t = 0;
        loop {
            if t == y.len() {
                return (count, exponent);
            }
            y[t] += 1;
            if y[t] < moduli[t].1 {
                break;
            }
            y[t] = 0;
            t += 1;
        }
    }
}

/// τ, ρ vectors of the known constructions, variables in the order `τ₀..τ₃, ρ₀₀, ρ₀₁, ρ₀₂, ρ₁₁,
/// ρ₁₂, ρ₁₃, ρ₂₂, ρ₂₃, ρ₃₃`.
pub const KNOWN_VECTORS: [((i64, i64, i64, i64), [i64; 13]); 6] = [
    ((81, 20, 1, 6), [8, 0, 216, 18, 0, 0, 216, 0, 0, 0, 2376, 432, 0]),
    ((243, 22, 1, 2), [300, 540, 0, 20, 1800, 5400, 0, 4860, 0, 540, 0, 0, 0]),
    ((378, 52, 1, 8), [450, 1800, 900, 50, 3525, 21000, 5700, 37566, 35136, 1932, 11664, 1536, 66]),
    ((378, 52, 1, 8), [450, 1800, 900, 50, 3569, 20824, 5788, 37716, 35064, 1880, 11604, 1640, 40]),
    ((378, 52, 1, 8), [450, 1800, 900, 50, 3375, 21600, 5400, 36900, 36000, 1800, 11250, 1800, 0]),
    ((729, 112, 1, 20), [1452, 5940, 5940, 110, 21780, 130680, 65340, 222750, 392040, 5940, 249480, 11880, 0]),
];

pub fn big(x: &[i64]) -> Vec<BigInt> {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn nonnegative(x: &[BigInt]) -> bool {
    x.iter().all(|v| !v.is_negative())
}

pub fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}
