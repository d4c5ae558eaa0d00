use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{hermite_rows, IntMatrix};
use crate::spectral::srg::{closed_walk_count, triangle_quadrangle_per_vertex, SrgParams};

/// Variable names in system order.
pub const VARIABLES: [&str; 13] =
    ["t0", "t1", "t2", "t3", "r00", "r01", "r02", "r11", "r12", "r13", "r22", "r23", "r33"];

/// Position of `ρ_{i,j}` (`i ≤ j`, `(i, j) ≠ (0, 3)`).
pub fn rho_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    match (i, j) {
        (0, 0) => 4,
        (0, 1) => 5,
        (0, 2) => 6,
        (1, 1) => 7,
        (1, 2) => 8,
        (1, 3) => 9,
        (2, 2) => 10,
        (2, 3) => 11,
        (3, 3) => 12,
        _ => panic!("rho({i},{j}) is not a variable"),
    }
}

/// Closed 5-walks at `v` staying in `{v} ∪ N(v)`:
/// `d⁴/27 + d³/3 − d² − d`.
pub fn star_count(d: u64) -> Result<BigInt> {
    if d % 3 != 0 {
        return Err(Error::Divisibility(format!("d = {d} is not divisible by 3")));
    }
    let d = BigInt::from(d);
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    let d4 = &d3 * &d;
    Ok(d4 / 27 + d3 / 3 - d2 - d)
}

/// The twelve linear equations satisfied by the `τ, ρ` counts around a
/// vertex of `C_3(Γ)` for `Γ` an srg(n, k, 1, μ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRhoSystem {
    pub params: SrgParams,
    /// `12 × 13`, rows: the three τ equations, four edge counts, four
    /// 3-walk counts, the 5-walk count.
    pub coeffs: IntMatrix,
    pub rhs: Vec<BigInt>,
    pub m: BigInt,
    pub d: BigInt,
    pub omega_c: BigInt,
    pub delta: BigInt,
    pub xi: BigInt,
    pub theta5: BigInt,
    pub star: BigInt,
}

fn binom2(x: &BigInt) -> BigInt {
    x * (x - 1) / 2
}

pub fn build_tau_rho_system(p: &SrgParams) -> Result<TauRhoSystem> {
    if p.lambda != 1 {
        return Err(Error::InvalidArgument(format!("lambda must be 1, got {}", p.lambda)));
    }
    if p.k % 2 != 0 {
        return Err(Error::InvalidArgument(format!("k = {} is odd", p.k)));
    }
    p.require_spectrum()?;
    let k = p.k;
    let d_small = 3 * (k / 2 - 1);
    let d = BigInt::from(d_small);
    let m = BigInt::from(p.n) * k / 6;
    let mu = BigInt::from(p.mu);
    let (delta, xi) = triangle_quadrangle_per_vertex(p, 3)?;
    let theta5 = closed_walk_count(p, 3, 5)?;
    let star = star_count(d_small as u64)?;
    let third = &d / 3;
    let quad = &xi - binom2(&(&third - 1)) * &d;

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(12);
    let mut rhs = Vec::with_capacity(12);
    let zero_row = || vec![BigInt::zero(); 13];

    let mut r = zero_row();
    (0..4).for_each(|i| r[i] = BigInt::one());
    rows.push(r);
    rhs.push(&m - &d - 1);
    let mut r = zero_row();
    (1..4).for_each(|i| r[i] = BigInt::from(i));
    rows.push(r);
    rhs.push(&d * (&d - 1) - 2 * &delta);
    let mut r = zero_row();
    r[2] = BigInt::one();
    r[3] = BigInt::from(3);
    rows.push(r);
    rhs.push(quad.clone());

    // (d − i)τ_i − 2ρ_ii − Σ_{j≠i} ρ_ij = 0
    for i in 0..4 {
        let mut r = zero_row();
        r[i] = &d - i;
        for j in 0..4 {
            if (i, j) == (0, 3) || (i, j) == (3, 0) {
                continue;
            }
            r[rho_index(i, j)] -= if i == j { 2 } else { 1 };
        }
        rows.push(r);
        rhs.push(BigInt::zero());
    }
    // (9μ + i(d/3 − 5 − μ))τ_i − iρ_ii − Σ_{j≥1} jρ_ij = 0
    for i in 0..4usize {
        let mut r = zero_row();
        r[i] = 9 * &mu + BigInt::from(i) * (&third - 5 - &mu);
        if i > 0 {
            r[rho_index(i, i)] -= i;
        }
        for j in 1..4usize {
            if i == 0 && j == 3 {
                continue;
            }
            r[rho_index(i, j)] -= j;
        }
        rows.push(r);
        rhs.push(BigInt::zero());
    }
    // Σ_{i≤j} ij ρ_ij = (θ5 − ★)/2 − (4/3)Δd − 2(d/3 − 1)Ξ'
    let five = BigRational::new(&theta5 - &star, BigInt::from(2))
        - BigRational::new(4 * &delta * &d, BigInt::from(3))
        - BigRational::from_integer(2 * (&third - 1) * &quad);
    let scale = five.denom().clone();
    let mut r = zero_row();
    for i in 1..4usize {
        for j in i..4usize {
            r[rho_index(i, j)] = BigInt::from(i * j) * &scale;
        }
    }
    rows.push(r);
    rhs.push(five.numer().clone());

    let coeffs = IntMatrix::from_rows(&rows)?;
    let rank = hermite_rows(&coeffs).rank;
    if rank != 10 {
        return Err(Error::Internal(format!("tau-rho system for {:?} has rank {rank}, expected 10", p.tuple())));
    }
    Ok(TauRhoSystem { params: *p, coeffs, rhs, m, d, omega_c: BigInt::from(k / 2), delta, xi, theta5, star })
}

impl TauRhoSystem {
    /// Index of the first equation `x` violates.
    pub fn first_violation(&self, x: &[BigInt]) -> Option<usize> {
        let lhs = self.coeffs.mul_vec(x).expect("13 variables");
        lhs.iter().zip(&self.rhs).position(|(a, b)| a != b)
    }

    pub fn is_solution(&self, x: &[BigInt]) -> bool {
        self.first_violation(x).is_none()
    }

    pub fn is_solution_i64(&self, x: &[i64]) -> bool {
        self.is_solution(&x.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
    }

    /// Dimension of the rational solution space of the homogeneous system.
    pub fn nullity(&self) -> usize {
        13 - hermite_rows(&self.coeffs).rank
    }

    /// The `5`-walk right-hand side before clearing its denominator.
    pub fn five_walk_rhs(&self) -> BigRational {
        let scale = &self.coeffs[(11, rho_index(1, 1))];
        BigRational::new(self.rhs[11].clone(), scale.clone())
    }
}

/// Counts `τ_i` and `ρ_{i,j}` around `v` in a clique graph `cg` whose
/// cliques have order `omega_c`.
pub fn measure_tau_rho(cg: &Graph, omega_c: usize, v: usize) -> Result<[i64; 13]> {
    if v >= cg.order() {
        return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
    }
    if omega_c < 2 {
        return Err(Error::InvalidOmega { omega: omega_c, min: 2 });
    }
    let n = cg.order();
    let mut adjacent = vec![false; n];
    for &u in cg.neighbors(v) {
        adjacent[u] = true;
    }
    let mut class = vec![usize::MAX; n];
    let mut out = [0i64; 13];
    for u in (0..n).filter(|&u| u != v && !adjacent[u]) {
        let i = cg.neighbors(u).iter().filter(|&&w| adjacent[w]).count();
        if i > 3 {
            return Err(Error::InvalidArgument(format!("vertex {u} has {i} common neighbours with {v}")));
        }
        class[u] = i;
        out[i] += 1;
    }
    for &(a, b) in cg.edges() {
        let (i, j) = (class[a], class[b]);
        if i == usize::MAX || j == usize::MAX {
            continue;
        }
        if i.min(j) == 0 && i.max(j) == 3 {
            return Err(Error::InvalidArgument(format!("edge {a}-{b} joins T0 and T3")));
        }
        out[rho_index(i, j)] += 1;
    }
    Ok(out)
}

/// `x` as big integers.
pub fn to_big(x: &[i64]) -> Vec<BigInt> {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_values() {
        assert_eq!(star_count(27).unwrap(), BigInt::from(25488));
        assert_eq!(star_count(3).unwrap(), BigInt::zero());
        assert!(star_count(4).is_err());
    }

    #[test]
    fn table_columns_satisfy_systems() {
        let sys = build_tau_rho_system(&SrgParams::new(81, 20, 1, 6).unwrap()).unwrap();
        assert_eq!(sys.d, BigInt::from(27));
        assert_eq!(sys.star, BigInt::from(25488));
        assert!(sys.is_solution_i64(&[8, 0, 216, 18, 0, 0, 216, 0, 0, 0, 2376, 432, 0]));
        let sys = build_tau_rho_system(&SrgParams::new(243, 22, 1, 2).unwrap()).unwrap();
        assert!(sys.is_solution_i64(&[300, 540, 0, 20, 1800, 5400, 0, 4860, 0, 540, 0, 0, 0]));
        let mut wrong = [300, 540, 0, 20, 1800, 5400, 0, 4860, 0, 540, 0, 0, 0];
        wrong[0] += 1;
        assert!(!sys.is_solution_i64(&wrong));
    }

    #[test]
    fn odd_k_rejected() {
        let p = SrgParams::new(81, 20, 1, 6).unwrap();
        let odd = SrgParams { k: 21, ..p };
        assert!(build_tau_rho_system(&odd).is_err());
    }
}
