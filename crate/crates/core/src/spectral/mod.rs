//! Characteristic polynomials, numeric spectra, and the spectral relations
//! between a clique regular graph and its clique graph.

pub mod srg;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;

use crate::cliques::require_clique_regular;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{IntMatrix, IntPoly};
use crate::report::Check;
use crate::transforms::{clique_graph, line_graph};

/// Tolerance for numeric eigenvalue comparisons.
pub const EIGEN_TOLERANCE: f64 = 1e-9;
/// Eigenvalues closer than this are treated as one with multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// The 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut a = IntMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = BigInt::from(1);
        a[(v, u)] = BigInt::from(1);
    }
    a
}

/// `det(xI − A)` of the adjacency matrix.
pub fn char_poly(g: &Graph) -> IntPoly {
    adjacency_matrix(g).char_poly().expect("adjacency matrices are square")
}

/// One eigenvalue with its multiplicity. `exact` is set when the value is
/// known to be the integer it was snapped to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: f64,
    pub exact: Option<i64>,
    pub multiplicity: usize,
}

/// Eigenvalues with multiplicities, sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    entries: Vec<Eigenvalue>,
}

impl Spectrum {
    /// From exact integer eigenvalues; zero multiplicities are dropped and
    /// repeated values merged.
    pub fn from_integers(pairs: &[(i64, usize)]) -> Self {
        let mut entries: Vec<Eigenvalue> = Vec::new();
        let mut sorted = pairs.to_vec();
        sorted.sort_by(|a, b| b.0.cmp(&a.0));
        for (v, mult) in sorted {
            if mult == 0 {
                continue;
            }
            match entries.last_mut() {
                Some(last) if last.exact == Some(v) => last.multiplicity += mult,
                _ => entries.push(Eigenvalue { value: v as f64, exact: Some(v), multiplicity: mult }),
            }
        }
        Spectrum { entries }
    }

    /// Clusters a list of real eigenvalues.
    pub fn from_values(values: &[f64]) -> Self {
        let mut vals = values.to_vec();
        vals.sort_by(|a, b| b.total_cmp(a));
        let mut entries: Vec<Eigenvalue> = Vec::new();
        let mut start = f64::NAN;
        for v in vals {
            match entries.last_mut() {
                Some(last) if (start - v).abs() <= CLUSTER_RADIUS => {
                    let m = last.multiplicity as f64;
                    last.value = (last.value * m + v) / (m + 1.0);
                    last.multiplicity += 1;
                }
                _ => {
                    start = v;
                    entries.push(Eigenvalue { value: v, exact: None, multiplicity: 1 });
                }
            }
        }
        for e in &mut entries {
            let r = e.value.round();
            if (e.value - r).abs() <= CLUSTER_RADIUS {
                e.value = r;
                e.exact = Some(r as i64);
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[Eigenvalue] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn largest(&self) -> Option<f64> {
        self.entries.first().map(|e| e.value)
    }

    pub fn smallest(&self) -> Option<&Eigenvalue> {
        self.entries.last()
    }

    /// All eigenvalues with repetition, decreasing.
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().flat_map(|e| std::iter::repeat(e.value).take(e.multiplicity)).collect()
    }

    /// Same multiplicity pattern and values within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let (a, b) = (self.values(), other.values());
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }
}

impl std::fmt::Display for Spectrum {
    /// `6^1, 1^9, -3^5`; non-integral values with six decimals.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e.exact {
                Some(v) => format!("{v}^{}", e.multiplicity),
                None => format!("{:.6}^{}", e.value, e.multiplicity),
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Real eigenvalues of an integer symmetric matrix.
pub fn symmetric_eigenvalues(rows: &[Vec<i64>]) -> Vec<f64> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j] as f64);
    SymmetricEigen::new(m).eigenvalues.iter().copied().collect()
}

/// Adjacency spectrum, computed numerically and clustered.
pub fn numeric_spectrum(g: &Graph) -> Spectrum {
    Spectrum::from_values(&symmetric_eigenvalues(&g.adjacency_rows()))
}

/// Verifies `p(C_ω(Γ); x)·(x+ω)^{max(0,n−m)} = (x+ω)^{max(0,m−n)}·p(Γ; x+ω−k/(ω−1))`
/// with exact integer coefficients.
pub fn clique_graph_charpoly_identity(g: &Graph, omega: usize) -> Result<Check> {
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    require_clique_regular(g, omega)?;
    let c = clique_graph(g, omega)?;
    let (n, m) = (g.order() as i64, c.order() as i64);
    let w = BigInt::from(omega);
    let per = (k / (omega - 1)) as i64;
    let lhs_core = char_poly(&c);
    let rhs_core = char_poly(g).shift(&(&w - per));
    let factor = IntPoly::linear(w);
    let lhs = lhs_core.mul(&factor.pow((n - m).max(0) as u32));
    let rhs = rhs_core.mul(&factor.pow((m - n).max(0) as u32));
    let name = "clique graph characteristic polynomial";
    if lhs == rhs {
        let shown = if lhs_core.degree().unwrap_or(0) <= 12 { format!("; p(C) = {lhs_core}") } else { String::new() };
        Ok(Check::pass(name, format!("degree {} polynomials agree{shown}", lhs.degree().unwrap_or(0))))
    } else {
        let i = (0..=lhs.degree().max(rhs.degree()).unwrap_or(0))
            .find(|&i| lhs.coeffs().get(i) != rhs.coeffs().get(i))
            .unwrap_or(0);
        Ok(Check::fail(name, format!("coefficient of x^{i} differs")))
    }
}

/// Spectrum of `C_ω(Γ)` predicted from that of a k-regular ω-clique regular
/// graph on `n` vertices: every eigenvalue `λ` becomes `k/(ω−1) + λ − ω`, and
/// `−ω` gains multiplicity `m − n`.
pub fn predicted_clique_spectrum(spec: &Spectrum, k: usize, omega: usize, n: usize) -> Result<Spectrum> {
    if omega < 2 {
        return Err(Error::InvalidOmega { omega, min: 2 });
    }
    if k % (omega - 1) != 0 || (n * k) % (omega * (omega - 1)) != 0 {
        return Err(Error::Divisibility(format!("k = {k}, n = {n} incompatible with omega = {omega}")));
    }
    let shift = (k / (omega - 1)) as f64 - omega as f64;
    let m = n * k / (omega * (omega - 1));
    let target = -(omega as f64);
    let mut entries: Vec<Eigenvalue> = spec
        .entries()
        .iter()
        .map(|e| Eigenvalue {
            value: e.value + shift,
            exact: e.exact.map(|v| v + shift as i64),
            multiplicity: e.multiplicity,
        })
        .collect();
    let delta = m as i64 - n as i64;
    match entries.iter_mut().find(|e| (e.value - target).abs() <= CLUSTER_RADIUS) {
        Some(e) => {
            let mult = e.multiplicity as i64 + delta;
            if mult < 0 {
                return Err(Error::InconsistentSpectrum(format!("multiplicity of {target} would be {mult}")));
            }
            e.multiplicity = mult as usize;
        }
        None if delta < 0 => {
            return Err(Error::InconsistentSpectrum(format!("{target} is not an eigenvalue but m − n = {delta}")));
        }
        None => entries.push(Eigenvalue { value: target, exact: Some(-(omega as i64)), multiplicity: delta as usize }),
    }
    entries.retain(|e| e.multiplicity > 0);
    entries.sort_by(|a, b| b.value.total_cmp(&a.value));
    Ok(Spectrum { entries })
}

/// Numeric checks of the eigenvalue bounds for `C_ω(Γ)`:
/// interlacing against the line graph spectrum, the degree bounds
/// `−ω ≤ λ ≤ ω(Δ/(ω−1) − 1)`, and for k-regular Γ the floor
/// `λ_min(Γ) ≥ −k/(ω−1)` (with equality and multiplicity at least `n − m`
/// when `k < ω(ω−1)`).
pub fn eigen_bounds_check(g: &Graph, omega: usize, tol: f64) -> Result<Check> {
    require_clique_regular(g, omega)?;
    let name = "clique graph eigenvalue bounds";
    let w = omega as f64;
    let c = clique_graph(g, omega)?;
    let cvals = symmetric_eigenvalues(&c.adjacency_rows());
    let lvals = symmetric_eigenvalues(&line_graph(g)?.adjacency_rows());
    let mu_min = lvals.iter().copied().fold(f64::INFINITY, f64::min);
    let mu_max = lvals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = w / (w - 1.0) * (mu_min / 2.0 - w + 2.0);
    let hi = w / (w - 1.0) * (mu_max / 2.0 - w + 2.0);
    let deg_hi = w * (g.max_degree() as f64 / (w - 1.0) - 1.0);
    for &l in &cvals {
        if l < lo - tol || l > hi + tol {
            return Ok(Check::fail(name, format!("eigenvalue {l} outside line-graph interval [{lo}, {hi}]")));
        }
        if l < -w - tol || l > deg_hi + tol {
            return Ok(Check::fail(name, format!("eigenvalue {l} outside degree interval [{}, {deg_hi}]", -w)));
        }
    }
    let mut detail = format!("{} clique graph eigenvalues in [{lo:.6}, {hi:.6}] within [{}, {deg_hi}]", cvals.len(), -w);
    if let Some(k) = g.regular_degree() {
        let floor = -(k as f64) / (w - 1.0);
        let spec = numeric_spectrum(g);
        let smallest = spec.smallest().expect("graphs have vertices");
        if smallest.value < floor - tol {
            return Ok(Check::fail(name, format!("smallest eigenvalue {} below {floor}", smallest.value)));
        }
        if k < omega * (omega - 1) {
            let n = g.order();
            let m = c.order();
            if (smallest.value - floor).abs() > tol || smallest.multiplicity + m < n {
                return Ok(Check::fail(
                    name,
                    format!("smallest eigenvalue {}^{} but expected {floor} with multiplicity >= {}", smallest.value, smallest.multiplicity, n - m),
                ));
            }
        }
        detail.push_str(&format!("; smallest eigenvalue {} >= {floor}", smallest.value));
    }
    Ok(Check::pass(name, detail))
}

/// `trace(A^ℓ)` exactly.
pub fn closed_walk_trace(g: &Graph, ell: u32) -> BigInt {
    let a = adjacency_matrix(g);
    if ell == 0 {
        return BigInt::from(g.order());
    }
    let mut p = a.clone();
    for _ in 1..ell {
        p = p.mul(&a).expect("square");
    }
    p.trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, complete_graph, gq22_graph, rook_graph, triangular_graph};

    #[test]
    fn char_polys_of_small_graphs() {
        assert_eq!(char_poly(&complete_graph(3)), IntPoly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(char_poly(&complete_bipartite(1, 3)), IntPoly::from_i64(&[0, 0, -3, 0, 1]));
    }

    #[test]
    fn rook_spectrum_and_prediction() {
        let r = rook_graph(3).unwrap();
        let spec = numeric_spectrum(&r);
        assert_eq!(spec, Spectrum::from_integers(&[(4, 1), (1, 4), (-2, 4)]));
        let pred = predicted_clique_spectrum(&spec, 4, 3, 9).unwrap();
        assert_eq!(pred, Spectrum::from_integers(&[(3, 1), (0, 4), (-3, 1)]));
        assert_eq!(pred.to_string(), "3^1, 0^4, -3^1");
    }

    #[test]
    fn triangular_prediction_is_complete_graph() {
        for n in 5..8usize {
            let t = triangular_graph(n).unwrap();
            let pred = predicted_clique_spectrum(&numeric_spectrum(&t), 2 * (n - 2), n - 1, n * (n - 1) / 2).unwrap();
            assert_eq!(pred, Spectrum::from_integers(&[(n as i64 - 1, 1), (-1, n - 1)]));
        }
    }

    #[test]
    fn gq22_is_self_paired() {
        let spec = numeric_spectrum(&gq22_graph());
        assert_eq!(spec, Spectrum::from_integers(&[(6, 1), (1, 9), (-3, 5)]));
        assert_eq!(predicted_clique_spectrum(&spec, 6, 3, 15).unwrap(), spec);
    }

    #[test]
    fn identity_and_bounds_on_rook() {
        let r = rook_graph(3).unwrap();
        assert!(clique_graph_charpoly_identity(&r, 3).unwrap().passed());
        assert!(eigen_bounds_check(&r, 3, EIGEN_TOLERANCE).unwrap().passed());
        assert!(clique_graph_charpoly_identity(&complete_graph(4), 4).unwrap().passed());
    }

    #[test]
    fn inconsistent_prediction() {
        let spec = Spectrum::from_integers(&[(4, 1), (1, 8)]);
        assert!(matches!(predicted_clique_spectrum(&spec, 4, 3, 9), Err(Error::InconsistentSpectrum(_))));
    }

    #[test]
    fn walk_traces() {
        let k4 = complete_graph(4);
        // each vertex of K₄ lies on 3 triangles, each counted twice
        assert_eq!(closed_walk_trace(&k4, 3), BigInt::from(24));
        assert_eq!(closed_walk_trace(&k4, 2), BigInt::from(12));
    }
}
