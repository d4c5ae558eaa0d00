//! Strongly regular parameter sets, their spectra, and what the clique graph
//! of a clique-regular strongly regular graph looks like.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// The non-principal eigenvalues `r > s` of a strongly regular graph and
/// their multiplicities `f`, `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgSpectrum {
    pub r: i64,
    pub f: i64,
    pub s: i64,
    pub g: i64,
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
///
/// `spectrum` is present exactly when the parameters are feasible in the
/// integral sense: `r`, `s` integers and `f`, `g` positive integers.
/// Conference-type parameter sets with irrational eigenvalues (for example
/// the 5-cycle) keep `spectrum == None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    pub spectrum: Option<SrgSpectrum>,
}

impl SrgParams {
    /// Checks the counting identity and attaches the integral spectrum if any.
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Self> {
        let spectrum = srg_spectrum(n, k, lambda, mu)?;
        Ok(SrgParams { n, k, lambda, mu, spectrum })
    }

    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.n, self.k, self.lambda, self.mu)
    }

    pub fn is_feasible(&self) -> bool {
        self.spectrum.is_some()
    }

    /// Feasible spectrum or an error naming the parameters.
    pub fn require_spectrum(&self) -> Result<SrgSpectrum> {
        self.spectrum
            .ok_or_else(|| Error::InvalidArgument(format!("{:?} has no integral spectrum", self.tuple())))
    }

    /// Fewer than three distinct eigenvalues: disjoint unions of equal
    /// cliques (`μ = 0`), complete and empty graphs.
    pub fn is_boring(&self) -> bool {
        self.mu == 0 || self.k == 0 || self.k == self.n - 1
    }
}

/// Eigenvalues `r, s` and multiplicities `f, g` of a strongly regular graph
/// with parameters `(n, k, λ, μ)`, in exact integer arithmetic.
///
/// Returns `Ok(None)` when `(λ−μ)² + 4(k−μ)` is not a perfect square, when
/// `r` or `s` is not an integer, when `f` or `g` is not a positive integer, or
/// when `r = k` (a disjoint union of cliques).
pub fn srg_spectrum(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Option<SrgSpectrum>> {
    let (n, k, lambda, mu) = (n as i128, k as i128, lambda as i128, mu as i128);
    if n < 1 || k < 0 || lambda < 0 || mu < 0 || (n - k - 1) * mu != k * (k - lambda - 1) {
        return Err(Error::ParameterEquation((n as i64, k as i64, lambda as i64, mu as i64)));
    }
    let disc = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
    if disc <= 0 {
        return Ok(None);
    }
    let t = isqrt(disc);
    if t * t != disc {
        return Ok(None);
    }
    let (r2, s2) = ((lambda - mu) + t, (lambda - mu) - t);
    if r2.is_odd() || s2.is_odd() {
        return Ok(None);
    }
    let num = 2 * k + (n - 1) * (lambda - mu);
    if num % t != 0 {
        return Ok(None);
    }
    let q = num / t;
    let (f2, g2) = ((n - 1) - q, (n - 1) + q);
    if f2.is_odd() || g2.is_odd() || f2 <= 0 || g2 <= 0 {
        return Ok(None);
    }
    let (r, s) = (r2 / 2, s2 / 2);
    if r >= k {
        return Ok(None);
    }
    Ok(Some(SrgSpectrum { r: r as i64, f: (f2 / 2) as i64, s: s as i64, g: (g2 / 2) as i64 }))
}

pub(crate) fn isqrt(x: i128) -> i128 {
    if x < 2 {
        return x.max(0);
    }
    let mut r = (x as f64).sqrt() as i128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Clique-graph quantities of a k-regular ω-clique-regular srg:
/// `m = nk/(ω(ω−1))`, the per-vertex clique count `k/(ω−1)`, and the shifted
/// eigenvalues `k̃ = ω(k/(ω−1) − 1)`, `r̃`, `s̃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueGraphData {
    pub omega: i64,
    pub m: i64,
    pub cliques_per_vertex: i64,
    pub k: i64,
    pub r: i64,
    pub s: i64,
    pub f: i64,
    pub g: i64,
    /// Multiplicity of `−ω`, possibly negative.
    pub extra: i64,
}

impl CliqueGraphData {
    pub fn new(p: &SrgParams, omega: usize) -> Result<Self> {
        let sp = p.require_spectrum()?;
        let w = omega as i64;
        if omega < 2 {
            return Err(Error::InvalidOmega { omega, min: 2 });
        }
        if p.k % (w - 1) != 0 {
            return Err(Error::Divisibility(format!("k = {} not divisible by omega-1 = {}", p.k, w - 1)));
        }
        let nk = p.n as i128 * p.k as i128;
        let denom = (w * (w - 1)) as i128;
        if nk % denom != 0 {
            return Err(Error::Divisibility(format!("nk = {nk} not divisible by omega(omega-1) = {denom}")));
        }
        let per = p.k / (w - 1);
        let m = (nk / denom) as i64;
        Ok(CliqueGraphData {
            omega: w,
            m,
            cliques_per_vertex: per,
            k: w * (per - 1),
            r: per + sp.r - w,
            s: per + sp.s - w,
            f: sp.f,
            g: sp.g,
            extra: m - p.n,
        })
    }

    /// `k̃^ℓ + f r̃^ℓ + g s̃^ℓ + (m−n)(−ω)^ℓ`, the trace of `A_C^ℓ`.
    pub fn power_trace(&self, ell: u32) -> BigInt {
        let pw = |x: i64| BigInt::from(x).pow(ell);
        pw(self.k) + BigInt::from(self.f) * pw(self.r) + BigInt::from(self.g) * pw(self.s)
            + BigInt::from(self.extra) * pw(-self.omega)
    }
}

/// Parameters of the ω-clique graph of an ω-clique-regular srg with
/// parameters `p`, if that clique graph is strongly regular.
///
/// The clique graph is strongly regular exactly when `s = −k/(ω−1)` or
/// `k = ω(ω−1)`.
pub fn clique_srg_classification(p: &SrgParams, omega: usize) -> Result<Option<SrgParams>> {
    if p.is_boring() {
        return Err(Error::Boring(p.tuple()));
    }
    let cg = CliqueGraphData::new(p, omega)?;
    let sp = p.require_spectrum()?;
    let w = cg.omega;
    let s_hits = sp.s == -cg.cliques_per_vertex;
    let k_hits = p.k == w * (w - 1);
    if !s_hits && !k_hits {
        return Ok(None);
    }
    let (lambda_c, mu_c) = if p.lambda == w - 2 {
        (cg.cliques_per_vertex - 2, p.mu + w - cg.cliques_per_vertex)
    } else {
        // the two non-principal distinct eigenvalues of the clique graph
        let (r_c, s_c) = if s_hits { (cg.r, -w) } else { (cg.r, cg.s) };
        let mu_c = cg.k + r_c * s_c;
        (mu_c + r_c + s_c, mu_c)
    };
    SrgParams::new(cg.m, cg.k, lambda_c, mu_c).map(Some)
}

/// Number of closed ℓ-walks at any vertex of the clique graph.
pub fn closed_walk_count(p: &SrgParams, omega: usize, ell: u32) -> Result<BigInt> {
    if ell == 0 {
        return Err(Error::InvalidArgument("walk length must be positive".into()));
    }
    let cg = CliqueGraphData::new(p, omega)?;
    let (q, r) = cg.power_trace(ell).div_rem(&BigInt::from(cg.m));
    if !r.is_zero() {
        return Err(Error::Divisibility(format!("m = {} does not divide the {ell}-walk trace", cg.m)));
    }
    Ok(q)
}

/// Triangles `Δ = θ₃/2` and quadrangles `Ξ = (θ₄ − 2d² + d)/2` through each
/// vertex of the clique graph, where `d` is its degree.
pub fn triangle_quadrangle_per_vertex(p: &SrgParams, omega: usize) -> Result<(BigInt, BigInt)> {
    let d = BigInt::from(CliqueGraphData::new(p, omega)?.k);
    let theta3 = closed_walk_count(p, omega, 3)?;
    let theta4 = closed_walk_count(p, omega, 4)?;
    let two = BigInt::from(2);
    let quad_num = theta4 - &two * &d * &d + &d;
    if theta3.is_odd() || quad_num.is_odd() || theta3.is_negative() || quad_num.is_negative() {
        return Err(Error::Divisibility("triangle or quadrangle count not a non-negative integer".into()));
    }
    Ok((theta3 / &two, quad_num / two))
}

/// Outcome of the walk-divisibility scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub m: i64,
    pub ell_max: u32,
    /// First `ℓ` for which `m` fails to divide the trace.
    pub first_failure: Option<u32>,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `m | k̃^ℓ + f r̃^ℓ + g s̃^ℓ + (m−n)(−ω)^ℓ` for `0 ≤ ℓ ≤ ell_max`.
pub fn walk_divisibility_check(p: &SrgParams, omega: usize, ell_max: u32) -> Result<DivisibilityReport> {
    let cg = CliqueGraphData::new(p, omega)?;
    let m = BigInt::from(cg.m);
    let first_failure = (0..=ell_max).find(|&l| !(cg.power_trace(l) % &m).is_zero());
    Ok(DivisibilityReport { m: cg.m, ell_max, first_failure })
}
