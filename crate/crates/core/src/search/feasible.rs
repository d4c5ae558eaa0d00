use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::spectral::srg::{clique_srg_classification, SrgParams};

fn factor(mut x: u64, into: &mut BTreeMap<u64, u32>) {
    let mut p = 2;
    while p * p <= x {
        while x % p == 0 {
            *into.entry(p).or_default() += 1;
            x /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        *into.entry(x).or_default() += 1;
    }
}

/// Positive divisors of `k(k−2)` below `k`, ascending.
pub fn mu_set(k: u64) -> Result<Vec<u64>> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let mut primes = BTreeMap::new();
    factor(k, &mut primes);
    factor(k - 2, &mut primes);
    let mut divisors = vec![1u64];
    for (&p, &e) in &primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for &d in &divisors {
            let mut q = d;
            for _ in 0..=e {
                if q >= k {
                    break;
                }
                next.push(q);
                q *= p;
            }
        }
        divisors = next;
    }
    divisors.sort_unstable();
    Ok(divisors)
}

/// Every `(n, k, 1, μ)` with `k ≤ max_k` that has an integral spectrum,
/// sorted by `(k, μ)`.
pub fn enumerate_feasible_locally_linear(max_k: u64) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for k in 3..=max_k {
        for mu in mu_set(k).expect("k >= 3") {
            let n = k * (k - 2) / mu + k + 1;
            let p = SrgParams::new(n as i64, k as i64, 1, mu as i64).expect("n solves the parameter equation");
            if p.is_feasible() {
                out.push(p);
            }
        }
    }
    out
}

/// `n ≤ f(f+3)/2` and `n ≤ g(g+3)/2`. Parameters without an integral
/// spectrum pass vacuously.
pub fn absolute_bound_holds(p: &SrgParams) -> bool {
    match p.spectrum {
        None => true,
        Some(sp) => {
            let bound = |x: i64| x as i128 * (x as i128 + 3) / 2;
            (p.n as i128) <= bound(sp.f) && (p.n as i128) <= bound(sp.g)
        }
    }
}

/// A locally linear parameter set whose 3-clique graph would be strongly
/// regular, with the clique graph's parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgCliqueGraph {
    pub params: SrgParams,
    pub clique_graph: SrgParams,
}

/// Result of scanning for locally linear graphs with strongly regular
/// 3-clique graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliqueGraphScan {
    pub accepted: Vec<SrgCliqueGraph>,
    /// Parameter sets meeting the clique-graph condition but violating the
    /// absolute bound, so no graph exists.
    pub excluded_by_absolute_bound: Vec<SrgCliqueGraph>,
}

/// Scans every feasible `(n, k, 1, μ)` with `k ≤ max_k`.
pub fn srg_clique_graph_scan(max_k: u64) -> Result<CliqueGraphScan> {
    let mut scan = CliqueGraphScan::default();
    for p in enumerate_feasible_locally_linear(max_k) {
        if p.is_boring() {
            continue;
        }
        let Some(c) = clique_srg_classification(&p, 3)? else {
            continue;
        };
        let hit = SrgCliqueGraph { params: p, clique_graph: c };
        if absolute_bound_holds(&p) {
            scan.accepted.push(hit);
        } else {
            scan.excluded_by_absolute_bound.push(hit);
        }
    }
    Ok(scan)
}
