//! The full battery of identities for an ω-clique regular graph.

use crate::cliques::require_clique_regular;
use crate::critical::{kernel_invariants, verify_induced_and_scalar, verify_order_theorem, LATTICE_EDGE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::regularity::{is_rca, is_strongly_regular, nonadjacent_common_neighbor_bound};
use crate::report::Check;
use crate::search::{build_tau_rho_system, measure_tau_rho};
use crate::spectral::srg::clique_srg_classification;
use crate::spectral::{clique_graph_charpoly_identity, eigen_bounds_check};
use crate::transforms::{clique_graph, rca_roundtrip, verify_incidence_identities};

/// Runs every check whose hypotheses `g` meets; the rest are reported as
/// skipped. Fails only when `g` is not ω-clique regular.
pub fn verify_all(g: &Graph, omega: usize, tolerance: f64) -> Result<Vec<Check>> {
    let set = require_clique_regular(g, omega)?;
    let mut checks = vec![verify_incidence_identities(g, omega)?];
    checks.push(match clique_graph_charpoly_identity(g, omega) {
        Err(Error::NotRegular) => Check::skipped("clique graph characteristic polynomial", "graph is not regular"),
        other => other?,
    });
    checks.push(eigen_bounds_check(g, omega, tolerance)?);
    checks.push(verify_order_theorem(g, omega)?);
    checks.push(verify_induced_and_scalar(g, omega)?);
    checks.push(kernel_check(g, omega, set.len())?);
    checks.extend(rca_checks(g, omega)?);
    checks.push(tau_rho_check(g, omega)?);
    Ok(checks)
}

fn kernel_check(g: &Graph, omega: usize, cliques: usize) -> Result<Check> {
    let name = "kernel of h or hT";
    if g.size().max(cliques * omega) > LATTICE_EDGE_LIMIT {
        return Ok(Check::skipped(name, format!("more than {LATTICE_EDGE_LIMIT} edges")));
    }
    let r = kernel_invariants(g, omega)?;
    let detail = format!(
        "{} = {} with m-n+c = {}; {}",
        r.direction,
        r.invariants,
        r.excess,
        if r.matches_conjecture() { "matches (Z/wZ)^|m-n+c|" } else { "differs from (Z/wZ)^|m-n+c|" }
    );
    Ok(if r.order_bound_holds() && r.exponent_bound_holds() {
        Check::pass(name, detail)
    } else {
        Check::fail(name, detail)
    })
}

fn rca_checks(g: &Graph, omega: usize) -> Result<Vec<Check>> {
    match is_rca(g) {
        Some((_, _, w)) if w == omega => {}
        _ => {
            return Ok(vec![
                Check::skipped("rca round trip", "not a regular clique assembly of this order"),
                Check::skipped("non-adjacent common neighbours", "not a regular clique assembly of this order"),
            ])
        }
    }
    let trip = rca_roundtrip(g)?;
    let measured = trip.measured.map_or("not an rca".to_string(), |t| format!("rca{t:?}"));
    let detail = format!("expected rca{:?}, measured {measured}", trip.expected);
    let first = if trip.passed() {
        Check::pass("rca round trip", if trip.is_degenerate() { format!("{detail}; clique graph is edgeless") } else { detail })
    } else {
        Check::fail("rca round trip", detail)
    };
    let bound = nonadjacent_common_neighbor_bound(g)?;
    let detail = match bound.max_observed {
        Some(m) => format!("max {m} <= {}", bound.bound),
        None => format!("no non-adjacent pairs; bound {}", bound.bound),
    };
    let second = if bound.holds() {
        Check::pass("non-adjacent common neighbours", detail)
    } else {
        Check::fail("non-adjacent common neighbours", detail)
    };
    Ok(vec![first, second])
}

/// Measures `τ, ρ` at every vertex of `C_3(Γ)` for a locally linear srg
/// outside the three with strongly regular clique graphs.
pub fn tau_rho_check(g: &Graph, omega: usize) -> Result<Check> {
    let name = "tau-rho system";
    let Some(p) = is_strongly_regular(g) else {
        return Ok(Check::skipped(name, "not strongly regular"));
    };
    if omega != 3 || p.lambda != 1 || p.is_boring() || !p.is_feasible() {
        return Ok(Check::skipped(name, "needs a non-boring srg(n,k,1,mu) with omega = 3"));
    }
    if clique_srg_classification(&p, 3)?.is_some() {
        return Ok(Check::skipped(name, "clique graph is strongly regular"));
    }
    let sys = build_tau_rho_system(&p)?;
    let c = clique_graph(g, 3)?;
    let mut distinct: Vec<[i64; 13]> = Vec::new();
    for v in 0..c.order() {
        let x = measure_tau_rho(&c, (p.k / 2) as usize, v)?;
        if !sys.is_solution_i64(&x) {
            return Ok(Check::fail(name, format!("vector {x:?} at clique {v} violates equation {:?}", sys.first_violation(&crate::search::to_big(&x)))));
        }
        if !distinct.contains(&x) {
            distinct.push(x);
        }
    }
    let detail = match &distinct[..] {
        [x] => format!("{x:?} at all {} vertices", c.order()),
        _ => format!("{} distinct vectors over {} vertices", distinct.len(), c.order()),
    };
    Ok(Check::pass(name, detail))
}
