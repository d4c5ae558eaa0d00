//! Feasible locally linear parameter sets and the `τ, ρ` counting system of
//! their 3-clique graphs.

mod feasible;
mod solver;
mod tau_rho;

pub use feasible::{
    absolute_bound_holds, enumerate_feasible_locally_linear, mu_set, srg_clique_graph_scan, CliqueGraphScan,
    SrgCliqueGraph,
};
pub use solver::solve_nonneg_integer;
pub use tau_rho::{build_tau_rho_system, measure_tau_rho, rho_index, star_count, to_big, TauRhoSystem, VARIABLES};
