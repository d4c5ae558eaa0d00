mod common;

use cliquereg::families::{brouwer_haemers, gq22_graph, gq24_graph, rook_graph};
use cliquereg::regularity::is_strongly_regular;
use cliquereg::search::{
    absolute_bound_holds, build_tau_rho_system, enumerate_feasible_locally_linear, measure_tau_rho, mu_set,
    solve_nonneg_integer, srg_clique_graph_scan, star_count,
};
use cliquereg::spectral::closed_walk_trace;
use cliquereg::spectral::srg::{closed_walk_count, CliqueGraphData};
use cliquereg::transforms::clique_graph;
use cliquereg::SrgParams;
use common::{big, naive_feasible, nonnegative, star_oracle, KNOWN_VECTORS};
use num_bigint::BigInt;

fn srg(t: (i64, i64, i64, i64)) -> SrgParams {
    SrgParams::new(t.0, t.1, t.2, t.3).unwrap()
}

#[test]
fn star_count_matches_matrix_power() {
    for d in (3..=60).step_by(3) {
        assert_eq!(star_count(d).unwrap(), star_oracle(d), "d = {d}");
    }
    assert_eq!(star_count(27).unwrap(), BigInt::from(25488));
    assert!(star_count(4).is_err());
}

#[test]
fn mu_sets_are_the_small_divisors() {
    for k in 3..=300u64 {
        let brute: Vec<u64> = (1..k).filter(|mu| (k * (k - 2)) % mu == 0).collect();
        assert_eq!(mu_set(k).unwrap(), brute, "k = {k}");
    }
}

#[test]
fn enumeration_matches_naive_scan() {
    let fast: Vec<_> = enumerate_feasible_locally_linear(2000).iter().map(SrgParams::tuple).collect();
    let mut naive = naive_feasible(2000);
    let mut sorted = fast.clone();
    sorted.sort_unstable();
    naive.sort_unstable();
    assert_eq!(sorted, naive);
    let small: Vec<_> = enumerate_feasible_locally_linear(52).iter().map(SrgParams::tuple).collect();
    for t in [(9, 4, 1, 2), (15, 6, 1, 3), (27, 10, 1, 5), (63, 22, 1, 11), (99, 14, 1, 2), (81, 20, 1, 6), (243, 22, 1, 2), (378, 52, 1, 8)] {
        assert!(small.contains(&t), "{t:?}");
    }
}

#[test]
fn clique_graph_scan_to_two_hundred() {
    let scan = srg_clique_graph_scan(200).unwrap();
    let accepted: Vec<_> = scan.accepted.iter().map(|h| h.params.tuple()).collect();
    assert_eq!(accepted, [(9, 4, 1, 2), (15, 6, 1, 3), (27, 10, 1, 5)]);
    let excluded: Vec<_> = scan.excluded_by_absolute_bound.iter().map(|h| h.params.tuple()).collect();
    assert!(excluded.contains(&(63, 22, 1, 11)));
    assert!(!absolute_bound_holds(&srg((63, 22, 1, 11))));
}

#[test]
fn walk_counts_match_actual_traces() {
    for (g, t) in [
        (rook_graph(3).unwrap(), (9, 4, 1, 2)),
        (gq22_graph(), (15, 6, 1, 3)),
        (gq24_graph(), (27, 10, 1, 5)),
        (brouwer_haemers().unwrap(), (81, 20, 1, 6)),
    ] {
        let p = srg(t);
        assert_eq!(is_strongly_regular(&g).unwrap().tuple(), t);
        let c = clique_graph(&g, 3).unwrap();
        let data = CliqueGraphData::new(&p, 3).unwrap();
        for ell in 1..=6 {
            let trace = closed_walk_trace(&c, ell);
            assert_eq!(data.power_trace(ell), trace, "{t:?} ell {ell}");
            assert_eq!(closed_walk_count(&p, 3, ell).unwrap() * c.order(), trace);
        }
    }
}

#[test]
fn known_vectors_satisfy_their_systems() {
    for (t, x) in KNOWN_VECTORS {
        let sys = build_tau_rho_system(&srg(t)).unwrap();
        assert_eq!(sys.first_violation(&big(&x)), None, "{t:?}");
        assert_eq!(sys.nullity(), 3);
    }
}

#[test]
fn brouwer_haemers_measured_vector() {
    let g = brouwer_haemers().unwrap();
    let c = clique_graph(&g, 3).unwrap();
    let expected = KNOWN_VECTORS[0].1;
    for v in (0..c.order()).step_by(17) {
        assert_eq!(measure_tau_rho(&c, 10, v).unwrap(), expected);
    }
}

#[test]
fn solver_finds_witnesses_for_small_feasible_sets() {
    for p in enumerate_feasible_locally_linear(120) {
        if p.is_boring() {
            continue;
        }
        let sys = build_tau_rho_system(&p).unwrap();
        let x = solve_nonneg_integer(&sys).unwrap_or_else(|| panic!("{:?}", p.tuple()));
        assert!(sys.is_solution(&x));
        assert!(nonnegative(&x));
    }
}

#[test]
fn solver_reports_absence() {
    // Στ = −1
    let mut sys = build_tau_rho_system(&srg((81, 20, 1, 6))).unwrap();
    sys.rhs[0] = BigInt::from(-1);
    assert_eq!(solve_nonneg_integer(&sys), None);
}

#[test]
fn clique_graph_spectra_of_feasible_sets() {
    // (k̃, r̃^f, s̃^g, −3^(m−n)) per row
    let rows = [
        ((81, 20, 1, 6), (270, 27, (9, 60), (0, 20), 189)),
        ((243, 22, 1, 2), (891, 30, (12, 132), (3, 110), 648)),
        ((378, 52, 1, 8), (3276, 75, (27, 273), (12, 104), 2898)),
        ((729, 112, 1, 20), (13608, 165, (57, 616), (30, 112), 12879)),
    ];
    for (t, (m, k, (r, f), (s, g), extra)) in rows {
        let c = CliqueGraphData::new(&srg(t), 3).unwrap();
        assert_eq!((c.m, c.k, (c.r, c.f), (c.s, c.g), c.extra), (m, k, (r, f), (s, g), extra), "{t:?}");
        assert_eq!(1 + f + g + extra, m);
    }
    // μ = 4 fails (n − k − 1)μ = k(k − 2) for this n and k,
    // so the 729-vertex set must have μ = 20
    assert!(SrgParams::new(729, 112, 1, 4).is_err());
}
