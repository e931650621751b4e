//! Cross-checks of the optimized library against independent brute-force
//! oracles, plus the structural invariants that don't fit a single
//! acceptance criterion: pointwise monotonicity, upward closure of the set
//! predicates, the book/prism isomorphism, and determinism of the engine
//! across worker counts.

mod common;

use hubpebble::graph::FamilyTag;
use hubpebble::solver::SolverLimits;
use hubpebble::{
    generalized_cover_pebbling_number, is_dominating_set, is_hub_set, is_solvable,
    is_strong_hub_set, make_book, make_cycle, make_path, make_star, EngineOptions, Graph,
    PebbleConfig, TargetFamily, VertexSet,
};

fn solvable(g: &Graph, c: &PebbleConfig, fam: &TargetFamily) -> bool {
    is_solvable(g, c, fam, SolverLimits::default())
        .expect("solver run")
        .solvable()
}

#[test]
fn solver_matches_brute_force_exhaustively() {
    let graphs = [
        make_path(4).unwrap(),
        make_star(3).unwrap(),
        make_cycle(4).unwrap(),
        make_book(2).unwrap(),
    ];
    let families = [
        TargetFamily::FullCover,
        TargetFamily::StrongHubSets,
        TargetFamily::HubSets,
        TargetFamily::DominatingSets,
    ];
    for g in &graphs {
        for t in 0..=6u32 {
            for counts in common::all_configs(g.n(), t) {
                let c = PebbleConfig::new(counts);
                for fam in &families {
                    assert_eq!(
                        solvable(g, &c, fam),
                        common::brute_force_solvable(g, &c, fam),
                        "disagreement on {} config {:?} family {}",
                        g.family_tag(),
                        c.counts(),
                        fam.name()
                    );
                }
            }
        }
    }
}

#[test]
fn solvability_is_pointwise_monotone() {
    // If c is solvable then so is c plus one pebble anywhere; by induction
    // this gives full pointwise monotonicity.
    let graphs = [make_path(4).unwrap(), make_star(3).unwrap(), make_cycle(5).unwrap()];
    let fam = TargetFamily::StrongHubSets;
    for g in &graphs {
        for t in 0..=8u32 {
            for counts in common::all_configs(g.n(), t) {
                let c = PebbleConfig::new(counts.clone());
                if !solvable(g, &c, &fam) {
                    continue;
                }
                for v in 0..g.n() {
                    let mut bigger = counts.clone();
                    bigger[v] += 1;
                    assert!(
                        solvable(g, &PebbleConfig::new(bigger), &fam),
                        "monotonicity violated on {} at {:?} +{}",
                        g.family_tag(),
                        counts,
                        v
                    );
                }
            }
        }
    }
}

#[test]
fn set_predicates_are_upward_closed() {
    // Adding one vertex preserves each predicate; induction closes upward.
    let graphs = [
        make_path(8).unwrap(),
        make_star(7).unwrap(),
        make_book(3).unwrap(),
        make_cycle(8).unwrap(),
    ];
    for g in &graphs {
        let n = g.n();
        for bits in 0u32..(1 << n) {
            let s = VertexSet::from_bits(bits);
            let held = [
                is_strong_hub_set(g, s),
                is_hub_set(g, s),
                is_dominating_set(g, s),
            ];
            for v in 0..n {
                if s.contains(v) {
                    continue;
                }
                let bigger = s.with(v);
                if held[0] {
                    assert!(is_strong_hub_set(g, bigger));
                }
                if held[1] {
                    assert!(is_hub_set(g, bigger));
                }
                if held[2] {
                    assert!(is_dominating_set(g, bigger));
                }
            }
        }
    }
}

#[test]
fn book_is_star_times_edge() {
    // B_n built independently as the prism over S_n: two copies of the
    // star plus a perfect matching between them.
    for n in 2..=5 {
        let mut edges = Vec::new();
        let m = n + 1; // vertices per star copy, center first
        for leaf in 1..=n {
            edges.push((0, leaf));
            edges.push((m, m + leaf));
        }
        for v in 0..m {
            edges.push((v, m + v));
        }
        let prism = Graph::from_edges(2 * m, &edges, FamilyTag::Custom).unwrap();
        assert!(common::graphs_isomorphic(&make_book(n).unwrap(), &prism));
    }
}

#[test]
fn zero_pebbles_solvable_only_on_complete_graphs() {
    let triangle =
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], FamilyTag::Custom).unwrap();
    let fam = TargetFamily::StrongHubSets;
    assert!(solvable(&triangle, &PebbleConfig::zero(3), &fam));
    assert!(solvable(&make_path(2).unwrap(), &PebbleConfig::zero(2), &fam));
    assert!(!solvable(&make_path(3).unwrap(), &PebbleConfig::zero(3), &fam));
    assert!(!solvable(&make_cycle(4).unwrap(), &PebbleConfig::zero(4), &fam));
}

#[test]
fn every_config_at_the_computed_value_is_solvable() {
    // Exhaustive re-verification of the defining property at t = value.
    for g in [make_path(4).unwrap(), make_star(3).unwrap()] {
        let fam = TargetFamily::StrongHubSets;
        let value = generalized_cover_pebbling_number(&g, &fam, &EngineOptions::default())
            .unwrap()
            .value;
        for counts in common::all_configs(g.n(), value as u32) {
            let c = PebbleConfig::new(counts);
            assert!(common::brute_force_solvable(&g, &c, &fam));
        }
    }
}

#[test]
fn engine_reports_are_deterministic_across_worker_counts() {
    let g = make_path(5).unwrap();
    let fam = TargetFamily::StrongHubSets;
    let mut fingerprints = Vec::new();
    for jobs in [Some(1), Some(2), Some(4), None] {
        let opts = EngineOptions {
            jobs,
            ..EngineOptions::default()
        };
        let r = generalized_cover_pebbling_number(&g, &fam, &opts).unwrap();
        fingerprints.push((
            r.value,
            r.witness_text.clone(),
            r.configs_examined,
            r.configs_skipped_by_symmetry,
            r.exact,
        ));
    }
    assert!(fingerprints.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn family_values_are_ordered() {
    // FullCover >= StrongHubSets >= HubSets, since the target families nest.
    for g in [
        make_path(4).unwrap(),
        make_star(4).unwrap(),
        make_cycle(5).unwrap(),
        make_book(2).unwrap(),
    ] {
        let v = |fam: TargetFamily| {
            generalized_cover_pebbling_number(&g, &fam, &EngineOptions::default())
                .unwrap()
                .value
        };
        let cover = v(TargetFamily::FullCover);
        let strong = v(TargetFamily::StrongHubSets);
        let hub = v(TargetFamily::HubSets);
        assert!(cover >= strong && strong >= hub, "{}", g.family_tag());
    }
}
