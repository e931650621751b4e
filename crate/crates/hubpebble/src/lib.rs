//! An exact combinatorial workbench for graph pebbling with hub-type
//! targets: solvability of pebble configurations, strong-hub-cover (and
//! related) pebbling numbers by exhaustive worst-configuration search, and
//! a verification harness for the closed forms on paths, stars, books, and
//! cycles.
//!
//! Start from the runnable programs in `examples/`:
//!
//! - `families` — build the built-in graph families and inspect them
//! - `hub_sets` — recognize and enumerate hub-type sets
//! - `solve_config` — decide one configuration, with certificates
//! - `compute_numbers` — exact invariants with symmetry reduction
//! - `verify_theorems` — re-run the whole verification harness
//! - `conjecture_cycles` — the cycle closed form vs computed values

pub mod cli;
pub mod graph;
pub mod hubs;
pub mod numbers;
pub mod solver;
pub mod verify;

pub use graph::{
    make_book, make_cycle, make_path, make_star, parse_descriptor, parse_graph, FamilyTag, Graph,
    GraphError, VertexSet,
};
pub use hubs::{is_dominating_set, is_hub_set, is_strong_hub_set, minimal_sets, SetKind};
pub use numbers::{
    enumerate_config_orbits, enumerate_configs, generalized_cover_pebbling_number,
    max_unsolvable_witness, named_witness, pebbling_number, EngineOptions, NumberReport,
};
pub use solver::{
    apply_move, can_cover_target, check_flow_certificate, check_move_certificate, is_solvable,
    tree_cover_feasible, MoveCertificate, PebbleConfig, SolveOutcome, SolverLimits, TargetFamily,
    Verdict,
};
