//! Hub sets, strong hub sets, and dominating sets: recognition predicates
//! plus an inclusion-minimal-sets enumerator.
//!
//! A hub set routes every pair of *outside* vertices through itself; a
//! strong hub set routes every pair of vertices in the graph. The empty set
//! is accepted exactly when the pairwise routing condition holds vacuously
//! through adjacency, i.e. exactly on complete graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default cap on the vertex count for subset enumeration.
pub const ENUMERATION_GUARD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetKind {
    Hub,
    StrongHub,
    Dominating,
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SetKind::Hub => write!(f, "hub"),
            SetKind::StrongHub => write!(f, "strong-hub"),
            SetKind::Dominating => write!(f, "dominating"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HubError {
    #[error("enumeration guard exceeded: n = {n} > {guard}")]
    GuardExceeded { n: usize, guard: usize },
}

/// Distinct x and y are "routed" by U when they lie in the same component of
/// the subgraph induced on U ∪ {x, y}.
fn pair_routed(g: &Graph, hub: VertexSet, x: usize, y: usize) -> bool {
    if g.has_edge(x, y) {
        return true;
    }
    let allowed = hub.with(x).with(y);
    g.component_of(x, allowed).contains(y)
}

/// True iff every pair of distinct vertices of the graph is routed by U.
pub fn is_strong_hub_set(g: &Graph, hub: VertexSet) -> bool {
    for x in 0..g.n() {
        for y in (x + 1)..g.n() {
            if !pair_routed(g, hub, x, y) {
                return false;
            }
        }
    }
    true
}

/// True iff every pair of distinct vertices *outside* U is routed by U.
pub fn is_hub_set(g: &Graph, hub: VertexSet) -> bool {
    for x in 0..g.n() {
        if hub.contains(x) {
            continue;
        }
        for y in (x + 1)..g.n() {
            if hub.contains(y) {
                continue;
            }
            if !pair_routed(g, hub, x, y) {
                return false;
            }
        }
    }
    true
}

/// True iff every vertex outside U has a neighbor in U.
pub fn is_dominating_set(g: &Graph, set: VertexSet) -> bool {
    for v in 0..g.n() {
        if set.contains(v) {
            continue;
        }
        if g.neighbors(v).intersect(set).is_empty() {
            return false;
        }
    }
    true
}

pub fn is_set_of_kind(g: &Graph, set: VertexSet, kind: SetKind) -> bool {
    match kind {
        SetKind::Hub => is_hub_set(g, set),
        SetKind::StrongHub => is_strong_hub_set(g, set),
        SetKind::Dominating => is_dominating_set(g, set),
    }
}

/// All inclusion-minimal sets of the given kind, by subset enumeration in
/// ascending cardinality with superset pruning. Sorted by cardinality, then
/// lexicographically by bits.
pub fn minimal_sets(g: &Graph, kind: SetKind) -> Result<Vec<VertexSet>, HubError> {
    minimal_sets_guarded(g, kind, ENUMERATION_GUARD)
}

pub fn minimal_sets_guarded(
    g: &Graph,
    kind: SetKind,
    guard: usize,
) -> Result<Vec<VertexSet>, HubError> {
    let n = g.n();
    if n > guard {
        return Err(HubError::GuardExceeded { n, guard });
    }
    let mut found: Vec<VertexSet> = Vec::new();
    // Group subsets by cardinality so superset pruning applies cleanly:
    // every proper superset of a found set has strictly larger cardinality.
    let mut by_card: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    for bits in 0..(1u64 << n) {
        let s = VertexSet::from_bits(bits as u32);
        by_card[s.card()].push(s);
    }
    for level in &by_card {
        for &s in level {
            if found.iter().any(|m| m.is_subset_of(s)) {
                continue;
            }
            if is_set_of_kind(g, s, kind) {
                found.push(s);
            }
        }
    }
    found.sort_by_key(|s| (s.card(), s.bits()));
    Ok(found)
}

/// Membership in the upward-closed family generated by `minimal`: a set
/// belongs iff it contains some minimal member.
pub fn contains_minimal_member(set: VertexSet, minimal: &[VertexSet]) -> bool {
    minimal.iter().any(|m| m.is_subset_of(set))
}
