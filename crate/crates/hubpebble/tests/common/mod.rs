//! Shared helpers for the integration suites: a pruning-free brute-force
//! solvability oracle, a brute-force isomorphism check, and seeded random
//! tree/configuration generators. Everything here is deliberately naive so
//! it can serve as an independent cross-check of the optimized library.

#![allow(dead_code)]

use std::collections::HashSet;

use hubpebble::graph::FamilyTag;
use hubpebble::{Graph, PebbleConfig, TargetFamily, VertexSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Breadth-first exploration of every configuration reachable by legal
/// moves, with no pruning beyond a visited set. Returns true iff some
/// reachable configuration covers one of the targets.
pub fn brute_force_covers(g: &Graph, start: &[u32], targets: &[VertexSet]) -> bool {
    let covers = |c: &[u32]| {
        targets
            .iter()
            .any(|t| t.iter().all(|v| c[v] > 0))
    };
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![start.to_vec()];
    seen.insert(start.to_vec());
    while let Some(cur) = stack.pop() {
        if covers(&cur) {
            return true;
        }
        for from in 0..g.n() {
            if cur[from] < 2 {
                continue;
            }
            for to in g.neighbors(from).iter() {
                let mut next = cur.clone();
                next[from] -= 2;
                next[to] += 1;
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    false
}

pub fn brute_force_solvable(g: &Graph, c: &PebbleConfig, family: &TargetFamily) -> bool {
    let targets = family.minimal_sets(g).expect("target enumeration");
    brute_force_covers(g, c.counts(), &targets)
}

/// Backtracking isomorphism test (degree-pruned), adequate for the small
/// graphs exercised in tests.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edges().len() != b.edges().len() {
        return false;
    }
    let n = a.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: &Graph,
        b: &Graph,
        v: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    extend(a, b, 0, &mut map, &mut used)
}

/// Uniform random labeled tree on n vertices via a random Prüfer sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edges(1, &[], FamilyTag::Custom).unwrap();
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)], FamilyTag::Custom).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges, FamilyTag::Custom).unwrap()
}

/// Random configuration with exactly `total` pebbles.
pub fn random_config(rng: &mut ChaCha8Rng, n: usize, total: u32) -> PebbleConfig {
    let mut counts = vec![0u32; n];
    for _ in 0..total {
        counts[rng.gen_range(0..n)] += 1;
    }
    PebbleConfig::new(counts)
}

/// All connected labeled graphs on n vertices, by edge-subset enumeration.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(g) = Graph::from_edges(n, &edges, FamilyTag::Custom) {
            out.push(g);
        }
    }
    out
}

/// All configurations on n vertices with the given total, as count vectors.
pub fn all_configs(n: usize, total: u32) -> Vec<Vec<u32>> {
    hubpebble::enumerate_configs(n, total as u64).collect()
}
