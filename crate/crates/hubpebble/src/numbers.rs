//! Exact generalized cover pebbling numbers by exhaustive worst-case
//! configuration search: ascending-total level scan seeded by stacked-
//! witness lower bounds, with automorphism orbit reduction and parallel
//! chunked level checking.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hubs::HubError;
use crate::solver::{
    solve_over_targets, PebbleConfig, SolveError, SolverLimits, TargetFamily, Verdict,
};

/// Checked binomial coefficient in 64 bits.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of configurations of `t` pebbles on `n` vertices.
pub fn config_count(n: usize, t: u64) -> Option<u64> {
    binomial(t + n as u64 - 1, n as u64 - 1)
}

/// Iterator over every composition of `t` into `n` nonnegative parts, in
/// the order that starts from the full stack on the first vertex:
/// (t,0,..,0), (t-1,1,0,..), ..., (0,..,0,t).
pub struct CompositionIter {
    next: Option<Vec<u32>>,
}

pub fn enumerate_configs(n: usize, t: u64) -> CompositionIter {
    assert!(n >= 1, "need at least one vertex");
    let mut first = vec![0u32; n];
    first[0] = t as u32;
    CompositionIter { next: Some(first) }
}

impl Iterator for CompositionIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let n = current.len();
        // successor: decrement the rightmost nonzero coordinate before the
        // last position, pool everything to its right one step further.
        let mut succ = current.clone();
        let mut j = None;
        for i in (0..n.saturating_sub(1)).rev() {
            if succ[i] > 0 {
                j = Some(i);
                break;
            }
        }
        if let Some(j) = j {
            let pooled: u32 = succ[j + 1..].iter().sum::<u32>() + 1;
            succ[j] -= 1;
            for x in &mut succ[j + 1..] {
                *x = 0;
            }
            succ[j + 1] = pooled;
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// True iff `counts` is the canonical representative of its orbit: no group
/// element maps it to a configuration earlier in the enumeration order
/// (i.e. lexicographically greater).
pub fn is_orbit_canonical(counts: &[u32], inverse_perms: &[Vec<usize>]) -> bool {
    for inv in inverse_perms {
        // image[i] = counts[inv[i]]; compare image vs counts lexicographically
        for i in 0..counts.len() {
            let img = counts[inv[i]];
            if img > counts[i] {
                return false;
            }
            if img < counts[i] {
                break;
            }
        }
    }
    true
}

fn inverse_perms(group: &[Vec<usize>]) -> Vec<Vec<usize>> {
    group
        .iter()
        .filter(|p| p.iter().enumerate().any(|(i, &pi)| pi != i))
        .map(|p| {
            let mut inv = vec![0; p.len()];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            inv
        })
        .collect()
}

/// One canonical representative per orbit of `t`-pebble configurations
/// under the graph's automorphism group.
pub fn enumerate_config_orbits(g: &Graph, t: u64) -> impl Iterator<Item = Vec<u32>> {
    let invs = inverse_perms(&g.automorphisms());
    enumerate_configs(g.n(), t).filter(move |c| is_orbit_canonical(c, &invs))
}

#[derive(Debug, Clone)]
pub struct EngineOptions {
    pub use_symmetry: bool,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub limits: SolverLimits,
    /// Refuse levels whose full configuration count exceeds this.
    pub max_level_configs: u64,
    /// Fall back to plain enumeration when the group is larger than this
    /// (canonicity checks would dominate the level cost).
    pub max_group_size: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            use_symmetry: true,
            jobs: None,
            limits: SolverLimits::default(),
            max_level_configs: 100_000_000,
            max_group_size: 50_000,
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Hub(#[from] HubError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("level t={t} has {count} configurations, above the ceiling {ceiling}")]
    LevelTooLarge { t: u64, count: u64, ceiling: u64 },
    #[error("configuration count overflows 64 bits at t={t}")]
    CountOverflow { t: u64 },
    #[error("family admits no target set on this graph")]
    EmptyFamily,
}

/// The result of an exact (or aborted) invariant computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NumberReport {
    pub graph: String,
    pub family: String,
    pub value: u64,
    /// A maximum-total unsolvable configuration (absent when value = 0).
    #[serde(skip)]
    pub witness: Option<PebbleConfig>,
    pub witness_text: Option<String>,
    pub configs_examined: u64,
    pub configs_skipped_by_symmetry: u64,
    pub elapsed_ms: u64,
    /// False when a resource limit forced an abort before the scan settled.
    pub exact: bool,
}

struct LevelOutcome {
    all_solvable: bool,
    failing: Option<Vec<u32>>,
    unknown: bool,
    examined: u64,
}

/// Checks one level: every orbit representative of total `t` against the
/// minimal targets. Deterministic regardless of worker count: chunks are
/// processed in stream order and the first failing representative within
/// the earliest failing chunk wins.
fn check_level(
    g: &Graph,
    minimal: &[VertexSet],
    dist: &[Vec<usize>],
    t: u64,
    invs: Option<&[Vec<usize>]>,
    limits: SolverLimits,
) -> LevelOutcome {
    const CHUNK: usize = 4096;
    let mut stream = enumerate_configs(g.n(), t);
    let mut examined = 0u64;
    loop {
        let chunk: Vec<Vec<u32>> = stream
            .by_ref()
            .filter(|c| invs.map_or(true, |invs| is_orbit_canonical(c, invs)))
            .take(CHUNK)
            .collect();
        if chunk.is_empty() {
            return LevelOutcome {
                all_solvable: true,
                failing: None,
                unknown: false,
                examined,
            };
        }
        examined += chunk.len() as u64;
        let verdicts: Vec<Verdict> = chunk
            .par_iter()
            .map(|counts| {
                let config = PebbleConfig::new(counts.clone());
                solve_over_targets(g, &config, minimal, dist, limits).verdict
            })
            .collect();
        for (counts, verdict) in chunk.iter().zip(&verdicts) {
            match verdict {
                Verdict::Solvable => {}
                Verdict::Unsolvable => {
                    return LevelOutcome {
                        all_solvable: false,
                        failing: Some(counts.clone()),
                        unknown: false,
                        examined,
                    }
                }
                Verdict::Unknown => {
                    return LevelOutcome {
                        all_solvable: false,
                        failing: None,
                        unknown: true,
                        examined,
                    }
                }
            }
        }
    }
}

/// Binary-searches the largest single-vertex stack that is unsolvable,
/// probing each vertex. Returns (best stack config, its total), or `None`
/// when even one pebble anywhere solves (or zero pebbles solve).
fn stacked_lower_bound(
    g: &Graph,
    minimal: &[VertexSet],
    dist: &[Vec<usize>],
    limits: SolverLimits,
) -> Result<Option<PebbleConfig>, Verdict> {
    let solvable = |v: usize, k: u64| -> Result<bool, Verdict> {
        let c = PebbleConfig::stack(g.n(), v, k as u32);
        match solve_over_targets(g, &c, minimal, dist, limits).verdict {
            Verdict::Solvable => Ok(true),
            Verdict::Unsolvable => Ok(false),
            Verdict::Unknown => Err(Verdict::Unknown),
        }
    };
    let mut best: Option<(usize, u64)> = None;
    for v in 0..g.n() {
        if solvable(v, 1)? {
            continue;
        }
        // exponential growth, then binary search for the threshold
        let mut lo = 1u64; // unsolvable
        let mut hi = 2u64;
        while !solvable(v, hi)? {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if solvable(v, mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if best.map_or(true, |(_, b)| lo > b) {
            best = Some((v, lo));
        }
    }
    Ok(best.map(|(v, k)| PebbleConfig::stack(g.n(), v, k as u32)))
}

fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// The generalized cover pebbling number of `g` for `family`: the smallest
/// `t` such that every configuration of `t` pebbles is solvable.
pub fn generalized_cover_pebbling_number(
    g: &Graph,
    family: &TargetFamily,
    options: &EngineOptions,
) -> Result<NumberReport, EngineError> {
    let minimal = family.minimal_sets(g)?;
    if minimal.is_empty() {
        return Err(EngineError::EmptyFamily);
    }
    let start = Instant::now();
    let report = run_with_jobs(options.jobs, || {
        compute_number(g, &minimal, options, family.name(), start)
    })?;
    Ok(report)
}

fn compute_number(
    g: &Graph,
    minimal: &[VertexSet],
    options: &EngineOptions,
    family_name: String,
    start: Instant,
) -> Result<NumberReport, EngineError> {
    let dist = g.distance_matrix();
    let mut report = NumberReport {
        graph: g.family_tag().to_string(),
        family: family_name,
        value: 0,
        witness: None,
        witness_text: None,
        configs_examined: 0,
        configs_skipped_by_symmetry: 0,
        elapsed_ms: 0,
        exact: true,
    };

    // Zero pebbles suffice exactly when the empty set is in the family.
    if minimal.contains(&VertexSet::EMPTY) {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return Ok(report);
    }

    let invs_store;
    let invs: Option<&[Vec<usize>]> = if options.use_symmetry {
        let group = g.automorphisms();
        if group.len() > options.max_group_size {
            None
        } else {
            invs_store = inverse_perms(&group);
            if invs_store.is_empty() {
                None
            } else {
                Some(&invs_store)
            }
        }
    } else {
        None
    };

    let mut witness = match stacked_lower_bound(g, minimal, &dist, options.limits) {
        Ok(w) => w,
        Err(_) => {
            report.exact = false;
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(report);
        }
    };

    let mut t = witness.as_ref().map_or(1, |w| w.total() + 1);
    loop {
        let full_count = config_count(g.n(), t).ok_or(EngineError::CountOverflow { t })?;
        if full_count > options.max_level_configs {
            return Err(EngineError::LevelTooLarge {
                t,
                count: full_count,
                ceiling: options.max_level_configs,
            });
        }
        let outcome = check_level(g, minimal, &dist, t, invs, options.limits);
        report.configs_examined += outcome.examined;
        if invs.is_some() {
            report.configs_skipped_by_symmetry += full_count - outcome.examined;
        }
        if outcome.unknown {
            report.exact = false;
            report.value = t;
            break;
        }
        if outcome.all_solvable {
            report.value = t;
            break;
        }
        witness = Some(PebbleConfig::new(outcome.failing.expect("failing config")));
        t += 1;
    }
    report.witness = witness;
    report.witness_text = report.witness.as_ref().map(|w| w.to_text(g));
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The classical pebbling number: the per-root worst case, maximized over
/// one root per vertex orbit, with orbit reduction under each root's
/// stabilizer subgroup.
pub fn pebbling_number(g: &Graph, options: &EngineOptions) -> Result<NumberReport, EngineError> {
    let start = Instant::now();
    run_with_jobs(options.jobs, || {
        let dist = g.distance_matrix();
        let group = g.automorphisms();

        // one representative per vertex orbit
        let mut roots: Vec<usize> = Vec::new();
        let mut seen = vec![false; g.n()];
        for v in 0..g.n() {
            if seen[v] {
                continue;
            }
            roots.push(v);
            for p in &group {
                seen[p[v]] = true;
            }
        }

        let mut best: Option<NumberReport> = None;
        let mut examined = 0u64;
        let mut skipped = 0u64;
        for root in roots {
            let stabilizer: Vec<Vec<usize>> =
                group.iter().filter(|p| p[root] == root).cloned().collect();
            let invs_store = inverse_perms(&stabilizer);
            let invs: Option<&[Vec<usize>]> = if options.use_symmetry
                && !invs_store.is_empty()
                && stabilizer.len() <= options.max_group_size
            {
                Some(&invs_store)
            } else {
                None
            };
            let minimal = [VertexSet::EMPTY.with(root)];

            let mut witness = match stacked_lower_bound(g, &minimal, &dist, options.limits) {
                Ok(w) => w,
                Err(_) => {
                    let mut r = best.unwrap_or_else(|| NumberReport {
                        graph: g.family_tag().to_string(),
                        family: "pebbling".to_string(),
                        value: 0,
                        witness: None,
                        witness_text: None,
                        configs_examined: examined,
                        configs_skipped_by_symmetry: skipped,
                        elapsed_ms: 0,
                        exact: true,
                    });
                    r.exact = false;
                    r.elapsed_ms = start.elapsed().as_millis() as u64;
                    return Ok(r);
                }
            };
            let mut t = witness.as_ref().map_or(1, |w| w.total() + 1);
            let value = loop {
                let full_count =
                    config_count(g.n(), t).ok_or(EngineError::CountOverflow { t })?;
                if full_count > options.max_level_configs {
                    return Err(EngineError::LevelTooLarge {
                        t,
                        count: full_count,
                        ceiling: options.max_level_configs,
                    });
                }
                let outcome = check_level(g, &minimal, &dist, t, invs, options.limits);
                examined += outcome.examined;
                if invs.is_some() {
                    skipped += full_count - outcome.examined;
                }
                if outcome.unknown {
                    let mut r = NumberReport {
                        graph: g.family_tag().to_string(),
                        family: "pebbling".to_string(),
                        value: t,
                        witness: None,
                        witness_text: None,
                        configs_examined: examined,
                        configs_skipped_by_symmetry: skipped,
                        elapsed_ms: start.elapsed().as_millis() as u64,
                        exact: false,
                    };
                    r.witness_text = r.witness.as_ref().map(|w| w.to_text(g));
                    return Ok(r);
                }
                if outcome.all_solvable {
                    break t;
                }
                witness = Some(PebbleConfig::new(outcome.failing.expect("failing config")));
                t += 1;
            };
            if best.as_ref().map_or(true, |b| value > b.value) {
                best = Some(NumberReport {
                    graph: g.family_tag().to_string(),
                    family: "pebbling".to_string(),
                    value,
                    witness_text: witness.as_ref().map(|w| w.to_text(g)),
                    witness,
                    configs_examined: 0,
                    configs_skipped_by_symmetry: 0,
                    elapsed_ms: 0,
                    exact: true,
                });
            }
        }
        let mut report = best.expect("at least one root");
        report.configs_examined = examined;
        report.configs_skipped_by_symmetry = skipped;
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    })
}

/// The named lower-bound witness shape for the strong-hub family on the
/// built-in graphs, when one is defined. Each is a maximum-total unsolvable
/// configuration.
pub fn named_witness(g: &Graph) -> Option<PebbleConfig> {
    use crate::graph::FamilyTag::*;
    match g.family_tag() {
        Path(n) if n >= 3 => {
            // 2^{n-1}-3 on v1 and one on vn
            let stack = (1u32 << (n - 1)) - 3;
            Some(PebbleConfig::from_pairs(n, &[(0, stack), (n - 1, 1)]))
        }
        Star(n) => {
            // one pebble on each leaf
            let pairs: Vec<(usize, u32)> = (1..=n).map(|i| (i, 1)).collect();
            Some(PebbleConfig::from_pairs(n + 1, &pairs))
        }
        Book(n) => {
            // five on u1, one on each of u2..u_{n-1} and v2..vn; the ones
            // must avoid v1 (u1's mate), or two pebbles sent u1 -> v1 merge
            // with the one already there and reach b cheaply
            let mut pairs: Vec<(usize, u32)> = vec![(2, 5)];
            for i in 2..n {
                pairs.push((1 + i, 1)); // u_i
            }
            for i in 2..=n {
                pairs.push((n + 1 + i, 1)); // v_i
            }
            Some(PebbleConfig::from_pairs(2 * n + 2, &pairs))
        }
        Cycle(n) => {
            let k = n / 2;
            let total: u32 = if n % 2 == 0 {
                (1 << k) + (1 << (k - 1)) - 4
            } else {
                (1 << (k + 1)) - 4
            };
            Some(PebbleConfig::stack(n, 0, total))
        }
        _ => None,
    }
}

/// A maximum-total unsolvable configuration for the family, preferring the
/// named witness shape when it attains the maximum.
pub fn max_unsolvable_witness(
    g: &Graph,
    family: &TargetFamily,
    options: &EngineOptions,
) -> Result<Option<PebbleConfig>, EngineError> {
    let report = generalized_cover_pebbling_number(g, family, options)?;
    if report.value == 0 {
        return Ok(None);
    }
    if *family == TargetFamily::StrongHubSets {
        if let Some(pw) = named_witness(g) {
            if pw.total() == report.value - 1 {
                let minimal = family.minimal_sets(g)?;
                let dist = g.distance_matrix();
                let outcome = solve_over_targets(g, &pw, &minimal, &dist, options.limits);
                if outcome.verdict == Verdict::Unsolvable {
                    return Ok(Some(pw));
                }
            }
        }
    }
    Ok(report.witness)
}

/// Convenience wrapper for elapsed-time display.
pub fn fmt_elapsed(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_book, make_cycle, make_path, make_star};

    #[test]
    fn composition_enumeration_order_and_count() {
        let all: Vec<Vec<u32>> = enumerate_configs(2, 2).collect();
        assert_eq!(all, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);

        assert_eq!(enumerate_configs(3, 3).count(), 10);
        assert_eq!(config_count(3, 3), Some(10));
        assert_eq!(config_count(5, 31), Some(52_360));

        // n=1 degenerate
        let all: Vec<Vec<u32>> = enumerate_configs(1, 4).collect();
        assert_eq!(all, vec![vec![4]]);
    }

    #[test]
    fn composition_counts_match_binomial() {
        for n in 1..=5 {
            for t in 0..=7u64 {
                assert_eq!(
                    enumerate_configs(n, t).count() as u64,
                    config_count(n, t).unwrap(),
                    "n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn orbit_enumeration_examples() {
        let p2 = make_path(2).unwrap();
        let orbits: Vec<Vec<u32>> = enumerate_config_orbits(&p2, 2).collect();
        assert_eq!(orbits, vec![vec![2, 0], vec![1, 1]]);

        let c4 = make_cycle(4).unwrap();
        let orbits: Vec<Vec<u32>> = enumerate_config_orbits(&c4, 1).collect();
        assert_eq!(orbits.len(), 1);

        let s3 = make_star(3).unwrap();
        let orbits: Vec<Vec<u32>> = enumerate_config_orbits(&s3, 2).collect();
        assert_eq!(
            orbits,
            vec![
                vec![2, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 2, 0, 0],
                vec![0, 1, 1, 0],
            ]
        );
    }

    #[test]
    fn orbit_sizes_sum_to_full_count() {
        for (g, t) in [
            (make_path(4).unwrap(), 5u64),
            (make_star(3).unwrap(), 4),
            (make_cycle(5).unwrap(), 3),
        ] {
            let invs = inverse_perms(&g.automorphisms());
            let group: Vec<Vec<usize>> = g.automorphisms();
            let mut total = 0u64;
            for rep in enumerate_configs(g.n(), t).filter(|c| is_orbit_canonical(c, &invs)) {
                let config = PebbleConfig::new(rep);
                let mut images: Vec<Vec<u32>> = group
                    .iter()
                    .map(|p| config.apply_perm(p).counts().to_vec())
                    .collect();
                images.sort();
                images.dedup();
                total += images.len() as u64;
            }
            assert_eq!(total, config_count(g.n(), t).unwrap());
        }
    }

    #[test]
    fn small_strong_hub_numbers() {
        let opts = EngineOptions::default();
        let r = generalized_cover_pebbling_number(
            &make_path(4).unwrap(),
            &TargetFamily::StrongHubSets,
            &opts,
        )
        .unwrap();
        assert_eq!(r.value, 7);
        assert!(r.exact);
        assert_eq!(r.witness.as_ref().unwrap().total(), 6);

        let r = generalized_cover_pebbling_number(
            &make_star(4).unwrap(),
            &TargetFamily::StrongHubSets,
            &opts,
        )
        .unwrap();
        assert_eq!(r.value, 5);

        let r = generalized_cover_pebbling_number(
            &make_book(2).unwrap(),
            &TargetFamily::StrongHubSets,
            &opts,
        )
        .unwrap();
        assert_eq!(r.value, 7);
    }

    #[test]
    fn trivial_path_values_are_zero() {
        let opts = EngineOptions::default();
        for n in [1, 2] {
            let r = generalized_cover_pebbling_number(
                &make_path(n).unwrap(),
                &TargetFamily::StrongHubSets,
                &opts,
            )
            .unwrap();
            assert_eq!(r.value, 0);
            assert!(r.witness.is_none());
        }
    }

    #[test]
    fn hub_cover_number_of_p4() {
        // brute-force derived: every 2-vertex subset of P_4 is a hub set,
        // so 3 pebbles always cover one; {v1:2} of size 2 fails.
        let opts = EngineOptions::default();
        let r = generalized_cover_pebbling_number(
            &make_path(4).unwrap(),
            &TargetFamily::HubSets,
            &opts,
        )
        .unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn symmetry_on_and_off_agree() {
        let mut no_sym = EngineOptions::default();
        no_sym.use_symmetry = false;
        let sym = EngineOptions::default();
        for g in [
            make_path(4).unwrap(),
            make_star(3).unwrap(),
            make_cycle(5).unwrap(),
            make_book(2).unwrap(),
        ] {
            let a = generalized_cover_pebbling_number(&g, &TargetFamily::StrongHubSets, &sym)
                .unwrap();
            let b =
                generalized_cover_pebbling_number(&g, &TargetFamily::StrongHubSets, &no_sym)
                    .unwrap();
            assert_eq!(a.value, b.value, "graph {}", g.family_tag());
            assert!(a.configs_examined <= b.configs_examined);
        }
    }

    #[test]
    fn pebbling_number_of_paths() {
        let opts = EngineOptions::default();
        assert_eq!(pebbling_number(&make_path(2).unwrap(), &opts).unwrap().value, 2);
        assert_eq!(pebbling_number(&make_path(3).unwrap(), &opts).unwrap().value, 4);
        assert_eq!(pebbling_number(&make_path(4).unwrap(), &opts).unwrap().value, 8);
    }

    #[test]
    fn named_witness_shapes() {
        let p5 = make_path(5).unwrap();
        let w = named_witness(&p5).unwrap();
        assert_eq!(w.counts(), &[13, 0, 0, 0, 1]);
        assert_eq!(w.total(), 14);

        let b3 = make_book(3).unwrap();
        let w = named_witness(&b3).unwrap();
        // {u1:5, u2:1, v2:1, v3:1}, total 8 = 2n+2
        assert_eq!(w.total(), 8);
        assert_eq!(w.get(2), 5);
        assert_eq!(w.get(3), 1);
        assert_eq!(w.get(6), 1);
        assert_eq!(w.get(7), 1);
    }

    #[test]
    fn witness_prefers_named_shape() {
        let opts = EngineOptions::default();
        let s3 = make_star(3).unwrap();
        let w = max_unsolvable_witness(&s3, &TargetFamily::StrongHubSets, &opts)
            .unwrap()
            .unwrap();
        assert_eq!(w.counts(), &[0, 1, 1, 1]);
    }
}
