//! Exhaustive and random graph generation, and the exhaustive sweep that
//! runs every check over all labeled graphs of a given order.
//!
//! Edge masks use graph6 bit order: bit `k` is the `k`-th pair in the
//! sequence `(0,1), (0,2), (1,2), (0,3), ...`.

use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::descriptors::DescriptorError;
use crate::graph::{to_graph6, Graph};
use crate::json;
use crate::verify::{Analysis, CheckKind, Tolerances};

/// Largest order accepted by [`enumerate_labeled`] and [`sweep`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerateError {
    #[error("enumeration is capped at n = {MAX_ENUMERATION_ORDER}, got n = {0}")]
    OrderTooLarge(usize),
    #[error("edge probability must lie in [0, 1], got {0}")]
    Probability(f64),
    #[error("graph {graph6}: {source}")]
    Report {
        graph6: String,
        source: DescriptorError,
    },
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph on `n` vertices whose edges are the set bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_edges(n, edges)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderTooLarge(n));
    }
    Ok((0..1u64 << pair_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

/// Erdős–Rényi `G(n, p)`. Pairs are visited in graph6 order and each is kept
/// when a ChaCha8 draw (seeded with `seed_from_u64(seed)`) from `[0, 1)`
/// falls below `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, EnumerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(EnumerateError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Aggregate outcome of an exhaustive sweep. Every count other than
/// `graphs_checked` counts graphs, not individual failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub graphs_checked: u64,
    /// Graphs failing at least one check.
    pub violations: u64,
    /// Smallest gap `E - 2R` among graphs that are not unions of complete
    /// bipartite graphs.
    pub min_strict_gap: Option<f64>,
    pub equality_count: u64,
    pub equality_all_certified: bool,
    pub main_violations: u64,
    pub vertex_violations: u64,
    pub matching_violations: u64,
    pub equality_disagreements: u64,
    pub regular_violations: u64,
    pub semiregular_violations: u64,
    pub regular_count: u64,
    pub semiregular_count: u64,
    pub min_gap: Option<f64>,
    pub max_equality_gap: Option<f64>,
    pub min_vertex_product: Option<f64>,
    pub min_vertex_sum: Option<f64>,
}

impl SweepSummary {
    fn empty(n: usize) -> Self {
        SweepSummary {
            n,
            graphs_checked: 0,
            violations: 0,
            min_strict_gap: None,
            equality_count: 0,
            equality_all_certified: true,
            main_violations: 0,
            vertex_violations: 0,
            matching_violations: 0,
            equality_disagreements: 0,
            regular_violations: 0,
            semiregular_violations: 0,
            regular_count: 0,
            semiregular_count: 0,
            min_gap: None,
            max_equality_gap: None,
            min_vertex_product: None,
            min_vertex_sum: None,
        }
    }

    /// True when no graph failed and every numeric equality was certified.
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.equality_all_certified
    }

    pub fn to_json(&self) -> String {
        json::to_string(self)
    }

    fn record(&mut self, analysis: &Analysis<'_>, tol: Tolerances) {
        self.graphs_checked += 1;
        let main = analysis.main_inequality(tol.slack);
        let case = analysis.equality_case(tol.equality);
        let gap = main.gap;
        self.min_gap = min_opt(self.min_gap, Some(gap));
        if case.numeric_equality {
            self.equality_count += 1;
            self.equality_all_certified &= case.structural_equality;
        }
        if case.structural_equality {
            self.max_equality_gap = max_opt(self.max_equality_gap, Some(gap.abs()));
        } else {
            self.min_strict_gap = min_opt(self.min_strict_gap, Some(gap));
        }
        let (product, sum) = analysis.vertex_extremes();
        self.min_vertex_product = min_opt(self.min_vertex_product, product);
        self.min_vertex_sum = min_opt(self.min_vertex_sum, sum);
        if analysis.regular_bound(tol).is_some() {
            self.regular_count += 1;
        }
        if analysis.semiregular_bound(tol).is_some() {
            self.semiregular_count += 1;
        }

        let mut kinds: Vec<CheckKind> = analysis.violations(tol).iter().map(|v| v.kind()).collect();
        kinds.dedup();
        if !kinds.is_empty() {
            self.violations += 1;
        }
        for kind in kinds {
            *match kind {
                CheckKind::MainInequality => &mut self.main_violations,
                CheckKind::Vertex => &mut self.vertex_violations,
                CheckKind::MatchingBound => &mut self.matching_violations,
                CheckKind::Equality => &mut self.equality_disagreements,
                CheckKind::RegularBound => &mut self.regular_violations,
                CheckKind::SemiRegularBound => &mut self.semiregular_violations,
            } += 1;
        }
    }

    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.graphs_checked += other.graphs_checked;
        self.violations += other.violations;
        self.min_strict_gap = min_opt(self.min_strict_gap, other.min_strict_gap);
        self.equality_count += other.equality_count;
        self.equality_all_certified &= other.equality_all_certified;
        self.main_violations += other.main_violations;
        self.vertex_violations += other.vertex_violations;
        self.matching_violations += other.matching_violations;
        self.equality_disagreements += other.equality_disagreements;
        self.regular_violations += other.regular_violations;
        self.semiregular_violations += other.semiregular_violations;
        self.regular_count += other.regular_count;
        self.semiregular_count += other.semiregular_count;
        self.min_gap = min_opt(self.min_gap, other.min_gap);
        self.max_equality_gap = max_opt(self.max_equality_gap, other.max_equality_gap);
        self.min_vertex_product = min_opt(self.min_vertex_product, other.min_vertex_product);
        self.min_vertex_sum = min_opt(self.min_vertex_sum, other.min_vertex_sum);
        self
    }
}

fn min_opt(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn max_opt(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Single-threaded exhaustive sweep over all labeled graphs on `n` vertices.
pub fn sweep(n: usize, tol: Tolerances) -> Result<SweepSummary, EnumerateError> {
    sweep_parallel(n, tol, 1)
}

/// Exhaustive sweep split into `jobs` contiguous mask ranges. The result
/// does not depend on `jobs`; on failure the error for the smallest failing
/// mask is returned.
pub fn sweep_parallel(n: usize, tol: Tolerances, jobs: usize) -> Result<SweepSummary, EnumerateError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderTooLarge(n));
    }
    let total = 1u64 << pair_count(n);
    let jobs = (jobs.max(1) as u64).min(total);
    let chunk = total.div_ceil(jobs);
    let ranges: Vec<(u64, u64)> = (0..jobs)
        .map(|j| (j * chunk, ((j + 1) * chunk).min(total)))
        .collect();

    let run = |(start, end): (u64, u64)| -> Result<SweepSummary, EnumerateError> {
        let mut summary = SweepSummary::empty(n);
        for mask in start..end {
            let g = graph_from_mask(n, mask);
            let analysis = Analysis::new(&g).map_err(|source| EnumerateError::Report {
                graph6: to_graph6(&g),
                source,
            })?;
            summary.record(&analysis, tol);
        }
        Ok(summary)
    };

    let partials: Vec<Result<SweepSummary, EnumerateError>> = if ranges.len() == 1 {
        vec![run(ranges[0])]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&range| scope.spawn(move || run(range)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    partials
        .into_iter()
        .try_fold(SweepSummary::empty(n), |acc, part| Ok(acc.merge(part?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(5).unwrap().count(), 1024);
        assert!(matches!(
            enumerate_labeled(8).map(|_| ()),
            Err(EnumerateError::OrderTooLarge(8))
        ));
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let all: std::collections::HashSet<Graph> = enumerate_labeled(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn mask_order_matches_graph6_bits() {
        // 'A_' is K_2 = mask 1; 'Bg' is the path 0-1-2 = bits x(0,1), x(1,2).
        assert_eq!(graph_from_mask(2, 1), parse_graph6("A_").unwrap());
        assert_eq!(graph_from_mask(3, 0b101), parse_graph6("Bg").unwrap());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(random_gnp(6, 0.0, 1).unwrap(), Graph::empty(6));
        assert_eq!(random_gnp(6, 1.0, 1).unwrap(), Graph::complete(6));
        assert_eq!(random_gnp(8, 0.5, 42).unwrap(), random_gnp(8, 0.5, 42).unwrap());
        assert_ne!(random_gnp(30, 0.5, 42).unwrap(), random_gnp(30, 0.5, 43).unwrap());
        assert!(random_gnp(4, 1.5, 0).is_err());
        assert!(random_gnp(4, f64::NAN, 0).is_err());
    }

    #[test]
    fn small_sweeps() {
        let tol = Tolerances::default();
        let s1 = sweep(1, tol).unwrap();
        assert_eq!((s1.graphs_checked, s1.equality_count, s1.violations), (1, 1, 0));
        assert_eq!(s1.min_strict_gap, None);

        let s4 = sweep(4, tol).unwrap();
        assert_eq!(s4.graphs_checked, 64);
        assert!(s4.passed());
    }

    #[test]
    fn sweep_is_independent_of_jobs() {
        let tol = Tolerances::default();
        let one = sweep_parallel(5, tol, 1).unwrap();
        for jobs in [2, 3, 7] {
            assert_eq!(sweep_parallel(5, tol, jobs).unwrap(), one);
        }
        assert_eq!(sweep(5, tol).unwrap(), one);
        assert!(matches!(sweep(8, tol), Err(EnumerateError::OrderTooLarge(8))));
    }
}
