use std::collections::BTreeMap;

use crate::ribbon::{Metrics, RibbonGraph, Tracer};

/// Number of states of a ribbon graph with each value of `(k(H), e(H), p(H))`.
///
/// These three numbers (with `v`) determine every metric of a state, so any
/// invariant whose summand depends only on metrics is a finite sum over the
/// census instead of over `2^e` states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateCensus {
    graph: Metrics,
    counts: BTreeMap<(usize, usize, usize), u64>,
}

/// Dense counts indexed by `(k, e, p)`; `k ≤ v` and `p ≤ k + n ≤ v + e`.
#[derive(Debug, Clone)]
struct Tally {
    dims: (usize, usize, usize),
    counts: Vec<u64>,
}

impl Tally {
    fn new(g: &RibbonGraph) -> Tally {
        let (v, e) = (g.num_vertices(), g.num_edges());
        let dims = (v + 1, e + 1, v + e + 1);
        Tally {
            dims,
            counts: vec![0; dims.0 * dims.1 * dims.2],
        }
    }

    fn index(&self, k: usize, e: usize, p: usize) -> usize {
        (k * self.dims.1 + e) * self.dims.2 + p
    }

    fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        let (_, de, dp) = self.dims;
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &n)| n > 0)
            .map(move |(i, &n)| ((i / (de * dp), i / dp % de, i % dp), n))
    }
}

fn tally_range(g: &RibbonGraph, masks: std::ops::Range<u64>) -> Tally {
    let mut tracer = Tracer::new(g);
    let mut tally = Tally::new(g);
    for mask in masks {
        let (k, p) = tracer.count(g, |e| mask >> e & 1 == 1);
        let i = tally.index(k, mask.count_ones() as usize, p);
        tally.counts[i] += 1;
    }
    tally
}

#[cfg(feature = "parallel")]
fn merge(mut a: Tally, b: Tally) -> Tally {
    for (x, y) in a.counts.iter_mut().zip(&b.counts) {
        *x += y;
    }
    a
}

#[cfg(feature = "parallel")]
fn tally_all(g: &RibbonGraph, total: u64) -> Tally {
    use rayon::prelude::*;
    const BLOCK: u64 = 1 << 12;
    if total <= BLOCK {
        return tally_range(g, 0..total);
    }
    let blocks = total.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|b| tally_range(g, b * BLOCK..((b + 1) * BLOCK).min(total)))
        .reduce(|| Tally::new(g), merge)
}

#[cfg(not(feature = "parallel"))]
fn tally_all(g: &RibbonGraph, total: u64) -> Tally {
    tally_range(g, 0..total)
}

impl StateCensus {
    /// Counts all `2^e` states. Panics for 64 or more edges.
    pub fn of(g: &RibbonGraph) -> StateCensus {
        let e = g.num_edges();
        assert!(e < 64, "state sums over {e} edges are out of reach");
        let counts = tally_all(g, 1u64 << e).entries().collect();
        StateCensus {
            graph: g.metrics(),
            counts,
        }
    }

    /// Metrics of the whole graph.
    pub fn graph(&self) -> Metrics {
        self.graph
    }

    /// `(metrics of H, number of states with those metrics)`, in increasing
    /// `(k, e, p)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Metrics, u64)> + '_ {
        let v = self.graph.v;
        self.counts
            .iter()
            .map(move |(&(k, e, p), &n)| (Metrics::from_counts(v, k, e, p), n))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}
