//! Exhaustive and random families of ribbon graphs for testing.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{DartId, RibbonGraph};

/// A rotation on darts `0..2e`; the pairing is always `d <-> d ^ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RawMap {
    sigma: Vec<u8>,
}

/// Largest edge count the packed canonical codes support.
const MAX_DARTS: usize = 32;

fn orbit_lengths(perm: &[u8; MAX_DARTS], n: usize) -> [u8; MAX_DARTS] {
    let mut len = [0u8; MAX_DARTS];
    for start in 0..n {
        if len[start] != 0 {
            continue;
        }
        let mut count = 1u8;
        let mut d = perm[start] as usize;
        while d != start {
            count += 1;
            d = perm[d] as usize;
        }
        len[start] = count;
        let mut d = perm[start] as usize;
        while d != start {
            len[d] = count;
            d = perm[d] as usize;
        }
    }
    len
}

/// Canonical code of one orientation of a map with pairing `d <-> d ^ 1`.
///
/// Same scheme as `iso::canonical_code`, but only darts minimising an
/// isomorphism-invariant key (degrees at both ends, face length) are tried
/// as roots, and the key is written in front of the code.
fn rooted_code(sigma: &[u8; MAX_DARTS], n: usize, out: &mut Vec<u8>) {
    const UNSET: u8 = u8::MAX;
    let degree = orbit_lengths(sigma, n);
    let mut face_perm = [0u8; MAX_DARTS];
    for d in 0..n {
        face_perm[d] = sigma[d ^ 1];
    }
    let face = orbit_lengths(&face_perm, n);
    let key = |d: usize| (degree[d], degree[d ^ 1], face[d]);
    let best_key = (0..n).map(key).min().expect("non-empty map");

    let mut best = [0u8; 2 * MAX_DARTS];
    let mut have_best = false;
    let mut label = [UNSET; MAX_DARTS];
    let mut order = [0u8; MAX_DARTS];
    let mut code = [0u8; 2 * MAX_DARTS];
    for root in (0..n).filter(|&d| key(d) == best_key) {
        label[..n].fill(UNSET);
        label[root] = 0;
        order[0] = root as u8;
        let mut labelled = 1usize;
        let mut len = 0usize;
        let mut smaller = !have_best;
        let mut aborted = false;
        let mut i = 0;
        while i < labelled && !aborted {
            let d = order[i] as usize;
            for img in [sigma[d] as usize, d ^ 1] {
                if label[img] == UNSET {
                    label[img] = labelled as u8;
                    order[labelled] = img as u8;
                    labelled += 1;
                }
                let c = label[img];
                if !smaller {
                    if c > best[len] {
                        aborted = true;
                        break;
                    }
                    smaller = c < best[len];
                }
                code[len] = c;
                len += 1;
            }
            i += 1;
        }
        if !aborted && smaller {
            best[..len].copy_from_slice(&code[..len]);
            have_best = true;
        }
    }
    out.clear();
    out.extend_from_slice(&[best_key.0, best_key.1, best_key.2]);
    out.extend_from_slice(&best[..2 * n]);
}

impl RawMap {
    fn code(&self) -> Vec<u8> {
        let n = self.sigma.len();
        let mut sigma = [0u8; MAX_DARTS];
        let mut inv = [0u8; MAX_DARTS];
        for (i, &s) in self.sigma.iter().enumerate() {
            sigma[i] = s;
            inv[s as usize] = i as u8;
        }
        let mut a = Vec::with_capacity(2 * n + 3);
        let mut b = Vec::with_capacity(2 * n + 3);
        rooted_code(&sigma, n, &mut a);
        rooted_code(&inv, n, &mut b);
        a.min(b)
    }

    fn to_graph(&self, name: String) -> RibbonGraph {
        let n = self.sigma.len();
        if n == 0 {
            return RibbonGraph::from_cycles(&[], &[], 1)
                .unwrap()
                .with_name(name);
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cyc.push(d);
                d = self.sigma[d] as usize;
            }
            cycles.push(cyc);
        }
        let pairs: Vec<(DartId, DartId)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        RibbonGraph::from_cycles(&cycles, &pairs, 0)
            .expect("generated map is valid")
            .with_name(name)
    }

    /// Every map obtained by adding one edge: both ends in existing corners
    /// (which includes loops), or one end in a corner and the other at a new
    /// vertex.
    fn children(&self) -> Vec<RawMap> {
        let n = self.sigma.len();
        let (a, b) = (n as u8, n as u8 + 1);
        if n == 0 {
            return vec![RawMap { sigma: vec![1, 0] }, RawMap { sigma: vec![0, 1] }];
        }
        let mut out = Vec::with_capacity(n * (n + 2));
        for c in 0..n {
            let mut with_a = self.sigma.clone();
            with_a.push(with_a[c]);
            with_a[c] = a;
            for c2 in 0..=n {
                let mut s = with_a.clone();
                s.push(s[c2]);
                s[c2] = b;
                out.push(RawMap { sigma: s });
            }
            let mut s = with_a;
            s.push(b);
            out.push(RawMap { sigma: s });
        }
        out
    }
}

/// All connected ribbon graphs with a bounded number of edges, one per
/// isomorphism class (orientation reversal included).
///
/// Level `e` is produced from level `e - 1` by adding an edge in every
/// possible way; removing a non-bridge edge, or a leaf edge of a tree, keeps
/// a graph connected, so nothing is missed.
#[derive(Debug, Clone)]
pub struct GraphFamily {
    levels: Vec<Vec<RawMap>>,
}

const CHUNK: usize = 512;

impl GraphFamily {
    pub fn up_to(max_edges: usize) -> GraphFamily {
        assert!(
            2 * max_edges <= MAX_DARTS,
            "edge count too large for the exhaustive family"
        );
        let mut levels = vec![vec![RawMap { sigma: Vec::new() }]];
        for _ in 0..max_edges {
            let prev = levels.last().unwrap();
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            let mut next = Vec::new();
            for chunk in prev.chunks(CHUNK) {
                for batch in expand(chunk) {
                    for (code, map) in batch {
                        if seen.insert(code) {
                            next.push(map);
                        }
                    }
                }
            }
            levels.push(next);
        }
        GraphFamily { levels }
    }

    pub fn max_edges(&self) -> usize {
        self.levels.len() - 1
    }

    /// Number of classes with exactly `e` edges.
    pub fn count(&self, e: usize) -> usize {
        self.levels[e].len()
    }

    pub fn graph(&self, e: usize, index: usize) -> RibbonGraph {
        self.levels[e][index].to_graph(format!("c{e}_{index}"))
    }

    pub fn graphs(&self, e: usize) -> impl Iterator<Item = RibbonGraph> + '_ {
        (0..self.count(e)).map(move |i| self.graph(e, i))
    }

    /// Every graph with at most `max_e` edges, smallest first.
    pub fn graphs_up_to(&self, max_e: usize) -> impl Iterator<Item = RibbonGraph> + '_ {
        (0..=max_e.min(self.max_edges())).flat_map(move |e| self.graphs(e))
    }
}

fn dedup_children(parent: &RawMap) -> Vec<(Vec<u8>, RawMap)> {
    let mut local = HashSet::new();
    parent
        .children()
        .into_iter()
        .filter_map(|c| {
            let code = c.code();
            local.insert(code.clone()).then_some((code, c))
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn expand(chunk: &[RawMap]) -> Vec<Vec<(Vec<u8>, RawMap)>> {
    use rayon::prelude::*;
    chunk.par_iter().map(dedup_children).collect()
}

#[cfg(not(feature = "parallel"))]
fn expand(chunk: &[RawMap]) -> Vec<Vec<(Vec<u8>, RawMap)>> {
    chunk.iter().map(dedup_children).collect()
}

/// Connected ribbon graphs with exactly `e` edges, one per isomorphism class.
pub fn connected_graphs(e: usize) -> Vec<RibbonGraph> {
    GraphFamily::up_to(e).graphs(e).collect()
}

/// A uniformly random rotation on `2e` darts with the standard pairing, plus
/// `isolated` isolated vertices. The result need not be connected.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, e: usize, isolated: usize) -> RibbonGraph {
    let n = 2 * e;
    let mut perm: Vec<DartId> = (0..n).collect();
    perm.shuffle(rng);
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = perm[d];
        }
        cycles.push(cyc);
    }
    let pairs: Vec<(DartId, DartId)> = (0..e).map(|i| (2 * i, 2 * i + 1)).collect();
    RibbonGraph::from_cycles(&cycles, &pairs, isolated).expect("random map is valid")
}

#[cfg(test)]
mod tests {
    use super::super::isomorphic;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_levels() {
        let fam = GraphFamily::up_to(3);
        assert_eq!(fam.count(0), 1);
        // bridge, planar loop
        assert_eq!(fam.count(1), 2);
        for e in 0..=3 {
            for g in fam.graphs(e) {
                assert!(g.is_connected());
                assert_eq!(g.num_edges(), e);
            }
        }
    }

    #[test]
    fn two_edge_classes_by_hand() {
        // path, loop at end of a bridge, two loops side by side, two
        // interleaved loops (torus), digon
        let fam = GraphFamily::up_to(2);
        assert_eq!(fam.count(2), 5);
        let graphs: Vec<_> = fam.graphs(2).collect();
        for i in 0..graphs.len() {
            for j in 0..graphs.len() {
                assert_eq!(isomorphic(&graphs[i], &graphs[j]), i == j);
            }
        }
        assert_eq!(graphs.iter().filter(|g| g.genus() == 1).count(), 1);
    }

    #[test]
    fn random_graphs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for e in 0..8 {
            let g = random_graph(&mut rng, e, 1);
            assert_eq!(g.num_edges(), e);
            assert_eq!(g.isolated_count(), 1);
            let _ = g.metrics();
        }
    }
}
