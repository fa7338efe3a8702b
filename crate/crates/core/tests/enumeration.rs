//! The exhaustive family against brute force over every rotation on `2e`
//! darts with the pairing `(0 1)(2 3)...`.

use std::collections::BTreeSet;

use itertools::Itertools;
use ribbonpoly::ribbon::{GraphFamily, RibbonGraph};

/// Whether `σ` and the standard pairing generate a transitive group.
fn connected(sigma: &[usize]) -> bool {
    let n = sigma.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(d) = stack.pop() {
        for next in [sigma[d], d ^ 1] {
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// Least conjugate of `σ` or `σ⁻¹` by a relabelling that preserves the
/// pairing: edges permuted and each edge possibly flipped.
fn canonical(sigma: &[usize]) -> Vec<usize> {
    let e = sigma.len() / 2;
    let candidates = [sigma.to_vec(), inverse(sigma)];
    let mut best: Option<Vec<usize>> = None;
    for order in (0..e).permutations(e) {
        for flips in 0..1usize << e {
            let tau: Vec<usize> = (0..2 * e)
                .map(|d| 2 * order[d / 2] + ((d & 1) ^ (flips >> (d / 2) & 1)))
                .collect();
            let tau_inv = inverse(&tau);
            for s in &candidates {
                let conj: Vec<usize> = (0..2 * e).map(|d| tau[s[tau_inv[d]]]).collect();
                if best.as_ref().is_none_or(|b| conj < *b) {
                    best = Some(conj);
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Rotation of `g` with edge `i` carried by darts `2i` (tail) and `2i+1`.
fn rotation_of(g: &RibbonGraph) -> Vec<usize> {
    let mut label = vec![0; g.num_darts()];
    for (i, edge) in g.edges().iter().enumerate() {
        label[edge.darts[0]] = 2 * i;
        label[edge.darts[1]] = 2 * i + 1;
    }
    let mut sigma = vec![0; g.num_darts()];
    for d in 0..g.num_darts() {
        sigma[label[d]] = label[g.sigma(d)];
    }
    sigma
}

#[test]
fn family_matches_brute_force() {
    let family = GraphFamily::up_to(4);
    let mut classes = Vec::new();
    let mut rooted = Vec::new();
    for e in 0..=4usize {
        let mut labelled = 0u64;
        let mut seen = BTreeSet::new();
        for sigma in (0..2 * e).permutations(2 * e) {
            if connected(&sigma) {
                labelled += 1;
                seen.insert(canonical(&sigma));
            }
        }
        let centralizer = (1u64 << e) * (1..=e as u64).product::<u64>();
        rooted.push(if e == 0 {
            1
        } else {
            labelled * 2 * e as u64 / centralizer
        });
        classes.push(seen.len());

        let generated: Vec<Vec<usize>> = family
            .graphs(e)
            .map(|g| canonical(&rotation_of(&g)))
            .collect();
        let distinct: BTreeSet<_> = generated.iter().cloned().collect();
        assert_eq!(distinct.len(), generated.len(), "repeated class at e = {e}");
        assert_eq!(distinct, seen, "class sets differ at e = {e}");
    }
    assert_eq!(classes, vec![1, 2, 5, 20, 96]);
    assert_eq!(rooted, vec![1, 2, 10, 74, 706]);
}
