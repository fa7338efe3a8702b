use std::cmp::Ordering;

use super::{DartId, RibbonGraph};

/// Minimal breadth-first code of the component containing `roots`, over all
/// choices of root.
///
/// Starting from a root, darts are labelled in order of discovery through
/// `sigma` then `epsilon`; the code lists `(label(sigma d), label(epsilon d))`
/// for the darts in label order. Two rooted maps have equal codes iff they
/// are isomorphic by a root-preserving relabelling.
pub(crate) fn canonical_code(sigma: &[DartId], epsilon: &[DartId], roots: &[DartId]) -> Vec<u32> {
    const UNSET: u32 = u32::MAX;
    let n = sigma.len();
    let mut best: Vec<u32> = Vec::new();
    let mut label = vec![UNSET; n];
    let mut order: Vec<DartId> = Vec::with_capacity(n);
    let mut code: Vec<u32> = Vec::with_capacity(2 * roots.len());
    for &root in roots {
        for &d in &order {
            label[d] = UNSET;
        }
        order.clear();
        code.clear();
        label[root] = 0;
        order.push(root);
        // Equal while the prefix matches `best`, Less once strictly smaller.
        let mut state = if best.is_empty() {
            Ordering::Less
        } else {
            Ordering::Equal
        };
        let mut i = 0;
        let mut aborted = false;
        while i < order.len() {
            let d = order[i];
            for img in [sigma[d], epsilon[d]] {
                if label[img] == UNSET {
                    label[img] = order.len() as u32;
                    order.push(img);
                }
                let c = label[img];
                if state == Ordering::Equal {
                    match c.cmp(&best[code.len()]) {
                        Ordering::Greater => {
                            aborted = true;
                            break;
                        }
                        Ordering::Less => state = Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                code.push(c);
            }
            if aborted {
                break;
            }
            i += 1;
        }
        if !aborted && state == Ordering::Less {
            best.clone_from(&code);
        }
    }
    for &d in &order {
        label[d] = UNSET;
    }
    best
}

fn inverse(perm: &[DartId]) -> Vec<DartId> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Dart sets of the connected components of the map (isolated vertices
/// excluded).
fn components(sigma: &[DartId], epsilon: &[DartId]) -> Vec<Vec<DartId>> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let d = comp[i];
            for img in [sigma[d], epsilon[d]] {
                if !seen[img] {
                    seen[img] = true;
                    comp.push(img);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn component_codes(sigma: &[DartId], epsilon: &[DartId]) -> Vec<Vec<u32>> {
    let mut codes: Vec<Vec<u32>> = components(sigma, epsilon)
        .iter()
        .map(|c| canonical_code(sigma, epsilon, c))
        .collect();
    codes.sort();
    codes
}

/// Isomorphism of ribbon graphs: a bijection of darts commuting with the
/// pairing and with the rotation, or with the inverse rotation on every
/// component at once (a global orientation reversal). Weights, tangles and
/// names are ignored.
pub fn isomorphic(a: &RibbonGraph, b: &RibbonGraph) -> bool {
    if a.num_darts() != b.num_darts()
        || a.num_vertices() != b.num_vertices()
        || a.isolated_count() != b.isolated_count()
    {
        return false;
    }
    let codes_a = component_codes(&a.sigma, &a.epsilon);
    if codes_a == component_codes(&b.sigma, &b.epsilon) {
        return true;
    }
    codes_a == component_codes(&inverse(&b.sigma), &b.epsilon)
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;

    #[test]
    fn relabelled_loop() {
        let other = RibbonGraph::from_rotation(&[vec!["x", "y"]], &[("y", "x")], 0).unwrap();
        assert!(isomorphic(&planar_loop(), &other));
        assert!(!isomorphic(&planar_loop(), &bridge()));
    }

    #[test]
    fn mirror_images_are_identified() {
        // two triangles with a chord pattern that is chiral
        let g = RibbonGraph::from_rotation(
            &[vec!["a", "b", "c", "a'", "b'", "c'"]],
            &[("a", "b'"), ("b", "c'"), ("c", "a'")],
            0,
        )
        .unwrap();
        let mirror = RibbonGraph::from_rotation(
            &[vec!["c'", "b'", "a'", "c", "b", "a"]],
            &[("a", "b'"), ("b", "c'"), ("c", "a'")],
            0,
        )
        .unwrap();
        assert!(isomorphic(&g, &mirror));
    }

    #[test]
    fn planar_and_toroidal_differ() {
        let planar = RibbonGraph::from_rotation(
            &[vec!["a", "a'", "b", "b'"]],
            &[("a", "a'"), ("b", "b'")],
            0,
        )
        .unwrap();
        assert!(!isomorphic(&planar, &torus_loops()));
    }

    #[test]
    fn isolated_vertices_matter() {
        let with = RibbonGraph::from_rotation(&[vec!["a", "a'"]], &[("a", "a'")], 1).unwrap();
        assert!(!isomorphic(&with, &planar_loop()));
    }
}
