//! Exact evaluation on product grids and seeded choice of grid values.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigRational, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::laurent::{rat, rational_pow, LaurentPoly, Var};

/// Values of `p` at every point of `axes[0] × axes[1] × ...`, first axis
/// slowest. `p` must only involve the axis variables, with integer
/// exponents. Variables are eliminated one axis at a time, so the cost is
/// dominated by the last collapse rather than by `terms × points`.
pub(crate) fn eval_product(p: &LaurentPoly, axes: &[(Var, Vec<BigRational>)]) -> Vec<BigRational> {
    let terms: Vec<(Vec<i64>, BigRational)> = p
        .terms()
        .map(|(m, c)| {
            assert!(
                m.variables().all(|v| axes.iter().any(|(a, _)| a == v)),
                "{m} has a variable off the grid"
            );
            let exps = axes
                .iter()
                .map(|(v, _)| {
                    m.exponent(v)
                        .to_integer()
                        .expect("integer exponents on the grid")
                })
                .collect();
            (exps, c.clone())
        })
        .collect();
    let values: Vec<&[BigRational]> = axes.iter().map(|(_, vals)| vals.as_slice()).collect();
    collapse(&terms, &values)
}

fn collapse(terms: &[(Vec<i64>, BigRational)], axes: &[&[BigRational]]) -> Vec<BigRational> {
    let Some((last, rest)) = axes.split_last() else {
        return vec![terms.iter().map(|(_, c)| c.clone()).sum()];
    };
    let inner: usize = rest.iter().map(|a| a.len()).product();
    let mut out = vec![BigRational::zero(); inner * last.len()];
    for (wi, w) in last.iter().enumerate() {
        let mut powers: HashMap<i64, BigRational> = HashMap::new();
        let mut reduced: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (exps, c) in terms {
            let (&k, prefix) = exps.split_last().unwrap();
            let wk = powers.entry(k).or_insert_with(|| rational_pow(w, k));
            *reduced
                .entry(prefix.to_vec())
                .or_insert_with(BigRational::zero) += c * &*wk;
        }
        let reduced: Vec<_> = reduced.into_iter().collect();
        for (i, v) in collapse(&reduced, rest).into_iter().enumerate() {
            out[i * last.len() + wi] = v;
        }
    }
    out
}

/// Index of a flat product-grid position along each axis, first axis
/// slowest.
pub(crate) fn unflatten(mut index: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &n) in out.iter_mut().zip(sizes).rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// `count` distinct small rationals in random order, avoiding `forbidden`.
pub(crate) fn sample_rationals<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    forbidden: &[BigRational],
) -> Vec<BigRational> {
    let mut pool: Vec<BigRational> = (1..=6)
        .flat_map(|d| (-40..=40).map(move |n| rat(n, d)))
        .filter(|q| !forbidden.contains(q))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    assert!(
        count <= pool.len(),
        "grid of {count} points exceeds the value pool"
    );
    pool.shuffle(rng);
    pool.truncate(count);
    pool
}
