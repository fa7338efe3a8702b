use num::BigRational;

use super::census::StateCensus;
use super::{var, vars, InvariantError};
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::ribbon::{RibbonGraph, Tracer};

fn count(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Bollobás–Riordan polynomial `Σ_H α^(r(F)-r(H)) β^(n(H)) γ^(k(H)-p(H)+n(H))`.
pub fn bollobas_riordan(g: &RibbonGraph) -> LaurentPoly {
    census_br(&StateCensus::of(g))
}

pub(crate) fn census_br(census: &StateCensus) -> LaurentPoly {
    let f = census.graph();
    let mut out = LaurentPoly::zero();
    for (h, n) in census.iter() {
        let m = Monomial::from_ints([
            (vars::ALPHA, (h.k - f.k) as i64),
            (vars::BETA, h.n as i64),
            (vars::GAMMA, (h.k + h.n - h.p) as i64),
        ]);
        out.add_term(m, count(n));
    }
    out
}

/// The same polynomial as [`bollobas_riordan`], summed as
/// `α^-k(F) (βγ)^-v(F) Σ_H (αβγ²)^k(H) (βγ)^e(H) γ^-p(H)`.
pub fn bollobas_riordan_rearranged(g: &RibbonGraph) -> LaurentPoly {
    let census = StateCensus::of(g);
    let f = census.graph();
    let (kf, v) = (f.k as i64, f.v as i64);
    let mut out = LaurentPoly::zero();
    for (h, n) in census.iter() {
        let (k, e, p) = (h.k as i64, h.e as i64, h.p as i64);
        let m = Monomial::from_ints([
            (vars::ALPHA, k - kf),
            (vars::BETA, k + e - v),
            (vars::GAMMA, 2 * k + e - p - v),
        ]);
        out.add_term(m, count(n));
    }
    out
}

/// Weighted B-polynomial `Σ_H a^k(H) (Π_{e∈H} b_e) c^p(H)` over the edge
/// weight symbols. Several edges may share a symbol.
pub fn weighted_b(g: &RibbonGraph) -> Result<LaurentPoly, InvariantError> {
    let mut symbols = Vec::with_capacity(g.num_edges());
    for edge in g.edges() {
        let w = edge
            .weight
            .as_deref()
            .ok_or_else(|| InvariantError::MissingWeight(edge.name.clone()))?;
        if w == vars::B_A || w == vars::B_C {
            return Err(InvariantError::ReservedWeight(w.to_string()));
        }
        symbols.push(Var::new(w));
    }
    let e = g.num_edges();
    assert!(e < 64, "state sums over {e} edges are out of reach");
    let (a, c) = (var(vars::B_A), var(vars::B_C));
    let mut tracer = Tracer::new(g);
    let mut out = LaurentPoly::zero();
    for mask in 0..1u64 << e {
        let (k, p) = tracer.count(g, |i| mask >> i & 1 == 1);
        let weights = symbols
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, s)| (s.clone(), 2));
        let m = Monomial::from_doubled(
            [(a.clone(), 2 * k as i64), (c.clone(), 2 * p as i64)]
                .into_iter()
                .chain(weights),
        );
        out.add_term(m, count(1));
    }
    Ok(out)
}

/// Tutte polynomial `R(F; x_T - 1, y_T - 1, 1)`.
pub fn tutte(g: &RibbonGraph) -> LaurentPoly {
    let r = bollobas_riordan(g);
    let shift = |name: &str| LaurentPoly::var(name) - LaurentPoly::int(1);
    r.substitute(&var(vars::GAMMA), &LaurentPoly::one())
        .and_then(|p| p.substitute(&var(vars::ALPHA), &shift(vars::TUTTE_X)))
        .and_then(|p| p.substitute(&var(vars::BETA), &shift(vars::TUTTE_Y)))
        .expect("R has non-negative integer exponents")
}

/// Genus read off `R`: with `γ = (αβ)^(-1/2)` and `β = 1` a term
/// `α^i β^j γ^l` becomes `α^(i - l/2)`, and the lowest power of α is `-g(F)`.
pub fn genus_from_br(g: &RibbonGraph) -> Result<usize, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::DisconnectedGraph);
    }
    let (alpha, gamma) = (var(vars::ALPHA), var(vars::GAMMA));
    let low = bollobas_riordan(g)
        .terms()
        .map(|(m, _)| {
            let i = m
                .exponent(&alpha)
                .to_integer()
                .expect("integer power of alpha");
            let l = m
                .exponent(&gamma)
                .to_integer()
                .expect("integer power of gamma");
            assert!(l % 2 == 0, "odd power of gamma in {m}");
            i - l / 2
        })
        .min()
        .expect("R is nonzero");
    Ok((-low) as usize)
}
