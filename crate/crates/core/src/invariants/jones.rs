use std::collections::BTreeMap;

use num::{BigRational, Zero};

use super::br::census_br;
use super::census::StateCensus;
use super::homfly::homfly_formula;
use super::specialize::{Factor, Specializer};
use super::{var, vars, InvariantError};
use crate::laurent::{LaurentPoly, Monomial};
use crate::ribbon::RibbonGraph;

/// `t^(d/2)`.
fn t_half(doubled: i64) -> Monomial {
    Monomial::from_doubled([(var(vars::T), doubled)])
}

fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
    terms
        .iter()
        .map(|&(c, d)| LaurentPoly::term(BigRational::from_integer(c.into()), t_half(d)))
        .sum()
}

/// `-t^(1/2) - t^(-1/2)`.
fn delta_t() -> LaurentPoly {
    t_poly(&[(-1, 1), (-1, -1)])
}

/// `t^(1/2) - t^(-1/2)`.
fn y_t() -> LaurentPoly {
    t_poly(&[(1, 1), (-1, -1)])
}

fn sign(w: i64) -> i64 {
    if w.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Writhe of the link of a subdivided graph `F ⊗ C_3` with the orientation
/// used for tensor products: `-e(F)`.
pub fn default_writhe(g: &RibbonGraph) -> i64 {
    -(g.num_edges() as i64)
}

/// Jones polynomial of the link of `F` with writhe `ω`:
/// `(-1)^ω t^((3ω-r+n)/4) δ^(k-1) R(F; -t-1, -t⁻¹-1, 1/δ)` with
/// `δ = -t^(1/2) - t^(-1/2)`.
pub fn jones_cp(g: &RibbonGraph, writhe: i64) -> Result<LaurentPoly, InvariantError> {
    if g.num_vertices() == 0 {
        return Ok(LaurentPoly::one());
    }
    let census = StateCensus::of(g);
    let f = census.graph();
    let quarter = 3 * writhe - f.r as i64 + f.n as i64;
    if quarter % 2 != 0 {
        return Err(InvariantError::GridViolation {
            writhe,
            numerator: quarter,
        });
    }
    // -t-1 = t^(1/2) δ and -t⁻¹-1 = t^(-1/2) δ
    let spec = Specializer {
        bases: vec![delta_t()],
        alpha: Factor::new(1, t_half(1), vec![1]),
        beta: Factor::new(1, t_half(-1), vec![1]),
        gamma_sq: Factor::new(1, Monomial::one(), vec![-2]),
    };
    let prefactor = Factor::new(sign(writhe), t_half(quarter / 2), vec![f.k as i64 - 1]);
    Ok(spec.apply(&census_br(&census), &prefactor))
}

/// Jones polynomial as the specialization of the HOMFLY closed formula at
/// `x = t⁻¹`, `y = t^(1/2) - t^(-1/2)`, computed from `R` directly:
/// `Y^(e-v+1) t^(e+v-1) (t⁻²-1)^(k-1) R(F; t⁻²-1, (1-t²)/Y², 1/δ)`.
pub fn jones_from_homfly(g: &RibbonGraph) -> LaurentPoly {
    if g.num_vertices() == 0 {
        return LaurentPoly::one();
    }
    let census = StateCensus::of(g);
    let f = census.graph();
    let (v, e, k) = (f.v as i64, f.e as i64, f.k as i64);
    // bases [Y, δ]: t⁻²-1 = t⁻¹Yδ and (1-t²)/Y² = tδ/Y
    let spec = Specializer {
        bases: vec![y_t(), delta_t()],
        alpha: Factor::new(1, t_half(-2), vec![1, 1]),
        beta: Factor::new(1, t_half(2), vec![-1, 1]),
        gamma_sq: Factor::new(1, Monomial::one(), vec![0, -2]),
    };
    let prefactor = Factor::new(
        1,
        t_half(2 * (e + v - 1 - (k - 1))),
        vec![e - v + 1 + (k - 1), k - 1],
    );
    spec.apply(&census_br(&census), &prefactor)
}

/// The same polynomial as [`jones_from_homfly`], by substituting into the
/// expanded HOMFLY polynomial. Negative powers of `y` are cleared first and
/// divided out exactly at the end.
pub fn jones_from_homfly_specialization(g: &RibbonGraph) -> LaurentPoly {
    let (x, y) = (var(vars::X), var(vars::Y));
    let one = BigRational::from_integer(1.into());
    let p = homfly_formula(g)
        .substitute_monomial(&x, &one, &t_half(-2))
        .expect("integer powers of x");
    let low = p
        .min_degree(&y)
        .expect("HOMFLY is nonzero")
        .to_integer()
        .expect("integer powers of y");
    let clear = (-low).max(0);
    let cleared = p.mul_monomial(&one, &Monomial::from_ints([(vars::Y, clear)]));
    let mut q = cleared
        .substitute(&y, &y_t())
        .expect("non-negative powers of y");
    for _ in 0..clear {
        q = divide_by_y(&q).expect("HOMFLY specialization is divisible by Y");
    }
    q
}

/// Exact quotient by `Y = t^(1/2) - t^(-1/2) = s⁻¹(s² - 1)` with `s = t^(1/2)`,
/// or `None` if there is a remainder.
fn divide_by_y(p: &LaurentPoly) -> Option<LaurentPoly> {
    let t = var(vars::T);
    let mut rest: BTreeMap<i64, BigRational> = BTreeMap::new();
    for (m, c) in p.terms() {
        assert!(m.variables().all(|v| *v == t), "polynomial in t only");
        rest.insert(m.exponent(&t).doubled(), c.clone());
    }
    let Some(&low) = rest.keys().next() else {
        return Some(LaurentPoly::zero());
    };
    let mut quotient = LaurentPoly::zero();
    // long division by s² - 1 from the top
    while let Some((&top, _)) = rest.last_key_value() {
        if top < low + 2 {
            break;
        }
        let c = rest.remove(&top).unwrap();
        quotient.add_term(t_half(top - 2 + 1), c.clone());
        let below = rest.entry(top - 2).or_insert_with(BigRational::zero);
        *below += c;
        if below.is_zero() {
            rest.remove(&(top - 2));
        }
    }
    rest.is_empty().then_some(quotient)
}

/// Kauffman bracket `Σ_H A^(2e(H)-e) d^(p(H)-1)` with `d = -A² - A⁻²`;
/// including an edge in the state is the A-smoothing of its crossing.
pub fn kauffman_bracket(g: &RibbonGraph) -> LaurentPoly {
    if g.num_vertices() == 0 {
        return LaurentPoly::one();
    }
    let a = |k: i64| Monomial::from_ints([(vars::A, k)]);
    let d = LaurentPoly::term(BigRational::from_integer((-1).into()), a(2))
        + LaurentPoly::term(BigRational::from_integer((-1).into()), a(-2));
    let census = StateCensus::of(g);
    let e = census.graph().e as i64;
    let mut out = LaurentPoly::zero();
    for (h, n) in census.iter() {
        let dp = d.pow(h.p as i64 - 1).expect("p(H) >= 1");
        out += dp.mul_monomial(&BigRational::from_integer(n.into()), &a(2 * h.e as i64 - e));
    }
    out
}

/// Jones polynomial from the bracket: `(-A)^(-3ω) ⟨F⟩` at `A = t^(-1/4)`.
pub fn jones_via_bracket(g: &RibbonGraph, writhe: i64) -> Result<LaurentPoly, InvariantError> {
    let a = var(vars::A);
    let mut out = LaurentPoly::zero();
    for (m, c) in kauffman_bracket(g).terms() {
        let k = m.exponent(&a).to_integer().expect("integer powers of A") - 3 * writhe;
        if k % 2 != 0 {
            return Err(InvariantError::GridViolation {
                writhe,
                numerator: -k,
            });
        }
        out.add_term(
            t_half(-k / 2),
            c * BigRational::from_integer(sign(writhe).into()),
        );
    }
    Ok(out)
}

/// `t ↦ t⁻¹`.
pub fn mirror(p: &LaurentPoly) -> LaurentPoly {
    p.substitute_monomial(
        &var(vars::T),
        &BigRational::from_integer(1.into()),
        &t_half(-2),
    )
    .expect("monomial substitution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::samples::*;

    #[test]
    fn unknot_values() {
        let f1 = bridge();
        assert_eq!(jones_cp(&f1, -1), Ok(LaurentPoly::one()));
        assert_eq!(jones_from_homfly(&f1), LaurentPoly::one());
        assert_eq!(jones_via_bracket(&f1, -1), Ok(LaurentPoly::one()));
        assert_eq!(kauffman_bracket(&f1).to_string(), "-1*A^-3");
        let path = f1.tensor_cycle(3).unwrap();
        assert_eq!(jones_from_homfly(&path), LaurentPoly::one());
        assert_eq!(jones_from_homfly_specialization(&path), LaurentPoly::one());
    }

    #[test]
    fn loop_from_homfly() {
        let f2 = planar_loop();
        let expect = t_poly(&[(-1, 1), (-1, 5)]);
        assert_eq!(jones_from_homfly(&f2), expect);
        assert_eq!(jones_from_homfly_specialization(&f2), expect);
    }

    #[test]
    fn paths_agree_on_samples() {
        for g in [torus_loops(), triangle()] {
            assert_eq!(jones_from_homfly(&g), jones_from_homfly_specialization(&g));
            let w = default_writhe(&g);
            assert_eq!(jones_cp(&g, w), jones_via_bracket(&g, w));
        }
    }

    #[test]
    fn mirror_of_subdivision() {
        for g in [bridge(), planar_loop(), torus_loops()] {
            let sub = g.tensor_cycle(3).unwrap();
            let cp = jones_cp(&sub, default_writhe(&sub)).unwrap();
            assert_eq!(mirror(&cp), jones_from_homfly(&g));
        }
    }

    #[test]
    fn disjoint_union_has_delta_factor() {
        let two = RibbonGraph::from_rotation::<&str>(&[], &[], 2).unwrap();
        assert_eq!(jones_cp(&two, 0), Ok(delta_t()));
    }

    #[test]
    fn odd_prefactor_is_rejected() {
        assert!(matches!(
            jones_cp(&bridge(), 0),
            Err(InvariantError::GridViolation { .. })
        ));
        assert!(jones_via_bracket(&bridge(), 0).is_err());
    }

    #[test]
    fn division_by_y() {
        let y = y_t();
        let p = &y * &t_poly(&[(3, -4), (1, 1)]);
        assert_eq!(divide_by_y(&p), Some(t_poly(&[(3, -4), (1, 1)])));
        assert_eq!(divide_by_y(&LaurentPoly::one()), None);
    }
}
