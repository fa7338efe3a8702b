//! Mechanical checks of the identities relating the invariants.
//!
//! Identities whose substitutions are Laurent monomials are compared as
//! polynomials. The rest are evaluated exactly on a rational grid with more
//! values per variable than the degree of the difference of the two sides in
//! that variable, so agreement on the grid proves the identity for the graph
//! at hand.

mod grid;

use std::fmt;

use num::{BigRational, One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::invariants::{
    bollobas_riordan, bollobas_riordan_rearranged, default_writhe, genus_from_br, homfly_formula,
    homfly_full, homfly_resolution, jones_cp, jones_from_homfly, jones_from_homfly_specialization,
    jones_via_bracket, mirror, vars, InvariantError,
};
use crate::laurent::{
    format_rational, rational_pow, rational_sqrt, LaurentPoly, Monomial, RationalPoint, Var,
};
use crate::ribbon::{RibbonError, RibbonGraph};
use grid::{eval_product, sample_rationals, unflatten};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("the ribbon graph is not connected")]
    DisconnectedGraph,
    #[error("inadmissible point {0}")]
    BadPoint(String),
    #[error("{edges} edges subdivided {factor} times exceeds the state-sum budget")]
    TooLarge { edges: usize, factor: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

impl From<RibbonError> for IdentityError {
    fn from(e: RibbonError) -> Self {
        match e {
            RibbonError::DisconnectedGraph => IdentityError::DisconnectedGraph,
            other => unreachable!("identity checks only build valid graphs: {other}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Multipoint,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Multipoint => "multipoint",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// `witness` is the first differing monomial (symbolic) or point
    /// (multipoint); `lhs` and `rhs` are the two sides there.
    Fail {
        witness: String,
        lhs: String,
        rhs: String,
    },
}

/// Result of checking one identity on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub graph: String,
    pub mode: Mode,
    /// Grid points evaluated; zero in symbolic mode.
    pub points: usize,
    pub outcome: Outcome,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn no_spaces(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

impl fmt::Display for VerificationReport {
    /// `identity=.. graph=.. mode=.. points=.. result=pass|fail`, followed by
    /// `witness=.. lhs=.. rhs=..` on failure.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "identity={} graph={} mode={} points={} result=",
            self.identity, self.graph, self.mode, self.points
        )?;
        match &self.outcome {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail { witness, lhs, rhs } => write!(
                f,
                "fail witness={} lhs={} rhs={}",
                no_spaces(witness),
                no_spaces(lhs),
                no_spaces(rhs)
            ),
        }
    }
}

fn report(
    identity: &str,
    g: &RibbonGraph,
    mode: Mode,
    points: usize,
    outcome: Outcome,
) -> VerificationReport {
    VerificationReport {
        identity: identity.to_string(),
        graph: g.name().to_string(),
        mode,
        points,
        outcome,
    }
}

fn symbolic(
    identity: &str,
    g: &RibbonGraph,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
) -> VerificationReport {
    let outcome = match lhs.first_difference(rhs) {
        None => Outcome::Pass,
        Some(m) => Outcome::Fail {
            witness: if m.is_one() {
                "1".into()
            } else {
                m.to_string()
            },
            lhs: format_rational(&lhs.coefficient(&m)),
            rhs: format_rational(&rhs.coefficient(&m)),
        },
    };
    report(identity, g, Mode::Symbolic, 0, outcome)
}

fn multipoint(
    identity: &str,
    g: &RibbonGraph,
    lhs: &[BigRational],
    rhs: &[BigRational],
    witness: impl Fn(usize) -> String,
) -> VerificationReport {
    let outcome = match (0..lhs.len()).find(|&i| lhs[i] != rhs[i]) {
        None => Outcome::Pass,
        Some(i) => Outcome::Fail {
            witness: witness(i),
            lhs: format_rational(&lhs[i]),
            rhs: format_rational(&rhs[i]),
        },
    };
    report(identity, g, Mode::Multipoint, lhs.len(), outcome)
}

fn alpha() -> Var {
    Var::new(vars::ALPHA)
}

fn beta() -> Var {
    Var::new(vars::BETA)
}

fn gamma() -> Var {
    Var::new(vars::GAMMA)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `R` with `γ = (αβ)^(-1/2)`; all exponents stay integral because `γ`
/// occurs to even powers only.
fn untie_gamma(r: &LaurentPoly) -> LaurentPoly {
    let m = Monomial::from_doubled([(alpha(), -1), (beta(), -1)]);
    r.substitute_monomial(&gamma(), &int(1), &m)
        .expect("gamma occurs to even powers")
}

/// `(i, j, l)`: exponents of α, β, γ in a term of `R`.
fn br_exponents(m: &Monomial) -> (i64, i64, i64) {
    let e = |v: &Var| m.exponent(v).to_integer().expect("integer exponents in R");
    (e(&alpha()), e(&beta()), e(&gamma()))
}

/// The two ways of summing the Bollobás–Riordan polynomial agree.
pub fn check_rearranged_br(g: &RibbonGraph) -> VerificationReport {
    symbolic(
        "br-rearranged",
        g,
        &bollobas_riordan(g),
        &bollobas_riordan_rearranged(g),
    )
}

/// The HOMFLY closed formula agrees with the resolution state sum.
pub fn check_homfly_formula(g: &RibbonGraph) -> VerificationReport {
    symbolic(
        "homfly-formula",
        g,
        &homfly_formula(g),
        &homfly_resolution(g),
    )
}

/// `R(F; α, β, 1/√(αβ)) = (β/α)^g(F) R(F*; β, α, 1/√(αβ))`.
pub fn check_duality(g: &RibbonGraph) -> Result<VerificationReport, IdentityError> {
    if !g.is_connected() {
        return Err(IdentityError::DisconnectedGraph);
    }
    let dual = g.dual()?;
    let lhs = untie_gamma(&bollobas_riordan(g));
    let genus = g.genus() as i64;
    let shift = Monomial::from_ints([(vars::BETA, genus), (vars::ALPHA, -genus)]);
    let rhs = untie_gamma(&bollobas_riordan(&dual))
        .swap_vars(&alpha(), &beta())
        .mul_monomial(&int(1), &shift);
    Ok(symbolic("duality", g, &lhs, &rhs))
}

/// Which square root of α the HOMFLY variable `x` is taken to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// `x = √(α+1)`, the consistent choice.
    PlusOne,
    /// `x = √(α-1)`; kept as a negative control.
    MinusOne,
}

/// Seeded admissible `(x, y)` points for [`check_determination`].
pub fn determination_points(count: usize, seed: u64) -> Vec<(BigRational, BigRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = sample_rationals(&mut rng, count, &[int(0), int(1), int(-1)]);
    let ys = sample_rationals(&mut rng, count, &[int(0)]);
    xs.into_iter().zip(ys).collect()
}

/// `R(F; α, β, 1/√(αβ)) = (√α/√β)^(v-e-1) (α+1)^e α^(1-k) P(x, y)` at
/// `α = x² ∓ 1`, `β = (x - x⁻¹)/(xy²)`.
///
/// With the `+1` reading `α/β = (xy)²` and `√α/√β` is taken to be `xy`. With
/// the `-1` reading the root is rational only by accident; when it is
/// irrational and needed to an odd power, the right side is irrational while
/// the left is rational, so the point is reported as a failure.
pub fn check_determination(
    g: &RibbonGraph,
    points: &[(BigRational, BigRational)],
    reading: Reading,
) -> Result<VerificationReport, IdentityError> {
    let m = g.metrics();
    let lhs_poly = untie_gamma(&bollobas_riordan(g));
    let p = homfly_formula(g);
    let power = m.v as i64 - m.e as i64 - 1;
    let mut lhs_vals = Vec::with_capacity(points.len());
    let mut rhs_vals = Vec::with_capacity(points.len());
    for (x, y) in points {
        let name = format!("x={},y={}", format_rational(x), format_rational(y));
        if x.is_zero() || x.abs().is_one() || y.is_zero() {
            return Err(IdentityError::BadPoint(name));
        }
        let x2 = x * x;
        let a = match reading {
            Reading::PlusOne => &x2 - int(1),
            Reading::MinusOne => &x2 + int(1),
        };
        if a.is_zero() || a.abs().is_one() {
            return Err(IdentityError::BadPoint(name));
        }
        let b = (&x2 - int(1)) / (&x2 * y * y);
        let at = RationalPoint::new()
            .with_value(vars::ALPHA, a.clone())
            .with_value(vars::BETA, b.clone());
        let lhs = lhs_poly.evaluate(&at).expect("alpha and beta assigned");
        let hp = p
            .evaluate(
                &RationalPoint::new()
                    .with_value(vars::X, x.clone())
                    .with_value(vars::Y, y.clone()),
            )
            .expect("x and y assigned");
        let base = rational_pow(&(&a + int(1)), m.e as i64) * rational_pow(&a, 1 - m.k as i64) * hp;
        let ratio_sq = &a / &b;
        let root = match reading {
            Reading::PlusOne => Some(x * y),
            Reading::MinusOne => rational_sqrt(&ratio_sq),
        };
        let rhs = if power % 2 == 0 {
            rational_pow(&ratio_sq, power / 2) * &base
        } else if let Some(r) = root {
            rational_pow(&r, power) * &base
        } else if base.is_zero() {
            BigRational::zero()
        } else {
            let rhs = format!(
                "sqrt({})^{power}*{}",
                format_rational(&ratio_sq),
                format_rational(&base)
            );
            return Ok(report(
                "determination",
                g,
                Mode::Multipoint,
                lhs_vals.len() + 1,
                Outcome::Fail {
                    witness: name,
                    lhs: format_rational(&lhs),
                    rhs,
                },
            ));
        };
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }
    Ok(multipoint("determination", g, &lhs_vals, &rhs_vals, |i| {
        format!(
            "x={},y={}",
            format_rational(&points[i].0),
            format_rational(&points[i].1)
        )
    }))
}

fn max_exp(p: &LaurentPoly, v: &Var) -> i64 {
    p.max_degree(v)
        .map_or(0, |h| h.to_integer().expect("integer exponent"))
}

/// `R(F ⊗ C_3; α, β, γ) = (α+2)^n(F) R(F; α(α+2), β/(α+2), γ)` on a full
/// three-variable grid.
///
/// The right side is a polynomial: a term `α^i β^j γ^l` of `R(F)` has
/// `j ≤ n(F)`, so it contributes `(α+2)^(n-j+i) α^i β^j γ^l`. Grid sizes
/// exceed the degree of either side in each variable.
pub fn check_tensor_c3(g: &RibbonGraph, seed: u64) -> VerificationReport {
    let sub = g.tensor_cycle(3).expect("cycle length 3");
    let lhs_poly = bollobas_riordan(&sub);
    let r = bollobas_riordan(g);
    let n = g.metrics().n as i64;
    let (mut da, mut db, mut dg) = (
        max_exp(&lhs_poly, &alpha()),
        max_exp(&lhs_poly, &beta()),
        max_exp(&lhs_poly, &gamma()),
    );
    for (m, _) in r.terms() {
        let (i, j, l) = br_exponents(m);
        da = da.max(n - j + 2 * i);
        db = db.max(j);
        dg = dg.max(l);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a_vals = sample_rationals(&mut rng, da as usize + 1, &[int(-2), int(0), int(1)]);
    let b_vals = sample_rationals(&mut rng, db as usize + 1, &[int(0)]);
    let g_vals = sample_rationals(&mut rng, dg as usize + 1, &[int(0)]);
    let axes = vec![
        (alpha(), a_vals.clone()),
        (beta(), b_vals.clone()),
        (gamma(), g_vals.clone()),
    ];
    let lhs = eval_product(&lhs_poly, &axes);
    let mut rhs = Vec::with_capacity(lhs.len());
    for a in &a_vals {
        let a2 = a + int(2);
        let scale = rational_pow(&a2, n);
        let shifted = vec![
            (alpha(), vec![a * &a2]),
            (beta(), b_vals.iter().map(|b| b / &a2).collect()),
            (gamma(), g_vals.clone()),
        ];
        rhs.extend(eval_product(&r, &shifted).into_iter().map(|v| v * &scale));
    }
    let sizes = [a_vals.len(), b_vals.len(), g_vals.len()];
    multipoint("tensor-c3", g, &lhs, &rhs, |i| {
        let ix = unflatten(i, &sizes);
        format!(
            "alpha={},beta={},gamma={}",
            format_rational(&a_vals[ix[0]]),
            format_rational(&b_vals[ix[1]]),
            format_rational(&g_vals[ix[2]])
        )
    })
}

/// Upper limit of the geometric sum `Σ (α+1)^i` in the odd-cycle identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperLimit {
    /// `i < 2^p`: the sum whose product with `α` is `(α+1)^(2^p) - 1`.
    Exclusive,
    /// `i ≤ 2^p`; kept as a negative control.
    Inclusive,
}

/// Largest `e(F) · 2^p` accepted by [`check_tensor_odd`].
pub const TENSOR_ODD_BUDGET: usize = 14;

/// `R(F ⊗ C_(2^p+1); α, β, γ) = S^n(F) R(F; (α+1)^(2^p) - 1, β/S, γ)` with
/// `S = Σ_{i<2^p} (α+1)^i`, on the surface `β = α(1-α)`, `γ² = 1/(αβ)`.
///
/// Both sides are Laurent polynomials in α there, so agreement at more
/// points than their exponent span proves the identity.
pub fn check_tensor_odd(
    g: &RibbonGraph,
    p: u32,
    seed: u64,
    limit: UpperLimit,
) -> Result<VerificationReport, IdentityError> {
    let factor = 1usize << p;
    if g.num_edges() * factor > TENSOR_ODD_BUDGET {
        return Err(IdentityError::TooLarge {
            edges: g.num_edges(),
            factor,
        });
    }
    let sub = g
        .tensor_cycle(factor as u32 + 1)
        .expect("cycle length at least 3");
    let lhs_poly = untie_gamma(&bollobas_riordan(&sub));
    let r = bollobas_riordan(g);
    let n = g.metrics().n as i64;
    let top = match limit {
        UpperLimit::Exclusive => factor - 1,
        UpperLimit::Inclusive => factor,
    };
    let f = factor as i64;

    // exponent span of each side as a Laurent polynomial in α
    let (mut lo, mut hi) = (i64::MAX, i64::MIN);
    for (m, _) in lhs_poly.terms() {
        let (i, j, _) = br_exponents(m);
        lo = lo.min(i + j);
        hi = hi.max(i + 2 * j);
    }
    for (m, _) in r.terms() {
        let (i, j, l) = br_exponents(m);
        let gg = l / 2;
        lo = lo.min(i + j - 2 * gg);
        hi = hi.max(f * i + (j - 2 * gg) + (j - gg) + top as i64 * (n - j));
    }
    let count = (hi - lo + 1) as usize;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a_vals = sample_rationals(&mut rng, count, &[int(-2), int(0), int(1)]);
    let mut lhs = Vec::with_capacity(count);
    let mut rhs = Vec::with_capacity(count);
    for a in &a_vals {
        let b = a * (int(1) - a);
        let at = RationalPoint::new()
            .with_value(vars::ALPHA, a.clone())
            .with_value(vars::BETA, b.clone());
        lhs.push(lhs_poly.evaluate(&at).expect("alpha and beta assigned"));

        let a1 = a + int(1);
        let s: BigRational = (0..=top as i64).map(|i| rational_pow(&a1, i)).sum();
        let new_a = rational_pow(&a1, f) - int(1);
        let new_b = &b / &s;
        let gamma_sq = int(1) / (a * &b);
        let mut total = BigRational::zero();
        for (m, c) in r.terms() {
            let (i, j, l) = br_exponents(m);
            total += c
                * rational_pow(&new_a, i)
                * rational_pow(&new_b, j)
                * rational_pow(&gamma_sq, l / 2);
        }
        rhs.push(total * rational_pow(&s, n));
    }
    let identity = format!("tensor-odd-p{p}");
    Ok(multipoint(&identity, g, &lhs, &rhs, |i| {
        format!("alpha={}", format_rational(&a_vals[i]))
    }))
}

/// `J(L(F ⊗ C_3); t⁻¹) = J(𝓛(F); t)` with writhe `-e(F ⊗ C_3)` on the left.
pub fn check_jones_mirror(g: &RibbonGraph) -> Result<VerificationReport, IdentityError> {
    let sub = g.tensor_cycle(3).expect("cycle length 3");
    let lhs = mirror(&jones_cp(&sub, default_writhe(&sub))?);
    Ok(symbolic("jones-mirror", g, &lhs, &jones_from_homfly(g)))
}

/// The two computations of the HOMFLY specialization to Jones agree.
pub fn check_jones_paths(g: &RibbonGraph) -> VerificationReport {
    symbolic(
        "jones-paths",
        g,
        &jones_from_homfly(g),
        &jones_from_homfly_specialization(g),
    )
}

/// The Kauffman bracket route to Jones agrees with the state-sum formula.
pub fn check_bracket_vs_cp(
    g: &RibbonGraph,
    writhe: i64,
) -> Result<VerificationReport, IdentityError> {
    let lhs = jones_via_bracket(g, writhe)?;
    let rhs = jones_cp(g, writhe)?;
    Ok(symbolic("bracket-vs-cp", g, &lhs, &rhs))
}

/// The genus read off `R` is the genus of the surface.
pub fn check_genus(g: &RibbonGraph) -> Result<VerificationReport, IdentityError> {
    let from_br = genus_from_br(g)?;
    let lhs = LaurentPoly::int(from_br as i64);
    let rhs = LaurentPoly::int(g.genus() as i64);
    Ok(symbolic("genus", g, &lhs, &rhs))
}

/// Sending every boundary label of the labelled HOMFLY polynomial to 1
/// gives the resolution sum.
pub fn check_labels(g: &RibbonGraph) -> Result<VerificationReport, IdentityError> {
    let full = homfly_full(&g.with_fresh_weights())?;
    Ok(symbolic(
        "labels",
        g,
        &full.forget_labels(),
        &homfly_resolution(g),
    ))
}

/// Number of points used by `verify all` for the determination check.
pub const DETERMINATION_POINTS: usize = 25;

/// Every check whose preconditions hold for `g`, in a fixed order.
pub fn verify_all(g: &RibbonGraph, seed: u64) -> Vec<VerificationReport> {
    let mut out = vec![check_rearranged_br(g), check_homfly_formula(g)];
    out.extend(check_duality(g).ok());
    let pts = determination_points(DETERMINATION_POINTS, seed);
    out.extend(check_determination(g, &pts, Reading::PlusOne).ok());
    out.push(check_tensor_c3(g, seed));
    for p in 1..=2 {
        out.extend(check_tensor_odd(g, p, seed, UpperLimit::Exclusive).ok());
    }
    out.extend(check_jones_mirror(g).ok());
    out.push(check_jones_paths(g));
    out.extend(check_bracket_vs_cp(g, default_writhe(g)).ok());
    out.extend(check_genus(g).ok());
    out.extend(check_labels(g).ok());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;
    use crate::ribbon::samples::*;

    fn all_pass(reports: &[VerificationReport]) {
        for r in reports {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn symbolic_checks_on_samples() {
        for g in [bridge(), planar_loop(), torus_loops(), triangle()] {
            all_pass(&[
                check_rearranged_br(&g),
                check_homfly_formula(&g),
                check_duality(&g).unwrap(),
                check_jones_mirror(&g).unwrap(),
                check_jones_paths(&g),
                check_bracket_vs_cp(&g, default_writhe(&g)).unwrap(),
                check_genus(&g).unwrap(),
                check_labels(&g).unwrap(),
            ]);
        }
    }

    #[test]
    fn duality_hand_values() {
        // 1 + 2β + β/α
        let lhs = untie_gamma(&bollobas_riordan(&torus_loops()));
        assert_eq!(lhs.to_string(), "1*alpha^-1*beta + 1 + 2*beta");
    }

    #[test]
    fn determination_loop_point() {
        let g = planar_loop();
        let pt = [(rat(2, 1), rat(1, 1))];
        assert!(check_determination(&g, &pt, Reading::PlusOne)
            .unwrap()
            .passed());
        let bad = check_determination(&g, &pt, Reading::MinusOne).unwrap();
        assert!(!bad.passed());
        assert!(bad.to_string().contains("witness=x=2,y=1"), "{bad}");
        assert_eq!(
            check_determination(&g, &[(rat(1, 1), rat(2, 1))], Reading::PlusOne),
            Err(IdentityError::BadPoint("x=1,y=2".into()))
        );
    }

    #[test]
    fn determination_grid() {
        let pts = determination_points(25, 3);
        for g in [bridge(), planar_loop(), torus_loops()] {
            let r = check_determination(&g, &pts, Reading::PlusOne).unwrap();
            assert_eq!(r.points, 25);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn tensor_checks() {
        for g in [bridge(), planar_loop(), torus_loops()] {
            assert!(check_tensor_c3(&g, 5).passed());
            assert!(check_tensor_odd(&g, 1, 5, UpperLimit::Exclusive)
                .unwrap()
                .passed());
        }
        assert!(check_tensor_odd(&bridge(), 2, 5, UpperLimit::Exclusive)
            .unwrap()
            .passed());
        let literal = check_tensor_odd(&planar_loop(), 1, 5, UpperLimit::Inclusive).unwrap();
        assert!(!literal.passed());
        assert_eq!(
            check_tensor_odd(&torus_loops(), 3, 5, UpperLimit::Exclusive),
            Err(IdentityError::TooLarge {
                edges: 2,
                factor: 8
            })
        );
    }

    #[test]
    fn disconnected_duality_is_refused() {
        let two = RibbonGraph::from_rotation::<&str>(&[], &[], 2).unwrap();
        assert_eq!(check_duality(&two), Err(IdentityError::DisconnectedGraph));
    }

    #[test]
    fn report_format() {
        let r = check_rearranged_br(&planar_loop().with_name("loop"));
        assert_eq!(
            r.to_string(),
            "identity=br-rearranged graph=loop mode=symbolic points=0 result=pass"
        );
    }
}
