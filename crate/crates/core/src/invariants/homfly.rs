use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num::BigRational;

use super::br::census_br;
use super::census::StateCensus;
use super::labels::{boundary_label, CyclicWord};
use super::specialize::{Factor, Specializer};
use super::{vars, InvariantError};
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::ribbon::{RibbonGraph, TangleType};

fn xy(x: i64, y: i64) -> Monomial {
    Monomial::from_ints([(vars::X, x), (vars::Y, y)])
}

/// `x - x^-1`.
pub(crate) fn delta_x() -> LaurentPoly {
    LaurentPoly::var(vars::X) - LaurentPoly::monomial(xy(-1, 0))
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Cache of `(x - x^-1)^k`.
struct DeltaPowers(Vec<LaurentPoly>);

impl DeltaPowers {
    fn new() -> Self {
        DeltaPowers(vec![LaurentPoly::one()])
    }

    fn get(&mut self, k: usize) -> &LaurentPoly {
        while self.0.len() <= k {
            let next = self.0.last().unwrap() * &delta_x();
            self.0.push(next);
        }
        &self.0[k]
    }
}

/// HOMFLY polynomial of the link of `F` by the closed formula
/// `(xy)^(1-v) (y/x)^e (x²-1)^(k-1) R(F; x²-1, (x-x⁻¹)/(xy²), y/(x-x⁻¹))`.
///
/// With `D = x - x⁻¹` the three arguments are `xD`, `D x⁻¹y⁻²` and
/// `y D⁻¹`; `γ` only occurs squared, so every power of `D` that survives is
/// non-negative and the result is a Laurent polynomial.
pub fn homfly_formula(g: &RibbonGraph) -> LaurentPoly {
    if g.num_vertices() == 0 {
        return LaurentPoly::one();
    }
    let census = StateCensus::of(g);
    let f = census.graph();
    let (v, e, k) = (f.v as i64, f.e as i64, f.k as i64);
    let spec = Specializer {
        bases: vec![delta_x()],
        alpha: Factor::new(1, xy(1, 0), vec![1]),
        beta: Factor::new(1, xy(-1, -2), vec![1]),
        gamma_sq: Factor::new(1, xy(0, 2), vec![-2]),
    };
    // x² - 1 = x D
    let prefactor = Factor::new(1, xy(1 - v - e + (k - 1), 1 - v + e), vec![k - 1]);
    spec.apply(&census_br(&census), &prefactor)
}

/// HOMFLY polynomial by the resolution sum
/// `Σ_H x^(-2e(H)) (y/x)^(e-e(H)) ((x-x⁻¹)/y)^(p(H)-1)`.
pub fn homfly_resolution(g: &RibbonGraph) -> LaurentPoly {
    if g.num_vertices() == 0 {
        return LaurentPoly::one();
    }
    let census = StateCensus::of(g);
    let e = census.graph().e as i64;
    let mut powers = DeltaPowers::new();
    let mut out = LaurentPoly::zero();
    for (h, n) in census.iter() {
        let (eh, p) = (h.e as i64, h.p as i64);
        let m = xy(-2 * eh - (e - eh), (e - eh) - (p - 1));
        out += powers.get(h.p - 1).mul_monomial(&int(n as i64), &m);
    }
    out
}

/// Inclusion weight `w` of a tangle type: `1/xy`, `-x/y`, `xy`, `-y/x`.
pub fn tangle_weight(t: TangleType) -> LaurentPoly {
    let (c, m) = inclusion_weight(t);
    LaurentPoly::term(c, m)
}

fn inclusion_weight(t: TangleType) -> (BigRational, Monomial) {
    match t {
        TangleType::W1 => (int(1), xy(-1, -1)),
        TangleType::W2 => (int(-1), xy(1, -1)),
        TangleType::W3 => (int(1), xy(1, 1)),
        TangleType::W4 => (int(-1), xy(-1, 1)),
    }
}

/// Per-edge global factor of a tangle type: `y/x`, `-yx`, `x⁻²`, `x²`.
fn tangle_prefactor(t: TangleType) -> (BigRational, Monomial) {
    match t {
        TangleType::W1 => (int(1), xy(-1, 1)),
        TangleType::W2 => (int(-1), xy(1, 1)),
        TangleType::W3 => (int(1), xy(-2, 0)),
        TangleType::W4 => (int(1), xy(2, 0)),
    }
}

/// A polynomial in `x, y` with coefficients in the free commutative algebra
/// on nontrivial boundary labels: a map from sorted label multisets to
/// nonzero Laurent polynomials. The empty multiset carries the part with
/// only trivial labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoly {
    edge_names: Vec<String>,
    terms: BTreeMap<Vec<CyclicWord>, LaurentPoly>,
}

impl LabeledPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&[CyclicWord], &LaurentPoly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient of a label multiset (given in any order).
    pub fn get(&self, labels: &[CyclicWord]) -> LaurentPoly {
        let mut key = labels.to_vec();
        key.sort();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sends every label to 1.
    pub fn forget_labels(&self) -> LaurentPoly {
        self.terms.values().cloned().sum()
    }

    /// Equality of the underlying maps, ignoring which edge names were used
    /// to print labels.
    pub fn same_terms(&self, other: &LabeledPoly) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Display for LabeledPoly {
    /// `(poly)*t[w1]*t[w2] + ...`, the label-free part first; `0` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (labels, poly)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({poly})")?;
            for w in labels {
                write!(f, "*t[{}]", w.display(&self.edge_names))?;
            }
        }
        Ok(())
    }
}

/// Weight symbols of all edges, checked to be present, distinct and clear
/// of the polynomial variables.
fn weight_vars(g: &RibbonGraph) -> Result<Vec<Var>, InvariantError> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(g.num_edges());
    for edge in g.edges() {
        let w = edge
            .weight
            .as_deref()
            .ok_or_else(|| InvariantError::MissingWeight(edge.name.clone()))?;
        if w == vars::X || w == vars::Y {
            return Err(InvariantError::ReservedWeight(w.to_string()));
        }
        if !seen.insert(w) {
            return Err(InvariantError::DuplicateWeight(w.to_string()));
        }
        out.push(Var::new(w));
    }
    Ok(out)
}

/// `f(prefactor · (y/D) · B(F; 1, b_e w_e, D/y))`, where `f` replaces each
/// product of edge weights by the boundary labels of the state it records.
fn labeled_sum(
    g: &RibbonGraph,
    prefactor: (BigRational, Monomial),
    edge_factor: &[(BigRational, Monomial)],
) -> Result<LabeledPoly, InvariantError> {
    let weights = weight_vars(g)?;
    let edge_names = g.edges().iter().map(|e| e.name.clone()).collect();
    if g.num_vertices() == 0 {
        return Ok(LabeledPoly {
            edge_names,
            terms: BTreeMap::from([(Vec::new(), LaurentPoly::one())]),
        });
    }
    let e = g.num_edges();
    assert!(e < 64, "state sums over {e} edges are out of reach");

    let mut powers = DeltaPowers::new();
    let mut label_of: HashMap<Monomial, Vec<CyclicWord>> = HashMap::new();
    let mut weighted = LaurentPoly::zero();
    for mask in 0..1u64 << e {
        let inside = |i: usize| mask >> i & 1 == 1;
        let walks = g.boundary_walks_with(inside);
        let p = walks.len();
        let mut labels: Vec<CyclicWord> = walks
            .iter()
            .map(|w| boundary_label(g, w))
            .filter(|w| !w.is_trivial())
            .collect();
        labels.sort();

        let mut coeff = prefactor.0.clone();
        let mut mono = &prefactor.1 * &xy(0, 1 - p as i64);
        let mut bs = Monomial::one();
        for i in (0..e).filter(|&i| inside(i)) {
            coeff *= &edge_factor[i].0;
            mono = &mono * &edge_factor[i].1;
            bs = &bs * &Monomial::from_ints([(weights[i].clone(), 1)]);
        }
        weighted += powers.get(p - 1).mul_monomial(&coeff, &(&mono * &bs));
        label_of.insert(bs, labels);
    }

    let is_weight: HashSet<&Var> = weights.iter().collect();
    let mut terms: BTreeMap<Vec<CyclicWord>, LaurentPoly> = BTreeMap::new();
    for (m, c) in weighted.terms() {
        let (bs, rest) = m.partition(|v| is_weight.contains(v));
        let labels = label_of[&bs].clone();
        terms.entry(labels).or_default().add_term(rest, c.clone());
    }
    terms.retain(|_, p| !p.is_zero());
    Ok(LabeledPoly { edge_names, terms })
}

/// HOMFLY polynomial with boundary labels kept, from the weighted
/// B-polynomial `(y/D)(y/x)^e B(F; 1, b_e/(xy), D/y)`.
pub fn homfly_full(g: &RibbonGraph) -> Result<LabeledPoly, InvariantError> {
    let e = g.num_edges() as i64;
    let per_edge = vec![(int(1), xy(-1, -1)); g.num_edges()];
    labeled_sum(g, (int(1), xy(-e, e)), &per_edge)
}

/// Labeled HOMFLY polynomial of the link obtained by inserting the tangle of
/// each edge's type: every type contributes its global factor and its
/// inclusion weight.
pub fn homfly_traldi(g: &RibbonGraph) -> Result<LabeledPoly, InvariantError> {
    let mut coeff = int(1);
    let mut mono = Monomial::one();
    let mut per_edge = Vec::with_capacity(g.num_edges());
    for edge in g.edges() {
        let t = edge
            .tangle
            .ok_or_else(|| InvariantError::MissingTangle(edge.name.clone()))?;
        let (c, m) = tangle_prefactor(t);
        coeff *= c;
        mono = &mono * &m;
        per_edge.push(inclusion_weight(t));
    }
    labeled_sum(g, (coeff, mono), &per_edge)
}
