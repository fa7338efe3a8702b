//! Exact multivariate Laurent polynomials over the rationals.
//!
//! Exponents live on the half-integer grid `(1/2)Z` and are stored doubled,
//! so `t^(3/2)` is the pair `(t, 3)`. Coefficients are arbitrary precision
//! rationals. Terms are kept in a canonical order (variables compared by
//! name, monomials lexicographically by exponent vector, ascending), which
//! makes the text form byte-stable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("negative power of a polynomial with more than one term")]
    NonMonomialInverse,
    #[error("substituting for `{0}` leaves the half-integer exponent grid")]
    FractionalExponentOverflow(Var),
    #[error("half-integer power of coefficient {0} is not rational")]
    IrrationalCoefficient(BigRational),
    #[error("variable `{0}` has no assigned value")]
    UnassignedVariable(Var),
    #[error(
        "variable `{0}` occurs with a half-integer exponent but only its full value was assigned"
    )]
    MissingSquareRoot(Var),
    #[error("variable `{0}` is assigned zero but occurs with a negative exponent")]
    ZeroDivision(Var),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
}

/// A variable name. Ordering is byte order on the name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn from_doubled(d: i64) -> Self {
        HalfInt(d)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A power product of variables with half-integer exponents.
///
/// Stored as a list sorted by variable with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: impl Into<Var>, exp: HalfInt) -> Self {
        Self::from_doubled([(v.into(), exp.doubled())])
    }

    /// Integer-exponent constructor, the common case.
    pub fn from_ints<V: Into<Var>>(pairs: impl IntoIterator<Item = (V, i64)>) -> Self {
        Self::from_doubled(pairs.into_iter().map(|(v, e)| (v.into(), 2 * e)))
    }

    /// Builds a monomial from `(variable, doubled exponent)` pairs; repeated
    /// variables are multiplied together.
    pub fn from_doubled(pairs: impl IntoIterator<Item = (Var, i64)>) -> Self {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> HalfInt {
        match self.0.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => HalfInt(self.0[i].1),
            Err(_) => HalfInt::ZERO,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, HalfInt)> {
        self.0.iter().map(|(v, e)| (v, HalfInt(*e)))
    }

    pub fn variables(&self) -> impl Iterator<Item = &Var> {
        self.0.iter().map(|(v, _)| v)
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * n)).collect())
    }

    /// Drops `v`, returning its doubled exponent and the remaining monomial.
    fn split_off(&self, v: &Var) -> (i64, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (w, e) in &self.0 {
            if w == v {
                exp = *e;
            } else {
                rest.push((w.clone(), *e));
            }
        }
        (exp, Monomial(rest))
    }

    /// Splits into the factors whose variables satisfy `pred` and the rest.
    pub fn partition(&self, pred: impl Fn(&Var) -> bool) -> (Monomial, Monomial) {
        let (yes, no) = self.0.iter().cloned().partition(|(v, _)| pred(v));
        (Monomial(yes), Monomial(no))
    }

    fn rename(&self, map: &HashMap<Var, Var>) -> Monomial {
        Monomial::from_doubled(
            self.0
                .iter()
                .map(|(v, e)| (map.get(v).cloned().unwrap_or_else(|| v.clone()), *e)),
        )
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Lexicographic on the exponent vector indexed by all variables in name
    /// order, absent variables counting as exponent zero.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&0),
                (None, Some((_, e))) => return 0.cmp(e),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            let e = HalfInt(*e);
            match e.to_integer() {
                Some(1) => write!(f, "{v}")?,
                Some(k) => write!(f, "{v}^{k}")?,
                None => write!(f, "{v}^({e})")?,
            }
        }
        Ok(())
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// `q^n` for any integer `n`; `q` must be nonzero when `n < 0`.
pub fn rational_pow(q: &BigRational, n: i64) -> BigRational {
    num::pow::Pow::pow(q, n as i32)
}

/// A Laurent polynomial: a finite map from monomials to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: impl Into<Var>) -> Self {
        Self::term(BigRational::one(), Monomial::var(v, HalfInt::from_int(1)))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, Monomial)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single term of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<(&BigRational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.variables().cloned())
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigRational, m: &Monomial) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(n, k)| (n * m, k * c)).collect(),
        }
    }

    /// Integer power. Negative powers exist only for single terms.
    pub fn pow(&self, n: i64) -> Result<LaurentPoly, LaurentError> {
        if n < 0 {
            let (c, m) = self.as_monomial().ok_or(LaurentError::NonMonomialInverse)?;
            return Ok(LaurentPoly::term(rational_pow(c, n), m.pow(n)));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Replaces `v` by `c * m`.
    ///
    /// A term `v^(k/2)` becomes `c^(k/2) m^(k/2)`; every resulting exponent
    /// must stay on the half-integer grid and odd powers of `c^(1/2)` need a
    /// rational square root.
    pub fn substitute_monomial(
        &self,
        v: &Var,
        c: &BigRational,
        m: &Monomial,
    ) -> Result<LaurentPoly, LaurentError> {
        let root = std::cell::OnceCell::new();
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in &self.terms {
            let (k, rest) = mono.split_off(v);
            if k == 0 {
                out.add_term(mono.clone(), coeff.clone());
                continue;
            }
            let mut pairs = Vec::with_capacity(m.0.len());
            for (w, d) in &m.0 {
                let prod = k * d;
                if prod % 2 != 0 {
                    return Err(LaurentError::FractionalExponentOverflow(v.clone()));
                }
                pairs.push((w.clone(), prod / 2));
            }
            let factor = if k % 2 == 0 {
                rational_pow(c, k / 2)
            } else {
                let r = root.get_or_init(|| rational_sqrt(c));
                match r {
                    Some(r) => rational_pow(r, k),
                    None => return Err(LaurentError::IrrationalCoefficient(c.clone())),
                }
            };
            out.add_term(&rest * &Monomial(pairs), coeff * factor);
        }
        Ok(out)
    }

    /// Replaces `v` by an arbitrary Laurent polynomial. Multi-term
    /// replacements require every exponent of `v` to be a non-negative integer.
    pub fn substitute(&self, v: &Var, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if let Some((c, m)) = q.as_monomial() {
            return self.substitute_monomial(v, c, m);
        }
        if q.is_zero() {
            return self.substitute_monomial(v, &BigRational::zero(), &Monomial::one());
        }
        let mut powers: HashMap<i64, LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in &self.terms {
            let (k, rest) = mono.split_off(v);
            if k < 0 {
                return Err(LaurentError::NonMonomialInverse);
            }
            if k % 2 != 0 {
                return Err(LaurentError::FractionalExponentOverflow(v.clone()));
            }
            let qk = match powers.get(&(k / 2)) {
                Some(p) => p,
                None => {
                    let p = q.pow(k / 2)?;
                    powers.entry(k / 2).or_insert(p)
                }
            };
            out += qk.mul_monomial(coeff, &rest);
        }
        Ok(out)
    }

    /// Renames variables; several names may be mapped simultaneously.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(map), c.clone());
        }
        out
    }

    pub fn swap_vars(&self, a: &Var, b: &Var) -> LaurentPoly {
        let map = HashMap::from([(a.clone(), b.clone()), (b.clone(), a.clone())]);
        self.rename(&map)
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Result<BigRational, LaurentError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in &m.0 {
                value *= pt.power(v, *e)?;
            }
            total += value;
        }
        Ok(total)
    }

    /// Smallest exponent of `v` over all terms (zero for terms without `v`).
    pub fn min_degree(&self, v: &Var) -> Result<HalfInt, LaurentError> {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .min()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn max_degree(&self, v: &Var) -> Result<HalfInt, LaurentError> {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// First monomial (in canonical order) whose coefficients differ.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<Monomial> {
        let diff = self - other;
        diff.terms.keys().next().cloned()
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for p in iter {
            out += p;
        }
        out
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form, e.g. `1 + 2*beta + 1*beta^2*gamma^2` or
    /// `-1*t^(-1/2) - 1*t^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_rational(f, &c.abs())?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

/// Formats a rational the same way polynomial coefficients are printed.
pub fn format_rational(q: &BigRational) -> String {
    struct R<'a>(&'a BigRational);
    impl fmt::Display for R<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_rational(f, self.0)
        }
    }
    R(q).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct PointValue {
    value: BigRational,
    root: Option<BigRational>,
}

/// An exact rational assignment of variables.
///
/// A variable may be given through its half power `v^(1/2)` (then every
/// half-integer exponent evaluates) or through its value alone (then only
/// integer exponents evaluate).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RationalPoint {
    values: BTreeMap<Var, PointValue>,
}

impl RationalPoint {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assigns `v^(1/2) = root`, hence `v = root^2`.
    pub fn with_root(mut self, v: impl Into<Var>, root: BigRational) -> Self {
        let value = &root * &root;
        self.values.insert(
            v.into(),
            PointValue {
                value,
                root: Some(root),
            },
        );
        self
    }

    /// Assigns `v = value`; the half power is filled in when `value` is a
    /// rational square.
    pub fn with_value(mut self, v: impl Into<Var>, value: BigRational) -> Self {
        let root = rational_sqrt(&value);
        self.values.insert(v.into(), PointValue { value, root });
        self
    }

    pub fn value(&self, v: &Var) -> Option<&BigRational> {
        self.values.get(v).map(|p| &p.value)
    }

    fn power(&self, v: &Var, doubled: i64) -> Result<BigRational, LaurentError> {
        let pv = self
            .values
            .get(v)
            .ok_or_else(|| LaurentError::UnassignedVariable(v.clone()))?;
        if doubled < 0 && pv.value.is_zero() {
            return Err(LaurentError::ZeroDivision(v.clone()));
        }
        if doubled % 2 == 0 {
            Ok(rational_pow(&pv.value, doubled / 2))
        } else {
            let r = pv
                .root
                .as_ref()
                .ok_or_else(|| LaurentError::MissingSquareRoot(v.clone()))?;
            Ok(rational_pow(r, doubled))
        }
    }
}

impl fmt::Display for RationalPoint {
    /// `name=value` pairs joined by commas, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, pv)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}=")?;
            write_rational(f, &pv.value)?;
        }
        Ok(())
    }
}

/// Convenience constructor for rationals in tests and grids.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var("x")
    }

    fn half(v: &str, d: i64) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v, HalfInt::from_doubled(d)))
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentPoly::one();
        let p = &(&x() + &one) * &(&x() - &one);
        assert_eq!(p.to_string(), "-1 + 1*x^2");
    }

    #[test]
    fn monomial_inverse() {
        let xy = &x() * &LaurentPoly::var("y");
        assert_eq!(xy.pow(-1).unwrap().to_string(), "1*x^-1*y^-1");
        let x1 = &x() + &LaurentPoly::one();
        assert_eq!(x1.pow(-1), Err(LaurentError::NonMonomialInverse));
    }

    #[test]
    fn substitution_examples() {
        // gamma -> (alpha beta)^(-1/2), i.e. gamma^2 -> 1/(alpha beta)
        let p = LaurentPoly::monomial(Monomial::from_ints([("beta", 2), ("gamma", 2)]));
        let m = Monomial::from_doubled([(Var::new("alpha"), -1), (Var::new("beta"), -1)]);
        let out = p
            .substitute_monomial(&Var::new("gamma"), &BigRational::one(), &m)
            .unwrap();
        assert_eq!(out.to_string(), "1*alpha^-1*beta");

        let q = &x() * &x() + LaurentPoly::int(3);
        let same = q
            .substitute_monomial(
                &Var::new("x"),
                &BigRational::one(),
                &Monomial::var("x", HalfInt::from_int(1)),
            )
            .unwrap();
        assert_eq!(same, q);

        let t_half = half("t", 1);
        let out = t_half
            .substitute_monomial(
                &Var::new("t"),
                &BigRational::one(),
                &Monomial::from_ints([("q", 2)]),
            )
            .unwrap();
        assert_eq!(out, LaurentPoly::var("q"));
    }

    #[test]
    fn substitution_off_grid() {
        // t^(1/2) with t -> q^(1/2) would need q^(1/4)
        let out = half("t", 1).substitute_monomial(
            &Var::new("t"),
            &BigRational::one(),
            &Monomial::var("q", HalfInt::from_doubled(1)),
        );
        assert!(matches!(
            out,
            Err(LaurentError::FractionalExponentOverflow(_))
        ));
        let out = half("t", 1).substitute_monomial(&Var::new("t"), &rat(2, 1), &Monomial::one());
        assert!(matches!(out, Err(LaurentError::IrrationalCoefficient(_))));
        let out = half("t", 1)
            .substitute_monomial(&Var::new("t"), &rat(9, 4), &Monomial::one())
            .unwrap();
        assert_eq!(out, LaurentPoly::constant(rat(3, 2)));
    }

    #[test]
    fn polynomial_substitution() {
        // alpha^2 + alpha with alpha -> x - 1
        let a = LaurentPoly::var("alpha");
        let p = &(&a * &a) + &a;
        let out = p
            .substitute(&Var::new("alpha"), &(&x() - &LaurentPoly::one()))
            .unwrap();
        assert_eq!(out.to_string(), "-1*x + 1*x^2");
        let inv = a.pow(-1).unwrap();
        assert_eq!(
            inv.substitute(&Var::new("alpha"), &(&x() + &LaurentPoly::one())),
            Err(LaurentError::NonMonomialInverse)
        );
    }

    #[test]
    fn evaluation_examples() {
        let p = &(&x() * &x()) - &LaurentPoly::one();
        let pt = RationalPoint::new().with_root("x", rat(2, 1));
        assert_eq!(p.evaluate(&pt).unwrap(), rat(15, 1));
        assert_eq!(
            LaurentPoly::int(7).evaluate(&RationalPoint::new()).unwrap(),
            rat(7, 1)
        );
        let a = &LaurentPoly::var("alpha") + &LaurentPoly::one();
        let pt = RationalPoint::new().with_root("alpha", rat(3, 1));
        assert_eq!(a.evaluate(&pt).unwrap(), rat(10, 1));
        assert_eq!(
            a.evaluate(&RationalPoint::new()),
            Err(LaurentError::UnassignedVariable(Var::new("alpha")))
        );
        let pt = RationalPoint::new().with_value("t", rat(2, 1));
        assert_eq!(
            half("t", 1).evaluate(&pt),
            Err(LaurentError::MissingSquareRoot(Var::new("t")))
        );
    }

    #[test]
    fn degrees() {
        let a = LaurentPoly::var("alpha");
        let p = &LaurentPoly::int(3) + &a.pow(-1).unwrap();
        let alpha = Var::new("alpha");
        assert_eq!(p.min_degree(&alpha).unwrap(), HalfInt::from_int(-1));
        assert_eq!(
            (&x() * &x()).min_degree(&Var::new("x")).unwrap(),
            HalfInt::from_int(2)
        );
        assert_eq!(
            LaurentPoly::int(5).min_degree(&Var::new("x")).unwrap(),
            HalfInt::ZERO
        );
        assert_eq!(
            LaurentPoly::zero().min_degree(&alpha),
            Err(LaurentError::ZeroPolynomial)
        );
    }

    #[test]
    fn canonical_text() {
        let p = LaurentPoly::from_terms([
            (rat(3, 1), Monomial::var("t", HalfInt::from_doubled(3))),
            (rat(-1, 1), Monomial::from_ints([("x", -2)])),
        ]);
        assert_eq!(p.to_string(), "-1*x^-2 + 3*t^(3/2)");
        let q = LaurentPoly::from_terms([
            (rat(-1, 2), Monomial::var("t", HalfInt::from_doubled(-1))),
            (rat(1, 1), Monomial::one()),
        ]);
        assert_eq!(q.to_string(), "-1/2*t^(-1/2) + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
    }
}
