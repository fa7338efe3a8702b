//! Substitution of non-monomial values into polynomials in α, β, γ.
//!
//! Each substituted value is written as `c * m * Π base_i^(k_i)` with `m` a
//! Laurent monomial and each base a fixed polynomial such as `x - x^-1`.
//! A term of `R` then maps to one such product, the base exponents are
//! collected, and bases are expanded only once per distinct exponent vector.
//! Negative base exponents would need division, so they are rejected.

use std::collections::{BTreeMap, HashMap};

use num::BigRational;

use super::{var, vars};
use crate::laurent::{rational_pow, LaurentPoly, Monomial};

/// `coeff * mono * Π bases[i]^exps[i]`.
#[derive(Debug, Clone)]
pub(crate) struct Factor {
    pub coeff: BigRational,
    pub mono: Monomial,
    pub exps: Vec<i64>,
}

impl Factor {
    pub fn new(coeff: i64, mono: Monomial, exps: Vec<i64>) -> Factor {
        Factor {
            coeff: BigRational::from_integer(coeff.into()),
            mono,
            exps,
        }
    }

    fn pow(&self, n: i64) -> Factor {
        Factor {
            coeff: rational_pow(&self.coeff, n),
            mono: self.mono.pow(n),
            exps: self.exps.iter().map(|e| e * n).collect(),
        }
    }

    fn mul(&self, other: &Factor) -> Factor {
        Factor {
            coeff: &self.coeff * &other.coeff,
            mono: &self.mono * &other.mono,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Values for α, β and γ² over a shared list of bases. γ only ever occurs
/// to even powers in the polynomials this is applied to.
pub(crate) struct Specializer {
    pub bases: Vec<LaurentPoly>,
    pub alpha: Factor,
    pub beta: Factor,
    pub gamma_sq: Factor,
}

impl Specializer {
    /// `prefactor * r(alpha, beta, gamma)`. Panics on an odd γ exponent or a
    /// negative total base exponent.
    pub fn apply(&self, r: &LaurentPoly, prefactor: &Factor) -> LaurentPoly {
        let (a, b, g) = (var(vars::ALPHA), var(vars::BETA), var(vars::GAMMA));
        let mut groups: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
        for (m, c) in r.terms() {
            let exp = |v| {
                m.exponent(v)
                    .to_integer()
                    .expect("integer exponents in alpha, beta, gamma")
            };
            let gamma = exp(&g);
            assert!(gamma % 2 == 0, "odd power of gamma in {m}");
            let f = prefactor
                .mul(&self.alpha.pow(exp(&a)))
                .mul(&self.beta.pow(exp(&b)))
                .mul(&self.gamma_sq.pow(gamma / 2));
            assert!(
                f.exps.iter().all(|&k| k >= 0),
                "negative base exponent {:?} for term {m}",
                f.exps
            );
            groups
                .entry(f.exps)
                .or_default()
                .add_term(f.mono, c * f.coeff);
        }

        let mut powers: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (exps, mut poly) in groups {
            for (i, &k) in exps.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, k))
                    .or_insert_with(|| self.bases[i].pow(k).expect("non-negative power"));
                poly = &poly * p;
            }
            out += poly;
        }
        out
    }
}
