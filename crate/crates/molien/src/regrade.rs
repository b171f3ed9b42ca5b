//! Regrading a Hilbert series by module weights.
//!
//! When the `m` generators of an algebra span a polynomial GL_d-module
//! `U` (a direct sum of irreducibles `V_lambda`), the natural grading
//! variables are the `d` torus variables rather than one variable per
//! generator. The weight list of `U` is the monomial expansion of its
//! character, one monomial per generator; substituting those monomials
//! for the generator variables turns the Hilbert series in `m`
//! variables into the GL_d-graded series in `d` variables.

use crate::error::{Error, Result};
use crate::polyring::{GradedSeries, Monomial, RationalForm, VarImage};
use crate::symfunc::{is_symmetric, schur_cached, Partition};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// One irreducible summand with multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Summand {
    pub partition: Partition,
    pub mult: u32,
}

/// A polynomial GL_d-module given as a multiset of irreducibles.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub d: usize,
    pub summands: Vec<Summand>,
}

/// The multiset of torus weights of a module, one monomial in the `d`
/// torus variables per basis vector, in decreasing lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightList {
    d: usize,
    weights: Vec<Monomial>,
}

impl WeightList {
    pub fn from_monomials(d: usize, weights: Vec<Monomial>) -> Result<Self> {
        for w in &weights {
            if w.nvars() != d {
                return Err(Error::VarMismatch {
                    expected: d,
                    found: w.nvars(),
                });
            }
        }
        let mut list = WeightList { d, weights };
        list.sort();
        Ok(list)
    }

    fn sort(&mut self) {
        self.weights
            .sort_by(|a, b| b.exponents().cmp(a.exponents()));
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of weights, i.e. the dimension of the module.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Monomial] {
        &self.weights
    }
}

/// Expands the character of the module into its weight multiset: each
/// monomial of `s_lambda(t_1..t_d)` appears with its coefficient times
/// the summand multiplicity.
pub fn module_weights(spec: &ModuleSpec) -> Result<WeightList> {
    let d = spec.d;
    let mut weights = Vec::new();
    for summand in &spec.summands {
        if summand.partition.len() > d {
            return Err(Error::PartitionTooLong {
                partition: summand.partition.clone(),
                d,
            });
        }
        let character = schur_cached(&summand.partition, d);
        for (mono, coeff) in character.terms() {
            debug_assert!(coeff.is_integer());
            let count = coeff.to_integer().to_u64().expect("tableau count") as usize
                * summand.mult as usize;
            for _ in 0..count {
                weights.push(mono.clone());
            }
        }
    }
    WeightList::from_monomials(d, weights)
}

/// Substitutes the weight monomials for the series variables. The
/// series must have exactly one variable per weight and be symmetric in
/// those variables, which makes the result independent of the weight
/// order; symmetry is checked coefficient by coefficient.
pub fn regrade_hilbert(h: &GradedSeries, weights: &WeightList) -> Result<GradedSeries> {
    if h.nvars() != weights.len() {
        return Err(Error::WeightCountMismatch {
            expected: h.nvars(),
            found: weights.len(),
        });
    }
    for n in 0..=h.order() {
        if !is_symmetric(h.coeff(n)) {
            return Err(Error::CoefficientNotSymmetric { zdeg: n });
        }
    }
    let images: Vec<VarImage> = weights
        .weights()
        .iter()
        .map(|w| VarImage::Monomial(w.clone()))
        .collect();
    h.substitute(&images)
}

/// The same substitution applied to a closed rational form, preserving
/// its shape: numerators map coefficientwise and every denominator
/// factor `1 - m z^k` becomes `1 - m' z^k`.
pub fn regrade_form(f: &RationalForm, weights: &WeightList) -> Result<RationalForm> {
    if f.nvars() != weights.len() {
        return Err(Error::WeightCountMismatch {
            expected: f.nvars(),
            found: weights.len(),
        });
    }
    f.substitute_monomials(weights.weights())
}
