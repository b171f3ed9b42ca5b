//! Multiplicity tables: the Schur-basis content of a graded symmetric
//! series, and the two substitution-ready generating series built from
//! it.
//!
//! For a series `H` whose `z^n` coefficient is symmetric in `d`
//! variables, the table records every multiplicity `m` in
//! `H = sum m(n, lambda) s_lambda(t_1..t_d) z^n`, validated to be a
//! nonnegative integer. Coefficients need not be homogeneous; each
//! total-degree layer is decomposed separately.

use crate::error::{Error, Result};
use crate::polyring::{GradedSeries, Monomial, Rat};
use crate::symfunc::{is_symmetric, schur_cached, schur_decompose, Partition};
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultTable {
    nvars: usize,
    order: usize,
    entries: BTreeMap<(usize, Partition), u64>,
}

impl MultTable {
    pub fn new(nvars: usize, order: usize) -> Self {
        MultTable {
            nvars,
            order,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Inclusive truncation order in `z`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Records a multiplicity; zero values are dropped.
    pub fn insert(&mut self, n: usize, lambda: Partition, mult: u64) {
        assert!(n <= self.order, "degree {n} beyond truncation order {}", self.order);
        assert!(
            lambda.len() <= self.nvars,
            "partition {lambda} has more parts than the {} variables",
            self.nvars
        );
        if mult == 0 {
            return;
        }
        self.entries.insert((n, lambda), mult);
    }

    pub fn get(&self, n: usize, lambda: &Partition) -> u64 {
        self.entries
            .get(&(n, lambda.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Entries ordered by degree, then partition (ascending lex).
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Partition, u64)> {
        self.entries.iter().map(|((n, l), m)| (*n, l, *m))
    }

    /// Entries ordered by degree, then partition in decreasing lex order
    /// (the order used for display and serialization).
    pub fn entries_display_order(&self) -> Vec<(usize, &Partition, u64)> {
        let mut rows: Vec<_> = self.entries().collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
        rows
    }

    /// Generating series with `t^lambda` (parts as exponents, padded
    /// with zeros) marking each multiplicity.
    pub fn to_m_series(&self) -> GradedSeries {
        let mut s = GradedSeries::zero(self.nvars, self.order);
        for ((n, lambda), m) in &self.entries {
            s.coeff_mut(*n).add_term(
                Monomial::new(lambda.padded(self.nvars)),
                Rat::from_integer((*m).into()),
            );
        }
        s
    }

    /// Generating series in difference coordinates: `lambda` maps to the
    /// exponent tuple `(lambda_1 - lambda_2, ..., lambda_{d-1} - lambda_d,
    /// lambda_d)` on fresh variables `u_1..u_d`.
    pub fn to_mprime_series(&self) -> GradedSeries {
        let mut s = GradedSeries::zero(self.nvars, self.order);
        for ((n, lambda), m) in &self.entries {
            let padded = lambda.padded(self.nvars);
            let mut e = Vec::with_capacity(self.nvars);
            for i in 0..self.nvars {
                let next = if i + 1 < self.nvars { padded[i + 1] } else { 0 };
                e.push(padded[i] - next);
            }
            s.coeff_mut(*n)
                .add_term(Monomial::new(e), Rat::from_integer((*m).into()));
        }
        s
    }

    /// Reconstructs the original series as a sum of Schur polynomials.
    pub fn to_schur_series(&self) -> GradedSeries {
        let mut s = GradedSeries::zero(self.nvars, self.order);
        for ((n, lambda), m) in &self.entries {
            let mult = Rat::from_integer((*m).into());
            let sp = schur_cached(lambda, self.nvars);
            let coeff = s.coeff_mut(*n);
            for (mono, c) in sp.terms() {
                coeff.add_term(mono.clone(), c * &mult);
            }
        }
        s
    }
}

/// Decomposes every coefficient of `h` in the Schur basis. Errors if a
/// coefficient fails the symmetry check or any multiplicity is not a
/// nonnegative integer.
pub fn multiplicity_table(h: &GradedSeries) -> Result<MultTable> {
    let d = h.nvars();
    let mut table = MultTable::new(d, h.order());
    for n in 0..=h.order() {
        let c = h.coeff(n);
        if !is_symmetric(c) {
            return Err(Error::CoefficientNotSymmetric { zdeg: n });
        }
        for (_, layer) in c.homogeneous_layers() {
            let expansion = schur_decompose(&layer)?;
            for (lambda, mult) in expansion.multiplicities {
                let ok = mult.is_integer() && !mult.is_negative();
                let as_u64 = if ok { mult.to_integer().to_u64() } else { None };
                match as_u64 {
                    Some(m) => table.insert(n, lambda, m),
                    None => {
                        return Err(Error::BadMultiplicity {
                            n,
                            partition: lambda,
                            value: mult,
                        })
                    }
                }
            }
        }
    }
    Ok(table)
}
