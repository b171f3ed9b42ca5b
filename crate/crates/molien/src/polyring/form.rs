//! Closed rational forms: sums of terms `scalar * numerator / prod(1 - m z^k)^e`.
//!
//! Every denominator factor has `zpow >= 1` and `mult >= 1`, so each
//! factor is a unit in the formal power series ring and expansion to any
//! truncation order is exact.

use super::series::GradedSeries;
use super::zpoly::ZPoly;
use super::{Monomial, Rat, VarImage};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// One denominator factor `(1 - monomial * z^zpow)^mult`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenomFactor {
    monomial: Monomial,
    zpow: usize,
    mult: usize,
}

impl DenomFactor {
    pub fn new(monomial: Monomial, zpow: usize, mult: usize) -> Self {
        assert!(zpow >= 1, "denominator factor must vanish at z = 0");
        assert!(mult >= 1, "denominator factor must have positive multiplicity");
        DenomFactor {
            monomial,
            zpow,
            mult,
        }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn zpow(&self) -> usize {
        self.zpow
    }

    pub fn mult(&self) -> usize {
        self.mult
    }

    /// The factor written out as a polynomial `(1 - m z^k)^mult`.
    pub fn to_zpoly(&self) -> ZPoly {
        let nvars = self.monomial.nvars();
        let linear = &ZPoly::one(nvars)
            - &super::zpoly::monomial_zpow(self.monomial.clone(), self.zpow);
        let mut acc = ZPoly::one(nvars);
        for _ in 0..self.mult {
            acc = &acc * &linear;
        }
        acc
    }

    fn key(&self) -> (&Monomial, usize) {
        (&self.monomial, self.zpow)
    }
}

/// One summand of a rational form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalTerm {
    pub scalar: Rat,
    pub numerator: ZPoly,
    pub denominators: Vec<DenomFactor>,
}

impl RationalTerm {
    pub fn new(scalar: Rat, numerator: ZPoly, denominators: Vec<DenomFactor>) -> Self {
        let mut t = RationalTerm {
            scalar,
            numerator,
            denominators,
        };
        t.normalize();
        t
    }

    fn normalize(&mut self) {
        self.denominators
            .sort_by(|a, b| a.key().cmp(&b.key()));
        let mut merged: Vec<DenomFactor> = Vec::with_capacity(self.denominators.len());
        for f in self.denominators.drain(..) {
            match merged.last_mut() {
                Some(last) if last.key() == f.key() => last.mult += f.mult,
                _ => merged.push(f),
            }
        }
        self.denominators = merged;
    }

    fn is_zero(&self) -> bool {
        self.scalar.is_zero() || self.numerator.is_zero()
    }
}

/// Sum of rational terms over a common variable count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalForm {
    nvars: usize,
    terms: Vec<RationalTerm>,
}

impl RationalForm {
    pub fn zero(nvars: usize) -> Self {
        RationalForm {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::from_terms(
            nvars,
            vec![RationalTerm::new(c, ZPoly::one(nvars), Vec::new())],
        )
    }

    pub fn from_zpoly(p: ZPoly) -> Self {
        let nvars = p.nvars();
        Self::from_terms(nvars, vec![RationalTerm::new(Rat::one(), p, Vec::new())])
    }

    pub fn from_terms(nvars: usize, terms: Vec<RationalTerm>) -> Self {
        let mut f = RationalForm {
            nvars,
            terms: Vec::new(),
        };
        for t in terms {
            assert_eq!(t.numerator.nvars(), nvars, "term variable count mismatch");
            for d in &t.denominators {
                assert_eq!(d.monomial.nvars(), nvars, "factor variable count mismatch");
            }
            f.push_merged(t);
        }
        f
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[RationalTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds a term, folding it into an existing term with the same
    /// denominator factors when possible.
    fn push_merged(&mut self, term: RationalTerm) {
        if term.is_zero() {
            return;
        }
        for existing in &mut self.terms {
            if existing.denominators == term.denominators {
                let merged = &existing.numerator.scale(&existing.scalar)
                    + &term.numerator.scale(&term.scalar);
                if merged.is_zero() {
                    existing.scalar = Rat::zero();
                    existing.numerator = ZPoly::zero(self.nvars);
                } else {
                    existing.scalar = Rat::one();
                    existing.numerator = merged;
                }
                self.terms.retain(|t| !t.is_zero());
                return;
            }
        }
        self.terms.push(term);
    }

    pub fn add(&self, rhs: &RationalForm) -> RationalForm {
        assert_eq!(self.nvars, rhs.nvars, "adding forms in different variable counts");
        let mut out = self.clone();
        for t in &rhs.terms {
            out.push_merged(t.clone());
        }
        out
    }

    pub fn neg(&self) -> RationalForm {
        RationalForm {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| RationalTerm {
                    scalar: -t.scalar.clone(),
                    numerator: t.numerator.clone(),
                    denominators: t.denominators.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RationalForm) -> RationalForm {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RationalForm) -> RationalForm {
        assert_eq!(self.nvars, rhs.nvars, "multiplying forms in different variable counts");
        let mut out = RationalForm::zero(self.nvars);
        for a in &self.terms {
            for b in &rhs.terms {
                let mut denoms = a.denominators.clone();
                denoms.extend(b.denominators.iter().cloned());
                out.push_merged(RationalTerm::new(
                    &a.scalar * &b.scalar,
                    &a.numerator * &b.numerator,
                    denoms,
                ));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> RationalForm {
        let mut acc = RationalForm::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> RationalForm {
        if c.is_zero() {
            return RationalForm::zero(self.nvars);
        }
        RationalForm {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| RationalTerm {
                    scalar: &t.scalar * c,
                    numerator: t.numerator.clone(),
                    denominators: t.denominators.clone(),
                })
                .collect(),
        }
    }

    /// Divides every term by `(1 - m z^k)^mult`.
    pub fn divide_by_factor(&self, factor: &DenomFactor) -> RationalForm {
        assert_eq!(factor.monomial.nvars(), self.nvars);
        RationalForm {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mut denoms = t.denominators.clone();
                    denoms.push(factor.clone());
                    RationalTerm::new(t.scalar.clone(), t.numerator.clone(), denoms)
                })
                .collect(),
        }
    }

    /// Exact series expansion to the given order. Each geometric factor
    /// is applied by the recurrence `S[n] += m * S[n - k]`, run once per
    /// unit of multiplicity.
    pub fn expand(&self, order: usize) -> GradedSeries {
        let mut acc = GradedSeries::zero(self.nvars, order);
        for term in &self.terms {
            let mut s = term.numerator.to_series(order).scale(&term.scalar);
            for f in &term.denominators {
                for _ in 0..f.mult {
                    for n in f.zpow..=order {
                        let add = s.coeff(n - f.zpow).mul_monomial(&f.monomial);
                        if add.is_zero() {
                            continue;
                        }
                        let sum = &add + s.coeff(n);
                        *s.coeff_mut(n) = sum;
                    }
                }
            }
            acc = &acc + &s;
        }
        acc
    }

    /// Rewrites the form in new variables by substituting a monomial for
    /// each old variable. The term shape is preserved: numerators map
    /// coefficientwise and each denominator factor `1 - m z^k` becomes
    /// `1 - m' z^k` with `m'` the image of `m`.
    pub fn substitute_monomials(&self, images: &[Monomial]) -> Result<RationalForm> {
        if images.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let var_images: Vec<VarImage> = images
            .iter()
            .map(|m| VarImage::Monomial(m.clone()))
            .collect();
        let target = super::image_nvars(&var_images)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let numerator = t.numerator.substitute(&var_images)?;
            let denominators = t
                .denominators
                .iter()
                .map(|f| {
                    let mut expo = vec![0u32; target];
                    for (i, &e) in f.monomial.exponents().iter().enumerate() {
                        for (j, &we) in images[i].exponents().iter().enumerate() {
                            expo[j] += we * e;
                        }
                    }
                    DenomFactor::new(Monomial::new(expo), f.zpow, f.mult)
                })
                .collect();
            terms.push(RationalTerm::new(t.scalar.clone(), numerator, denominators));
        }
        Ok(RationalForm::from_terms(target, terms))
    }

    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for t in &self.terms {
            let mut piece = String::new();
            if !t.scalar.is_one() {
                piece.push_str(&format!("{}*", t.scalar));
            }
            let num = t.numerator.render(var);
            if t.denominators.is_empty() {
                piece.push_str(&num);
            } else {
                let denom: Vec<String> = t
                    .denominators
                    .iter()
                    .map(|f| {
                        let mono = super::render_monomial(&f.monomial, var)
                            .unwrap_or_default();
                        let zpart = if f.zpow == 1 {
                            "z".to_string()
                        } else {
                            format!("z^{}", f.zpow)
                        };
                        let inner = if mono.is_empty() {
                            format!("1 - {zpart}")
                        } else {
                            format!("1 - {mono}*{zpart}")
                        };
                        if f.mult == 1 {
                            format!("({inner})")
                        } else {
                            format!("({inner})^{}", f.mult)
                        }
                    })
                    .collect();
                piece.push_str(&format!("({num}) / [{}]", denom.join(" ")));
            }
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for RationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}
