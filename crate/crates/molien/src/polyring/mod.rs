//! Sparse multivariate polynomials over exact rationals.
//!
//! Invariants maintained throughout:
//! - every `Monomial` in a `TPoly` has exactly `nvars` exponents;
//! - no stored coefficient is zero;
//! - rationals are kept in lowest terms with positive denominator
//!   (guaranteed by `num_rational`).
//!
//! `Monomial` orders by total degree first, then lexicographically with
//! the first variable most significant, so the maximal key of a term map
//! is the graded-lex leading monomial.

mod form;
mod series;
mod zpoly;

pub use form::{DenomFactor, RationalForm, RationalTerm};
pub use series::GradedSeries;
pub use zpoly::{monomial_zpow, one_plus_var_z, ZPoly};

use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used everywhere in this crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the fraction `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// `base^exp` by repeated squaring, with the convention `0^0 = 1`.
pub fn rat_pow(base: &Rat, mut exp: u32) -> Rat {
    let mut acc = Rat::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Exponent tuple of a single monomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The empty product: all exponents zero.
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable `t_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }

    /// Copy with exponents `i` and `j` exchanged.
    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i, j);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Substitution image of one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarImage {
    Scalar(Rat),
    Monomial(Monomial),
}

/// Number of variables of the substitution target. All monomial images
/// must agree on it; if every image is a scalar the target has none.
pub fn image_nvars(images: &[VarImage]) -> Result<usize> {
    let mut found: Option<usize> = None;
    for img in images {
        if let VarImage::Monomial(m) = img {
            match found {
                None => found = Some(m.nvars()),
                Some(d) if d != m.nvars() => {
                    return Err(Error::VarMismatch {
                        expected: d,
                        found: m.nvars(),
                    })
                }
                Some(_) => {}
            }
        }
    }
    Ok(found.unwrap_or(0))
}

/// Sparse polynomial in `nvars` commuting variables over `Rat`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl TPoly {
    pub fn zero(nvars: usize) -> Self {
        TPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    /// The single variable `t_{i+1}`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rat::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c * m`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Graded-lex leading term, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.last_key_value()
    }

    pub fn scale(&self, c: &Rat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero(self.nvars);
        }
        TPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> TPoly {
        if m.is_unit() {
            return self.clone();
        }
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `t_1 = ... = t_d = 1`.
    pub fn coeff_sum(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Total degree if the polynomial is homogeneous; `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut seen: Option<usize> = None;
        for m in self.terms.keys() {
            let d = m.degree();
            match seen {
                None => seen = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::NotHomogeneous {
                        lower: prev.min(d),
                        upper: prev.max(d),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(seen)
    }

    /// Splits into homogeneous components keyed by total degree.
    pub fn homogeneous_layers(&self) -> BTreeMap<usize, TPoly> {
        let mut layers: BTreeMap<usize, TPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            layers
                .entry(m.degree())
                .or_insert_with(|| TPoly::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        layers
    }

    /// Replaces each variable by its image. Scalar images fold into the
    /// coefficient (`0^0 = 1`); monomial images multiply exponent tuples.
    pub fn substitute(&self, images: &[VarImage]) -> Result<TPoly> {
        if images.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = image_nvars(images)?;
        let mut out = TPoly::zero(target);
        for (mono, c) in &self.terms {
            let mut coeff = c.clone();
            let mut expo = vec![0u32; target];
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    VarImage::Scalar(s) => coeff *= rat_pow(s, e),
                    VarImage::Monomial(w) => {
                        for (j, &we) in w.exponents().iter().enumerate() {
                            expo[j] += we * e;
                        }
                    }
                }
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term(Monomial::new(expo), coeff);
        }
        Ok(out)
    }

    /// Renders with the given variable name prefix, terms in graded-lex
    /// descending order.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (mono, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono_str = render_monomial(mono, var);
            match mono_str {
                None => out.push_str(&mag.to_string()),
                Some(ms) => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(&ms);
                }
            }
        }
        out
    }
}

fn render_monomial(m: &Monomial, var: &str) -> Option<String> {
    if m.is_unit() {
        return None;
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("{var}{}", i + 1));
        } else {
            parts.push(format!("{var}{}^{e}", i + 1));
        }
    }
    Some(parts.join("*"))
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials in different variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials in different variable counts");
        let mut out = TPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}
