//! Truncated power series in `z` with polynomial coefficients.
//!
//! The truncation order is inclusive: a series of order `N` stores the
//! coefficients of `z^0` through `z^N`.

use super::{image_nvars, Monomial, Rat, TPoly, VarImage};
use crate::error::{Error, Result};
use num_traits::Signed;
use std::fmt;
use std::ops::{Add, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    nvars: usize,
    coeffs: Vec<TPoly>,
}

impl GradedSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        GradedSeries {
            nvars,
            coeffs: vec![TPoly::zero(nvars); order + 1],
        }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        s.coeffs[0] = TPoly::one(nvars);
        s
    }

    pub fn from_coeffs(nvars: usize, coeffs: Vec<TPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the z^0 coefficient");
        for c in &coeffs {
            assert_eq!(c.nvars(), nvars, "coefficient variable count mismatch");
        }
        GradedSeries { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Inclusive truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &TPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub(crate) fn coeff_mut(&mut self, n: usize) -> &mut TPoly {
        &mut self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> GradedSeries {
        GradedSeries {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Copy truncated to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> GradedSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        GradedSeries {
            nvars: self.nvars,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &GradedSeries) -> GradedSeries {
        assert_eq!(self.nvars, rhs.nvars, "multiplying series in different variable counts");
        let order = self.order().min(rhs.order());
        let mut out = GradedSeries::zero(self.nvars, order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// Applies a variable substitution to every coefficient.
    pub fn substitute(&self, images: &[VarImage]) -> Result<GradedSeries> {
        if images.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let nvars = image_nvars(images)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(images))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedSeries { nvars, coeffs })
    }

    /// Compares coefficients up to `z^order`, which must be within both
    /// truncations.
    pub fn equal_to_order(&self, rhs: &GradedSeries, order: usize) -> Result<bool> {
        if self.nvars != rhs.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                found: rhs.nvars,
            });
        }
        if order > self.order() || order > rhs.order() {
            return Err(Error::Config(format!(
                "comparison order {order} exceeds truncation ({} vs {})",
                self.order(),
                rhs.order()
            )));
        }
        Ok(self.coeffs[..=order] == rhs.coeffs[..=order])
    }

    /// First degree at which the two series differ, if any.
    pub fn first_difference(&self, rhs: &GradedSeries) -> Option<usize> {
        let order = self.order().min(rhs.order());
        (0..=order).find(|&n| self.coeffs[n] != rhs.coeffs[n])
    }

    /// For a series with no graded variables, the rational coefficient
    /// of each power of `z`.
    pub fn scalar_coeffs(&self) -> Result<Vec<Rat>> {
        if self.nvars != 0 {
            return Err(Error::VarMismatch {
                expected: 0,
                found: self.nvars,
            });
        }
        let unit = Monomial::unit(0);
        Ok(self.coeffs.iter().map(|c| c.coeff(&unit)).collect())
    }

    /// Scalar coefficients checked to be nonnegative integers.
    pub fn counting_coeffs(&self) -> Result<Vec<u64>> {
        use num_traits::ToPrimitive;
        let vals = self.scalar_coeffs()?;
        let mut out = Vec::with_capacity(vals.len());
        for (degree, v) in vals.into_iter().enumerate() {
            let ok = v.is_integer() && !v.is_negative();
            let as_u64 = if ok { v.to_integer().to_u64() } else { None };
            match as_u64 {
                Some(n) => out.push(n),
                None => return Err(Error::NonIntegerCoefficient { degree, value: v }),
            }
        }
        Ok(out)
    }

    /// Renders with the given variable prefix, a term per power of `z`,
    /// ending in an order marker for the truncation.
    pub fn render(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.render(var);
            let needs_parens = c.num_terms() > 1;
            let body = if needs_parens { format!("({cs})") } else { cs };
            let part = match n {
                0 => body,
                1 if body == "1" => "z".to_string(),
                1 => format!("{body}*z"),
                _ if body == "1" => format!("z^{n}"),
                _ => format!("{body}*z^{n}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        format!("{} + O(z^{})", parts.join(" + "), self.order() + 1)
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        assert_eq!(self.nvars, rhs.nvars, "adding series in different variable counts");
        let order = self.order().min(rhs.order());
        let mut out = GradedSeries::zero(self.nvars, order);
        for n in 0..=order {
            out.coeffs[n] = &self.coeffs[n] + &rhs.coeffs[n];
        }
        out
    }
}

impl Sub for &GradedSeries {
    type Output = GradedSeries;
    fn sub(self, rhs: &GradedSeries) -> GradedSeries {
        assert_eq!(self.nvars, rhs.nvars, "subtracting series in different variable counts");
        let order = self.order().min(rhs.order());
        let mut out = GradedSeries::zero(self.nvars, order);
        for n in 0..=order {
            out.coeffs[n] = &self.coeffs[n] - &rhs.coeffs[n];
        }
        out
    }
}
