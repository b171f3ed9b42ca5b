//! Exact polynomials in the grading variable `z` with `TPoly` coefficients.

use super::series::GradedSeries;
use super::{Monomial, Rat, TPoly, VarImage};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in `z`; `coeffs[k]` multiplies `z^k`. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    nvars: usize,
    coeffs: Vec<TPoly>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> Self {
        ZPoly {
            nvars,
            coeffs: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_coeffs(nvars, vec![TPoly::one(nvars)])
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::from_coeffs(nvars, vec![TPoly::constant(nvars, c)])
    }

    pub fn from_coeffs(nvars: usize, coeffs: Vec<TPoly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.nvars(), nvars, "coefficient variable count mismatch");
        }
        let mut p = ZPoly { nvars, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(TPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `z`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> TPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| TPoly::zero(self.nvars))
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rat) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        ZPoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_tpoly(&self, p: &TPoly) -> ZPoly {
        ZPoly::from_coeffs(self.nvars, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Truncates to a series of the given order (inclusive).
    pub fn to_series(&self, order: usize) -> GradedSeries {
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(self.coeff(k));
        }
        GradedSeries::from_coeffs(self.nvars, coeffs)
    }

    /// Applies a variable substitution to every coefficient.
    pub fn substitute(&self, images: &[VarImage]) -> Result<ZPoly> {
        if self.is_zero() {
            if images.len() != self.nvars {
                return Err(Error::VarMismatch {
                    expected: self.nvars,
                    found: images.len(),
                });
            }
            return Ok(ZPoly::zero(super::image_nvars(images)?));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(images))
            .collect::<Result<Vec<_>>>()?;
        let nvars = coeffs[0].nvars();
        Ok(ZPoly::from_coeffs(nvars, coeffs))
    }

    /// Renders using `var` for the graded variables and `z` for the
    /// series variable, lowest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.render(var);
            let needs_parens = c.num_terms() > 1;
            let body = if needs_parens { format!("({cs})") } else { cs };
            let part = match k {
                0 => body,
                1 if body == "1" => "z".to_string(),
                1 => format!("{body}*z"),
                _ if body == "1" => format!("z^{k}"),
                _ => format!("{body}*z^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        ZPoly::from_coeffs(self.nvars, coeffs)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        assert_eq!(self.nvars, rhs.nvars);
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs = vec![TPoly::zero(self.nvars); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ZPoly::from_coeffs(self.nvars, coeffs)
    }
}

/// The factor `1 + t_i * z` used when building product numerators.
pub fn one_plus_var_z(nvars: usize, i: usize) -> ZPoly {
    ZPoly::from_coeffs(
        nvars,
        vec![TPoly::one(nvars), TPoly::variable(nvars, i)],
    )
}

/// The monomial `m * z^k` as a polynomial.
pub fn monomial_zpow(m: Monomial, k: usize) -> ZPoly {
    let nvars = m.nvars();
    let mut coeffs = vec![TPoly::zero(nvars); k + 1];
    coeffs[k] = TPoly::from_terms(nvars, [(m, num_traits::One::one())]);
    ZPoly::from_coeffs(nvars, coeffs)
}

#[cfg(test)]
mod tests {
    use super::super::rat_int;
    use super::*;

    #[test]
    fn product_of_linear_factors() {
        // (1 + t1 z)(1 + t2 z) = 1 + (t1 + t2) z + t1 t2 z^2
        let a = one_plus_var_z(2, 0);
        let b = one_plus_var_z(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(prod.coeff(0), TPoly::one(2));
        let e1 = &TPoly::variable(2, 0) + &TPoly::variable(2, 1);
        assert_eq!(prod.coeff(1), e1);
        let e2 = &TPoly::variable(2, 0) * &TPoly::variable(2, 1);
        assert_eq!(prod.coeff(2), e2);
    }

    #[test]
    fn trim_removes_cancelled_leading_terms() {
        let a = ZPoly::from_coeffs(1, vec![TPoly::one(1), TPoly::variable(1, 0)]);
        let b = ZPoly::from_coeffs(1, vec![TPoly::zero(1), TPoly::variable(1, 0)]);
        let diff = &a - &b;
        assert_eq!(diff.degree(), Some(0));
        assert_eq!(diff, ZPoly::one(1));
    }

    #[test]
    fn to_series_truncates_and_pads() {
        let p = monomial_zpow(Monomial::new(vec![1]), 2);
        let s = p.to_series(4);
        assert_eq!(s.order(), 4);
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(2), &TPoly::variable(1, 0));
        assert!(s.coeff(4).is_zero());
    }

    #[test]
    fn render_shows_powers_of_z() {
        let p = ZPoly::from_coeffs(
            1,
            vec![
                TPoly::constant(1, rat_int(-1)),
                TPoly::variable(1, 0),
            ],
        );
        assert_eq!(p.render("t"), "-1 + t1*z");
    }
}
