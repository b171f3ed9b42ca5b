//! Partitions, Schur polynomials, and decomposition of symmetric
//! polynomials into the Schur basis.
//!
//! `schur_poly` evaluates by the branching rule
//! `s_lambda(t_1..t_d) = sum over horizontal strips lambda/mu of
//! s_mu(t_1..t_{d-1}) * t_d^{|lambda/mu|}`,
//! which is exactly semistandard-tableau counting with shared
//! subproblems, so coefficients are nonnegative integers and no
//! division ever happens. Results are memoized process-wide.
//!
//! `schur_decompose` peels off the graded-lex leading term: for a
//! homogeneous symmetric polynomial the leading exponent is weakly
//! decreasing, its partition indexes an expansion member with that
//! leading coefficient as multiplicity, and subtracting strictly lowers
//! the leading monomial, so the loop terminates.

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Rat, TPoly};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Integer partition: weakly decreasing positive parts.
#[derive(
    Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease; trailing zeros are stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Config(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Config(format!(
                "partition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Convenience constructor for literals; panics on invalid input.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(parts)
    }

    /// Parts extended with zeros to length `d`.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        assert!(self.len() <= d, "partition has more parts than variables");
        let mut e = self.0.clone();
        e.resize(d, 0);
        e
    }

    /// Reads a weakly decreasing exponent tuple as a partition.
    pub fn from_exponents(m: &Monomial) -> Option<Partition> {
        let e = m.exponents();
        for w in e.windows(2) {
            if w[0] < w[1] {
                return None;
            }
        }
        Some(Partition(
            e.iter().copied().take_while(|&x| x > 0).collect(),
        ))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = String;
    fn try_from(parts: Vec<u32>) -> std::result::Result<Self, String> {
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

/// All partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(n: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        let lo = remaining.div_ceil(slots);
        if lo > hi {
            return;
        }
        for p in (lo..=hi).rev() {
            prefix.push(p as u32);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// The Schur polynomial `s_lambda(t_1, ..., t_d)`. Zero when `lambda`
/// has more than `d` parts.
pub fn schur_poly(lambda: &Partition, d: usize) -> TPoly {
    schur_cached(lambda, d).as_ref().clone()
}

pub(crate) fn schur_cached(lambda: &Partition, d: usize) -> Arc<TPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Arc<TPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(lambda.clone(), d)) {
        return hit.clone();
    }
    let computed = Arc::new(compute_schur(lambda, d));
    cache
        .lock()
        .unwrap()
        .entry((lambda.clone(), d))
        .or_insert(computed)
        .clone()
}

fn compute_schur(lambda: &Partition, d: usize) -> TPoly {
    if lambda.len() > d {
        return TPoly::zero(d);
    }
    if d == 0 {
        return TPoly::one(0);
    }
    let mut out = TPoly::zero(d);
    for (mu, strip) in horizontal_strips(lambda) {
        if mu.len() > d - 1 {
            continue;
        }
        let sub = schur_cached(&mu, d - 1);
        for (mono, c) in sub.terms() {
            let mut e = mono.exponents().to_vec();
            e.push(strip);
            out.add_term(Monomial::new(e), c.clone());
        }
    }
    out
}

/// All `mu` such that `lambda/mu` is a horizontal strip, paired with the
/// strip size, i.e. `lambda_{i+1} <= mu_i <= lambda_i` for every row.
fn horizontal_strips(lambda: &Partition) -> Vec<(Partition, u32)> {
    fn rec(parts: &[u32], i: usize, mu: &mut Vec<u32>, out: &mut Vec<(Partition, u32)>) {
        if i == parts.len() {
            let trimmed: Vec<u32> = mu.iter().copied().take_while(|&x| x > 0).collect();
            let removed: u32 = parts.iter().sum::<u32>() - trimmed.iter().sum::<u32>();
            out.push((Partition(trimmed), removed));
            return;
        }
        let lo = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
        for v in lo..=parts[i] {
            mu.push(v);
            rec(parts, i + 1, mu, out);
            mu.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, &mut Vec::new(), &mut out);
    out
}

/// True when the polynomial is invariant under every exchange of
/// adjacent variables (hence under all permutations).
pub fn is_symmetric(p: &TPoly) -> bool {
    let d = p.nvars();
    for i in 0..d.saturating_sub(1) {
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e[i] == e[i + 1] {
                continue;
            }
            if p.coeff(&m.swapped(i, i + 1)) != *c {
                return false;
            }
        }
    }
    true
}

/// Expansion of a homogeneous symmetric polynomial in the Schur basis.
/// Multiplicities may be any rationals; callers that need nonnegative
/// integers validate separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    pub nvars: usize,
    pub degree: usize,
    pub multiplicities: BTreeMap<Partition, Rat>,
}

impl SchurExpansion {
    /// Re-evaluates the expansion as a polynomial.
    pub fn to_poly(&self) -> TPoly {
        let mut out = TPoly::zero(self.nvars);
        for (lambda, mult) in &self.multiplicities {
            let s = schur_cached(lambda, self.nvars);
            for (m, c) in s.terms() {
                out.add_term(m.clone(), c * mult);
            }
        }
        out
    }
}

/// Decomposes a homogeneous symmetric polynomial as a rational linear
/// combination of Schur polynomials.
pub fn schur_decompose(p: &TPoly) -> Result<SchurExpansion> {
    let d = p.nvars();
    let degree = p.homogeneous_degree()?.unwrap_or(0);
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let mut rem = p.clone();
    let mut multiplicities = BTreeMap::new();
    while let Some((mono, coeff)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let lambda = Partition::from_exponents(&mono).ok_or_else(|| {
            Error::LeadingNotPartition {
                exponents: mono.exponents().to_vec(),
            }
        })?;
        let s = schur_cached(&lambda, d);
        for (m, c) in s.terms() {
            rem.add_term(m.clone(), -(c * &coeff));
        }
        multiplicities.insert(lambda, coeff);
    }
    Ok(SchurExpansion {
        nvars: d,
        degree,
        multiplicities,
    })
}
