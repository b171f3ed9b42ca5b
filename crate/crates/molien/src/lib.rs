//! Exact computation of Hilbert series of classical-group invariants
//! inside relatively free algebras.
//!
//! A graded algebra whose homogeneous components are polynomial
//! GL_d-modules has a Hilbert series with coefficients in the ring of
//! symmetric functions: each degree decomposes into Schur polynomials.
//! For a classical subgroup G of GL_d, the subalgebra of G-invariants
//! has a univariate Hilbert series obtained from that decomposition by
//! two independent routes, multiplicity filtering and character
//! substitution, which this crate computes and cross-checks in exact
//! rational arithmetic.
//!
//! The pipeline, bottom to top:
//!
//! - [`polyring`]: multivariate rationals, truncated series in `z`, and
//!   closed rational forms with denominators `(1 - monomial z^k)^e`;
//! - [`symfunc`]: partitions, Schur polynomials, and decomposition of
//!   symmetric polynomials into Schur polynomials;
//! - [`multiplicity`]: multiplicity tables of graded series and their
//!   generating series `M` and `M'`;
//! - [`invariants`]: the subgroups Sp, O, SO, SL and UT of GL_d, with
//!   the partition filter and the substitution average for each, and
//!   the dual check comparing the two;
//! - [`algebras`]: two built-in families with known closed forms and
//!   known multiplicities, used as ground truth;
//! - [`regrade`]: turning a series over `m` generators into a series
//!   over `d` torus variables when the generators span a GL_d-module.

pub mod algebras;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod json;
pub mod multiplicity;
pub mod parse;
pub mod polyring;
pub mod regrade;
pub mod symfunc;

pub use error::{Error, Result};
pub use polyring::{
    rat, rat_int, DenomFactor, GradedSeries, Monomial, Rat, RationalForm, RationalTerm, TPoly,
    VarImage, ZPoly,
};
pub use symfunc::{partitions_of, schur_decompose, schur_poly, Partition, SchurExpansion};
pub use multiplicity::{multiplicity_table, MultTable};
pub use invariants::{
    admits_invariant, dual_check, filter_invariants, substitute_invariants, GroupKind, GroupSpec,
    InvariantSeries,
};
pub use algebras::{
    grassmann_cocharacter_table, hilbert_form, known_multiplicity, known_table,
    triangular_cocharacter_table, AlgebraFamily, AlgebraSpec,
};
pub use parse::parse_form;
pub use regrade::{module_weights, regrade_form, regrade_hilbert, ModuleSpec, Summand, WeightList};
