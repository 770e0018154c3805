//! Exact symbolic machinery for hyperplane-arrangement Coxeter complexes of
//! reductive-group representations, and for the induction/restriction/braiding
//! operators on Weyl-invariant polynomial rings that they carry.
//!
//! The library is organized around five layers:
//!
//! * [`algebra`] — exact multivariate polynomials and rational functions over
//!   the rationals, with a small expression parser and linear substitution
//!   actions. Everything downstream is exact; there is no floating point.
//! * [`repdata`] — representation specifications: the weight multiset of a
//!   representation `V`, the roots of the group, the Weyl group acting on the
//!   character lattice, plus combinators (duals, direct sums, cotangent
//!   spaces, auxiliary torus characters) and a JSON file format.
//! * [`arrangement`] — the Coxeter complex of a specification: cells as sign
//!   vectors with rational witness cocharacters, flats, the partial order,
//!   the Tits product, and exact enumeration backed by a rational simplex.
//! * [`weylgroups`] — subgroups attached to flats, coset and double-coset
//!   enumeration with canonical representatives, and the double-coset
//!   bijection underlying the Mackey formula.
//! * [`operators`] — Euler classes, induction kernels, shuffle induction,
//!   localized restriction, braiding operators, degree bookkeeping, the
//!   Mackey-formula verifier and the wheel-relation predicate.

pub mod algebra;
pub mod arrangement;
pub mod operators;
pub mod randpoly;
pub mod repdata;
pub mod simplex;
pub mod weylgroups;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
