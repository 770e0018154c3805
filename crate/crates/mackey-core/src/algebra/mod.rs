//! Exact rational-coefficient multivariate polynomial and rational-function
//! arithmetic, with linear substitution actions and an expression parser.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero rational
//! coefficients, ordered by graded lexicographic order with
//! `x1 > … > xr > t1 > … > tm`. Rational functions are kept in a unique
//! canonical form: numerator and denominator coprime under the multivariate
//! content/primitive-part GCD, denominator integer-primitive with positive
//! leading coefficient. Canonical forms are compared structurally, so two
//! values are equal as fractions if and only if they are equal as Rust values.

mod gcd;
mod parse;
mod poly;
mod ratfunc;

pub use gcd::{exact_div, poly_gcd};
pub use parse::{parse_poly, VarLayout};
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;
/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Convenience constructor for small rational constants.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `a/b` as an exact rational; panics if `b == 0`.
pub fn ratio(a: i64, b: i64) -> Rat {
    Rat::new(Int::from(a), Int::from(b))
}
