//! Exact arithmetic: rationals, multivariate polynomials, rational functions
//! and the [`Field`] abstraction the linear algebra is generic over.

mod field;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfn;
mod roots;
pub mod unipoly;

pub use field::{Field, Rational};
pub use poly::{gcd as poly_gcd, lcm as poly_lcm, Monomial, Poly};
pub use ratfn::{clear_denominators, RatFn};
pub use unipoly::UniPoly;

use num_bigint::BigInt;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
