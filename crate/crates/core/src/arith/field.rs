use std::fmt::Debug;

use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use super::{Poly, RatFn};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// A commutative field with exact arithmetic.
///
/// Implemented by [`Rational`] and by [`RatFn`] (rational functions in
/// parameters and localized indeterminates).
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<Rational>;
    /// Embedding into rational functions.
    fn to_ratfn(&self) -> RatFn;
    fn fmt_named(&self, names: &[String]) -> String;

    /// Distinct roots in the field of a squarefree-reduced polynomial, with the
    /// factor that has no roots left over.
    fn roots(p: &UniPoly<Self>) -> (Vec<Self>, UniPoly<Self>);

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn is_one(&self) -> bool {
        self == &Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&super::rat(n))
    }

    fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_ratfn(&self) -> RatFn {
        RatFn::from_poly(Poly::constant(0, self.clone()))
    }
    fn fmt_named(&self, _names: &[String]) -> String {
        self.to_string()
    }
    fn roots(p: &UniPoly<Self>) -> (Vec<Self>, UniPoly<Self>) {
        super::roots::rational_roots(p)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}
