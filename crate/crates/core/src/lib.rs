//! Exact analysis of linear partial differential systems with constant
//! coefficients, viewed as finitely presented modules over a polynomial ring.

pub mod arith;
pub mod error;

pub use arith::{Field, Poly, RatFn, Rational};
pub use error::{Error, Result};
pub mod jets;

pub use jets::{Jet, LinearEquation, MultiIndex, PDSystem};
pub mod io;
pub mod involution;

pub use involution::{complete, CompletionOptions, InvolutiveSystem};
pub mod module;
pub mod dual;
