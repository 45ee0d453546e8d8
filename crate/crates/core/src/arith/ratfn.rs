//! Reduced rational functions over the rationals.

use std::fmt;

use num_traits::One;

use super::field::Field;
use super::poly::{gcd, lcm, Poly};
use super::unipoly::UniPoly;
use super::Rational;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic under the global term order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Normalize `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        let nv = num.nvars().max(den.nvars());
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(nv),
                den: Poly::one(nv),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides"),
                    den.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let lc = den.leading_coeff();
        let s = <Rational as One>::one() / lc;
        RatFn {
            num: num.scale(&s).with_nvars(nv),
            den: den.scale(&s).with_nvars(nv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let nv = p.nvars();
        RatFn {
            num: p,
            den: Poly::one(nv),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Substitute a rational value for variable `var`; `None` if the
    /// denominator vanishes there.
    pub fn substitute(&self, var: usize, value: &Rational) -> Option<RatFn> {
        let d = self.den.substitute(var, value);
        if d.is_zero() {
            return None;
        }
        Some(Self::reduce(self.num.substitute(var, value), d))
    }

    /// Rename variables as in [`Poly::remap`].
    pub fn remap(&self, nvars: usize, map: &[usize]) -> RatFn {
        Self::reduce(self.num.remap(nvars, map), self.den.remap(nvars, map))
    }
}

impl Field for RatFn {
    fn zero() -> Self {
        RatFn::from_poly(Poly::zero(0))
    }
    fn one() -> Self {
        RatFn::from_poly(Poly::one(0))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let l = lcm(&self.den, &other.den);
        let a = self.num.mul(&l.div_exact(&self.den).expect("lcm"));
        let b = other.num.mul(&l.div_exact(&other.den).expect("lcm"));
        Self::reduce(a.add(&b), l)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n = self
            .num
            .div_exact(&g1)
            .expect("gcd")
            .mul(&other.num.div_exact(&g2).expect("gcd"));
        let d = self
            .den
            .div_exact(&g2)
            .expect("gcd")
            .mul(&other.den.div_exact(&g1).expect("gcd"));
        Self::reduce(n, d)
    }
    fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::reduce(self.den.clone(), self.num.clone())
    }
    fn from_rational(q: &Rational) -> Self {
        RatFn::from_poly(Poly::constant(0, q.clone()))
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.den.is_constant() {
            let d = self.den.as_constant()?;
            self.num.as_constant().map(|n| n / d)
        } else {
            None
        }
    }
    fn to_ratfn(&self) -> RatFn {
        self.clone()
    }
    fn fmt_named(&self, names: &[String]) -> String {
        let n = self.num.fmt_with(names);
        if self.den.is_one() {
            return n;
        }
        let wrap = |p: &Poly, s: String| {
            if p.num_terms() > 1 {
                format!("({})", s)
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(&self.num, n),
            wrap(&self.den, self.den.fmt_with(names))
        )
    }
    fn roots(p: &UniPoly<Self>) -> (Vec<Self>, UniPoly<Self>) {
        super::roots::ratfn_roots(p)
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_named(&[]))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({})", self)
    }
}

/// Multiply a row by the lcm of its denominators.
///
/// Returns the polynomial row and the common denominator `common`, so that
/// `row[i] = out[i] / common`.
pub fn clear_denominators(row: &[RatFn]) -> (Vec<Poly>, Poly) {
    let nv = row
        .iter()
        .map(|r| r.num.nvars().max(r.den.nvars()))
        .max()
        .unwrap_or(0);
    let mut common = Poly::one(nv);
    for r in row {
        if !r.is_zero() {
            common = lcm(&common, &r.den);
        }
    }
    let out = row
        .iter()
        .map(|r| {
            if r.is_zero() {
                Poly::zero(nv)
            } else {
                r.num
                    .mul(&common.div_exact(&r.den).expect("lcm"))
                    .with_nvars(nv)
            }
        })
        .collect();
    (out, common)
}

/// The constant rational function `q`.
pub fn constant(q: Rational) -> RatFn {
    RatFn::from_poly(Poly::constant(0, q))
}

impl Default for RatFn {
    fn default() -> Self {
        <RatFn as Field>::zero()
    }
}
