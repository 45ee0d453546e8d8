//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! degree-reverse-lexicographic order with `x_n > x_{n-1} > ... > x_1`. The
//! largest key is therefore the leading term. Exponent vectors are stored with
//! trailing zeros trimmed so that polynomials built with different ambient
//! variable counts still compare structurally.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// An exponent vector, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The monomial `x_var` (0-based index).
    pub fn var(var: usize) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponent vector padded (or truncated) to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variables actually occurring (index of last nonzero + 1).
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= other.exp(i))
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            (0..self.0.len()).map(|i| self.exp(i) - other.exp(i)).collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().min(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).min(other.exp(i))).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).max(other.exp(i))).collect())
    }

    /// Drop the exponent of `var`.
    pub fn without(&self, var: usize) -> Monomial {
        let mut e = self.0.clone();
        if var < e.len() {
            e[var] = 0;
        }
        Monomial::new(e)
    }

    fn fmt_named(&self, names: &dyn Fn(usize) -> String) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names(i)),
                _ => parts.push(format!("{}^{}", names(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Degree-reverse-lexicographic comparison with `x_1` the smallest variable.
pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let ea = a.get(i).copied().unwrap_or(0);
            let eb = b.get(i).copied().unwrap_or(0);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A polynomial in `x_1..x_nvars` with rational coefficients.
#[derive(Clone, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{var+1}` (0-based `var`).
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(nvars.max(var + 1), Monomial::var(var), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(nvars.max(m.support_len()));
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, it: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Highest 0-based variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|m| m.support_len())
            .max()
            .and_then(|l| l.checked_sub(1))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.support_len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.nvars = self.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.nvars = self.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars.max(other.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars.max(m.support_len()),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Scale so that the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars.max(divisor.nvars));
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients with respect to `var`, as `(degree, coefficient)` pairs.
    pub fn coeffs_in(&self, var: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(var))
                .or_insert_with(|| Poly::zero(self.nvars))
                .add_term(m.without(var), c.clone());
        }
        out
    }

    fn lc_in(&self, var: usize) -> (u32, Poly) {
        self.coeffs_in(var)
            .into_iter()
            .next_back()
            .unwrap_or((0, Poly::zero(self.nvars)))
    }

    /// Substitute a rational value for `var`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut v = c.clone();
            for _ in 0..e {
                v *= value;
            }
            r.add_term(m.without(var), v);
        }
        r
    }

    /// Substitute a polynomial for `var`.
    pub fn compose(&self, var: usize, value: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars.max(value.nvars));
        let mut powers: Vec<Poly> = vec![Poly::one(value.nvars)];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let base = Poly::monomial(self.nvars, m.without(var), c.clone());
            r = r.add(&base.mul(&powers[e]));
        }
        r
    }

    /// Rename variables: variable `i` becomes `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        let mut r = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; nvars];
            for (i, &x) in m.exps().iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            r.add_term(Monomial::new(e), c.clone());
        }
        r
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Pseudo-remainder of `self` by `b` with respect to `var`.
    fn prem(&self, b: &Poly, var: usize) -> Poly {
        let (db, lb) = b.lc_in(var);
        let mut a = self.clone();
        loop {
            if a.is_zero() {
                return a;
            }
            let (da, la) = a.lc_in(var);
            if da < db {
                return a;
            }
            let shift = Monomial::var(var);
            let mut sb = b.mul(&la);
            for _ in 0..(da - db) {
                sb = sb.mul_monomial(&shift, &Rational::one());
            }
            a = a.mul(&lb).sub(&sb);
        }
    }

    /// Content with respect to `var`: gcd of the coefficients in `var`.
    pub fn content_in(&self, var: usize) -> Poly {
        let mut g = Poly::zero(self.nvars);
        for c in self.coeffs_in(var).values() {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, var: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(var);
        self.div_exact(&c).expect("content divides")
    }

    /// Rational content cleared: integer coefficients with gcd 1 and positive leading coefficient.
    pub fn integer_primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut scale = Rational::new(den, num_gcd);
        if self.leading_coeff().is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let name = |i: usize| {
            names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i + 1))
        };
        format_terms(self.terms.iter().rev(), &name)
    }
}

fn format_terms<'a, I>(terms: I, name: &dyn Fn(usize) -> String) -> String
where
    I: Iterator<Item = (&'a Monomial, &'a Rational)>,
{
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = m.fmt_named(name);
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", a, mono));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&[]))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

/// Greatest common divisor, normalized to leading coefficient one.
///
/// `gcd(0, 0) = 0`. Uses the primitive polynomial remainder sequence,
/// recursing on the coefficient ring one variable at a time.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let nv = a.nvars.max(b.nvars);
    if a.is_zero() {
        return b.monic().with_nvars(nv);
    }
    if b.is_zero() {
        return a.monic().with_nvars(nv);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(nv);
    }
    let var = a.max_var().max(b.max_var()).expect("nonconstant");
    if !a.involves(var) {
        return gcd(a, &b.content_in(var)).with_nvars(nv);
    }
    if !b.involves(var) {
        return gcd(&a.content_in(var), b).with_nvars(nv);
    }
    let ca = a.content_in(var);
    let cb = b.content_in(var);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = p.prem(&q, var);
        if r.is_zero() {
            break q;
        }
        if r.degree_in(var) == 0 {
            break Poly::one(nv);
        }
        p = q;
        q = r.primitive_in(var);
    };
    c.mul(&g.primitive_in(var)).monic().with_nvars(nv)
}

/// Least common multiple, monic.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.nvars.max(b.nvars));
    }
    let g = gcd(a, b);
    a.mul(b).div_exact(&g).expect("gcd divides").monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn leading_term_follows_degrevlex() {
        // x3 > x2 > x1 at equal degree
        let p = x(0).add(&x(2)).add(&x(1));
        assert_eq!(p.leading_term().unwrap().0, &Monomial::var(2));
        // x2^2 > x1*x3 since x1 is the smallest variable
        let p = x(1).mul(&x(1)).add(&x(0).mul(&x(2)));
        assert_eq!(p.leading_term().unwrap().0, &Monomial::new(vec![0, 2]));
    }

    #[test]
    fn monomial_gcd() {
        let a = x(0).mul(&x(0));
        let b = x(0).mul(&x(1));
        assert_eq!(gcd(&a, &b), x(0));
    }

    #[test]
    fn gcd_with_zero_is_normalized_input() {
        let p = x(0).scale(&q(3)).add(&Poly::from_int(3, 6));
        assert_eq!(gcd(&p, &Poly::zero(3)), p.monic());
        assert!(gcd(&Poly::zero(3), &Poly::zero(3)).is_zero());
    }

    #[test]
    fn gcd_of_difference_of_squares_and_square() {
        let (a, b) = (x(0), x(1));
        let p = a.mul(&a).sub(&b.mul(&b));
        let s = a.add(&b);
        let r = s.mul(&s);
        let g = gcd(&p, &r);
        assert_eq!(g, s.monic());
        // oracle: exact division both ways
        assert!(p.div_exact(&g).is_some());
        assert!(r.div_exact(&g).is_some());
    }

    #[test]
    fn div_exact_detects_remainder() {
        let p = x(0).mul(&x(1)).add(&Poly::one(3));
        assert!(p.div_exact(&x(0)).is_none());
    }

    #[test]
    fn compose_and_substitute_agree() {
        let p = x(0).mul(&x(0)).add(&x(1).scale(&q(2)));
        let c = p.compose(0, &Poly::from_int(3, 3));
        assert_eq!(c, p.substitute(0, &q(3)));
    }
}
