//! Roots of univariate polynomials lying in the coefficient field.
//!
//! Over the rationals: the rational root test on the integer-normalized
//! squarefree part. Over rational functions: the polynomial is made monic with
//! polynomial coefficients (so its roots in the function field are
//! polynomials), specialized at a point where it stays squarefree, and each
//! rational root of the specialization is lifted degree by degree up to the
//! a priori degree bound, then verified exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::{lcm, Poly};
use super::ratfn::RatFn;
use super::unipoly::UniPoly;
use super::Rational;

pub(crate) fn rational_roots(p: &UniPoly<Rational>) -> (Vec<Rational>, UniPoly<Rational>) {
    if p.is_zero() {
        return (Vec::new(), p.clone());
    }
    let sf = p.squarefree_part();
    let mut roots = Vec::new();
    let mut rest = sf.clone();
    if Zero::is_zero(&rest.coeff(0)) {
        roots.push(<Rational as Zero>::zero());
        rest = rest.div_rem(&UniPoly::linear(&<Rational as Zero>::zero())).0;
    }
    if rest.degree() > 0 {
        let ints = integer_coeffs(&rest);
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors(&a0);
        let qs = divisors(&an);
        let mut cands: Vec<Rational> = Vec::new();
        for pn in &ps {
            for qd in &qs {
                let r = Rational::new(pn.clone(), qd.clone());
                if !cands.contains(&r) {
                    cands.push(r.clone());
                    cands.push(-r);
                }
            }
        }
        cands.sort();
        for c in cands {
            if rest.degree() == 0 {
                break;
            }
            if Zero::is_zero(&rest.eval(&c)) {
                rest = rest.div_rem(&UniPoly::linear(&c)).0;
                roots.push(c);
            }
        }
    }
    roots.sort();
    (roots, rest.monic())
}

fn integer_coeffs(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect()
}

/// Positive divisors of a nonzero integer (by trial division).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for x in &out {
            let mut v = x.clone();
            for _ in 0..=e {
                next.push(v.clone());
                v *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

pub(crate) fn ratfn_roots(p: &UniPoly<RatFn>) -> (Vec<RatFn>, UniPoly<RatFn>) {
    if p.is_zero() {
        return (Vec::new(), p.clone());
    }
    let sf = p.squarefree_part();
    let d = sf.degree();
    if d == 0 {
        return (Vec::new(), sf);
    }
    if let Some(rq) = as_rational_poly(&sf) {
        let (roots, rest) = rational_roots(&rq);
        return (
            roots.iter().map(RatFn::from_rational).collect(),
            UniPoly::new(rest.coeffs().iter().map(RatFn::from_rational).collect()),
        );
    }
    let nv = sf
        .coeffs()
        .iter()
        .map(|c| c.numer().nvars().max(c.denom().nvars()))
        .max()
        .unwrap_or(0);
    // sf is monic; clear denominators and substitute mu = L*lambda.
    let mut l = Poly::one(nv);
    for c in sf.coeffs() {
        l = lcm(&l, c.denom());
    }
    let pc: Vec<Poly> = sf
        .coeffs()
        .iter()
        .map(|c| c.numer().mul(&l.div_exact(c.denom()).expect("lcm")))
        .collect();
    let mut q: Vec<Poly> = Vec::with_capacity(d + 1);
    for (i, c) in pc.iter().enumerate().take(d) {
        q.push(c.mul(&l.pow((d - 1 - i) as u32)));
    }
    q.push(Poly::one(nv));

    let bound = (0..d)
        .filter(|&i| !q[i].is_zero())
        .map(|i| q[i].total_degree().unwrap_or(0) as usize / (d - i))
        .max()
        .unwrap_or(0);

    let Some(xi) = squarefree_point(&q, nv) else {
        return (Vec::new(), sf);
    };
    let qxi = UniPoly::new(q.iter().map(|c| c.eval(&xi)).collect());
    let dqxi = qxi.derivative();
    let shifted: Vec<Poly> = q.iter().map(|c| shift(c, &xi, false)).collect();

    let mut roots = Vec::new();
    let mut rest = sf.clone();
    for r0 in rational_roots(&qxi).0 {
        let slope = dqxi.eval(&r0);
        let mut mu = Poly::constant(nv, r0.clone());
        for k in 1..=bound {
            let val = horner_truncated(&shifted, &mu, k);
            let hk = Poly::from_terms(
                nv,
                val.terms()
                    .filter(|(m, _)| m.degree() as usize == k)
                    .map(|(m, c)| (m.clone(), c.clone())),
            );
            mu = mu.sub(&hk.scale(&(<Rational as One>::one() / &slope)));
        }
        let mu = shift(&mu, &xi, true);
        if horner(&q, &mu).is_zero() {
            let root = RatFn::new(mu, l.clone()).expect("nonzero denominator");
            rest = rest.div_rem(&UniPoly::linear(&root)).0;
            roots.push(root);
        }
    }
    (roots, rest.monic())
}

fn as_rational_poly(p: &UniPoly<RatFn>) -> Option<UniPoly<Rational>> {
    let cs: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.as_rational()).collect();
    cs.map(UniPoly::new)
}

/// A point where the specialization stays squarefree.
fn squarefree_point(q: &[Poly], nv: usize) -> Option<Vec<Rational>> {
    for t in 0..64i64 {
        let xi: Vec<Rational> = (0..nv)
            .map(|j| Rational::from_integer(BigInt::from(2 + t * (j as i64 + 1) + 3 * j as i64)))
            .collect();
        let s = UniPoly::new(q.iter().map(|c| c.eval(&xi)).collect());
        if s.gcd(&s.derivative()).degree() == 0 {
            return Some(xi);
        }
    }
    None
}

/// Substitute `x_j -> x_j + xi_j` (or `x_j - xi_j` when `back`).
fn shift(p: &Poly, xi: &[Rational], back: bool) -> Poly {
    let mut out = p.clone();
    for (j, v) in xi.iter().enumerate() {
        let v = if back { -v.clone() } else { v.clone() };
        let lin = Poly::var(p.nvars(), j).add(&Poly::constant(p.nvars(), v));
        out = out.compose(j, &lin);
    }
    out
}

fn truncate(p: &Poly, k: usize) -> Poly {
    Poly::from_terms(
        p.nvars(),
        p.terms()
            .filter(|(m, _)| m.degree() as usize <= k)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn horner_truncated(q: &[Poly], mu: &Poly, k: usize) -> Poly {
    let mut acc = Poly::zero(mu.nvars());
    for c in q.iter().rev() {
        acc = truncate(&acc.mul(mu), k).add(&truncate(c, k));
    }
    acc
}

fn horner(q: &[Poly], mu: &Poly) -> Poly {
    let mut acc = Poly::zero(mu.nvars());
    for c in q.iter().rev() {
        acc = acc.mul(mu).add(c);
    }
    acc
}
