//! Quotients, saturations and annihilators of submodules `N ⊆ Q[x]^m`,
//! given by generating rows.

use crate::arith::{Monomial, Poly};
use crate::error::{Error, Result};

use super::groebner::{Engine, TermOrder, Vector};

pub type Row = Vec<Poly>;

fn engine(nvars: usize, rank: usize) -> Engine {
    Engine::new(nvars, rank, TermOrder::degrevlex(nvars))
}

fn widen(row: &[Poly], nvars: usize) -> Row {
    row.iter().map(|p| p.clone().with_nvars(nvars)).collect()
}

/// Reduced Gröbner basis under term over position degrevlex.
pub fn groebner(rows: &[Row], nvars: usize, rank: usize) -> Vec<Row> {
    let e = engine(nvars, rank);
    let gens: Vec<Vector> = rows.iter().map(|r| e.vector(r)).collect();
    e.basis(&gens).iter().map(|v| e.row(v)).collect()
}

/// Normal form of `row` modulo the submodule.
pub fn normal_form(rows: &[Row], row: &[Poly], nvars: usize) -> Row {
    let rank = row.len();
    let e = engine(nvars, rank);
    let gens: Vec<Vector> = rows.iter().map(|r| e.vector(r)).collect();
    let g = e.basis(&gens);
    e.row(&e.reduce(&e.vector(row), &g))
}

pub fn contains_all(rows: &[Row], others: &[Row], nvars: usize, rank: usize) -> bool {
    let e = engine(nvars, rank);
    let gens: Vec<Vector> = rows.iter().map(|r| e.vector(r)).collect();
    let g = e.basis(&gens);
    others.iter().all(|r| e.contains(&g, &e.vector(r)))
}

/// Rows without `t` (the last variable) of a Gröbner basis eliminating it.
fn eliminate_last(gens: &[Row], nvars: usize, rank: usize) -> Vec<Row> {
    let t = nvars - 1;
    let order = TermOrder::new(vec![vec![t], (0..t).collect()], 1);
    let e = Engine::new(nvars, rank, order);
    let vs: Vec<Vector> = gens.iter().map(|r| e.vector(r)).collect();
    e.basis(&vs)
        .iter()
        .filter(|v| v.terms().iter().all(|(m, _, _)| m.exp(t) == 0))
        .map(|v| e.row(v).into_iter().map(|p| p.with_nvars(t)).collect())
        .collect()
}

/// `N ∩ D·p` as the list of multipliers `g` with `g p ∈ N`.
fn meet_with_multiples(rows: &[Row], p: &[Poly], nvars: usize) -> Vec<Poly> {
    let rank = p.len();
    let t = Poly::var(nvars + 1, nvars);
    let one_t = Poly::one(nvars + 1).sub(&t);
    let mut gens: Vec<Row> = rows
        .iter()
        .map(|r| widen(r, nvars + 1).iter().map(|x| x.mul(&t)).collect())
        .collect();
    gens.push(widen(p, nvars + 1).iter().map(|x| x.mul(&one_t)).collect());
    let pivot = p.iter().position(|x| !x.is_zero()).unwrap();
    eliminate_last(&gens, nvars + 1, rank)
        .into_iter()
        .filter_map(|v| v[pivot].div_exact(&p[pivot]))
        .collect()
}

/// `ann(p̄) = {g : g p ∈ N}`.
pub fn annihilator(rows: &[Row], p: &[Poly], nvars: usize) -> Vec<Poly> {
    if p.iter().all(|x| x.is_zero()) {
        return vec![Poly::one(nvars)];
    }
    meet_with_multiples(rows, p, nvars)
}

/// `N : f = {v : f v ∈ N}`.
pub fn quotient(rows: &[Row], f: &Poly, nvars: usize, rank: usize) -> Result<Vec<Row>> {
    if f.is_zero() {
        return Err(Error::ZeroDivisorInput);
    }
    let t = Poly::var(nvars + 1, nvars);
    let one_t = Poly::one(nvars + 1).sub(&t);
    let f1 = f.clone().with_nvars(nvars + 1);
    let mut gens: Vec<Row> = rows
        .iter()
        .map(|r| widen(r, nvars + 1).iter().map(|x| x.mul(&t)).collect())
        .collect();
    for k in 0..rank {
        let mut e = vec![Poly::zero(nvars + 1); rank];
        e[k] = f1.mul(&one_t);
        gens.push(e);
    }
    let meet = eliminate_last(&gens, nvars + 1, rank);
    let out: Vec<Row> = meet
        .iter()
        .map(|v| v.iter().map(|x| x.div_exact(f).expect("element of f·F")).collect())
        .collect();
    Ok(groebner(&out, nvars, rank))
}

/// `N : f^∞`.
pub fn saturate(rows: &[Row], f: &Poly, nvars: usize, rank: usize) -> Result<Vec<Row>> {
    let mut cur = groebner(rows, nvars, rank);
    loop {
        let next = quotient(&cur, f, nvars, rank)?;
        if contains_all(&cur, &next, nvars, rank) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Leading coefficients, as polynomials in `x_1..x_s`, of a Gröbner basis
/// for the order that treats `x_1..x_s` as coefficients.
pub fn split_leading_coefficients(rows: &[Row], nvars: usize, rank: usize, s: usize) -> Vec<Poly> {
    let order = TermOrder::new(vec![(s..nvars).collect(), (0..s).collect()], 1);
    let e = Engine::new(nvars, rank, order);
    let gens: Vec<Vector> = rows.iter().map(|r| e.vector(r)).collect();
    let outer = |m: &Monomial| Monomial::new((0..nvars).map(|v| if v < s { 0 } else { m.exp(v) }).collect());
    let inner = |m: &Monomial| Monomial::new((0..s).map(|v| m.exp(v)).collect());
    e.basis(&gens)
        .iter()
        .map(|v| {
            let (lm, lk, _) = v.lead().unwrap();
            let key = outer(lm);
            Poly::from_terms(
                nvars,
                v.terms()
                    .iter()
                    .filter(|(m, k, _)| k == lk && outer(m) == key)
                    .map(|(m, _, c)| (inner(m), c.clone())),
            )
        })
        .collect()
}

/// `N Q(x_1..x_s)[x_{s+1}..]^m ∩ Q[x]^m` and the denominator `h` with
/// `N : h^∞` equal to it.
pub fn localization_kernel(rows: &[Row], nvars: usize, rank: usize, s: usize) -> Result<(Vec<Row>, Poly)> {
    let mut h = Poly::one(nvars);
    for c in split_leading_coefficients(rows, nvars, rank, s) {
        if !c.is_constant() {
            h = crate::arith::poly_lcm(&h, &c);
        }
    }
    if h.is_constant() {
        return Ok((groebner(rows, nvars, rank), h));
    }
    Ok((saturate(rows, &h, nvars, rank)?, h))
}

/// Generators of `ann(p̄) ∩ Q[x_1..x_s]`.
pub fn annihilator_in(rows: &[Row], p: &[Poly], nvars: usize, s: usize) -> Vec<Poly> {
    let ann = annihilator(rows, p, nvars);
    let order = TermOrder::new(vec![(s..nvars).collect(), (0..s).collect()], 1);
    let e = Engine::new(nvars, 1, order);
    let gens: Vec<Vector> = ann.iter().map(|a| e.vector(std::slice::from_ref(a))).collect();
    e.basis(&gens)
        .iter()
        .map(|v| e.row(v).remove(0))
        .filter(|a| (s..nvars).all(|v| !a.involves(v)))
        .collect()
}
