use std::collections::BTreeMap;

use crate::arith::{matrix, poly_lcm, Field, Poly, RatFn, Rational};
use crate::error::{Error, Result};
use crate::jets::{jets_up_to, Jet, LinearEquation, MultiIndex, PDSystem};
use crate::module::LocalizedSystem;

use super::DualSpace;

/// An `n`-dimensional modular equation: coefficients `a^μ_k`.
pub type ModularEquation = BTreeMap<Jet, Rational>;

#[derive(Clone, Debug)]
pub struct Delocalized {
    /// `E_{α'}` for every `α'` with a nonzero part of order ≤ the bound.
    pub equations: Vec<(MultiIndex, ModularEquation)>,
    /// `max(|λ'| - |μ''|)` over the cleared coefficients `c^{λ'}_{μ''}`.
    pub delta: i64,
    /// Derivation rounds needed before the derivates of the section stop growing.
    pub tau: usize,
    /// `q + δ + τ` with `q` the order of the localized system.
    pub qprime: usize,
    /// The common denominator cleared from the section.
    pub denominator: Poly,
}

/// Expand a section of a localized system into `n`-dimensional modular
/// equations up to `order`, grouped by total `χ'`-exponent.
pub fn delocalize(space: &DualSpace<RatFn>, local: &LocalizedSystem, e: &[RatFn], order: usize) -> Result<Delocalized> {
    if local.nparams > 0 {
        return Err(Error::ParametersUnsupported);
    }
    let s = local.offset();
    let n = local.n;
    let values: Vec<(Jet, RatFn)> = jets_up_to(space.n, space.m, order)
        .into_iter()
        .map(|j| {
            let v = space.value(e, &j);
            (j, v)
        })
        .filter(|(_, v)| !Field::is_zero(v))
        .collect();
    let mut den = Poly::one(s);
    for (_, v) in &values {
        den = poly_lcm(&den, v.denom());
    }
    let cleared: Vec<(Jet, Poly)> = values
        .iter()
        .map(|(j, v)| (j.clone(), v.numer().mul(&den.div_exact(v.denom()).expect("lcm"))))
        .collect();
    let mut delta = i64::MIN;
    let mut max_deg = 0usize;
    for (j, p) in &cleared {
        for (mono, _) in p.terms() {
            delta = delta.max(mono.degree() as i64 - j.order() as i64);
            max_deg = max_deg.max(mono.degree() as usize);
        }
    }
    let mut equations = Vec::new();
    for alpha in MultiIndex::up_to_order(s, order + max_deg) {
        let mut eq = ModularEquation::new();
        for (j, p) in &cleared {
            for (mono, c) in p.terms() {
                let lambda = mono.padded(s);
                if lambda.iter().zip(alpha.entries()).any(|(l, a)| l > a) {
                    continue;
                }
                let mut mu: Vec<u32> = alpha.entries().iter().zip(&lambda).map(|(a, l)| a - l).collect();
                mu.extend(j.mu.entries());
                let jet = Jet::new(j.k, MultiIndex::new(mu));
                if jet.order() <= order {
                    let entry = eq.entry(jet).or_insert_with(|| Rational::from_integer(0.into()));
                    *entry += c;
                }
            }
        }
        eq.retain(|_, c| !num_traits::Zero::is_zero(c));
        if !eq.is_empty() {
            equations.push((alpha, eq));
        }
    }
    let tau = space.derivate_depth(&[e.to_vec()]);
    let qprime = (space.order as i64 + delta.max(-(space.order as i64)) + tau as i64).max(0) as usize;
    debug_assert_eq!(n, s + space.n);
    Ok(Delocalized {
        equations,
        delta: if delta == i64::MIN { 0 } else { delta },
        tau,
        qprime,
        denominator: den,
    })
}

/// `d_{i+1} E`: the coefficient of `μ` becomes that of `μ + 1_i`.
pub fn derivate_n(e: &ModularEquation, i: usize) -> ModularEquation {
    e.iter()
        .filter_map(|(j, c)| Some((Jet::new(j.k, j.mu.lower(i)?), c.clone())))
        .collect()
}

fn order_of(e: &ModularEquation) -> usize {
    e.keys().map(|j| j.order()).max().unwrap_or(0)
}

fn pair(row: &LinearEquation<Rational>, e: &ModularEquation) -> Rational {
    row.terms()
        .filter_map(|(j, c)| e.get(j).map(|x| c * x))
        .fold(Rational::from_integer(0.into()), |a, b| a + b)
}

/// Whether `e` vanishes on every equation of `s` and its prolongations up
/// to the order of `e`.
pub fn is_modular_equation(s: &PDSystem<Rational>, e: &ModularEquation) -> bool {
    let q = order_of(e).max(s.order());
    s.echelon(q).rows().all(|r| num_traits::Zero::is_zero(&pair(r, e)))
}

/// Whether every modular equation of `s` of order ≤ `q` is a combination
/// of derivates `d_γ E` of order ≤ `q` of the given equations.
pub fn derivate_generation_check(s: &PDSystem<Rational>, es: &[ModularEquation], q: usize) -> bool {
    let jets = jets_up_to(s.n, s.m, q);
    let rows: Vec<Vec<Rational>> = s.echelon(q).rows().map(|r| jets.iter().map(|j| r.coeff(j)).collect()).collect();
    let all = matrix::kernel(&rows, jets.len());
    let mut derivates: Vec<ModularEquation> = Vec::new();
    let mut todo: Vec<ModularEquation> = es.to_vec();
    while let Some(e) = todo.pop() {
        if e.is_empty() || derivates.contains(&e) {
            continue;
        }
        for i in 0..s.n {
            todo.push(derivate_n(&e, i));
        }
        derivates.push(e);
    }
    let vecs: Vec<Vec<Rational>> = derivates
        .iter()
        .filter(|e| order_of(e) <= q)
        .map(|e| jets.iter().map(|j| e.get(j).cloned().unwrap_or_else(|| Rational::from_integer(0.into()))).collect())
        .collect();
    if all.is_empty() {
        return true;
    }
    let mut span = matrix::span_basis(&vecs);
    let piv = matrix::rref(&mut span);
    all.iter().all(|v| matrix::in_span(&span, &piv, v))
}
