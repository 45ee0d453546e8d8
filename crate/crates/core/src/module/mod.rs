//! Torsion submodules by partial localization and contraction.

pub mod groebner;
mod localize;
mod parametrize;
mod submodule;

pub use localize::{localize, LocalizedSystem};
pub use parametrize::{parametrize, Parametrization, Parametrized};

pub use submodule::{annihilator, groebner, normal_form, quotient, saturate, Row};

use crate::arith::matrix;
use crate::arith::{Monomial, Poly, Rational};
use crate::error::{Error, Result};
use crate::involution::coords::Transformer;
use crate::involution::{complete, CompletionOptions, InvolutiveSystem};
use crate::jets::{Jet, LinearEquation, MultiIndex, PDSystem};

/// `Σ c y^k_μ` as the row whose `k`-th entry is `Σ c χ^μ`.
pub fn equation_to_row(e: &LinearEquation<Rational>, n: usize, m: usize) -> Row {
    let mut row = vec![Poly::zero(n); m];
    for (j, c) in e.terms() {
        row[j.k].add_term(Monomial::new(j.mu.entries().to_vec()), c.clone());
    }
    row
}

pub fn row_to_equation(row: &[Poly], n: usize) -> LinearEquation<Rational> {
    let mut e = LinearEquation::zero();
    for (k, p) in row.iter().enumerate() {
        for (mono, c) in p.terms() {
            e.add_term(Jet::new(k, MultiIndex::new(mono.padded(n))), c.clone());
        }
    }
    e
}

pub fn system_rows(s: &PDSystem<Rational>) -> Vec<Row> {
    s.equations.iter().map(|e| equation_to_row(e, s.n, s.m)).collect()
}

/// Maps equations written in the coordinates of `inv` back to the input ones.
pub(crate) fn back_to_input(inv: &InvolutiveSystem<Rational>) -> impl FnMut(&LinearEquation<Rational>) -> LinearEquation<Rational> {
    let inv_b = matrix::inverse(&inv.coordinate_change).expect("coordinate change is invertible");
    let mut t = Transformer::new(&inv_b);
    move |e| t.apply(e)
}

fn ideal_rows(a: &[Poly]) -> Vec<Row> {
    a.iter().map(|p| vec![p.clone()]).collect()
}

/// Kernel of `M → Q(χ_1..χ_{n-r}) ⊗ M`, presented by the equations it adds.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub split: usize,
    /// The input equations followed by the added ones.
    pub system: PDSystem<Rational>,
    pub added: Vec<LinearEquation<Rational>>,
    /// `h ∈ Q[χ_1..χ_{n-r}]` with the kernel equal to `N : h^∞`, in the
    /// coordinates of the involutive system.
    pub denominator: Poly,
}

/// Saturation of `rows` at `x_1..x_s` and the elements it adds, reduced
/// modulo `rows`, with redundant ones dropped.
fn new_elements(rows: &[Row], n: usize, m: usize, s: usize) -> Result<(Vec<Row>, Vec<Row>, Poly)> {
    let (sat, h) = submodule::localization_kernel(rows, n, m, s)?;
    let base = groebner(rows, n, m);
    let mut kept: Vec<Row> = Vec::new();
    for g in &sat {
        let nf = normal_form(&base, g, n);
        if nf.iter().all(|p| p.is_zero()) {
            continue;
        }
        let mut all = base.clone();
        all.extend(kept.iter().cloned());
        if !submodule::contains_all(&all, &[nf.clone()], n, m) {
            kept.push(nf);
        }
    }
    Ok((sat, kept, h))
}

/// Saturated rows at split `r`, in the coordinates of `inv`.
fn kernel_rows(inv: &InvolutiveSystem<Rational>, r: usize) -> Result<(Vec<Row>, Vec<Row>, Poly)> {
    let (n, m) = (inv.n(), inv.m());
    new_elements(&system_rows(&inv.system), n, m, n - r)
}

pub fn contract(inv: &InvolutiveSystem<Rational>, r: usize) -> Result<Contraction> {
    if r > inv.n() {
        return Err(Error::Invalid(format!("split {} exceeds n = {}", r, inv.n())));
    }
    if r > inv.codim {
        return Err(Error::NonFullClasses(r));
    }
    let (_, kept, h) = kernel_rows(inv, r)?;
    let mut back = back_to_input(inv);
    let added: Vec<LinearEquation<Rational>> = kept.iter().map(|g| back(&row_to_equation(g, inv.n())).monic()).collect();
    let mut eqs: Vec<LinearEquation<Rational>> = inv.system.equations.iter().map(&mut back).collect();
    eqs.extend(added.iter().cloned());
    Ok(Contraction {
        split: r,
        system: inv.system.with_equations(eqs),
        added,
        denominator: h,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Purity {
    Pure(usize),
    Impure {
        codim: usize,
        witnesses: Vec<LinearEquation<Rational>>,
    },
}

pub fn purity_test(inv: &InvolutiveSystem<Rational>) -> Result<Purity> {
    let r = inv.codim;
    if r == inv.n() {
        return Ok(Purity::Pure(r));
    }
    let c = contract(inv, r)?;
    if c.added.is_empty() {
        Ok(Purity::Pure(r))
    } else {
        Ok(Purity::Impure {
            codim: r,
            witnesses: c.added,
        })
    }
}

/// Codimension of `Q[χ]/a`, read from the characters of the completed system.
pub fn ideal_codim(a: &[Poly], n: usize) -> Result<usize> {
    let eqs: Vec<LinearEquation<Rational>> = a.iter().filter(|p| !p.is_zero()).map(|p| row_to_equation(&[p.clone()], n)).collect();
    if eqs.is_empty() {
        return Ok(0);
    }
    let inv = complete(&PDSystem::new(n, 1, eqs), &CompletionOptions::default())?;
    Ok(inv.codim)
}

#[derive(Clone, Debug)]
pub struct TorsionGenerator {
    pub element: LinearEquation<Rational>,
    /// Codimension of the cyclic submodule it generates.
    pub codim: usize,
}

#[derive(Clone, Debug)]
pub struct TorsionLevel {
    pub r: usize,
    /// Generators of `t_r(M)` modulo the equations.
    pub generators: Vec<TorsionGenerator>,
    pub gap_with_next: bool,
}

/// `0 = t_n(M) ⊆ ... ⊆ t_0(M) ⊆ M`, listed from `r = cd(M)` to `n - 1`.
#[derive(Clone, Debug)]
pub struct TorsionChain {
    pub codim: usize,
    pub levels: Vec<TorsionLevel>,
}

pub fn torsion_chain(inv: &InvolutiveSystem<Rational>) -> Result<TorsionChain> {
    let (n, m) = (inv.n(), inv.m());
    let rows = system_rows(&inv.system);
    let mut back = back_to_input(inv);
    let mut levels = Vec::new();
    let mut sats: Vec<Vec<Row>> = Vec::new();
    for r in inv.codim..n {
        let (sat, kept, _) = kernel_rows(inv, r)?;
        let mut generators = Vec::new();
        for g in &kept {
            let ann = annihilator(&rows, g, n);
            generators.push(TorsionGenerator {
                element: back(&row_to_equation(g, n)).monic(),
                codim: ideal_codim(&ann, n)?,
            });
        }
        sats.push(sat);
        levels.push(TorsionLevel {
            r,
            generators,
            gap_with_next: false,
        });
    }
    sats.push(groebner(&rows, n, m));
    for i in 0..levels.len() {
        levels[i].gap_with_next = submodule::contains_all(&sats[i + 1], &sats[i], n, m);
    }
    Ok(TorsionChain {
        codim: inv.codim,
        levels,
    })
}

/// `a : f` for an ideal `a ⊆ Q[χ_1..χ_n]`.
pub fn ideal_quotient(a: &[Poly], f: &Poly, n: usize) -> Result<Vec<Poly>> {
    let a: Vec<Poly> = a.iter().map(|p| p.clone().with_nvars(n)).collect();
    let out = quotient(&ideal_rows(&a), &f.clone().with_nvars(n), n, 1)?;
    Ok(out.into_iter().map(|mut r| r.remove(0)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unmixedness {
    Unmixed(usize),
    /// `s p ∈ a` with `p ∉ a`.
    Mixed { s: Poly, p: Poly },
}

pub fn unmixedness_test(a: &[Poly], n: usize) -> Result<Unmixedness> {
    let eqs: Vec<LinearEquation<Rational>> = a.iter().filter(|p| !p.is_zero()).map(|p| row_to_equation(&[p.clone().with_nvars(n)], n)).collect();
    if eqs.is_empty() {
        return Ok(Unmixedness::Unmixed(0));
    }
    let inv = complete(&PDSystem::new(n, 1, eqs), &CompletionOptions::default())?;
    let r = inv.codim;
    if r == n {
        return Ok(Unmixedness::Unmixed(r));
    }
    let (_, kept, _) = kernel_rows(&inv, r)?;
    let p = match kept.first() {
        None => return Ok(Unmixedness::Unmixed(r)),
        Some(p) => p,
    };
    let rows = system_rows(&inv.system);
    let s = submodule::annihilator_in(&rows, p, n, n - r)
        .into_iter()
        .min_by_key(|s| (s.total_degree(), s.num_terms()))
        .expect("a torsion element has a nonzero annihilator");
    let mut back = back_to_input(&inv);
    let mut to_input = |q: &Poly| {
        let e = back(&row_to_equation(&[q.clone()], n));
        equation_to_row(&e, n, 1).remove(0).integer_primitive()
    };
    Ok(Unmixedness::Mixed {
        s: to_input(&s),
        p: to_input(&p[0]),
    })
}
