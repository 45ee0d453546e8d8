use std::collections::BTreeSet;

use super::{Echelon, LinearEquation, MultiIndex};
use crate::arith::Field;
use crate::error::{Error, Result};

/// A linear system `Σ a^{τμ}_k y^k_μ = 0` in `n` independent and `m`
/// dependent variables. `names` lists the indeterminates of the coefficient
/// field (parameters, then localized symbols), empty over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDSystem<F: Field> {
    pub n: usize,
    pub m: usize,
    pub names: Vec<String>,
    pub equations: Vec<LinearEquation<F>>,
}

impl<F: Field> PDSystem<F> {
    pub fn new(n: usize, m: usize, equations: Vec<LinearEquation<F>>) -> Self {
        PDSystem {
            n,
            m,
            names: Vec::new(),
            equations,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.names = names;
        self
    }

    /// Same shape, different equations.
    pub fn with_equations(&self, equations: Vec<LinearEquation<F>>) -> Self {
        PDSystem {
            n: self.n,
            m: self.m,
            names: self.names.clone(),
            equations,
        }
    }

    /// Maximal order of the nonzero equations.
    pub fn order(&self) -> usize {
        self.equations.iter().map(|e| e.order()).max().unwrap_or(0)
    }

    /// All formal prolongations of all equations up to order `q`.
    pub fn prolongations(&self, q: usize) -> Vec<LinearEquation<F>> {
        let mut out = Vec::new();
        for e in self.equations.iter().filter(|e| !e.is_zero()) {
            let o = e.order();
            if o > q {
                continue;
            }
            for nu in MultiIndex::up_to_order(self.n, q - o) {
                out.push(e.prolong_by(&nu));
            }
        }
        out
    }

    /// Row echelon form of the span of all prolongations up to order `q`.
    pub fn echelon(&self, q: usize) -> Echelon<F> {
        let mut ech = Echelon::new();
        for e in self.equations.iter().filter(|e| !e.is_zero()) {
            let o = e.order();
            if o > q {
                continue;
            }
            for nu in MultiIndex::up_to_order(self.n, q - o) {
                ech.insert(e.prolong_by(&nu));
            }
        }
        ech
    }

    pub fn fmt_equations(&self) -> Vec<String> {
        self.equations
            .iter()
            .map(|e| e.fmt_with(self.m, &self.names))
            .collect()
    }
}

/// Normal form of `e` modulo the span of the prolongations of `s` up to the
/// order of `e`. `s` must be in solved form.
pub fn reduce<F: Field>(e: &LinearEquation<F>, s: &PDSystem<F>) -> Result<LinearEquation<F>> {
    let mut seen = BTreeSet::new();
    for eq in &s.equations {
        if let Some(j) = eq.leading_jet() {
            if !seen.insert(j.clone()) {
                return Err(Error::NotSolvedForm(j.label(s.m)));
            }
        }
    }
    if e.is_zero() {
        return Ok(e.clone());
    }
    Ok(s.echelon(e.order()).reduce(e))
}

/// Gaussian elimination on the equations as vectors, pivoting on leading jets.
pub fn autoreduce<F: Field>(s: &PDSystem<F>) -> PDSystem<F> {
    let ech = Echelon::from_equations(&s.equations);
    let mut rows = ech.into_rows();
    rows.reverse();
    s.with_equations(rows)
}
