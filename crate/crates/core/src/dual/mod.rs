//! Macaulay inverse systems of finite type systems: sections, derivation
//! matrices, socle, top and minimal generators.

mod delocalize;
mod points;

pub use delocalize::{
    delocalize, derivate_generation_check, derivate_n, is_modular_equation, Delocalized, ModularEquation,
};
pub use points::{Generators, MaximalPoint, SubsystemSum};

use crate::arith::matrix::{self, Matrix};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::involution::InvolutiveSystem;
use crate::jets::{jets_up_to, Echelon, Jet, LinearEquation};

/// A section is stored by its values on the parametric jets.
pub type Section<F> = Vec<F>;

#[derive(Clone, Debug)]
pub struct DualSpace<F: Field> {
    pub n: usize,
    pub m: usize,
    pub order: usize,
    /// Parametric jets, ascending.
    pub basis: Vec<Jet>,
    /// `action[i][u][v]`: coordinate `u` of `d_{i+1}` applied to basis element `v` of `M`.
    pub action: Vec<Matrix<F>>,
    /// `dmat[i]` is the transpose of `action[i]`, acting on sections.
    pub dmat: Vec<Matrix<F>>,
    /// Names of the variables of the coefficient field.
    pub names: Vec<String>,
    echelon: Echelon<F>,
}

/// Build the dual space of a system of finite type.
pub fn build_dual<F: Field>(inv: &InvolutiveSystem<F>, names: &[String]) -> Result<DualSpace<F>> {
    let (n, m, q) = (inv.n(), inv.m(), inv.order);
    if inv.codim < n {
        return Err(Error::InfiniteDimensional { codim: inv.codim, n });
    }
    let echelon = inv.echelon();
    let mut basis: Vec<Jet> = jets_up_to(n, m, q).into_iter().filter(|j| !echelon.is_pivot(j)).collect();
    basis.sort();
    let mut space = DualSpace {
        n,
        m,
        order: q,
        basis,
        action: Vec::new(),
        dmat: Vec::new(),
        names: names.to_vec(),
        echelon,
    };
    for i in 0..n {
        let cols: Vec<Vec<F>> = space.basis.iter().map(|b| space.reduce_low(&b.raise(i))).collect();
        let a = matrix::transpose(&cols);
        space.dmat.push(cols);
        space.action.push(a);
    }
    Ok(space)
}

impl<F: Field> DualSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn index(&self, j: &Jet) -> Option<usize> {
        self.basis.binary_search(j).ok()
    }

    /// Coordinates of a jet of order ≤ q in `M`.
    fn reduce_low(&self, j: &Jet) -> Vec<F> {
        let nf = self.echelon.reduce(&LinearEquation::jet(j.clone()));
        let mut v = vec![F::zero(); self.dim()];
        for (t, c) in nf.terms() {
            let i = self.index(t).expect("normal forms only involve parametric jets");
            v[i] = c.clone();
        }
        v
    }

    /// Coordinates of the residue of any jet in `M`.
    pub fn coords(&self, j: &Jet) -> Vec<F> {
        if j.order() <= self.order {
            return self.reduce_low(j);
        }
        let i = j.mu.entries().iter().position(|&e| e > 0).unwrap();
        let lower = Jet::new(j.k, j.mu.lower(i).expect("positive entry"));
        matrix::mul_vec(&self.action[i], &self.coords(&lower))
    }

    /// Coordinates of the residue of `Σ c_j y_j`.
    pub fn element(&self, e: &LinearEquation<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for (j, c) in e.terms() {
            for (x, y) in v.iter_mut().zip(self.coords(j)) {
                *x = x.add(&c.mul(&y));
            }
        }
        v
    }

    /// `d_{i+1} E` with the Macaulay sign: the coefficient of `μ` is the
    /// coefficient of `μ + 1_i` in `E`.
    pub fn derivate(&self, e: &[F], i: usize) -> Section<F> {
        matrix::mul_vec(&self.dmat[i], e)
    }

    /// Value of a section on a jet.
    pub fn value(&self, e: &[F], j: &Jet) -> F {
        self.coords(j).iter().zip(e).fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// The nonzero values of a section on all jets up to `order`.
    pub fn expand(&self, e: &[F], order: usize) -> Vec<(Jet, F)> {
        jets_up_to(self.n, self.m, order)
            .into_iter()
            .map(|j| {
                let v = self.value(e, &j);
                (j, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// The section dual to basis element `i`.
    pub fn unit(&self, i: usize) -> Section<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// Span of the closure of `vectors` under the matrices `mats`, with the
    /// number of rounds needed to reach it.
    fn closure(&self, vectors: &[Vec<F>], mats: &[Matrix<F>]) -> (Matrix<F>, usize) {
        let mut span = matrix::span_basis(vectors);
        let mut frontier = span.clone();
        let mut depth = 0;
        loop {
            let mut next: Vec<Vec<F>> = span.clone();
            for v in &frontier {
                for a in mats {
                    next.push(matrix::mul_vec(a, v));
                }
            }
            let grown = matrix::span_basis(&next);
            if grown.len() == span.len() {
                return (span, depth);
            }
            depth += 1;
            frontier = grown.clone();
            span = grown;
        }
    }

    /// Whether the derivates of `sections` span `R`.
    pub fn generation_check(&self, sections: &[Section<F>]) -> bool {
        self.closure(sections, &self.dmat).0.len() == self.dim()
    }

    /// Number of derivation rounds after which the derivates of `sections`
    /// stop growing.
    pub fn derivate_depth(&self, sections: &[Section<F>]) -> usize {
        self.closure(sections, &self.dmat).1
    }

    /// Sections of the system enlarged by `extra`: those vanishing on the
    /// submodule of `M` generated by the residues of `extra`.
    pub fn subsystem(&self, extra: &[LinearEquation<F>]) -> Vec<Section<F>> {
        let gens: Vec<Vec<F>> = extra.iter().map(|e| self.element(e)).collect();
        let (sub, _) = self.closure(&gens, &self.action);
        matrix::kernel(&sub, self.dim())
    }
}
