use super::InvolutiveSystem;
use crate::arith::{Monomial, Poly, Rational};
use crate::jets::PDSystem;

/// Rows: equations of order `q`; columns: unknowns; entry `Σ_{|μ|=q} a^μ_k χ^μ`.
pub fn characteristic_matrix_at(s: &PDSystem<Rational>, q: usize) -> Vec<Vec<Poly>> {
    s.equations
        .iter()
        .filter(|e| e.order() == q)
        .map(|e| {
            let mut row = vec![Poly::zero(s.n); s.m];
            for (j, c) in e.terms().filter(|(j, _)| j.order() == q) {
                row[j.k].add_term(Monomial::new(j.mu.entries().to_vec()), c.clone());
            }
            row
        })
        .collect()
}

/// Characteristic matrix of the top-order equations.
pub fn characteristic_matrix(inv: &InvolutiveSystem<Rational>) -> Vec<Vec<Poly>> {
    let top = inv
        .system
        .with_equations(inv.top_rows().map(|(e, _)| e.clone()).collect());
    characteristic_matrix_at(&top, inv.order)
}
