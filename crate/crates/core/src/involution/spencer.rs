use std::collections::BTreeMap;

use super::InvolutiveSystem;
use crate::arith::Field;
use crate::jets::{autoreduce, Jet, LinearEquation, MultiIndex, PDSystem};

/// A first-order system in new unknowns `z^a = y_{ν_a}`, the parametric jets
/// of order below `q`.
#[derive(Clone, Debug)]
pub struct SpencerForm<F: Field> {
    pub system: PDSystem<F>,
    /// `unknowns[a]` is the jet that `z^{a+1}` stands for.
    pub unknowns: Vec<Jet>,
}

/// Rewrite an involutive system of order `q` as a first-order system without
/// zero-order equations, defining the same module.
pub fn spencer_form<F: Field>(inv: &InvolutiveSystem<F>) -> SpencerForm<F> {
    let (n, m, q) = (inv.n(), inv.m(), inv.order);
    let ech = inv.echelon();
    let unknowns: Vec<Jet> = crate::jets::jets_up_to(n, m, q.saturating_sub(1))
        .into_iter()
        .filter(|j| !ech.is_pivot(j))
        .collect();
    let index: BTreeMap<Jet, usize> = unknowns.iter().enumerate().map(|(a, j)| (j.clone(), a)).collect();
    let zero = MultiIndex::zero(n);

    // Parametric jet of order ≤ q as a first-order jet in the z unknowns.
    let as_z = |p: &Jet| -> Jet {
        if p.order() < q {
            Jet::new(index[p], zero.clone())
        } else {
            let c = p.class().expect("positive order") - 1;
            let parent = Jet::new(p.k, p.mu.lower(c).expect("class entry"));
            Jet::new(index[&parent], MultiIndex::unit(n, c))
        }
    };

    let mut eqs = Vec::new();
    for (a, ya) in unknowns.iter().enumerate() {
        for i in 0..n {
            let target = ya.raise(i);
            let nf = ech.reduce(&LinearEquation::jet(target));
            let mut e = LinearEquation::jet(Jet::new(a, MultiIndex::unit(n, i)));
            for (p, c) in nf.terms() {
                e.add_term(as_z(p), c.neg());
            }
            if !e.is_zero() {
                eqs.push(e);
            }
        }
    }
    let shape = PDSystem::new(n, unknowns.len(), eqs).with_names(inv.system.names.clone());
    SpencerForm {
        system: autoreduce(&shape),
        unknowns,
    }
}
