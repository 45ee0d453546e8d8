use super::InvolutiveSystem;
use crate::arith::Field;
use crate::jets::binomial;

/// `symbol[s] = dim g_s` and `total[s] = dim R_s` for `s = 0..=up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertDims {
    pub symbol: Vec<usize>,
    pub total: Vec<usize>,
}

fn jets_of_order(n: usize, m: usize, s: usize) -> usize {
    m * binomial(s + n - 1, n - 1)
}

/// Parametric jet counts per order, from the leading jets up to order `q`
/// and from the multiplicative cones of the top-order equations beyond.
pub fn hilbert_dims<F: Field>(inv: &InvolutiveSystem<F>, up_to: usize) -> HilbertDims {
    let (n, m, q) = (inv.n(), inv.m(), inv.order);
    let mut principal = vec![0usize; q + 1];
    for e in &inv.system.equations {
        if let Some(j) = e.leading_jet() {
            principal[j.order()] += 1;
        }
    }
    let mut symbol = Vec::with_capacity(up_to + 1);
    for s in 0..=up_to {
        let all = jets_of_order(n, m, s);
        let p = if s <= q {
            principal[s]
        } else {
            inv.top_rows()
                .map(|(_, i)| binomial(s - q + i - 1, i - 1))
                .sum()
        };
        symbol.push(all - p);
    }
    let mut total = Vec::with_capacity(up_to + 1);
    let mut acc = 0;
    for g in &symbol {
        acc += g;
        total.push(acc);
    }
    HilbertDims { symbol, total }
}

/// `dim R` when the symbol vanishes at order `q`, i.e. all characters are zero.
pub fn finite_dimension<F: Field>(inv: &InvolutiveSystem<F>) -> Option<usize> {
    if inv.alpha.iter().any(|&a| a > 0) {
        return None;
    }
    Some(*hilbert_dims(inv, inv.order).total.last().unwrap_or(&0))
}
