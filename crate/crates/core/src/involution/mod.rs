//! Pommaret classes, the involution test and completion to involution.

mod charmatrix;
pub mod coords;
mod hilbert;
mod spencer;

pub use charmatrix::{characteristic_matrix, characteristic_matrix_at};
pub use hilbert::{finite_dimension, hilbert_dims, HilbertDims};
pub use spencer::{spencer_form, SpencerForm};

use crate::arith::matrix::{self, Matrix};
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::jets::{count_of_class, Echelon, LinearEquation, PDSystem};
use coords::{random_change, Transformer};

/// Directions `d_1..d_class` (1-based) that are multiplicative for an
/// equation of top order and the given class.
pub fn multiplicative_vars(class: usize, n: usize) -> Vec<usize> {
    (1..=class.min(n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<F: Field> {
    Involutive,
    Obstructions(Vec<LinearEquation<F>>),
}

/// Class of the leading jet of a top-order row.
fn leading_class<F: Field>(e: &LinearEquation<F>) -> usize {
    e.leading_jet()
        .and_then(|j| j.class().ok())
        .unwrap_or(0)
}

/// Prolongations of lower-order rows that leave `v`; failing those, the
/// nonzero normal forms of the nonmultiplicative prolongations of the
/// order-`q` rows of `v`, modulo `v` and the multiplicative prolongations.
fn obstructions<F: Field>(v: &Echelon<F>, n: usize, q: usize) -> Vec<LinearEquation<F>> {
    let top: Vec<&LinearEquation<F>> = v.rows().filter(|r| r.order() == q && leading_order(r) == q).collect();
    let mut span = v.clone();
    for r in &top {
        for j in 0..leading_class(r) {
            span.insert(r.prolong(j));
        }
    }
    let mut out = Vec::new();
    for r in v.rows().filter(|r| leading_order(r) < q) {
        for j in 0..n {
            let nf = v.reduce(&r.prolong(j));
            if !nf.is_zero() {
                out.push(nf);
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for r in &top {
        for j in leading_class(r)..n {
            let nf = span.reduce(&r.prolong(j));
            if !nf.is_zero() {
                out.push(nf);
            }
        }
    }
    out
}

fn leading_order<F: Field>(e: &LinearEquation<F>) -> usize {
    e.leading_jet().map(|j| j.order()).unwrap_or(0)
}

/// Pommaret involution test of an autoreduced system at its maximal order.
/// Lower-order equations enter through their prolongations.
pub fn involution_test<F: Field>(s: &PDSystem<F>) -> Verdict<F> {
    let q = s.order();
    let v = s.echelon(q);
    let obs = obstructions(&v, s.n, q);
    if obs.is_empty() {
        Verdict::Involutive
    } else {
        Verdict::Obstructions(obs)
    }
}

#[derive(Clone, Debug)]
pub struct CompletionOptions {
    pub seed: u64,
    pub max_rounds: usize,
    pub max_order: Option<usize>,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            seed: 0,
            max_rounds: 50,
            max_order: None,
        }
    }
}

/// A system in solved form that passed the involution test at order `q`.
#[derive(Clone, Debug)]
pub struct InvolutiveSystem<F: Field> {
    /// All independent equations of order ≤ q (prolongations of lower-order
    /// equations included), in reduced echelon form, leading jets descending.
    pub system: PDSystem<F>,
    pub order: usize,
    /// Class of each equation of order `q`, `None` for lower-order ones.
    pub classes: Vec<Option<usize>>,
    /// `α^1, ..., α^n`.
    pub alpha: Vec<usize>,
    pub codim: usize,
    /// `B` with `χ_i = Σ_j B_ij χ'_j` relating input and current symbols.
    pub coordinate_change: Matrix<Rational>,
    pub changes_applied: usize,
    pub rounds: usize,
    pub seed: u64,
}

impl<F: Field> InvolutiveSystem<F> {
    pub fn n(&self) -> usize {
        self.system.n
    }

    pub fn m(&self) -> usize {
        self.system.m
    }

    pub fn echelon(&self) -> Echelon<F> {
        Echelon::from_equations(&self.system.equations)
    }

    /// Equations of order `q` with their classes.
    pub fn top_rows(&self) -> impl Iterator<Item = (&LinearEquation<F>, usize)> {
        self.system
            .equations
            .iter()
            .zip(&self.classes)
            .filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    /// Number of top-order equations of class `i` at index `i - 1`.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n()];
        for (_, i) in self.top_rows() {
            c[i - 1] += 1;
        }
        c
    }

    /// Multiplicative directions (1-based) of equation `idx`.
    pub fn multiplicative(&self, idx: usize) -> Vec<usize> {
        match self.classes[idx] {
            Some(c) => multiplicative_vars(c, self.n()),
            None => Vec::new(),
        }
    }

    pub fn is_coordinate_change_trivial(&self) -> bool {
        self.coordinate_change == matrix::identity::<Rational>(self.n())
    }

    fn from_echelon(
        v: Echelon<F>,
        shape: &PDSystem<F>,
        q: usize,
        b: Matrix<Rational>,
        changes: usize,
        rounds: usize,
        seed: u64,
    ) -> Self {
        let n = shape.n;
        let mut rows = v.into_rows();
        rows.reverse();
        let classes: Vec<Option<usize>> = rows
            .iter()
            .map(|r| (leading_order(r) == q).then(|| leading_class(r)))
            .collect();
        let mut counts = vec![0; n];
        for c in classes.iter().flatten() {
            counts[c - 1] += 1;
        }
        let alpha: Vec<usize> = (1..=n)
            .map(|i| shape.m * count_of_class(n, q, i) - counts[i - 1])
            .collect();
        let codim = alpha.iter().rev().take_while(|&&a| a == 0).count();
        InvolutiveSystem {
            system: shape.with_equations(rows),
            order: q,
            classes,
            alpha,
            codim,
            coordinate_change: b,
            changes_applied: changes,
            rounds,
            seed,
        }
    }
}

/// Counts of top-order leading jets by class, class `n` first.
fn class_signature<F: Field>(v: &Echelon<F>, n: usize, q: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for r in v.rows() {
        if leading_order(r) == q {
            c[n - leading_class(r)] += 1;
        }
    }
    c
}

/// Complete a system to involution.
///
/// Integrability conditions are added at the current order; when only
/// obstructions of order `q + 1` remain, seeded random changes of
/// coordinates are tried first and the order is raised if none increases
/// the class signature.
pub fn complete<F: Field>(s: &PDSystem<F>, opts: &CompletionOptions) -> Result<InvolutiveSystem<F>> {
    let n = s.n;
    let mut eqs: Vec<LinearEquation<F>> = s.equations.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut q = s.order().max(1);
    let mut b = matrix::identity::<Rational>(n);
    let mut changes = 0;
    for round in 0..opts.max_rounds {
        if let Some(mq) = opts.max_order {
            if q > mq {
                return Err(Error::Invalid(format!(
                    "completion needs order {} above the bound {}",
                    q, mq
                )));
            }
        }
        let cur = s.with_equations(eqs.clone());
        let v = cur.echelon(q);
        let obs = obstructions(&v, n, q);
        if obs.is_empty() {
            let done = InvolutiveSystem::from_echelon(v, s, q, b, changes, round + 1, opts.seed);
            check_regular(&done, opts.seed)?;
            return Ok(done);
        }
        let low: Vec<LinearEquation<F>> = obs.iter().filter(|e| e.order() <= q).cloned().collect();
        if !low.is_empty() {
            eqs = v.into_rows();
            eqs.extend(low);
            continue;
        }
        let sig = class_signature(&v, n, q);
        let mut changed = false;
        if n > 1 {
            for attempt in 0..5 {
                let c = random_change(opts.seed, round, attempt, n);
                let mut t = Transformer::new(&c);
                let moved: Vec<LinearEquation<F>> = eqs.iter().map(|e| t.apply(e)).collect();
                let v2 = s.with_equations(moved.clone()).echelon(q);
                if class_signature(&v2, n, q) > sig {
                    eqs = moved;
                    b = matrix::mul(&b, &c);
                    changes += 1;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            q += 1;
        }
    }
    Err(Error::MaxRoundsExceeded(opts.max_rounds))
}

/// A further random change must not raise the class signature.
fn check_regular<F: Field>(inv: &InvolutiveSystem<F>, seed: u64) -> Result<()> {
    let n = inv.n();
    if n < 2 {
        return Ok(());
    }
    let c = random_change(seed, usize::MAX >> 1, 0, n);
    let mut t = Transformer::new(&c);
    let moved: Vec<LinearEquation<F>> = inv.system.equations.iter().map(|e| t.apply(e)).collect();
    let v = inv.system.with_equations(moved).echelon(inv.order);
    let before = class_signature(&inv.echelon(), n, inv.order);
    if class_signature(&v, n, inv.order) > before {
        return Err(Error::NonGenericSeed(seed));
    }
    Ok(())
}

/// `t(M) = M` exactly when the top order carries `m` equations of class `n`.
pub fn full_torsion_test<F: Field>(inv: &InvolutiveSystem<F>) -> bool {
    inv.class_counts()[inv.n() - 1] == inv.m()
}
