use std::collections::BTreeMap;

use super::{Jet, LinearEquation};
use crate::arith::Field;

/// Reduced row echelon form of a space of linear equations: each row is
/// monic in its leading jet, and no leading jet occurs in another row.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: BTreeMap<Jet, LinearEquation<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn from_equations<'a, I>(eqs: I) -> Self
    where
        I: IntoIterator<Item = &'a LinearEquation<F>>,
    {
        let mut e = Self::new();
        for q in eqs {
            e.insert(q.clone());
        }
        e
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_pivot(&self, j: &Jet) -> bool {
        self.rows.contains_key(j)
    }

    pub fn pivots(&self) -> impl DoubleEndedIterator<Item = &Jet> {
        self.rows.keys()
    }

    /// Rows in ascending order of leading jet.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &LinearEquation<F>> {
        self.rows.values()
    }

    pub fn row(&self, pivot: &Jet) -> Option<&LinearEquation<F>> {
        self.rows.get(pivot)
    }

    /// Normal form: no term of the result is a leading jet.
    pub fn reduce(&self, e: &LinearEquation<F>) -> LinearEquation<F> {
        let mut out = e.clone();
        let hits: Vec<(Jet, F)> = e
            .terms()
            .filter(|(j, _)| self.rows.contains_key(*j))
            .map(|(j, c)| (j.clone(), c.clone()))
            .collect();
        for (j, c) in hits {
            out.add_scaled(&self.rows[&j], &c.neg());
        }
        out
    }

    pub fn contains(&self, e: &LinearEquation<F>) -> bool {
        self.reduce(e).is_zero()
    }

    /// Add an equation; returns the new leading jet if the span grew.
    pub fn insert(&mut self, e: LinearEquation<F>) -> Option<Jet> {
        let r = self.reduce(&e);
        let (lj, _) = r.leading()?;
        let lj = lj.clone();
        let r = r.monic();
        let affected: Vec<Jet> = self
            .rows
            .iter()
            .filter(|(_, row)| row.contains(&lj))
            .map(|(p, _)| p.clone())
            .collect();
        for p in affected {
            let row = self.rows.get_mut(&p).expect("present");
            let c = row.coeff(&lj);
            row.add_scaled(&r, &c.neg());
        }
        self.rows.insert(lj.clone(), r);
        Some(lj)
    }

    pub fn into_rows(self) -> Vec<LinearEquation<F>> {
        self.rows.into_values().collect()
    }
}
