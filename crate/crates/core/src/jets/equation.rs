use std::collections::BTreeMap;

use super::Jet;
use crate::arith::Field;

/// `Σ c · y^k_μ = 0`, stored as a map from jet to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearEquation<F: Field> {
    terms: BTreeMap<Jet, F>,
}

impl<F: Field> Default for LinearEquation<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> LinearEquation<F> {
    pub fn zero() -> Self {
        LinearEquation {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Jet, F)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (j, c) in it {
            e.add_term(j, c);
        }
        e
    }

    /// The single jet with coefficient one.
    pub fn jet(j: Jet) -> Self {
        Self::from_terms([(j, F::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Jet, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: &Jet) -> F {
        self.terms.get(j).cloned().unwrap_or_else(F::zero)
    }

    pub fn contains(&self, j: &Jet) -> bool {
        self.terms.contains_key(j)
    }

    pub fn add_term(&mut self, j: Jet, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&j) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&j);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(j, c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (j, v) in &other.terms {
            self.add_term(j.clone(), v.mul(c));
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinearEquation {
            terms: self.terms.iter().map(|(j, v)| (j.clone(), v.mul(c))).collect(),
        }
    }

    /// Maximal jet and its coefficient.
    pub fn leading(&self) -> Option<(&Jet, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_jet(&self) -> Option<&Jet> {
        self.terms.keys().next_back()
    }

    /// Largest `|μ|` among the terms (0 for the zero equation).
    pub fn order(&self) -> usize {
        self.terms.keys().map(Jet::order).max().unwrap_or(0)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Formal prolongation `d_i` (0-based `i`).
    pub fn prolong(&self, i: usize) -> Self {
        LinearEquation {
            terms: self
                .terms
                .iter()
                .map(|(j, c)| (j.raise(i), c.clone()))
                .collect(),
        }
    }

    /// Apply `d^ν`.
    pub fn prolong_by(&self, nu: &super::MultiIndex) -> Self {
        LinearEquation {
            terms: self
                .terms
                .iter()
                .map(|(j, c)| (super::Jet::new(j.k, j.mu.plus(nu)), c.clone()))
                .collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LinearEquation<G> {
        LinearEquation::from_terms(self.terms.iter().map(|(j, c)| (j.clone(), f(c))))
    }

    pub fn map_jets(&self, f: impl Fn(&Jet) -> Jet) -> Self {
        Self::from_terms(self.terms.iter().map(|(j, c)| (f(j), c.clone())))
    }

    /// Text such as `y_133 - 2*y_23`, leading term first.
    pub fn fmt_with(&self, m: usize, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (j, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = c.fmt_named(names);
            let neg = cs.starts_with('-') && !cs[1..].contains([' ', '+', '-']);
            if neg {
                cs.remove(0);
            }
            if idx > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if cs == "1" {
                out.push_str(&j.label(m));
            } else if cs.contains(' ') {
                out.push_str(&format!("({})*{}", cs, j.label(m)));
            } else {
                out.push_str(&format!("{}*{}", cs, j.label(m)));
            }
        }
        out
    }
}
