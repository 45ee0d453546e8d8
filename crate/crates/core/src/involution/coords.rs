//! Linear changes of the independent variables.
//!
//! A change is an invertible matrix `B` with `χ_i = Σ_j B_ij χ'_j`: every
//! operator `χ^μ` is rewritten in the new symbols `χ'`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::matrix::Matrix;
use crate::arith::{rat, Field, Monomial, Poly, Rational};
use crate::jets::{Jet, LinearEquation, MultiIndex};

/// Unit upper-triangular integer matrix with entries in `[-3, 3]`, drawn
/// deterministically from `(seed, round, attempt)`.
pub fn random_change(seed: u64, round: usize, attempt: usize, n: usize) -> Matrix<Rational> {
    let mix = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((round as u64) << 20)
        .wrapping_add(attempt as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    let mut b = vec![vec![rat(0); n]; n];
    loop {
        let mut any = false;
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = rat(1);
            for entry in row.iter_mut().skip(i + 1) {
                let v: i64 = rng.gen_range(-3..=3);
                any |= v != 0;
                *entry = rat(v);
            }
        }
        if any || n < 2 {
            return b;
        }
    }
}

/// Rewrites equations under a fixed change, caching monomial expansions.
pub struct Transformer {
    n: usize,
    linear: Vec<Poly>,
    cache: HashMap<MultiIndex, Vec<(MultiIndex, Rational)>>,
}

impl Transformer {
    pub fn new(b: &Matrix<Rational>) -> Self {
        let n = b.len();
        let linear = (0..n)
            .map(|i| {
                Poly::from_terms(
                    n,
                    (0..n).map(|j| (Monomial::var(j), b[i][j].clone())),
                )
            })
            .collect();
        Transformer {
            n,
            linear,
            cache: HashMap::new(),
        }
    }

    fn expand(&mut self, mu: &MultiIndex) -> &[(MultiIndex, Rational)] {
        if !self.cache.contains_key(mu) {
            let mut p = Poly::one(self.n);
            for (i, &e) in mu.entries().iter().enumerate() {
                p = p.mul(&self.linear[i].pow(e));
            }
            let terms = p
                .terms()
                .map(|(m, c)| (MultiIndex::new(m.padded(self.n)), c.clone()))
                .collect();
            self.cache.insert(mu.clone(), terms);
        }
        &self.cache[mu]
    }

    pub fn apply<F: Field>(&mut self, e: &LinearEquation<F>) -> LinearEquation<F> {
        let mut out = LinearEquation::zero();
        for (j, c) in e.terms() {
            for (nu, q) in self.expand(&j.mu).to_vec() {
                out.add_term(Jet::new(j.k, nu), c.mul(&F::from_rational(&q)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_unimodular() {
        let a = random_change(7, 1, 0, 4);
        assert_eq!(a, random_change(7, 1, 0, 4));
        for (i, row) in a.iter().enumerate() {
            assert_eq!(row[i], rat(1));
            assert!(row[..i].iter().all(|x| x == &rat(0)));
        }
    }

    #[test]
    fn permutation_exchanges_jets() {
        // χ_1 = χ'_3, χ_3 = χ'_1
        let b = vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ];
        let mut t = Transformer::new(&b);
        let e: LinearEquation<Rational> = LinearEquation::jet(Jet::from_slice(0, &[2, 0, 0]));
        assert_eq!(t.apply(&e), LinearEquation::jet(Jet::from_slice(0, &[0, 0, 2])));
    }
}
