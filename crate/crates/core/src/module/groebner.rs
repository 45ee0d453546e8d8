//! Gröbner bases for submodules of `Q[x_1..x_k]^m`.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::arith::poly::degrevlex;
use crate::arith::{Monomial, Poly, Rational};

/// Block term order on `x^a e_j`: the blocks are compared in turn by
/// degrevlex on their variables; the position (larger index greater) is
/// compared after the first `position_after` blocks.
#[derive(Clone, Debug)]
pub struct TermOrder {
    blocks: Vec<Vec<usize>>,
    position_after: usize,
}

impl TermOrder {
    pub fn new(blocks: Vec<Vec<usize>>, position_after: usize) -> Self {
        TermOrder {
            position_after: position_after.min(blocks.len()),
            blocks,
        }
    }

    /// Term over position degrevlex.
    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder::new(vec![(0..nvars).collect()], 1)
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        for (i, block) in self.blocks.iter().enumerate() {
            if i == self.position_after {
                match a.1.cmp(&b.1) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            let ea: Vec<u32> = block.iter().map(|&v| a.0.exp(v)).collect();
            let eb: Vec<u32> = block.iter().map(|&v| b.0.exp(v)).collect();
            match degrevlex(&ea, &eb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        if self.position_after == self.blocks.len() {
            return a.1.cmp(&b.1);
        }
        Ordering::Equal
    }
}

type Term = (Monomial, usize, Rational);

/// A vector of polynomials with its terms sorted ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }
}

/// Arithmetic on vectors of a fixed free module under a fixed order.
#[derive(Clone, Debug)]
pub struct Engine {
    pub nvars: usize,
    pub rank: usize,
    pub order: TermOrder,
}

impl Engine {
    pub fn new(nvars: usize, rank: usize, order: TermOrder) -> Self {
        Engine { nvars, rank, order }
    }

    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp((&a.0, a.1), (&b.0, b.1))
    }

    pub fn vector(&self, row: &[Poly]) -> Vector {
        let mut terms: Vec<Term> = row
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().map(move |(m, c)| (m.clone(), k, c.clone())))
            .collect();
        terms.sort_by(|a, b| self.cmp(a, b));
        Vector { terms }
    }

    pub fn row(&self, v: &Vector) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.nvars); self.rank];
        for (m, k, c) in &v.terms {
            out[*k].add_term(m.clone(), c.clone());
        }
        out
    }

    /// `a - c * x^mono * b`.
    fn sub_mul(&self, a: &Vector, c: &Rational, mono: &Monomial, b: &Vector) -> Vector {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut ia = a.terms.iter().peekable();
        let mut ib = b.terms.iter().map(|(m, k, x)| (m.mul(mono), *k, -(c * x))).peekable();
        loop {
            let ord = match (ia.peek(), ib.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => self.cmp(x, y),
            };
            match ord {
                Ordering::Less => out.push(ia.next().unwrap().clone()),
                Ordering::Greater => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let (m, k, x) = ia.next().unwrap().clone();
                    let y = ib.next().unwrap().2;
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((m, k, s));
                    }
                }
            }
        }
        Vector { terms: out }
    }

    pub fn scale(&self, v: &Vector, c: &Rational) -> Vector {
        Vector {
            terms: v.terms.iter().map(|(m, k, x)| (m.clone(), *k, x * c)).collect(),
        }
    }

    pub fn monic(&self, v: &Vector) -> Vector {
        match v.lead() {
            Some((_, _, c)) => self.scale(v, &(Rational::one() / c)),
            None => v.clone(),
        }
    }

    /// Full reduction of `v` modulo `basis`.
    pub fn reduce(&self, v: &Vector, basis: &[Vector]) -> Vector {
        let mut v = v.clone();
        let mut rest: Vec<Term> = Vec::new();
        while let Some((m, k, c)) = v.terms.last().cloned() {
            let div = basis.iter().find_map(|g| {
                let (gm, gk, gc) = g.lead()?;
                if *gk == k {
                    m.div(gm).map(|q| (g, q, gc))
                } else {
                    None
                }
            });
            match div {
                Some((g, q, gc)) => v = self.sub_mul(&v, &(&c / gc), &q, g),
                None => {
                    v.terms.pop();
                    rest.push((m, k, c));
                }
            }
        }
        rest.reverse();
        Vector { terms: rest }
    }
}

impl Engine {
    fn spoly(&self, f: &Vector, g: &Vector) -> Vector {
        let (fm, _, fc) = f.lead().unwrap();
        let (gm, _, gc) = g.lead().unwrap();
        let l = fm.lcm(gm);
        let a = self.sub_mul(&Vector { terms: Vec::new() }, &-(Rational::one() / fc), &l.div(fm).unwrap(), f);
        self.sub_mul(&a, &(Rational::one() / gc), &l.div(gm).unwrap(), g)
    }

    /// Reduced Gröbner basis, monic, sorted by leading term ascending.
    pub fn basis(&self, gens: &[Vector]) -> Vec<Vector> {
        let mut g: Vec<Vector> = Vec::new();
        let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
        for v in gens {
            let r = self.reduce(v, &g);
            if !r.is_zero() {
                self.push(&mut g, &mut pairs, r);
            }
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len()).min_by_key(|&i| pairs[i].0).unwrap();
            let (_, i, j) = pairs.swap_remove(best);
            let r = self.reduce(&self.spoly(&g[i], &g[j]), &g);
            if !r.is_zero() {
                self.push(&mut g, &mut pairs, r);
            }
        }
        self.interreduce(g)
    }

    fn push(&self, g: &mut Vec<Vector>, pairs: &mut Vec<(u32, usize, usize)>, v: Vector) {
        let v = self.monic(&v);
        let (vm, vk, _) = v.lead().unwrap().clone();
        let j = g.len();
        for (i, h) in g.iter().enumerate() {
            let (hm, hk, _) = h.lead().unwrap();
            if *hk != vk {
                continue;
            }
            if self.rank == 1 && hm.gcd(&vm).is_one() {
                continue;
            }
            pairs.push((hm.lcm(&vm).degree(), i, j));
        }
        g.push(v);
    }

    fn interreduce(&self, mut g: Vec<Vector>) -> Vec<Vector> {
        g.sort_by(|a, b| self.cmp(a.lead().unwrap(), b.lead().unwrap()));
        let mut keep: Vec<Vector> = Vec::new();
        for v in g {
            let (m, k, _) = v.lead().unwrap();
            if !keep.iter().any(|h| {
                let (hm, hk, _) = h.lead().unwrap();
                hk == k && hm.divides(m)
            }) {
                keep.push(v);
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Vector> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
            let (m, k, c) = keep[i].lead().unwrap().clone();
            let tail = Vector { terms: keep[i].terms[..keep[i].terms.len() - 1].to_vec() };
            let mut r = self.reduce(&tail, &others);
            r.terms.push((m, k, c));
            out.push(self.monic(&r));
        }
        out
    }

    pub fn contains(&self, basis: &[Vector], v: &Vector) -> bool {
        self.reduce(v, basis).is_zero()
    }
}
