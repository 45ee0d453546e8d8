#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use macaulay_core::arith::{rat, Rational};
use macaulay_core::io::parse_dsl;
use macaulay_core::jets::jets_up_to;
use macaulay_core::{Jet, LinearEquation, MultiIndex, PDSystem};

pub fn sys(text: &str) -> PDSystem<Rational> {
    parse_dsl(text).unwrap().rational().unwrap()
}

pub fn jet(mu: &[u32]) -> Jet {
    Jet::from_slice(0, mu)
}

pub fn eq(terms: &[(i64, &[u32])]) -> LinearEquation<Rational> {
    LinearEquation::from_terms(terms.iter().map(|(c, mu)| (jet(mu), rat(*c))))
}

/// Dense rank of all prolongations up to order `q`, computed without the
/// echelon machinery: one column per jet of order ≤ q.
pub fn dense_rank(s: &PDSystem<Rational>, q: usize) -> usize {
    let cols = jets_up_to(s.n, s.m, q);
    let mut rows = Vec::new();
    for e in &s.equations {
        if e.is_zero() || e.order() > q {
            continue;
        }
        for nu in MultiIndex::up_to_order(s.n, q - e.order()) {
            let p = e.prolong_by(&nu);
            rows.push(cols.iter().map(|j| p.coeff(j)).collect::<Vec<_>>());
        }
    }
    rank_mod_p(&rows)
}

/// Dense dimension of the solution space truncated at order `s`, from the
/// prolongations of `sys` up to order `big` projected to order `s`.
pub fn dense_dim(sys: &PDSystem<Rational>, s: usize, big: usize) -> usize {
    let all = jets_up_to(sys.n, sys.m, big).len();
    let high = all - jets_up_to(sys.n, sys.m, s).len();
    // rank(V_big) - rank of its part involving jets above s
    let cols = jets_up_to(sys.n, sys.m, big);
    let mut rows = Vec::new();
    for e in &sys.equations {
        if e.is_zero() || e.order() > big {
            continue;
        }
        for nu in MultiIndex::up_to_order(sys.n, big - e.order()) {
            let p = e.prolong_by(&nu);
            rows.push(cols.iter().map(|j| p.coeff(j)).collect::<Vec<_>>());
        }
    }
    let total = rank_mod_p(&rows);
    let upper: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r[all - high..].to_vec())
        .collect();
    let upper_rank = rank_mod_p(&upper);
    jets_up_to(sys.n, sys.m, s).len() - (total - upper_rank)
}

const P: u128 = (1 << 61) - 1;

fn pow_mod(mut b: u128, mut e: u128) -> u128 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn to_mod_p(q: &Rational) -> u128 {
    let p = BigInt::from(P);
    let residue = |x: &BigInt| -> u128 { x.mod_floor(&p).to_u128().unwrap() };
    residue(q.numer()) * pow_mod(residue(q.denom()), P - 2) % P
}

/// Rank over `Z/p` for `p = 2^61 - 1`; agrees with the rational rank unless
/// `p` divides every maximal nonzero minor.
pub fn rank_mod_p(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<u128>> = rows.iter().map(|r| r.iter().map(to_mod_p).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][c], P - 2);
        let prow: Vec<u128> = m[rank].iter().map(|x| x * inv % P).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        m[rank] = prow;
        rank += 1;
    }
    rank
}
