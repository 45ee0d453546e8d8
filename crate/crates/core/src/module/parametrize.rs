use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{clear_denominators, matrix, poly_gcd, Field, Monomial, Poly, RatFn, Rational};
use crate::error::Result;
use crate::jets::{LinearEquation, PDSystem};

use super::{annihilator, equation_to_row, new_elements, row_to_equation};

/// `y^k = Σ_j columns[j][k] z^j`, polynomial in the parameters and `χ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    /// Indices of the unknowns that became free, one per `z^j`.
    pub free: Vec<usize>,
    pub columns: Vec<Vec<Poly>>,
    /// Number of leading parameter variables in each polynomial.
    pub nparams: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Parametrized {
    Parametrization(Parametrization),
    /// `annihilator · witness = 0` in the module with `witness ≠ 0`.
    SimplificationDetected {
        witness: LinearEquation<Rational>,
        annihilator: Vec<Poly>,
    },
}

/// Symbol matrix over `Q(params)[χ]`: entry `(e, k)` is `Σ_μ a^μ_k χ^μ`.
pub fn symbol_matrix(s: &PDSystem<RatFn>, nparams: usize) -> Vec<Vec<RatFn>> {
    let nv = nparams + s.n;
    s.equations
        .iter()
        .map(|e| {
            let mut row = vec![<RatFn as Field>::zero(); s.m];
            for (j, c) in e.terms() {
                let mut exps = vec![0u32; nv];
                for (i, &x) in j.mu.entries().iter().enumerate() {
                    exps[nparams + i] = x;
                }
                let chi = RatFn::from_poly(Poly::monomial(nv, Monomial::new(exps), crate::arith::rat(1)));
                row[j.k] = Field::add(&row[j.k], &Field::mul(c, &chi));
            }
            row
        })
        .collect()
}

/// Clear denominators, remove the common polynomial and integer content,
/// and make the free entry's leading coefficient positive.
fn normalize(col: &[RatFn], free: usize) -> Vec<Poly> {
    let (polys, _) = clear_denominators(col);
    let g = polys.iter().fold(Poly::zero(0), |g, p| poly_gcd(&g, p));
    let out: Vec<Poly> = polys.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for p in &out {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
    }
    for p in &out {
        for (_, c) in p.terms() {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
    }
    let mut scale = Rational::new(den, num);
    if out[free].leading_coeff().is_negative() {
        scale = -scale;
    }
    out.iter().map(|p| p.scale(&scale)).collect()
}

/// Solve the symbol equations over `Q(params, χ)` for the unknowns with the
/// highest indices first; the remaining ones become the free `z`.
///
/// Parameter-free systems are first checked for torsion: a nonzero element
/// killed by some polynomial is reported instead.
pub fn parametrize(s: &PDSystem<RatFn>, nparams: usize) -> Result<Parametrized> {
    let (n, m) = (s.n, s.m);
    if nparams == 0 {
        let rows: Vec<Vec<Poly>> = s
            .equations
            .iter()
            .map(|e| equation_to_row(&e.map(|c| c.as_rational().expect("parameter-free")), n, m))
            .collect();
        let (_, kept, _) = new_elements(&rows, n, m, n)?;
        if let Some(w) = kept.iter().min_by_key(|w| {
            let e = row_to_equation(w, n);
            (e.order(), e.len())
        }) {
            return Ok(Parametrized::SimplificationDetected {
                witness: row_to_equation(w, n).monic(),
                annihilator: annihilator(&rows, w, n),
            });
        }
    }
    let a = symbol_matrix(s, nparams);
    let mut rev: Vec<Vec<RatFn>> = a.iter().map(|r| r.iter().rev().cloned().collect()).collect();
    let pivots = matrix::rref(&mut rev);
    let free: Vec<usize> = (0..m).filter(|k| !pivots.contains(&(m - 1 - k))).collect();
    let columns = free
        .iter()
        .map(|&f| {
            let mut col = vec![<RatFn as Field>::zero(); m];
            col[f] = <RatFn as Field>::one();
            for (i, &p) in pivots.iter().enumerate() {
                col[m - 1 - p] = Field::neg(&rev[i][m - 1 - f]);
            }
            normalize(&col, f)
        })
        .collect();
    Ok(Parametrized::Parametrization(Parametrization {
        free,
        columns,
        nparams,
    }))
}

impl Parametrization {
    /// Whether every equation of `s` vanishes on every column.
    pub fn verify(&self, s: &PDSystem<RatFn>) -> bool {
        let a = symbol_matrix(s, self.nparams);
        a.iter().all(|row| {
            self.columns.iter().all(|col| {
                let mut acc = <RatFn as Field>::zero();
                for (x, p) in row.iter().zip(col) {
                    acc = Field::add(&acc, &Field::mul(x, &RatFn::from_poly(p.clone())));
                }
                Field::is_zero(&acc)
            })
        })
    }
}
