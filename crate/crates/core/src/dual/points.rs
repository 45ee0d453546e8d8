use crate::arith::matrix::{self, Matrix};
use crate::arith::{Field, UniPoly};
use crate::arith::unipoly::charpoly;
use crate::error::{Error, Result};

use super::{DualSpace, Section};

/// The maximal ideal `(d_1 - c_1, ..., d_n - c_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MaximalPoint<F: Field> {
    pub c: Vec<F>,
    /// Dimension of the primary component of `M` at this point.
    pub multiplicity: usize,
}

/// Matrix of `a` restricted to the invariant subspace spanned by the rows of `w`.
fn restrict<F: Field>(a: &Matrix<F>, w: &Matrix<F>) -> Matrix<F> {
    let k = w.len();
    let dim = a.len();
    // Solve w^T x = a w_j for each j.
    let mut out = matrix::zeros(k, k);
    for (j, wj) in w.iter().enumerate() {
        let target = matrix::mul_vec(a, wj);
        let mut aug: Matrix<F> = (0..dim)
            .map(|r| {
                let mut row: Vec<F> = w.iter().map(|v| v[r].clone()).collect();
                row.push(target[r].clone());
                row
            })
            .collect();
        let piv = matrix::rref(&mut aug);
        for (r, &p) in piv.iter().enumerate() {
            debug_assert!(p < k, "subspace is invariant");
            out[p][j] = aug[r][k].clone();
        }
    }
    out
}

fn power<F: Field>(a: &Matrix<F>, e: usize) -> Matrix<F> {
    let mut out = matrix::identity(a.len());
    for _ in 0..e {
        out = matrix::mul(&out, a);
    }
    out
}

/// Joint generalized eigenspaces of commuting matrices, as rows.
pub(super) fn primary_components<F: Field>(
    mats: &[Matrix<F>],
    names: &[String],
) -> Result<Vec<(Vec<F>, Matrix<F>)>> {
    let dim = mats.first().map(|a| a.len()).unwrap_or(0);
    let mut parts: Vec<(Vec<F>, Matrix<F>)> = vec![(Vec::new(), matrix::identity(dim))];
    for a in mats {
        let mut next = Vec::new();
        for (c, w) in parts {
            if w.is_empty() {
                continue;
            }
            let b = restrict(a, &w);
            let p: UniPoly<F> = charpoly(&b).squarefree_part();
            let (roots, rest) = F::roots(&p);
            if rest.degree() > 0 {
                return Err(Error::NonRationalEigenvalue {
                    degree: rest.degree(),
                    factor: rest.fmt_named("x", names),
                });
            }
            for r in roots {
                let shifted = power(&matrix::shift_diag(&b, &r), w.len());
                let local = matrix::kernel(&shifted, w.len());
                let rows: Matrix<F> = local
                    .iter()
                    .map(|x| {
                        let mut v = vec![F::zero(); dim];
                        for (xi, wi) in x.iter().zip(&w) {
                            for (t, s) in v.iter_mut().zip(wi) {
                                *t = t.add(&xi.mul(s));
                            }
                        }
                        v
                    })
                    .collect();
                let mut c2 = c.clone();
                c2.push(r);
                next.push((c2, rows));
            }
        }
        parts = next;
    }
    Ok(parts.into_iter().filter(|(_, w)| !w.is_empty()).collect())
}

#[derive(Clone, Debug)]
pub struct Generators<F: Field> {
    pub count: usize,
    pub sections: Vec<Section<F>>,
    pub points: Vec<MaximalPoint<F>>,
    pub top_dims: Vec<usize>,
    /// Conditions on the coefficient field keeping the points distinct.
    pub branch_conditions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsystemSum {
    Sum,
    ProperSubspace { defect: usize },
}

impl<F: Field> DualSpace<F> {
    pub fn maximal_points(&self) -> Result<Vec<MaximalPoint<F>>> {
        Ok(primary_components(&self.action, &self.names)?
            .into_iter()
            .map(|(c, w)| MaximalPoint { c, multiplicity: w.len() })
            .collect())
    }

    fn shifted(&self, mats: &[Matrix<F>], p: &MaximalPoint<F>) -> Matrix<F> {
        mats.iter()
            .zip(&p.c)
            .flat_map(|(a, c)| matrix::shift_diag(a, c))
            .collect()
    }

    /// Basis of `soc_m(M) = ∩ ker(d_i - c_i)`, as elements of `M`.
    pub fn socle(&self, p: &MaximalPoint<F>) -> Vec<Vec<F>> {
        matrix::kernel(&self.shifted(&self.action, p), self.dim())
    }

    /// Basis of `m R = Σ im(d_i - c_i)`.
    pub fn radical(&self, p: &MaximalPoint<F>) -> Vec<Section<F>> {
        matrix::span_basis(&self.shifted(&self.action, p))
    }

    /// Sections dual to parametric jets whose classes span `R / m R`,
    /// taken from the highest jets down.
    pub fn top_component(&self, p: &MaximalPoint<F>) -> Vec<Section<F>> {
        let mut span = self.radical(p);
        let mut out = Vec::new();
        for i in (0..self.dim()).rev() {
            let e = self.unit(i);
            let mut w = span.clone();
            let piv = matrix::rref(&mut w);
            if !matrix::in_span(&w, &piv, &e) {
                span.push(e.clone());
                out.push(e);
            }
        }
        out.reverse();
        debug_assert_eq!(out.len(), self.socle(p).len());
        out
    }

    /// Minimal generators: the `j`-th one sums the `j`-th top vector of
    /// every point that has one.
    pub fn min_generators(&self) -> Result<Generators<F>> {
        let points = self.maximal_points()?;
        let tops: Vec<Vec<Section<F>>> = points.iter().map(|p| self.top_component(p)).collect();
        let count = tops.iter().map(|t| t.len()).max().unwrap_or(0);
        let sum = |lifts: &[Vec<Section<F>>]| -> Vec<Section<F>> {
            (0..count)
                .map(|j| {
                    let mut v = vec![F::zero(); self.dim()];
                    for t in lifts.iter().filter_map(|t| t.get(j)) {
                        for (x, y) in v.iter_mut().zip(t) {
                            *x = x.add(y);
                        }
                    }
                    v
                })
                .collect()
        };
        let mut sections = sum(&tops);
        if !self.generation_check(&sections) {
            let projected = self.project_tops(&tops)?;
            sections = sum(&projected);
        }
        Ok(Generators {
            count,
            top_dims: tops.iter().map(|t| t.len()).collect(),
            branch_conditions: self.branch_conditions(&points),
            sections,
            points,
        })
    }

    /// Replace each top vector by its component in the primary part of `R`
    /// at its own point.
    fn project_tops(&self, tops: &[Vec<Section<F>>]) -> Result<Vec<Vec<Section<F>>>> {
        let parts = primary_components(&self.dmat, &self.names)?;
        let all: Matrix<F> = parts.iter().flat_map(|(_, w)| w.clone()).collect();
        let offsets: Vec<usize> = parts
            .iter()
            .scan(0, |acc, (_, w)| {
                let o = *acc;
                *acc += w.len();
                Some(o)
            })
            .collect();
        let points = self.maximal_points()?;
        let mut out = Vec::new();
        for (p, top) in points.iter().zip(tops) {
            let k = parts.iter().position(|(c, _)| c == &p.c).expect("same points on M and R");
            let w = &parts[k].1;
            let mut lifted = Vec::new();
            for v in top {
                let x = solve_in_basis(&all, v);
                let mut proj = vec![F::zero(); self.dim()];
                for (xi, wi) in x[offsets[k]..offsets[k] + w.len()].iter().zip(w) {
                    for (t, s) in proj.iter_mut().zip(wi) {
                        *t = t.add(&xi.mul(s));
                    }
                }
                lifted.push(proj);
            }
            out.push(lifted);
        }
        Ok(out)
    }

    fn branch_conditions(&self, points: &[MaximalPoint<F>]) -> Vec<String> {
        let mut out = Vec::new();
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                let diffs: Vec<F> = p.c.iter().zip(&q.c).map(|(a, b)| a.sub(b)).filter(|d| !d.is_zero()).collect();
                if diffs.iter().all(|d| !d.is_constant()) {
                    let parts: Vec<String> = diffs
                        .iter()
                        .map(|d| {
                            let t = d.fmt_named(&self.names);
                            let t = if t.starts_with('-') { d.neg().fmt_named(&self.names) } else { t };
                            format!("{} ≠ 0", t)
                        })
                        .collect();
                    out.push(parts.join(" or "));
                }
            }
        }
        out
    }

    pub fn subsystem_sum(&self, r1: &[Section<F>], r2: &[Section<F>]) -> Result<SubsystemSum> {
        for part in [r1, r2] {
            let mut span = matrix::span_basis(part);
            let piv = matrix::rref(&mut span);
            for v in part {
                for d in &self.dmat {
                    if !matrix::in_span(&span, &piv, &matrix::mul_vec(d, v)) {
                        return Err(Error::NotInvariant);
                    }
                }
            }
        }
        let all: Vec<Section<F>> = r1.iter().chain(r2).cloned().collect();
        let rank = matrix::rank(&all);
        if rank == self.dim() {
            Ok(SubsystemSum::Sum)
        } else {
            Ok(SubsystemSum::ProperSubspace { defect: self.dim() - rank })
        }
    }
}

/// Coefficients of `v` in the basis given by the rows of `basis`.
fn solve_in_basis<F: Field>(basis: &Matrix<F>, v: &[F]) -> Vec<F> {
    let k = basis.len();
    let mut aug: Matrix<F> = (0..v.len())
        .map(|r| {
            let mut row: Vec<F> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let piv = matrix::rref(&mut aug);
    let mut x = vec![F::zero(); k];
    for (r, &p) in piv.iter().enumerate() {
        if p < k {
            x[p] = aug[r][k].clone();
        }
    }
    x
}
