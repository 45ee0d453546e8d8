//! Dense matrices over a [`Field`].

use super::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    let mut out: Matrix<F> = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&x.mul(&b[k][j]));
                }
            }
        }
    }
    out
}

pub fn mul_vec<F: Field>(a: &Matrix<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(F::zero(), |acc, (x, y)| {
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    acc.add(&x.mul(y))
                }
            })
        })
        .collect()
}

pub fn transpose<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn sub<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.sub(q)).collect())
        .collect()
}

/// `a - c I`.
pub fn shift_diag<F: Field>(a: &Matrix<F>, c: &F) -> Matrix<F> {
    let mut m = a.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(c);
    }
    m
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        m[i][j] = m[i][j].sub(&f.mul(&m[r][j]));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of the right kernel `{x : m x = 0}`; `cols` is needed when `m` has no rows.
pub fn kernel<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut w = m.clone();
    let piv = rref(&mut w);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in piv.iter().enumerate() {
            v[pc] = w[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// Row-reduced basis of the span of `vectors`.
pub fn span_basis<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut w = vectors.to_vec();
    rref(&mut w);
    w
}

/// Whether `v` lies in the row space of the RREF matrix `basis` with pivots `piv`.
pub fn in_span<F: Field>(basis: &Matrix<F>, piv: &[usize], v: &[F]) -> bool {
    let mut w = v.to_vec();
    for (r, &c) in piv.iter().enumerate() {
        if !w[c].is_zero() {
            let f = w[c].clone();
            for (j, x) in basis[r].iter().enumerate() {
                if !x.is_zero() {
                    w[j] = w[j].sub(&f.mul(x));
                }
            }
        }
    }
    w.iter().all(|x| x.is_zero())
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    #[test]
    fn kernel_is_annihilated() {
        let m: Matrix<Rational> = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mul_vec(&m, &v).iter().all(|x| x == &rat(0)));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a: Matrix<Rational> = vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(2));
    }
}
