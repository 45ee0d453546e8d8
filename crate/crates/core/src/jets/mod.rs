//! Multi-indices, jet coordinates, linear equations and systems.

mod echelon;
mod equation;
mod system;

pub use echelon::Echelon;
pub use equation::LinearEquation;
pub use system::{autoreduce, reduce, PDSystem};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multi-index `μ = (μ_1, ..., μ_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `1_i`, with `i` 0-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|μ|`.
    pub fn order(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Smallest 1-based `i` with `μ_i ≠ 0`.
    pub fn class(&self) -> Result<usize> {
        self.0
            .iter()
            .position(|&e| e != 0)
            .map(|i| i + 1)
            .ok_or(Error::ZeroOrder)
    }

    /// `μ + 1_i` (0-based `i`).
    pub fn raise(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }

    /// `μ - 1_i`, if nonnegative.
    pub fn lower(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(MultiIndex(v))
    }

    pub fn plus(&self, other: &MultiIndex) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &MultiIndex) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// All multi-indices of length `n` and order exactly `q`, ascending.
    pub fn of_order(n: usize, q: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(MultiIndex(Vec::new()));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left;
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, q as u32, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All multi-indices of order at most `q`, ascending.
    pub fn up_to_order(n: usize, q: usize) -> Vec<MultiIndex> {
        (0..=q).flat_map(|s| Self::of_order(n, s)).collect()
    }

    /// Compact text: `(1,0,2)`.
    pub fn tuple(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Paper-style subscript: `(1,0,2)` becomes `133`, the zero index `0`.
    pub fn subscript(&self) -> String {
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                s.push_str(&(i + 1).to_string());
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// Order first, then higher class first, then by the remaining entries.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        crate::arith::poly::degrevlex(&self.0, &other.0)
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tuple())
    }
}

/// Number of multi-indices of length `n`, order `q` and class `i` (1-based).
pub fn count_of_class(n: usize, q: usize, i: usize) -> usize {
    if q == 0 {
        return 0;
    }
    binomial(q - 1 + n - i, n - i)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for j in 0..k {
        r = r * (n - j) as u128 / (j + 1) as u128;
    }
    r as usize
}

/// The jet coordinate `y^k_μ`; `k` is 0-based here and 1-based in text.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Jet {
    pub k: usize,
    pub mu: MultiIndex,
}

impl Jet {
    pub fn new(k: usize, mu: MultiIndex) -> Self {
        Jet { k, mu }
    }

    pub fn from_slice(k: usize, mu: &[u32]) -> Self {
        Jet::new(k, MultiIndex::new(mu.to_vec()))
    }

    pub fn order(&self) -> usize {
        self.mu.order()
    }

    pub fn class(&self) -> Result<usize> {
        self.mu.class()
    }

    pub fn raise(&self, i: usize) -> Jet {
        Jet::new(self.k, self.mu.raise(i))
    }

    /// `y_133`, or `y2_4` when there are several unknowns.
    pub fn label(&self, m: usize) -> String {
        if m == 1 {
            format!("y_{}", self.mu.subscript())
        } else {
            format!("y{}_{}", self.k + 1, self.mu.subscript())
        }
    }

    /// DSL form: `y[1,0,2]` or `y2[1,0,2]`.
    pub fn dsl(&self, m: usize) -> String {
        let parts: Vec<String> = self.mu.entries().iter().map(|e| e.to_string()).collect();
        if m == 1 {
            format!("y[{}]", parts.join(","))
        } else {
            format!("y{}[{}]", self.k + 1, parts.join(","))
        }
    }
}

/// Jets are ordered by multi-index; the unknown index breaks ties, larger
/// unknowns being greater.
impl Ord for Jet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mu.cmp(&other.mu).then(self.k.cmp(&other.k))
    }
}

impl PartialOrd for Jet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}{:?}", self.k + 1, self.mu)
    }
}

/// All jets of `m` unknowns with multi-indices of order exactly `q`, ascending.
pub fn jets_of_order(n: usize, m: usize, q: usize) -> Vec<Jet> {
    let mut out = Vec::new();
    for mu in MultiIndex::of_order(n, q) {
        for k in 0..m {
            out.push(Jet::new(k, mu.clone()));
        }
    }
    out
}

pub fn jets_up_to(n: usize, m: usize, q: usize) -> Vec<Jet> {
    (0..=q).flat_map(|s| jets_of_order(n, m, s)).collect()
}
