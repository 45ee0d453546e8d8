use crate::arith::{Field, Monomial, Poly, RatFn};
use crate::error::{Error, Result};
use crate::involution::{complete, CompletionOptions, InvolutiveSystem};
use crate::jets::{Jet, LinearEquation, MultiIndex, PDSystem};

/// A system over `Q(params, χ_1..χ_{n-r})` in the directions
/// `d_{n-r+1}..d_n`, stored with local indices `0..r`.
#[derive(Clone, Debug)]
pub struct LocalizedSystem {
    pub split: usize,
    /// Number of ambient directions.
    pub n: usize,
    pub nparams: usize,
    pub param_names: Vec<String>,
    pub involutive: InvolutiveSystem<RatFn>,
    /// Denominators of the coefficients of the completed system.
    pub denominators: Vec<Poly>,
}

impl LocalizedSystem {
    pub fn offset(&self) -> usize {
        self.n - self.split
    }

    pub fn system(&self) -> &PDSystem<RatFn> {
        &self.involutive.system
    }

    /// Names of the coefficient variables: parameters, then `χ_1..χ_{n-r}`.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = self.param_names.clone();
        names.extend((1..=self.offset()).map(|i| format!("χ{}", i)));
        names
    }

    /// Jet label in ambient direction numbering.
    pub fn jet_label(&self, j: &Jet, m: usize) -> String {
        let mut s = String::new();
        for (i, &e) in j.mu.entries().iter().enumerate() {
            for _ in 0..e {
                s.push_str(&(i + 1 + self.offset()).to_string());
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        if m == 1 {
            format!("y_{}", s)
        } else {
            format!("y{}_{}", j.k + 1, s)
        }
    }

    pub fn fmt_equation(&self, e: &LinearEquation<RatFn>) -> String {
        let names = self.variable_names();
        let m = self.involutive.m();
        let parts: Vec<String> = e
            .terms()
            .rev()
            .map(|(j, c)| {
                let cs = c.fmt_named(&names);
                let l = self.jet_label(j, m);
                if c.is_one() {
                    l
                } else if cs.contains(' ') {
                    format!("({})*{}", cs, l)
                } else {
                    format!("{}*{}", cs, l)
                }
            })
            .collect();
        let mut out = String::new();
        for (i, t) in parts.iter().enumerate() {
            match (i, t.strip_prefix('-')) {
                (0, _) => out.push_str(t),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                _ => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Replace every `y^k_{(μ',μ'')}` by `χ^{μ'} y^k_{μ''}` with `μ'` over the
/// first `n - r` directions, then complete over `Q(params, χ')`.
pub fn localize<F: Field>(
    inv: &InvolutiveSystem<F>,
    r: usize,
    param_names: &[String],
    opts: &CompletionOptions,
) -> Result<LocalizedSystem> {
    let n = inv.n();
    if r == 0 || r > n {
        return Err(Error::Invalid(format!("split {} outside 1..={}", r, n)));
    }
    let s = n - r;
    let np = param_names.len();
    let nv = np + s;
    let eqs: Vec<LinearEquation<RatFn>> = inv
        .system
        .equations
        .iter()
        .map(|e| {
            let mut out = LinearEquation::zero();
            for (j, c) in e.terms() {
                let ent = j.mu.entries();
                let mut exps = vec![0u32; nv];
                for (i, &x) in ent[..s].iter().enumerate() {
                    exps[np + i] = x;
                }
                let chi = RatFn::from_poly(Poly::monomial(nv, Monomial::new(exps), crate::arith::rat(1)));
                let lifted = c.to_ratfn();
                let coeff = Field::mul(&lifted, &chi);
                out.add_term(Jet::new(j.k, MultiIndex::new(ent[s..].to_vec())), coeff);
            }
            out
        })
        .filter(|e: &LinearEquation<RatFn>| !e.is_zero())
        .collect();
    let local = PDSystem::new(r, inv.m(), eqs);
    let done = complete(&local, opts)?;
    let mut denominators: Vec<Poly> = Vec::new();
    for e in &done.system.equations {
        for (_, c) in e.terms() {
            let d = c.denom().clone();
            if !d.is_constant() && !denominators.contains(&d) {
                denominators.push(d);
            }
        }
    }
    Ok(LocalizedSystem {
        split: r,
        n,
        nparams: np,
        param_names: param_names.to_vec(),
        involutive: done,
        denominators,
    })
}
