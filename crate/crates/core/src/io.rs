//! Text and JSON input formats for systems.
//!
//! DSL, one item per line, `#` starts a comment:
//!
//! ```text
//! n=3 m=1 params=a
//! y[0,0,2] = 0
//! y[1,0,1] - a*y[0,1,0] = 0
//! poly x1*x2 - x3 = 0
//! ```
//!
//! `poly` lines (single unknown only) read a polynomial in `x1..xn` as the
//! operator applied to `y`.

use serde::{Deserialize, Serialize};

use crate::arith::parse::parse_poly;
use crate::arith::{Field, Monomial, Poly, RatFn, Rational};
use crate::error::{Error, Result};
use crate::jets::{Jet, LinearEquation, MultiIndex, PDSystem};

/// A parsed system over `Q(params)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemInput {
    pub n: usize,
    pub m: usize,
    pub params: Vec<String>,
    pub equations: Vec<LinearEquation<RatFn>>,
}

impl SystemInput {
    pub fn system(&self) -> PDSystem<RatFn> {
        PDSystem::new(self.n, self.m, self.equations.clone()).with_names(self.params.clone())
    }

    /// The system over the rationals, if no coefficient involves a parameter.
    pub fn rational(&self) -> Option<PDSystem<Rational>> {
        let mut eqs = Vec::new();
        for e in &self.equations {
            let mut out = LinearEquation::zero();
            for (j, c) in e.terms() {
                out.add_term(j.clone(), c.as_rational()?);
            }
            eqs.push(out);
        }
        Some(PDSystem::new(self.n, self.m, eqs))
    }

    /// Substitute `value` for the parameter `name`, which is then dropped.
    pub fn specialize(&self, name: &str, value: &Rational) -> Result<SystemInput> {
        let idx = self
            .params
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::Invalid(format!("unknown parameter '{}'", name)))?;
        let np = self.params.len();
        let map: Vec<usize> = (0..np)
            .map(|i| if i < idx { i } else { i.saturating_sub(1) })
            .collect();
        let mut eqs = Vec::new();
        for e in &self.equations {
            let mut out = LinearEquation::zero();
            for (j, c) in e.terms() {
                let s = c.substitute(idx, value).ok_or(Error::ZeroDenominator)?;
                out.add_term(j.clone(), s.remap(np.saturating_sub(1), &map));
            }
            eqs.push(out);
        }
        let mut params = self.params.clone();
        params.remove(idx);
        Ok(SystemInput {
            n: self.n,
            m: self.m,
            params,
            equations: eqs,
        })
    }

    /// Render in the DSL; parses back to an equal system.
    pub fn to_dsl(&self) -> String {
        let mut out = format!("n={} m={}", self.n, self.m);
        if !self.params.is_empty() {
            out.push_str(&format!(" params={}", self.params.join(",")));
        }
        out.push('\n');
        for e in &self.equations {
            let mut parts = Vec::new();
            for (j, c) in e.terms().rev() {
                parts.push(format!("({})*{}", c.fmt_named(&self.params), j.dsl(self.m)));
            }
            if parts.is_empty() {
                parts.push("0".into());
            }
            out.push_str(&parts.join(" + "));
            out.push_str(" = 0\n");
        }
        out
    }

    pub fn to_json(&self) -> JsonSystem {
        JsonSystem {
            n: self.n,
            m: self.m,
            params: self.params.clone(),
            equations: self
                .equations
                .iter()
                .map(|e| {
                    e.terms()
                        .rev()
                        .map(|(j, c)| JsonTerm {
                            k: j.k + 1,
                            mu: j.mu.entries().to_vec(),
                            c: c.fmt_named(&self.params),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTerm {
    pub k: usize,
    pub mu: Vec<u32>,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonSystem {
    pub n: usize,
    #[serde(default = "one")]
    pub m: usize,
    #[serde(default)]
    pub params: Vec<String>,
    pub equations: Vec<Vec<JsonTerm>>,
}

fn one() -> usize {
    1
}

/// Parse either the DSL or the JSON form (detected by a leading `{`).
pub fn parse_input(text: &str) -> Result<SystemInput> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dsl(text)
    }
}

pub fn parse_json(text: &str) -> Result<SystemInput> {
    let js: JsonSystem = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    check_params(&js.params, js.n, 1)?;
    let mut eqs = Vec::new();
    for (ei, terms) in js.equations.iter().enumerate() {
        let mut e = LinearEquation::zero();
        for t in terms {
            if t.k == 0 || t.k > js.m || t.mu.len() != js.n {
                return Err(Error::parse(
                    ei + 1,
                    1,
                    format!("term k={} mu={:?} does not match n={} m={}", t.k, t.mu, js.n, js.m),
                ));
            }
            let c = parse_coeff(&t.c, &js.params, ei + 1, 0)?;
            e.add_term(Jet::from_slice(t.k - 1, &t.mu), c);
        }
        eqs.push(e);
    }
    Ok(SystemInput {
        n: js.n,
        m: js.m,
        params: js.params,
        equations: eqs,
    })
}

fn check_params(params: &[String], _n: usize, line: usize) -> Result<()> {
    for p in params {
        let valid = p.chars().next().map(|c| c.is_alphabetic()).unwrap_or(false)
            && p.chars().all(|c| c.is_alphanumeric() || c == '_')
            && crate::arith::parse::resolve_x(p).is_none()
            && !p.starts_with('y');
        if !valid {
            return Err(Error::parse(line, 1, format!("invalid parameter name '{}'", p)));
        }
    }
    Ok(())
}

fn parse_coeff(text: &str, params: &[String], line: usize, col: usize) -> Result<RatFn> {
    let resolve = |s: &str| params.iter().position(|p| p == s);
    let p = parse_poly(text, params.len(), &resolve, line, col)?;
    Ok(RatFn::from_poly(p))
}

pub fn parse_dsl(text: &str) -> Result<SystemInput> {
    let mut header: Option<(usize, usize, Vec<String>)> = None;
    let mut eqs = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((n, m, params)) = header.as_ref() else {
            header = Some(parse_header(line, line_no)?);
            continue;
        };
        let (lhs, rhs, rhs_col) = match line.find('=') {
            Some(p) => (&line[..p], &line[p + 1..], p + 1),
            None => (line, "0", line.len()),
        };
        let trimmed = lhs.trim_start();
        let lead = lhs.len() - trimmed.len();
        let mut e = if let Some(rest) = trimmed.strip_prefix("poly ") {
            if *m != 1 {
                return Err(Error::parse(line_no, lead + 1, "poly lines need m=1"));
            }
            parse_poly_line(rest, *n, params, line_no, lead + 5)?
        } else {
            parse_linear(lhs, *n, *m, params, line_no, 0)?
        };
        if !rhs.trim().is_empty() && rhs.trim() != "0" {
            let r = parse_linear(rhs, *n, *m, params, line_no, rhs_col)?;
            e.add_scaled(&r, &RatFn::one().neg());
        }
        eqs.push(e);
    }
    let (n, m, params) = header.ok_or_else(|| Error::parse(1, 1, "missing header line 'n=.. m=..'"))?;
    Ok(SystemInput {
        n,
        m,
        params,
        equations: eqs,
    })
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize, Vec<String>)> {
    let mut n = None;
    let mut m = 1;
    let mut params = Vec::new();
    let mut col = 0;
    for tok in line.split_whitespace() {
        col = line[col..].find(tok).map(|p| p + col).unwrap_or(col);
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line_no, col + 1, format!("expected key=value, got '{}'", tok)))?;
        let bad = || Error::parse(line_no, col + 1, format!("bad value in '{}'", tok));
        match k {
            "n" => n = Some(v.parse::<usize>().map_err(|_| bad())?),
            "m" => m = v.parse::<usize>().map_err(|_| bad())?,
            "params" => {
                params = v
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect()
            }
            _ => return Err(Error::parse(line_no, col + 1, format!("unknown header key '{}'", k))),
        }
        col += tok.len();
    }
    let n = n.ok_or_else(|| Error::parse(line_no, 1, "header must set n"))?;
    if n == 0 || m == 0 {
        return Err(Error::parse(line_no, 1, "n and m must be positive"));
    }
    check_params(&params, n, line_no)?;
    Ok((n, m, params))
}

/// Split at top-level `+`/`-`, keeping the sign with each term.
fn split_terms(s: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<char> = s.chars().collect();
    let mut byte_pos = Vec::with_capacity(bytes.len());
    let mut acc = 0;
    for c in &bytes {
        byte_pos.push(acc);
        acc += c.len_utf8();
    }
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => {
                let prev = bytes[..i].iter().rev().find(|c| !c.is_whitespace());
                if !matches!(prev, Some('*') | Some('/') | Some('^') | None) {
                    let piece: String = bytes[start..i].iter().collect();
                    if !piece.trim().is_empty() {
                        out.push((byte_pos[start], piece));
                    }
                    start = i;
                }
            }
            _ => {}
        }
    }
    let piece: String = bytes[start..].iter().collect();
    if !piece.trim().is_empty() {
        out.push((byte_pos.get(start).copied().unwrap_or(0), piece));
    }
    out
}

fn parse_linear(
    s: &str,
    n: usize,
    m: usize,
    params: &[String],
    line: usize,
    col0: usize,
) -> Result<LinearEquation<RatFn>> {
    let mut e = LinearEquation::zero();
    for (off, term) in split_terms(s) {
        let col = col0 + off;
        let t = term.trim();
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b.trim()),
            None => (1, t.strip_prefix('+').unwrap_or(t).trim()),
        };
        if body == "0" {
            continue;
        }
        let factors = split_product(body);
        let mut jet = None;
        let mut coeff: Vec<&str> = Vec::new();
        for f in &factors {
            let f = f.trim();
            if f.starts_with('y') && f.ends_with(']') {
                if jet.is_some() {
                    return Err(Error::parse(line, col + 1, "nonlinear term: two jets multiplied"));
                }
                jet = Some(parse_jet(f, n, m, line, col)?);
            } else {
                coeff.push(f);
            }
        }
        let jet = jet.ok_or_else(|| Error::parse(line, col + 1, format!("term '{}' has no jet y[..]", t)))?;
        let c = if coeff.is_empty() {
            RatFn::one()
        } else {
            parse_coeff(&coeff.join("*"), params, line, col)?
        };
        let c = if sign < 0 { c.neg() } else { c };
        e.add_term(jet, c);
    }
    Ok(e)
}

/// Split at top-level `*`.
fn split_product(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == '*' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

fn parse_jet(s: &str, n: usize, m: usize, line: usize, col: usize) -> Result<Jet> {
    let open = s.find('[').ok_or_else(|| Error::parse(line, col + 1, "expected '['"))?;
    let k = if open == 1 {
        1
    } else {
        s[1..open]
            .parse::<usize>()
            .map_err(|_| Error::parse(line, col + 1, format!("bad unknown '{}'", &s[..open])))?
    };
    if k == 0 || k > m {
        return Err(Error::parse(line, col + 1, format!("unknown index {} out of range 1..{}", k, m)));
    }
    let inner = &s[open + 1..s.len() - 1];
    let mu: Vec<u32> = inner
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(line, col + 1, format!("bad multi-index '{}'", inner)))?;
    if mu.len() != n {
        return Err(Error::parse(
            line,
            col + 1,
            format!("multi-index has {} entries, expected {}", mu.len(), n),
        ));
    }
    Ok(Jet::new(k - 1, MultiIndex::new(mu)))
}

fn parse_poly_line(
    s: &str,
    n: usize,
    params: &[String],
    line: usize,
    col: usize,
) -> Result<LinearEquation<RatFn>> {
    let np = params.len();
    let resolve = |name: &str| match crate::arith::parse::resolve_x(name) {
        Some(i) if i < n => Some(np + i),
        _ => params.iter().position(|p| p == name),
    };
    let p = parse_poly(s, np + n, &resolve, line, col)?;
    let mut e = LinearEquation::zero();
    for (mono, c) in p.terms() {
        let ex = mono.padded(np + n);
        let mu = MultiIndex::new(ex[np..].to_vec());
        let pc = Poly::monomial(np, Monomial::new(ex[..np].to_vec()), c.clone());
        e.add_term(Jet::new(0, mu), RatFn::from_poly(pc));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dsl_basic() {
        let s = parse_dsl("n=3 m=1\ny[0,0,2] = 0\ny[1,0,1] - y[0,1,0] = 0\n").unwrap();
        assert_eq!(s.equations.len(), 2);
        let sys = s.rational().unwrap();
        assert_eq!(sys.equations[1].len(), 2);
    }

    #[test]
    fn dsl_params_and_round_trip() {
        let text = "n=2 m=1 params=a\ny[0,2]\ny[1,1] - a*y[0,1]\n(a+1)*y[2,0] - 3/2*y[1,0] = 0\n";
        let s = parse_dsl(text).unwrap();
        assert!(s.rational().is_none());
        let back = parse_dsl(&s.to_dsl()).unwrap();
        assert_eq!(back, s);
        let z = s.specialize("a", &crate::arith::rat(0)).unwrap();
        assert!(z.rational().is_some());
    }

    #[test]
    fn poly_line() {
        let s = parse_dsl("n=2\npoly x2^2 + 2*x1*x2 = 0").unwrap();
        let e = &s.equations[0];
        assert_eq!(e.coeff(&Jet::from_slice(0, &[1, 1])), RatFn::from_int(2));
        assert_eq!(e.coeff(&Jet::from_slice(0, &[0, 2])), RatFn::one());
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_dsl("n=2\ny[0,2,1] = 0").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_dsl("n=2\ny[0,2]*y[1,0] = 0").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_dsl("m=1").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn json_input() {
        let t = r#"{"n":3,"m":1,"params":[],"equations":[[{"k":1,"mu":[0,0,2],"c":"1"}]]}"#;
        let s = parse_input(t).unwrap();
        assert_eq!(s.equations.len(), 1);
        let again = parse_json(&serde_json::to_string(&s.to_json()).unwrap()).unwrap();
        assert_eq!(again, s);
    }
}
