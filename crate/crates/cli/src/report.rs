//! Serializable analysis reports and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    /// The analysed system in the DSL, after parameter assignments.
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<Involution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters: Option<Characters>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub purity: Option<PurityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<ChainLevel>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_part: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParametrizationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<GeneratorsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delocalization: Option<DelocalizationReport>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Involution {
    pub involutive: bool,
    pub order: usize,
    /// Classes of the top-order equations, in the order listed.
    pub classes: Vec<usize>,
    pub equations: Vec<String>,
    pub coordinate_change: Vec<Vec<String>>,
    pub changes_applied: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Characters {
    pub alpha: Vec<usize>,
    pub codim: usize,
    pub full_torsion: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_r: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PurityReport {
    pub pure: bool,
    pub codim: usize,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainGenerator {
    pub element: String,
    pub codim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainLevel {
    pub r: usize,
    pub generators: Vec<ChainGenerator>,
    pub gap_with_next: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParametrizationReport {
    Parametrization {
        free: Vec<String>,
        /// `rows[k][j]`: coefficient of `z^j` in unknown `k`.
        rows: Vec<Vec<String>>,
    },
    Simplification {
        witness: String,
        annihilator: Vec<String>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Point {
    pub c: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    /// Number of localized directions; absent when no localization was needed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
    pub field: Vec<String>,
    pub localized_system: Vec<String>,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    pub basis: Vec<String>,
    pub maximal_points: Vec<Point>,
    pub socle_dims: Vec<usize>,
    pub top: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    /// Section values keyed by jet, e.g. `(1,2,3)` for `a^{123}`.
    pub terms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorsReport {
    pub num_generators: usize,
    pub generators: Vec<Section>,
    pub top_dims: Vec<usize>,
    pub branch_conditions: Vec<String>,
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DelocalizationReport {
    pub qprime: usize,
    pub delta: i64,
    pub tau: usize,
    pub alpha: Vec<u32>,
    /// One modular equation `E_{α'}` per generator.
    pub equations: Vec<Section>,
    pub generates_order_q: bool,
}

impl Section {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (jet, c)) in self.terms.iter().enumerate() {
            let (neg, c) = match c.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, c.clone()),
            };
            let sep = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coeff = if c == "1" {
                String::new()
            } else if c.contains(' ') {
                format!("({})*", c)
            } else {
                format!("{}*", c)
            };
            let _ = write!(out, "{}{}a{}", sep, coeff, caret(jet));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `(1,2)` becomes `^(1,2)`, `2(1,2)` becomes `2^(1,2)`.
fn caret(key: &str) -> String {
    match key.find('(') {
        Some(p) => format!("{}^{}", &key[..p], &key[p..]),
        None => key.to_string(),
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "command: {}  (seed {})", self.command, self.seed);
        let _ = writeln!(o, "input:");
        for l in self.input.lines() {
            let _ = writeln!(o, "  {}", l);
        }
        if let Some(inv) = &self.involution {
            let _ = writeln!(o, "involutive system of order {} ({} coordinate changes):", inv.order, inv.changes_applied);
            for e in &inv.equations {
                let _ = writeln!(o, "  {} = 0", e);
            }
            let _ = writeln!(o, "classes: {:?}", inv.classes);
        }
        if let Some(c) = &self.characters {
            let _ = writeln!(o, "characters: {:?}  codim r = {}", c.alpha, c.codim);
            let _ = writeln!(o, "torsion module: {}", if c.full_torsion { "yes" } else { "no" });
            if let Some(d) = c.dim_r {
                let _ = writeln!(o, "dim R = {}", d);
            }
        }
        if let Some(p) = &self.purity {
            if p.pure {
                let _ = writeln!(o, "pure: {}-pure", p.codim);
            } else {
                let _ = writeln!(o, "pure: no (codim {}), new equations:", p.codim);
                for w in &p.witnesses {
                    let _ = writeln!(o, "  {} = 0", w);
                }
            }
        }
        if let Some(chain) = &self.chain {
            let _ = writeln!(o, "torsion chain:");
            for l in chain {
                let gens: Vec<String> = l.generators.iter().map(|g| format!("{} (codim {})", g.element, g.codim)).collect();
                let gap = if l.gap_with_next { "  [= t_{}]".replace("{}", &(l.r + 1).to_string()) } else { String::new() };
                let _ = writeln!(o, "  t_{}: {}{}", l.r, if gens.is_empty() { "0 mod equations".into() } else { gens.join(", ") }, gap);
            }
        }
        if let Some(p) = &self.pure_part {
            let _ = writeln!(o, "pure part:");
            for e in p {
                let _ = writeln!(o, "  {} = 0", e);
            }
        }
        match &self.parametrization {
            Some(ParametrizationReport::Parametrization { free, rows }) => {
                let _ = writeln!(o, "parametrization (free: {}):", free.join(", "));
                for (k, r) in rows.iter().enumerate() {
                    let terms: Vec<String> = r.iter().enumerate().map(|(j, p)| format!("({})*z{}", p, j + 1)).collect();
                    let _ = writeln!(o, "  y{} = {}", k + 1, terms.join(" + "));
                }
            }
            Some(ParametrizationReport::Simplification { witness, annihilator }) => {
                let _ = writeln!(o, "not parametrizable: torsion element {} is annihilated by {}", witness, annihilator.join(", "));
            }
            None => {}
        }
        if let Some(d) = &self.dual {
            if let Some(r) = d.split {
                let _ = writeln!(o, "localized over Q({}) in {} directions:", d.field.join(", "), r);
                for e in &d.localized_system {
                    let _ = writeln!(o, "  {} = 0", e);
                }
            }
            let _ = writeln!(o, "dim R = {}, parametric jets: {}", d.dim_r, d.basis.join(", "));
            for (p, s) in d.maximal_points.iter().zip(&d.socle_dims) {
                let _ = writeln!(o, "maximal point c = ({}), multiplicity {}, socle dimension {}", p.c.join(", "), p.multiplicity, s);
            }
        }
        if let Some(g) = &self.generators {
            let _ = writeln!(o, "minimal generators: {}", g.num_generators);
            for (i, s) in g.generators.iter().enumerate() {
                let _ = writeln!(o, "  E{} ≡ {} = 0", i + 1, s.render());
            }
            for c in &g.branch_conditions {
                let _ = writeln!(o, "  valid when {}", c);
            }
        }
        if let Some(d) = &self.delocalization {
            let _ = writeln!(o, "delocalized: q' = {} (δ = {}, τ = {})", d.qprime, d.delta, d.tau);
            for (i, e) in d.equations.iter().enumerate() {
                let _ = writeln!(o, "  E{}_{:?} ≡ {} = 0", i + 1, d.alpha, e.render());
            }
            let _ = writeln!(o, "  generates all modular equations of the system order: {}", d.generates_order_q);
        }
        for w in &self.warnings {
            let _ = writeln!(o, "warning: {}", w);
        }
        o
    }
}
