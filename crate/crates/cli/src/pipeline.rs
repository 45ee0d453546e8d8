use std::io::Read;

use clap::ValueEnum;
use macaulay_core::dual::{self, build_dual, DualSpace, ModularEquation};
use macaulay_core::involution::{finite_dimension, full_torsion_test};
use macaulay_core::io::{parse_input, SystemInput};
use macaulay_core::module::{self, localize, parametrize, Parametrized, Purity};
use macaulay_core::{complete, CompletionOptions, Error, Field, InvolutiveSystem, Jet, PDSystem, RatFn, Rational};

use crate::report::*;
use crate::{AnalysisRequest, CliError, Command, Input};

fn stage(name: &'static str) -> impl Fn(Error) -> CliError {
    move |source| CliError::Stage { stage: name, source }
}

fn read_input(input: &Input) -> Result<String, CliError> {
    match input {
        Input::Inline(t) => Ok(t.clone()),
        Input::Path(p) => std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {}", p.display(), e))),
        Input::Stdin => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(s)
        }
    }
}

/// `(2,3,3)` for `a^{233}`, `(0)` at order zero, `2(…)` for the second unknown.
fn section_key(j: &Jet, m: usize, offset: usize) -> String {
    let mut parts = Vec::new();
    for (i, &e) in j.mu.entries().iter().enumerate() {
        for _ in 0..e {
            parts.push((i + 1 + offset).to_string());
        }
    }
    if parts.is_empty() {
        parts.push("0".into());
    }
    let body = format!("({})", parts.join(","));
    if m == 1 {
        body
    } else {
        format!("{}{}", j.k + 1, body)
    }
}

fn section<F: Field>(space: &DualSpace<F>, v: &[F], offset: usize) -> Section {
    Section {
        terms: space
            .basis
            .iter()
            .zip(v)
            .filter(|(_, c)| !Field::is_zero(*c))
            .map(|(j, c)| (section_key(j, space.m, offset), c.fmt_named(&space.names)))
            .collect(),
    }
}

fn modular_section(e: &ModularEquation, m: usize) -> Section {
    Section {
        terms: e.iter().map(|(j, c)| (section_key(j, m, 0), c.to_string())).collect(),
    }
}

fn involution_report<F: Field>(inv: &InvolutiveSystem<F>, names: &[String]) -> Involution {
    Involution {
        involutive: true,
        order: inv.order,
        classes: inv.classes.iter().flatten().copied().collect(),
        equations: inv.system.equations.iter().map(|e| e.fmt_with(inv.m(), names)).collect(),
        coordinate_change: inv.coordinate_change.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
        changes_applied: inv.changes_applied,
    }
}

fn characters<F: Field>(inv: &InvolutiveSystem<F>) -> Characters {
    Characters {
        alpha: inv.alpha.clone(),
        codim: inv.codim,
        full_torsion: full_torsion_test(inv),
        dim_r: finite_dimension(inv),
    }
}

fn dual_report<F: Field>(space: &DualSpace<F>, split: Option<usize>, localized: Vec<String>, offset: usize) -> Result<DualReport, CliError> {
    let points = space.maximal_points().map_err(stage("inverse-system"))?;
    Ok(DualReport {
        split,
        field: space.names.clone(),
        localized_system: localized,
        dim_r: space.dim(),
        basis: space.basis.iter().map(|j| section_key(j, space.m, offset)).collect(),
        maximal_points: points
            .iter()
            .map(|p| Point {
                c: p.c.iter().map(|x| x.fmt_named(&space.names)).collect(),
                multiplicity: p.multiplicity,
            })
            .collect(),
        socle_dims: points.iter().map(|p| space.socle(p).len()).collect(),
        top: points
            .iter()
            .map(|p| space.top_component(p).iter().map(|v| section(space, v, offset).render()).collect())
            .collect(),
    })
}

fn generators_report<F: Field>(space: &DualSpace<F>, offset: usize) -> Result<(GeneratorsReport, Vec<Vec<F>>), CliError> {
    let g = space.min_generators().map_err(stage("generators"))?;
    let report = GeneratorsReport {
        num_generators: g.count,
        generators: g.sections.iter().map(|v| section(space, v, offset)).collect(),
        top_dims: g.top_dims.clone(),
        branch_conditions: g.branch_conditions.clone(),
        certified: space.generation_check(&g.sections),
    };
    Ok((report, g.sections))
}

fn wants(cmd: Command, stages: &[Command]) -> bool {
    cmd == Command::Full || stages.contains(&cmd)
}

pub fn run(req: &AnalysisRequest) -> Result<AnalysisReport, CliError> {
    let text = read_input(&req.input)?;
    let mut input: SystemInput = parse_input(&text).map_err(CliError::Parse)?;
    for (name, value) in &req.specialize {
        input = input.specialize(name, value).map_err(CliError::Parse)?;
    }
    let opts = CompletionOptions {
        seed: req.seed,
        max_rounds: req.max_rounds,
        max_order: req.max_order,
    };
    let mut report = AnalysisReport {
        schema: 1,
        command: req.command.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
        seed: req.seed,
        input: input.to_dsl(),
        ..Default::default()
    };
    let cmd = req.command;
    let exact = input.rational();

    if wants(cmd, &[Command::Parametrize]) {
        let p = parametrize(&input.system(), input.params.len()).map_err(stage("parametrization"))?;
        report.parametrization = Some(parametrization_report(&p, &input));
    }
    if cmd == Command::Parametrize {
        return Ok(report);
    }

    match &exact {
        Some(s) => {
            let inv = complete(s, &opts).map_err(stage("completion"))?;
            base_stages(&inv, &input, &mut report);
            let mut target = s.clone();
            if wants(cmd, &[Command::Purity, Command::TorsionChain]) {
                rational_stages(&inv, cmd, &mut report, &mut target)?;
            }
            dual_stages(&inv, &input, &opts, &mut report, cmd, Some(&target))?;
        }
        None => {
            let inv = complete(&input.system(), &opts).map_err(stage("completion"))?;
            base_stages(&inv, &input, &mut report);
            if wants(cmd, &[Command::Purity, Command::TorsionChain]) {
                report.warnings.push("purity and torsion chain need rational coefficients; assign the parameters with --set".into());
            }
            dual_stages(&inv, &input, &opts, &mut report, cmd, None)?;
        }
    }
    Ok(report)
}

fn parametrization_report(p: &Parametrized, input: &SystemInput) -> ParametrizationReport {
    let mut names = input.params.clone();
    names.extend((1..=input.n).map(|i| format!("χ{}", i)));
    let unknown = |k: usize| if input.m == 1 { "y".to_string() } else { format!("y{}", k + 1) };
    match p {
        Parametrized::Parametrization(p) => ParametrizationReport::Parametrization {
            free: p.free.iter().map(|&k| unknown(k)).collect(),
            rows: (0..input.m).map(|k| p.columns.iter().map(|c| c[k].fmt_with(&names)).collect()).collect(),
        },
        Parametrized::SimplificationDetected { witness, annihilator } => ParametrizationReport::Simplification {
            witness: witness.fmt_with(input.m, &[]),
            annihilator: annihilator.iter().map(|a| a.fmt_with(&names)).collect(),
        },
    }
}

fn base_stages<F: Field>(inv: &InvolutiveSystem<F>, input: &SystemInput, report: &mut AnalysisReport) {
    report.involution = Some(involution_report(inv, &input.params));
    if report.command != "complete" {
        report.characters = Some(characters(inv));
    }
}

/// Purity and torsion chain. For `full` on an impure system, `target`
/// becomes the pure part, which later stages describe.
fn rational_stages(
    inv: &InvolutiveSystem<Rational>,
    cmd: Command,
    report: &mut AnalysisReport,
    target: &mut PDSystem<Rational>,
) -> Result<(), CliError> {
    let m = inv.m();
    if wants(cmd, &[Command::Purity]) {
        match module::purity_test(inv).map_err(stage("purity"))? {
            Purity::Pure(r) => {
                report.purity = Some(PurityReport { pure: true, codim: r, witnesses: Vec::new() })
            }
            Purity::Impure { codim, witnesses } => {
                report.purity = Some(PurityReport {
                    pure: false,
                    codim,
                    witnesses: witnesses.iter().map(|w| w.fmt_with(m, &[])).collect(),
                });
                if cmd == Command::Full {
                    let c = module::contract(inv, codim).map_err(stage("purity"))?;
                    report.pure_part = Some(c.system.equations.iter().map(|e| e.fmt_with(m, &[])).collect());
                    report.warnings.push(format!(
                        "system is not pure; the inverse system below is that of its {}-pure part",
                        codim
                    ));
                    *target = c.system;
                }
            }
        }
    }
    if wants(cmd, &[Command::TorsionChain]) {
        let chain = module::torsion_chain(inv).map_err(stage("torsion-chain"))?;
        report.chain = Some(
            chain
                .levels
                .iter()
                .map(|l| ChainLevel {
                    r: l.r,
                    generators: l
                        .generators
                        .iter()
                        .map(|g| ChainGenerator { element: g.element.fmt_with(m, &[]), codim: g.codim })
                        .collect(),
                    gap_with_next: l.gap_with_next,
                })
                .collect(),
        );
    }
    Ok(())
}

fn dual_stages<F: Field>(
    inv: &InvolutiveSystem<F>,
    input: &SystemInput,
    opts: &CompletionOptions,
    report: &mut AnalysisReport,
    cmd: Command,
    target: Option<&PDSystem<Rational>>,
) -> Result<(), CliError> {
    if !wants(cmd, &[Command::InverseSystem, Command::Generators]) {
        return Ok(());
    }
    let (n, r) = (inv.n(), inv.codim);
    let with_generators = wants(cmd, &[Command::Generators]);
    if r == 0 {
        report.warnings.push("no torsion: the inverse system is not defined over any localization".into());
        return Ok(());
    }
    if r == n {
        let space = build_dual(inv, &input.params).map_err(stage("inverse-system"))?;
        report.dual = Some(dual_report(&space, None, Vec::new(), 0)?);
        if with_generators {
            let (g, _) = generators_report(&space, 0)?;
            push_branch_warning(report, &g);
            report.generators = Some(g);
        }
        return Ok(());
    }
    let local = localize(inv, r, &input.params, opts).map_err(stage("localization"))?;
    let space = build_dual(&local.involutive, &local.variable_names()).map_err(stage("inverse-system"))?;
    let lines = local.system().equations.iter().map(|e| local.fmt_equation(e)).collect();
    report.dual = Some(dual_report(&space, Some(r), lines, local.offset())?);
    if !with_generators {
        return Ok(());
    }
    let (g, sections) = generators_report(&space, local.offset())?;
    push_branch_warning(report, &g);
    report.generators = Some(g);
    match target {
        Some(s) if local.nparams == 0 => {
            report.delocalization = Some(delocalization(&space, &local, &sections, s)?);
        }
        _ => report.warnings.push("delocalization skipped: the system has parameters".into()),
    }
    Ok(())
}

fn push_branch_warning(report: &mut AnalysisReport, g: &GeneratorsReport) {
    if !g.branch_conditions.is_empty() {
        report.warnings.push(format!(
            "generator count assumes {}; rerun with --set to examine the special cases",
            g.branch_conditions.join(", ")
        ));
    }
}

fn delocalization(
    space: &DualSpace<RatFn>,
    local: &module::LocalizedSystem,
    sections: &[Vec<RatFn>],
    target: &PDSystem<Rational>,
) -> Result<DelocalizationReport, CliError> {
    let err = stage("delocalization");
    let q = local.involutive.order;
    let mut first = Vec::new();
    for e in sections {
        first.push(dual::delocalize(space, local, e, q + 1).map_err(&err)?);
    }
    let qprime = first.iter().map(|d| d.qprime).max().unwrap_or(q);
    let delta = first.iter().map(|d| d.delta).max().unwrap_or(0);
    let tau = first.iter().map(|d| d.tau).max().unwrap_or(0);
    let alpha = vec![qprime as u32; local.offset()];
    let mut equations = Vec::new();
    for (e, d) in sections.iter().zip(&first) {
        let bound = (qprime as i64 - d.delta).max(0) as usize;
        let full = dual::delocalize(space, local, e, bound).map_err(&err)?;
        let eq = full
            .equations
            .into_iter()
            .find(|(a, _)| a.entries() == alpha.as_slice())
            .map(|(_, e)| e)
            .unwrap_or_default();
        equations.push(eq);
    }
    let generates = dual::derivate_generation_check(target, &equations, target.order());
    Ok(DelocalizationReport {
        qprime,
        delta,
        tau,
        alpha,
        equations: equations.iter().map(|e| modular_section(e, target.m)).collect(),
        generates_order_q: generates,
    })
}
