mod common;

use common::{jet, sys};
use macaulay_core::arith::{rat, Field, RatFn, Rational};
use macaulay_core::dual::*;
use macaulay_core::io::parse_dsl;
use macaulay_core::module::localize;
use macaulay_core::{complete, CompletionOptions, Jet, PDSystem};

fn dual(text: &str) -> DualSpace<Rational> {
    let inv = complete(&sys(text), &CompletionOptions::default()).unwrap();
    build_dual(&inv, &[]).unwrap()
}

fn shown(space: &DualSpace<Rational>, e: &[Rational], order: usize) -> Vec<(Vec<u32>, Rational)> {
    space.expand(e, order).into_iter().map(|(j, c)| (j.mu.entries().to_vec(), c)).collect()
}

const ZERO_SYMBOL: &str = "n=2\ny[0,3]\ny[1,2]\ny[2,1]\ny[3,0]\ny[0,2]\ny[1,1]";
const GORENSTEIN_8: &str = "n=3\ny[0,0,2]\ny[0,1,1] - y[2,0,0]\ny[0,2,0]";

#[test]
fn second_order_ode_dual() {
    let d = dual("n=1\ny[2] - y[0]");
    assert_eq!(d.basis, vec![jet(&[0]), jet(&[1])]);
    assert_eq!(d.derivate(&d.unit(1), 0), d.unit(0));
}

#[test]
fn socle_and_top_of_zero_symbol_system() {
    let d = dual(ZERO_SYMBOL);
    assert_eq!(d.dim(), 4);
    assert_eq!(d.basis, vec![jet(&[0, 0]), jet(&[1, 0]), jet(&[0, 1]), jet(&[2, 0])]);
    let pts = d.maximal_points().unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].c, vec![rat(0), rat(0)]);
    let soc = d.socle(&pts[0]);
    assert_eq!(soc.len(), 2);
    assert_eq!(d.top_component(&pts[0]), vec![d.unit(2), d.unit(3)]);
    assert_eq!(d.derivate(&d.unit(2), 1), d.unit(0));
    assert_eq!(d.derivate(&d.unit(3), 0), d.unit(1));
    assert_eq!(d.radical(&pts[0]).len(), 2);
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 2);
    assert!(d.generation_check(&g.sections));
}

#[test]
fn single_generator_of_dimension_eight() {
    let d = dual(GORENSTEIN_8);
    assert_eq!(d.dim(), 8);
    let pts = d.maximal_points().unwrap();
    assert_eq!(d.socle(&pts[0]).len(), 1);
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 1);
    assert_eq!(shown(&d, &g.sections[0], 4), vec![(vec![3, 0, 0], rat(1)), (vec![1, 1, 1], rat(1))]);
    assert!(d.generation_check(&g.sections));
}

#[test]
fn smaller_gorenstein_examples() {
    let d = dual("n=2\ny[0,2]\ny[1,1] - y[2,0]");
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 1);
    assert_eq!(shown(&d, &g.sections[0], 3), vec![(vec![2, 0], rat(1)), (vec![1, 1], rat(1))]);
    let d = dual("n=3\ny[0,0,2] - y[2,0,0]\ny[0,1,1]\ny[0,2,0] - y[2,0,0]");
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 1);
    assert_eq!(
        shown(&d, &g.sections[0], 3),
        vec![(vec![3, 0, 0], rat(1)), (vec![1, 2, 0], rat(1)), (vec![1, 0, 2], rat(1))]
    );
}

#[test]
fn socle_of_monomial_quotient() {
    let d = dual("n=2\ny[3,0]\ny[0,2]\ny[1,1]");
    let pts = d.maximal_points().unwrap();
    assert_eq!(d.socle(&pts[0]).len(), 2);
}

#[test]
fn infinite_dimensional_is_refused() {
    let inv = complete(&sys("n=2\ny[0,2]\ny[1,1]"), &CompletionOptions::default()).unwrap();
    assert!(build_dual(&inv, &[]).is_err());
}

const TWO_PURE: &str = "n=3\ny[0,0,2]\ny[0,1,1] - y[1,0,1]\ny[0,2,0] - y[1,1,0]";

fn chi(i: usize, nv: usize) -> RatFn {
    RatFn::from_poly(macaulay_core::arith::Poly::var(nv, i))
}

fn localized(text: &str, r: usize) -> (macaulay_core::module::LocalizedSystem, DualSpace<RatFn>) {
    let inv = complete(&sys(text), &CompletionOptions::default()).unwrap();
    let l = localize(&inv, r, &[], &CompletionOptions::default()).unwrap();
    let d = build_dual(&l.involutive, &l.variable_names()).unwrap();
    (l, d)
}

fn add(a: &[RatFn], b: &[RatFn]) -> Vec<RatFn> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn scale(a: &[RatFn], c: &RatFn) -> Vec<RatFn> {
    a.iter().map(|x| x.mul(c)).collect()
}

#[test]
fn localized_relations_and_generator() {
    let (_, d) = localized(TWO_PURE, 2);
    assert_eq!(d.dim(), 3);
    let x = chi(0, 1);
    let (e1, e2, e3) = (d.unit(0), d.unit(1), d.unit(2));
    assert_eq!(d.derivate(&e1, 0), vec![RatFn::zero(); 3]);
    assert_eq!(d.derivate(&e1, 1), vec![RatFn::zero(); 3]);
    assert_eq!(d.derivate(&e2, 0), add(&e1, &scale(&e2, &x)));
    assert_eq!(d.derivate(&e2, 1), vec![RatFn::zero(); 3]);
    assert_eq!(d.derivate(&e3, 0), scale(&e3, &x));
    assert_eq!(d.derivate(&e3, 1), add(&e1, &scale(&e2, &x)));
    let mut pts: Vec<Vec<RatFn>> = d.maximal_points().unwrap().into_iter().map(|p| p.c).collect();
    pts.sort_by_key(|c| c[0].is_zero());
    assert_eq!(pts, vec![vec![x.clone(), RatFn::zero()], vec![RatFn::zero(), RatFn::zero()]]);
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 1);
    let e = add(&e2, &e3);
    assert_eq!(g.sections, vec![e.clone()]);
    let d2e = d.derivate(&e, 0);
    assert_eq!(add(&d2e, &scale(&e, &x.neg())), e1);
    assert_eq!(d.derivate(&e, 1), add(&e1, &scale(&e2, &x)));
    assert!(d.generation_check(&[e]));
}

#[test]
fn points_of_first_order_example() {
    let (_, d) = localized("n=3\ny[1,0,0]\ny[0,1,1]", 2);
    let pts = d.maximal_points().unwrap();
    assert_eq!(pts.len(), 2);
}

const FAMILY: &str = "n=2 params=a\ny[0,2]\ny[1,1] - a*y[0,1]\ny[2,0] - a*y[1,0]";

#[test]
fn generator_count_depends_on_parameter() {
    let input = parse_dsl(FAMILY).unwrap();
    let inv = complete(&input.system(), &CompletionOptions::default()).unwrap();
    let d = build_dual(&inv, &input.params).unwrap();
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 1);
    assert_eq!(g.branch_conditions, vec!["a ≠ 0".to_string()]);
    let zero = input.specialize("a", &rat(0)).unwrap().rational().unwrap();
    let inv = complete(&zero, &CompletionOptions::default()).unwrap();
    let d = build_dual(&inv, &[]).unwrap();
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 2);
    for i in 0..d.dim() {
        assert!(!d.generation_check(&[d.unit(i)]));
    }
}

#[test]
fn primary_subsystems_sum_to_the_whole() {
    // Truncated above order 2.
    let mut text = String::from("n=2\ny[0,2]\ny[1,1]");
    for mu in ["3,0", "2,1", "1,2", "0,3"] {
        text.push_str(&format!("\ny[{}]", mu));
    }
    let d = dual(&text);
    assert_eq!(d.dim(), 4);
    let r1 = d.subsystem(&[common::eq(&[(1, &[0, 1])])]);
    let r2 = d.subsystem(&[common::eq(&[(1, &[2, 0])])]);
    assert_eq!(d.subsystem_sum(&r1, &r2).unwrap(), SubsystemSum::Sum);
    assert_eq!(d.subsystem_sum(&r1, &r1).unwrap(), SubsystemSum::ProperSubspace { defect: 1 });
    let all: Vec<_> = (0..4).map(|i| d.unit(i)).collect();
    assert_eq!(d.subsystem_sum(&all, &[]).unwrap(), SubsystemSum::Sum);
    assert!(d.subsystem_sum(&[d.unit(3)], &[]).is_err());
}

fn modular(terms: &[(&[u32], i64)]) -> ModularEquation {
    terms.iter().map(|(mu, c)| (Jet::from_slice(0, mu), rat(*c))).collect()
}

#[test]
fn delocalized_generator_cascade() {
    let (l, d) = localized(TWO_PURE, 2);
    let e = add(&d.unit(1), &d.unit(2));
    let out = delocalize(&d, &l, &e, 3).unwrap();
    assert_eq!(out.delta, -1);
    assert_eq!(out.tau, 1);
    assert_eq!(out.qprime, 2);
    let e11 = out.equations.iter().find(|(a, _)| a.entries() == [2]).unwrap().1.clone();
    let expected = modular(&[
        (&[2, 0, 1], 1), (&[1, 1, 1], 1), (&[0, 2, 1], 1),
        (&[2, 1, 0], 1), (&[1, 2, 0], 1), (&[0, 3, 0], 1),
    ]);
    assert_eq!(e11, expected);
    let s = sys(TWO_PURE);
    assert!(is_modular_equation(&s, &e11));
    let d1 = derivate_n(&e11, 0);
    let d2 = derivate_n(&e11, 1);
    let d3 = derivate_n(&e11, 2);
    for x in [&d1, &d2, &d3] {
        assert!(is_modular_equation(&s, x));
    }
    assert!(derivate_generation_check(&s, &[e11.clone()], 2));
    assert!(!derivate_generation_check(&s, &[], 2));
}

#[test]
fn delocalized_divergence_generators() {
    let div = "n=4 m=3\ny1[0,0,0,1]\ny2[0,0,0,1]\ny3[0,0,0,1]\ny3[0,0,1,0] + y2[0,1,0,0] + y1[1,0,0,0]";
    let (l, d) = localized(div, 1);
    assert_eq!(d.dim(), 2);
    let g = d.min_generators().unwrap();
    assert_eq!(g.count, 2);
    let s = sys(div);
    for sec in &g.sections {
        let out = delocalize(&d, &l, sec, 2).unwrap();
        for (_, e) in &out.equations {
            assert!(is_modular_equation(&s, e));
        }
    }
}

#[allow(dead_code)]
fn unused(_: PDSystem<Rational>) {}

use macaulay_core::arith::matrix;
use macaulay_core::LinearEquation;
use proptest::prelude::*;

/// Zero-dimensional binomial systems in two variables: pure powers plus
/// random binomials.
fn finite_system() -> impl Strategy<Value = PDSystem<Rational>> {
    (1u32..4, 1u32..4, prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3, -2i64..3), 0..3)).prop_map(|(a, b, bins)| {
        let mut eqs = vec![
            LinearEquation::jet(Jet::from_slice(0, &[a, 0])),
            LinearEquation::jet(Jet::from_slice(0, &[0, b])),
        ];
        for (p, q, r, s, c) in bins {
            let mut e = LinearEquation::jet(Jet::from_slice(0, &[p, q]));
            e.add_term(Jet::from_slice(0, &[r, s]), rat(c));
            if !e.is_zero() {
                eqs.push(e);
            }
        }
        PDSystem::new(2, 1, eqs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn derivations_commute_and_duality_holds(s in finite_system()) {
        let inv = complete(&s, &CompletionOptions::default()).unwrap();
        let d = build_dual(&inv, &[]).unwrap();
        prop_assert_eq!(matrix::mul(&d.dmat[0], &d.dmat[1]), matrix::mul(&d.dmat[1], &d.dmat[0]));
        let pts = match d.maximal_points() {
            Ok(p) => p,
            Err(_) => return Ok(()),
        };
        prop_assert_eq!(pts.iter().map(|p| p.multiplicity).sum::<usize>(), d.dim());
        for p in &pts {
            prop_assert_eq!(d.socle(p).len(), d.top_component(p).len());
        }
        let g = d.min_generators().unwrap();
        prop_assert!(d.generation_check(&g.sections));
        for i in 0..g.sections.len() {
            let mut fewer = g.sections.clone();
            fewer.remove(i);
            prop_assert!(!d.generation_check(&fewer));
        }
    }

    #[test]
    fn sections_vanish_on_prolonged_equations(s in finite_system()) {
        let inv = complete(&s, &CompletionOptions::default()).unwrap();
        let d = build_dual(&inv, &[]).unwrap();
        let q = inv.order + 1;
        for i in 0..d.dim() {
            let mut e = d.unit(i);
            for step in 0..3 {
                let values: std::collections::BTreeMap<Jet, Rational> = d.expand(&e, q).into_iter().collect();
                prop_assert!(is_modular_equation(&s, &values));
                e = d.derivate(&e, step % 2);
            }
        }
    }
}
