mod common;

use common::{dense_dim, eq, sys};
use macaulay_core::arith::parse::{parse_poly, resolve_x};
use macaulay_core::arith::{rat, Rational};
use macaulay_core::involution::{
    characteristic_matrix, characteristic_matrix_at, finite_dimension, full_torsion_test,
    hilbert_dims, involution_test, multiplicative_vars, spencer_form, Verdict,
};
use macaulay_core::jets::autoreduce;
use macaulay_core::{complete, CompletionOptions, InvolutiveSystem, Jet, LinearEquation, PDSystem};
use proptest::prelude::*;

const NEEDS_PROLONGATION: &str = "n=3\ny[0,0,2]\ny[1,0,1] - y[0,1,0]";
const IMPURE_GAP: &str = "n=3\ny[0,0,2]\ny[0,1,1]\ny[1,0,1]";
const DIVERGENCE: &str = "n=4 m=3\ny1[0,0,0,1]\ny2[0,0,0,1]\ny3[0,0,0,1]\ny3[0,0,1,0] + y2[0,1,0,0] + y1[1,0,0,0]";
const FIRST_ORDER_PAIR: &str = "n=3\ny[1,0,0]\ny[0,1,1]";
const ZERO_SYMBOL: &str = "n=2\ny[0,3]\ny[1,2]\ny[2,1]\ny[3,0]\ny[0,2]\ny[1,1]";
const GORENSTEIN_8: &str = "n=3\ny[0,0,2]\ny[0,1,1] - y[2,0,0]\ny[0,2,0]";

fn run(text: &str) -> InvolutiveSystem<Rational> {
    complete(&sys(text), &CompletionOptions::default()).unwrap()
}

fn px(s: &str) -> macaulay_core::Poly {
    parse_poly(s, 3, &resolve_x, 1, 0).unwrap()
}

#[test]
fn multiplicative_variables() {
    assert_eq!(multiplicative_vars(3, 3), vec![1, 2, 3]);
    assert_eq!(multiplicative_vars(1, 3), vec![1]);
    let inv = run(FIRST_ORDER_PAIR);
    let low = inv.classes.iter().position(|c| c.is_none()).unwrap();
    assert!(inv.multiplicative(low).is_empty());
}

#[test]
fn involution_test_examples() {
    let s = autoreduce(&sys("n=3\ny[2,0,0]\ny[1,0,1] - y[0,1,0]"));
    assert!(matches!(involution_test(&s), Verdict::Obstructions(_)));
    let s = autoreduce(&sys("n=3\ny[0,0,2]\ny[0,1,1]\ny[0,2,0]\ny[1,0,1] - y[0,1,0]"));
    assert_eq!(involution_test(&s), Verdict::Involutive);
    assert_eq!(involution_test(&autoreduce(&sys(ZERO_SYMBOL))), Verdict::Involutive);
}

#[test]
fn completion_adds_integrability_conditions() {
    let inv = run(NEEDS_PROLONGATION);
    assert_eq!(
        inv.system.equations,
        vec![
            eq(&[(1, &[0, 0, 2])]),
            eq(&[(1, &[0, 1, 1])]),
            eq(&[(1, &[0, 2, 0])]),
            eq(&[(1, &[1, 0, 1]), (-1, &[0, 1, 0])]),
        ]
    );
    assert_eq!(inv.classes, vec![Some(3), Some(2), Some(2), Some(1)]);
    assert!(inv.is_coordinate_change_trivial());
}

#[test]
fn completion_with_coordinate_change() {
    let inv = run(FIRST_ORDER_PAIR);
    assert_eq!(inv.order, 2);
    assert!(!inv.is_coordinate_change_trivial());
    assert_eq!(inv.system.equations.len(), 5);
    assert_eq!(inv.class_counts(), vec![1, 2, 1]);
    assert_eq!(inv.codim, 2);
    assert_eq!(involution_test(&inv.system), Verdict::Involutive);
}

#[test]
fn completion_by_prolongation() {
    let inv = run(GORENSTEIN_8);
    assert_eq!(inv.order, 4);
    let h = hilbert_dims(&inv, 5);
    assert_eq!(h.symbol[3], 1);
    assert_eq!(h.symbol[4], 0);
    assert_eq!(finite_dimension(&inv), Some(8));
}

#[test]
fn characters_and_codimension() {
    let inv = run(NEEDS_PROLONGATION);
    assert_eq!((inv.alpha.clone(), inv.codim), (vec![2, 0, 0], 2));
    let inv = run(IMPURE_GAP);
    assert_eq!((inv.alpha.clone(), inv.codim), (vec![2, 1, 0], 1));
    let inv = run(ZERO_SYMBOL);
    assert_eq!((inv.alpha.clone(), inv.codim), (vec![0, 0], 2));
}

#[test]
fn hilbert_examples() {
    assert_eq!(finite_dimension(&run(ZERO_SYMBOL)), Some(4));
    let free = complete(&PDSystem::<Rational>::new(1, 1, vec![]), &CompletionOptions::default()).unwrap();
    assert_eq!(hilbert_dims(&free, 6).symbol, vec![1; 7]);
    assert_eq!(finite_dimension(&run(NEEDS_PROLONGATION)), None);
}

#[test]
fn spencer_form_of_second_derivative() {
    let inv = run("n=1\ny[2]");
    let sp = spencer_form(&inv);
    assert_eq!(sp.unknowns, vec![Jet::from_slice(0, &[0]), Jet::from_slice(0, &[1])]);
    let z = |k: usize, o: u32| Jet::from_slice(k, &[o]);
    assert_eq!(
        sp.system.equations,
        vec![
            LinearEquation::jet(z(1, 1)),
            LinearEquation::from_terms([(z(0, 1), rat(1)), (z(1, 0), rat(-1))]),
        ]
    );
}

#[test]
fn spencer_form_of_impure_example() {
    let inv = run(IMPURE_GAP);
    let sp = spencer_form(&inv);
    assert_eq!(sp.unknowns.len(), 4);
    assert!(sp.system.equations.iter().all(|e| e.order() == 1));
    let sinv = complete(&sp.system, &CompletionOptions::default()).unwrap();
    assert_eq!(sinv.class_counts(), vec![2, 3, 4]);
    assert_eq!(sinv.alpha, vec![2, 1, 0]);
    // character inequalities hold in this form
    assert!(sinv.alpha.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn spencer_form_preserves_dimensions() {
    for text in [NEEDS_PROLONGATION, IMPURE_GAP, GORENSTEIN_8] {
        let inv = run(text);
        let sp = spencer_form(&inv);
        for s in 0..3 {
            assert_eq!(
                dense_dim(&sp.system, s, s + 2),
                dense_dim(&inv.system, s + inv.order - 1, s + inv.order + 1),
                "{} at order {}",
                text,
                s
            );
        }
    }
}

#[test]
fn torsion_test() {
    assert!(full_torsion_test(&run("n=2\ny[0,2]\ny[1,1]")));
    assert!(full_torsion_test(&run(DIVERGENCE)));
    assert!(!full_torsion_test(&run(NEEDS_PROLONGATION).clone()) || run(NEEDS_PROLONGATION).codim > 0);
    let empty = complete(&PDSystem::<Rational>::new(2, 1, vec![]), &CompletionOptions::default()).unwrap();
    assert!(!full_torsion_test(&empty));
}

#[test]
fn characteristic_matrices() {
    let s = sys(NEEDS_PROLONGATION);
    let m = characteristic_matrix_at(&s, 2);
    assert_eq!(m, vec![vec![px("x3^2")], vec![px("x1*x3")]]);
    let m = characteristic_matrix(&run(NEEDS_PROLONGATION));
    assert_eq!(
        m,
        vec![vec![px("x3^2")], vec![px("x2*x3")], vec![px("x2^2")], vec![px("x1*x3")]]
    );
    let m = characteristic_matrix(&run("n=1\ny[2]"));
    assert_eq!(m, vec![vec![parse_poly("x1^2", 1, &resolve_x, 1, 0).unwrap()]]);
}

#[test]
fn divergence_system_classes() {
    let inv = run(DIVERGENCE);
    assert_eq!(inv.order, 1);
    assert_eq!(inv.class_counts(), vec![0, 0, 1, 3]);
    assert_eq!(inv.codim, 1);
}

fn monomial_system() -> impl Strategy<Value = PDSystem<Rational>> {
    prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..4).prop_map(|mus| {
        let eqs = mus
            .into_iter()
            .filter(|mu| mu.iter().sum::<u32>() <= 3)
            .map(|mu| LinearEquation::jet(Jet::from_slice(0, &mu)))
            .collect();
        PDSystem::new(3, 1, eqs)
    })
}

fn small_index() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=2, 3).prop_filter("order at most 3", |v| v.iter().sum::<u32>() <= 3)
}

fn binomial_system() -> impl Strategy<Value = PDSystem<Rational>> {
    prop::collection::vec(
        (small_index(), small_index(), -2i64..3),
        1..3,
    )
    .prop_map(|rows| {
        let eqs = rows
            .into_iter()
            .map(|(a, b, c)| {
                LinearEquation::from_terms([
                    (Jet::from_slice(0, &a), rat(1)),
                    (Jet::from_slice(0, &b), rat(c)),
                ])
            })
            .collect();
        PDSystem::new(3, 1, eqs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn completed_monomial_systems_are_involutive(s in monomial_system()) {
        let inv = complete(&s, &CompletionOptions::default()).unwrap();
        prop_assert_eq!(involution_test(&inv.system), Verdict::Involutive);
    }

    #[test]
    fn hilbert_function_matches_dense_rank(s in binomial_system()) {
        let inv = complete(&s, &CompletionOptions::default()).unwrap();
        let h = hilbert_dims(&inv, inv.order + 3);
        for t in 0..=inv.order + 3 {
            prop_assert_eq!(h.total[t], dense_dim(&inv.system, t, t + 1));
        }
    }

    #[test]
    fn characters_do_not_depend_on_seed(s in binomial_system()) {
        let a = complete(&s, &CompletionOptions { seed: 1, ..Default::default() }).unwrap();
        let b = complete(&s, &CompletionOptions { seed: 99, ..Default::default() }).unwrap();
        prop_assert_eq!(a.alpha, b.alpha);
        prop_assert_eq!(a.codim, b.codim);
    }
}
