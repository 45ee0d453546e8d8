mod common;

use common::{dense_rank, eq, jet, sys};
use macaulay_core::arith::{rat, Rational};
use macaulay_core::jets::{autoreduce, reduce, Echelon};
use macaulay_core::{Error, Jet, LinearEquation, MultiIndex, PDSystem};
use proptest::prelude::*;

#[test]
fn compare_jets_examples() {
    assert!(jet(&[0, 0, 2]) > jet(&[0, 1, 1]));
    assert!(jet(&[1, 0, 1]) > jet(&[0, 1, 0]));
    // unknown index breaks ties
    assert!(Jet::from_slice(1, &[1, 0]) > Jet::from_slice(0, &[1, 0]));
}

#[test]
fn prolong_examples() {
    assert_eq!(eq(&[(1, &[0, 0, 2])]).prolong(0), eq(&[(1, &[1, 0, 2])]));
    let e = eq(&[(1, &[1, 0, 1]), (-1, &[0, 1, 0])]);
    assert_eq!(e.prolong(2), eq(&[(1, &[1, 0, 2]), (-1, &[0, 1, 1])]));
    assert_eq!(e.prolong(1), eq(&[(1, &[1, 1, 1]), (-1, &[0, 2, 0])]));
}

#[test]
fn reduce_examples() {
    let s = sys("n=3\ny[0,0,2]\ny[1,0,1] - y[0,1,0]");
    let y23 = eq(&[(1, &[0, 1, 1])]);
    assert_eq!(reduce(&y23, &s).unwrap(), y23);
    let done = sys("n=3\ny[0,0,2]\ny[0,1,1]\ny[0,2,0]\ny[1,0,1] - y[0,1,0]");
    let e = eq(&[(1, &[1, 0, 2]), (-1, &[0, 1, 1])]);
    assert!(reduce(&e, &done).unwrap().is_zero());
    assert!(reduce(&LinearEquation::zero(), &done).unwrap().is_zero());
}

#[test]
fn reduce_rejects_unsolved_systems() {
    let s = sys("n=2\ny[0,2]\ny[0,2] + y[1,0]");
    let r = reduce(&eq(&[(1, &[0, 1])]), &s);
    assert!(matches!(r, Err(Error::NotSolvedForm(_))));
}

#[test]
fn autoreduce_examples() {
    let s = autoreduce(&sys("n=3\ny[0,0,2]\ny[0,0,2] + y[0,1,1]"));
    assert_eq!(s.equations, vec![eq(&[(1, &[0, 0, 2])]), eq(&[(1, &[0, 1, 1])])]);
    let s = autoreduce(&sys("n=3\ny[0,0,0]\ny[0,0,0]"));
    assert_eq!(s.equations.len(), 1);
    assert!(autoreduce(&sys("n=2\n0 = 0")).equations.is_empty());
}

fn row_rank(s: &PDSystem<Rational>) -> usize {
    let cols = macaulay_core::jets::jets_up_to(s.n, s.m, 2);
    let rows: Vec<Vec<Rational>> = s
        .equations
        .iter()
        .map(|e| cols.iter().map(|j| e.coeff(j)).collect())
        .collect();
    macaulay_core::arith::matrix::rank(&rows)
}

fn random_equation(n: usize, max_order: u32) -> impl Strategy<Value = LinearEquation<Rational>> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_order, n), -3i64..4),
        1..4,
    )
    .prop_map(move |terms| {
        LinearEquation::from_terms(terms.into_iter().map(|(mu, c)| {
            let total: u32 = mu.iter().sum();
            let mu = if total > max_order { vec![0; mu.len()] } else { mu };
            (Jet::from_slice(0, &mu), rat(c))
        }))
    })
}

fn random_system() -> impl Strategy<Value = PDSystem<Rational>> {
    prop::collection::vec(random_equation(3, 2), 1..4).prop_map(|eqs| PDSystem::new(3, 1, eqs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduce_is_idempotent(s in random_system(), e in random_equation(3, 2)) {
        let s = autoreduce(&s);
        let r = reduce(&e, &s).unwrap();
        prop_assert_eq!(reduce(&r, &s).unwrap(), r);
    }

    #[test]
    fn autoreduce_preserves_span(s in random_system()) {
        let a = autoreduce(&s);
        // same row space: the union has the rank of either part
        let both = s.with_equations(s.equations.iter().chain(&a.equations).cloned().collect());
        prop_assert_eq!(row_rank(&a), row_rank(&s));
        prop_assert_eq!(row_rank(&both), row_rank(&s));
        for q in 0..=3 {
            prop_assert_eq!(dense_rank(&autoreduce(&both), q), dense_rank(&a, q));
        }
        let mut leads: Vec<_> = a.equations.iter().map(|e| e.leading_jet().unwrap().clone()).collect();
        let before = leads.len();
        leads.dedup();
        prop_assert_eq!(before, leads.len());
    }

    #[test]
    fn reduce_vanishes_on_span(s in random_system(), i in 0usize..3) {
        let s = autoreduce(&s);
        let ech = Echelon::from_equations(&s.prolongations(3));
        for e in &s.equations {
            prop_assert!(ech.contains(&e.prolong(i)) || e.order() + 1 > 3);
        }
    }

    #[test]
    fn prolongation_commutes(e in random_equation(3, 2), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(e.prolong(i).prolong(j), e.prolong(j).prolong(i));
    }

    #[test]
    fn jet_order_is_total_and_compatible(
        a in prop::collection::vec(0u32..3, 3),
        b in prop::collection::vec(0u32..3, 3),
        i in 0usize..3,
    ) {
        let (u, v) = (MultiIndex::new(a), MultiIndex::new(b));
        prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
        if u < v {
            prop_assert!(u.raise(i) < v.raise(i));
        }
        prop_assert_eq!(u == v, u.cmp(&v) == std::cmp::Ordering::Equal);
    }
}
