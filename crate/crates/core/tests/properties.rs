use proptest::prelude::*;

use pvacl::algebra::{DiffPoly, Monomial, Rat, Var};
use pvacl::graph::{reduce, Digraph, GraphVector};
use pvacl::perm::{enumerate_monotone, is_monotone, MonotonePerm, Perm};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn perm_pair() -> impl Strategy<Value = (Perm, Perm)> {
    (1usize..=7).prop_flat_map(|n| (perm(n), perm(n)))
}

fn perm_triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (1usize..=7).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

fn digraph(n: usize) -> impl Strategy<Value = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    proptest::sample::subsequence(pairs.clone(), 0..=n.min(pairs.len()))
        .prop_map(move |es| Digraph::new(n, es).unwrap())
}

fn diffpoly() -> impl Strategy<Value = DiffPoly> {
    let term = (-3i64..=3, proptest::collection::vec((0u32..=2, 1u32..=2), 0..=2));
    proptest::collection::vec(term, 0..=3).prop_map(|terms| {
        let mut p = DiffPoly::zero();
        for (c, powers) in terms {
            let m = Monomial::from_powers(powers.into_iter().map(|(o, e)| (Var::new(0, o), e)).collect());
            p.add_term(Rat::from_integer(c.into()), m);
        }
        p
    })
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in perm_triple()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverse_and_sign((a, b) in perm_pair()) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        prop_assert_eq!(a.inverse().sign(), a.sign());
    }

    #[test]
    fn tuple_action_is_a_left_action((a, b) in perm_pair()) {
        let t: Vec<usize> = (0..a.len()).collect();
        prop_assert_eq!(a.act_on_tuple(&b.act_on_tuple(&t)), a.compose(&b).act_on_tuple(&t));
    }

    #[test]
    fn monotone_perms_round_trip(n in 1usize..=7, k in 1usize..=7) {
        prop_assume!(k <= n);
        for m in enumerate_monotone(n, k).unwrap() {
            prop_assert!(is_monotone(m.perm()));
            let back = MonotonePerm::from_perm(m.perm()).unwrap();
            prop_assert_eq!(back.drop_sign(), m.drop_sign());
            prop_assert_eq!(back.start(), m.start());
        }
    }

    #[test]
    fn graph_action_composes(g in digraph(4), a in perm(4), b in perm(4)) {
        let lhs = g.act(&b).unwrap().act(&a).unwrap();
        prop_assert_eq!(lhs, g.act(&a.compose(&b)).unwrap());
    }

    #[test]
    fn reduction_is_idempotent_and_equivariant(g in digraph(4), s in perm(4)) {
        let v = GraphVector::single(g);
        let r = reduce(&v);
        prop_assert_eq!(reduce(&r), r.clone());
        prop_assert_eq!(reduce(&r.act(&s).unwrap()), reduce(&v.act(&s).unwrap()));
    }

    #[test]
    fn derivation_is_leibniz(a in diffpoly(), b in diffpoly()) {
        let lhs = (&a * &b).derive();
        let rhs = &(&a.derive() * &b) + &(&a * &b.derive());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partials_commute_with_derivation(a in diffpoly()) {
        // [∂/∂u^(m), ∂] = ∂/∂u^(m-1)
        for m in 1..=3 {
            let lhs = &a.derive().partial(Var::new(0, m)) - &a.partial(Var::new(0, m)).derive();
            prop_assert_eq!(lhs, a.partial(Var::new(0, m - 1)));
        }
    }
}
