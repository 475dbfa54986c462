mod common;

use common::*;
use hatlab_core::autgraph::automorphism_group;
use hatlab_core::PermutationGroup;
use num_bigint::BigUint;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_order_matches_closure(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, gens, elems) = random_small_group(&mut r, 10_000);
        let g = PermutationGroup::new(n, gens).unwrap();
        prop_assert_eq!(g.order(), BigUint::from(elems.len()));
        for e in elems.iter().take(20) {
            prop_assert!(g.contains(e));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn automorphism_order_matches_brute_force(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let graph = random_graph(&mut r, n);
        let aut = automorphism_group(&graph).unwrap();
        prop_assert_eq!(aut.order(), BigUint::from(brute_force_aut_order(&graph)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn coset_graph_matches_cayley_graph(seed in any::<u64>()) {
        let mut r = rng(seed);
        prop_assert!(trivial_coset_matches_cayley(&mut r, 1000));
        let inst = random_swap_instance(&mut r, 1000);
        prop_assert!(swap_cayley_matches_coset(&inst));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn alternating_cycles_are_constant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = random_swap_instance(&mut r, 500);
        prop_assert_eq!(swap_hat_violations(&inst), Ok(0));
    }

    #[test]
    fn index_identity_holds_when_applicable(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = random_swap_instance(&mut r, 300);
        prop_assert!(!matches!(swap_index_identity(&inst), IndexIdentity::Fails));
    }
}
